#include "pk/cli/cli.hpp"

int main(int argc, char** argv)
{
  return pk::cli::run_main(argc, argv);
}
