#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <sys/types.h>
#include <vector>

namespace pk::smt {

class SpawnError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Splits a command line the way a POSIX shell would (quotes, escapes), with
/// command substitution disabled.
std::vector<std::string> split_command(const std::string& command);

/// A child process with piped stdin/stdout. stderr goes to /dev/null. The
/// destructor kills and reaps the child.
class Subprocess {
 public:
  enum class ReadStatus { Data, Timeout, Eof };

  static Subprocess spawn(const std::vector<std::string>& argv);

  Subprocess() = default;
  Subprocess(Subprocess&& other) noexcept;
  Subprocess& operator=(Subprocess&& other) noexcept;
  Subprocess(const Subprocess&) = delete;
  Subprocess& operator=(const Subprocess&) = delete;
  ~Subprocess();

  bool running() const { return pid_ > 0; }
  pid_t pid() const { return pid_; }

  /// Writes all of `data`; false if the child closed its stdin.
  bool write(std::string_view data);
  /// Waits up to `timeout` for output and appends what is available to `out`.
  ReadStatus read_some(std::string& out, std::chrono::milliseconds timeout);
  /// SIGKILL and reap.
  void kill();

  /// Number of children spawned by this class that are still alive.
  static std::size_t live_count();

 private:
  pid_t pid_ = -1;
  int in_fd_ = -1;
  int out_fd_ = -1;
};

}  // namespace pk::smt
