#include "pk/smt/subprocess.hpp"

#include <atomic>
#include <cerrno>
#include <csignal>
#include <cstring>
#include <fcntl.h>
#include <mutex>
#include <utility>
#include <poll.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>
#include <wordexp.h>

extern char** environ;

namespace pk::smt {

namespace {

std::atomic<std::size_t> g_live{0};

void ignore_sigpipe()
{
  static std::once_flag once;
  std::call_once(once, [] { std::signal(SIGPIPE, SIG_IGN); });
}

}  // namespace

std::vector<std::string> split_command(const std::string& command)
{
  wordexp_t w;
  int rc = wordexp(command.c_str(), &w, WRDE_NOCMD | WRDE_UNDEF);
  if (rc != 0) {
    if (rc == WRDE_NOSPACE) wordfree(&w);
    throw SpawnError("cannot parse solver command '" + command + "'");
  }
  std::vector<std::string> out(w.we_wordv, w.we_wordv + w.we_wordc);
  wordfree(&w);
  if (out.empty()) throw SpawnError("empty solver command");
  return out;
}

Subprocess Subprocess::spawn(const std::vector<std::string>& argv)
{
  if (argv.empty()) throw SpawnError("empty solver command");
  ignore_sigpipe();
  int to_child[2];
  int from_child[2];
  if (pipe2(to_child, O_CLOEXEC) != 0) throw SpawnError(std::string("pipe: ") + std::strerror(errno));
  if (pipe2(from_child, O_CLOEXEC) != 0) {
    close(to_child[0]);
    close(to_child[1]);
    throw SpawnError(std::string("pipe: ") + std::strerror(errno));
  }

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, to_child[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, from_child[1], STDOUT_FILENO);
  posix_spawn_file_actions_addopen(&actions, STDERR_FILENO, "/dev/null", O_WRONLY, 0);

  std::vector<char*> args;
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);

  pid_t pid = -1;
  int rc = posix_spawnp(&pid, args[0], &actions, nullptr, args.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  close(to_child[0]);
  close(from_child[1]);
  if (rc != 0) {
    close(to_child[1]);
    close(from_child[0]);
    throw SpawnError("cannot start '" + argv[0] + "': " + std::strerror(rc));
  }

  Subprocess p;
  p.pid_ = pid;
  p.in_fd_ = to_child[1];
  p.out_fd_ = from_child[0];
  ++g_live;
  return p;
}

Subprocess::Subprocess(Subprocess&& other) noexcept
    : pid_(std::exchange(other.pid_, -1)),
      in_fd_(std::exchange(other.in_fd_, -1)),
      out_fd_(std::exchange(other.out_fd_, -1))
{
}

Subprocess& Subprocess::operator=(Subprocess&& other) noexcept
{
  if (this != &other) {
    kill();
    pid_ = std::exchange(other.pid_, -1);
    in_fd_ = std::exchange(other.in_fd_, -1);
    out_fd_ = std::exchange(other.out_fd_, -1);
  }
  return *this;
}

Subprocess::~Subprocess() { kill(); }

bool Subprocess::write(std::string_view data)
{
  if (in_fd_ < 0) return false;
  while (!data.empty()) {
    ssize_t n = ::write(in_fd_, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
  return true;
}

Subprocess::ReadStatus Subprocess::read_some(std::string& out, std::chrono::milliseconds timeout)
{
  if (out_fd_ < 0) return ReadStatus::Eof;
  pollfd pfd{out_fd_, POLLIN, 0};
  int rc;
  do {
    rc = poll(&pfd, 1, static_cast<int>(timeout.count()));
  } while (rc < 0 && errno == EINTR);
  if (rc == 0) return ReadStatus::Timeout;
  if (rc < 0) return ReadStatus::Eof;
  char buf[8192];
  ssize_t n;
  do {
    n = ::read(out_fd_, buf, sizeof buf);
  } while (n < 0 && errno == EINTR);
  if (n <= 0) return ReadStatus::Eof;
  out.append(buf, static_cast<std::size_t>(n));
  return ReadStatus::Data;
}

void Subprocess::kill()
{
  if (in_fd_ >= 0) close(std::exchange(in_fd_, -1));
  if (out_fd_ >= 0) close(std::exchange(out_fd_, -1));
  if (pid_ > 0) {
    ::kill(pid_, SIGKILL);
    int status;
    while (waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
    }
    pid_ = -1;
    --g_live;
  }
}

std::size_t Subprocess::live_count() { return g_live.load(); }

}  // namespace pk::smt
