// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/dimacs.hpp"
#include "pearlsat/errors.hpp"
#include "pearlsat/sat.hpp"

#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include <fcntl.h>
#include <poll.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

extern char **environ;

namespace pearlsat {
namespace {

class TempFile {
public:
  TempFile() {
    const char *dir = std::getenv("TMPDIR");
    std::string pattern = std::string(dir && *dir ? dir : "/tmp") +
                          "/pearlsat-XXXXXX.cnf";
    int fd = ::mkstemps(pattern.data(), 4);
    if (fd < 0)
      throw BackendError("cannot create temporary file: " +
                         std::string(std::strerror(errno)));
    ::close(fd);
    path_ = std::move(pattern);
  }
  ~TempFile() { std::remove(path_.c_str()); }
  TempFile(const TempFile &) = delete;
  TempFile &operator=(const TempFile &) = delete;

  const std::string &path() const { return path_; }

private:
  std::string path_;
};

class Fd {
public:
  explicit Fd(int fd = -1) : fd_(fd) {}
  ~Fd() { reset(); }
  Fd(const Fd &) = delete;
  Fd &operator=(const Fd &) = delete;
  int get() const { return fd_; }
  void reset() {
    if (fd_ >= 0)
      ::close(fd_);
    fd_ = -1;
  }

private:
  int fd_;
};

struct ChildResult {
  std::string output;
  int wait_status = 0;
};

ChildResult run_child(const std::string &exe, const std::string &input_path,
                      std::optional<std::chrono::steady_clock::time_point> deadline) {
  int fds[2];
  if (::pipe2(fds, O_CLOEXEC) != 0)
    throw BackendError("pipe: " + std::string(std::strerror(errno)));
  Fd read_end(fds[0]);
  Fd write_end(fds[1]);

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, 0, "/dev/null", O_RDONLY, 0);
  posix_spawn_file_actions_adddup2(&actions, write_end.get(), 1);
  posix_spawn_file_actions_addopen(&actions, 2, "/dev/null", O_WRONLY, 0);

  std::string arg0 = exe;
  std::string arg1 = input_path;
  char *argv[] = {arg0.data(), arg1.data(), nullptr};
  pid_t pid = 0;
  int rc = ::posix_spawnp(&pid, exe.c_str(), &actions, nullptr, argv, environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0)
    throw BackendError("cannot execute solver '" + exe + "': " + std::strerror(rc));
  write_end.reset();

  ChildResult result;
  char buf[4096];
  for (;;) {
    int wait_ms = -1;
    if (deadline) {
      auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          *deadline - std::chrono::steady_clock::now());
      if (left.count() <= 0) {
        ::kill(pid, SIGKILL);
        ::waitpid(pid, nullptr, 0);
        throw SolverTimeout("external solver exceeded its time limit");
      }
      wait_ms = static_cast<int>(std::min<long long>(left.count(), 1000));
    }
    pollfd pfd{read_end.get(), POLLIN, 0};
    int ready = ::poll(&pfd, 1, wait_ms);
    if (ready < 0 && errno == EINTR)
      continue;
    if (ready == 0)
      continue;
    ssize_t n = ::read(read_end.get(), buf, sizeof buf);
    if (n < 0 && errno == EINTR)
      continue;
    if (n <= 0)
      break;
    result.output.append(buf, static_cast<std::size_t>(n));
  }
  while (::waitpid(pid, &result.wait_status, 0) < 0 && errno == EINTR) {
  }
  return result;
}

} // namespace

ExternalBackend::ExternalBackend(std::string path,
                                 std::optional<std::chrono::duration<double>> time_limit)
    : path_(std::move(path)), time_limit_(time_limit) {
  if (path_.empty())
    throw ContractViolation("external backend requires a solver path");
}

SolveResult ExternalBackend::run(const Cnf &cnf,
                                 std::span<const Literal> assumptions) {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (time_limit_)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   *time_limit_);

  TempFile input;
  {
    std::ofstream out(input.path());
    write_dimacs(out, cnf, assumptions);
    if (!out)
      throw BackendError("cannot write " + input.path());
  }

  ChildResult child = run_child(path_, input.path(), deadline);
  if (WIFSIGNALED(child.wait_status))
    throw BackendError("solver '" + path_ + "' killed by signal " +
                       std::to_string(WTERMSIG(child.wait_status)));
  int exit_code = WIFEXITED(child.wait_status) ? WEXITSTATUS(child.wait_status) : -1;

  SolverReport report;
  try {
    report = parse_solver_output(child.output);
  } catch (const ParseError &e) {
    throw BackendError("unreadable solver output: " + std::string(e.what()));
  }
  if (!report.status) {
    if (exit_code == 10)
      report.status = SolveStatus::Sat;
    else if (exit_code == 20)
      report.status = SolveStatus::Unsat;
    else
      throw BackendError("solver '" + path_ + "' gave no verdict (exit code " +
                         std::to_string(exit_code) + ")");
  }
  if (*report.status == SolveStatus::Unsat)
    return SolveResult::unsat();

  if (!report.has_values)
    throw BackendError("solver '" + path_ + "' reported SAT without a model");
  std::uint32_t n = cnf.num_vars;
  for (Literal l : assumptions)
    n = std::max(n, l.var().value);
  Assignment model(n);
  for (std::uint32_t v = 1; v <= n; ++v)
    model.set(VarId{v}, false);
  for (Literal l : report.values)
    if (l.var().value <= n)
      model.set(l.var(), !l.is_negative());
  return SolveResult::sat(std::move(model));
}

} // namespace pearlsat
