#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "tsmv/dimacs.hpp"
#include "tsmv/errors.hpp"
#include "tsmv/solver.hpp"

namespace tsmv {

namespace {

using Clock = std::chrono::steady_clock;

std::string temp_dir() {
  const char* t = std::getenv("TMPDIR");
  return t && *t ? t : "/tmp";
}

// tsmv-<pid>-<seq>.cnf / .out; the counter keeps concurrent queries apart.
std::string temp_base() {
  static std::atomic<uint64_t> seq{0};
  return temp_dir() + "/tsmv-" + std::to_string(getpid()) + "-" +
         std::to_string(seq.fetch_add(1));
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { ::unlink(path.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs "sh -c '<command> <cnf-path>'" with stdout redirected to out_path.
// Returns the exit status, or throws on timeout after killing the process
// group. kill_flag reports whether the deadline hit.
int run_with_deadline(const std::string& command, const std::string& out_path,
                      double timeout_s, bool* timed_out) {
  *timed_out = false;
  pid_t pid = fork();
  if (pid < 0) throw SolverError("external solver: fork failed");
  if (pid == 0) {
    setpgid(0, 0);  // own process group so the whole pipeline can be killed
    int fd = open(out_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
    if (fd >= 0) {
      dup2(fd, STDOUT_FILENO);
      close(fd);
    }
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  setpgid(pid, pid);

  const bool has_deadline = timeout_s >= 0.0;
  const auto deadline =
      Clock::now() + std::chrono::duration<double>(has_deadline ? timeout_s : 0.0);
  bool sigterm_sent = false;
  Clock::time_point sigterm_at{};

  for (;;) {
    int status = 0;
    pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid) {
      if (WIFEXITED(status)) return WEXITSTATUS(status);
      return -1;  // killed by signal
    }
    if (r < 0) throw SolverError("external solver: waitpid failed");
    const auto now = Clock::now();
    if (has_deadline && !sigterm_sent && now >= deadline) {
      *timed_out = true;
      kill(-pid, SIGTERM);
      sigterm_sent = true;
      sigterm_at = now;
    }
    if (sigterm_sent && now - sigterm_at > std::chrono::milliseconds(500)) {
      kill(-pid, SIGKILL);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
  }
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  out += "'";
  return out;
}

}  // namespace

SolveResult solve_external(const Cnf& cnf, const std::string& command,
                           const SolveBudget& budget) {
  const auto t0 = Clock::now();
  const std::string base = temp_base();
  TempFile cnf_file(base + ".cnf");
  TempFile out_file(base + ".out");

  {
    std::ofstream out(cnf_file.path, std::ios::binary);
    if (!out) throw SolverError("external solver: cannot write " + cnf_file.path);
    out << write_dimacs(cnf);
    if (!out.flush()) throw SolverError("external solver: write failed");
  }

  SolveResult res;
  auto finish = [&](SolveStatus st) {
    res.status = st;
    res.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
  };

  if (budget.timeout_s == 0.0) return finish(SolveStatus::Timeout);

  bool timed_out = false;
  const std::string full_cmd = command + " " + shell_quote(cnf_file.path);
  int exit_code =
      run_with_deadline(full_cmd, out_file.path, budget.timeout_s, &timed_out);
  if (timed_out) return finish(SolveStatus::Timeout);
  if (exit_code == 127) {
    throw SolverError("external solver: command not found: " + command);
  }

  const std::string output = read_file(out_file.path);
  if (output.empty()) {
    throw SolverError("external solver: no output (exit code " +
                      std::to_string(exit_code) + ")");
  }

  SolverOutput parsed = parse_solver_output(output);
  switch (parsed.status) {
    case SolverStatus::Unknown:
      return finish(SolveStatus::Timeout);
    case SolverStatus::Unsat:
      return finish(SolveStatus::Unsat);
    case SolverStatus::Sat: {
      // Trust nothing: the claimed model must satisfy every clause. Variables
      // the solver did not list default to false first.
      for (int v = 1; v <= cnf.var_count; ++v) {
        if (!parsed.assignment.has(v)) parsed.assignment.set(v, false);
      }
      if (!cnf.satisfied_by(parsed.assignment)) {
        throw SolverError("external solver: claimed model does not satisfy the formula");
      }
      res.assignment = parsed.assignment;
      return finish(SolveStatus::Sat);
    }
  }
  throw SolverError("external solver: unreachable status");
}

}  // namespace tsmv
