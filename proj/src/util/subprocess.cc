#include "rtlbench/util/subprocess.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <stdexcept>

namespace rtlbench::util {

namespace {

void AppendCapped(std::string& dst, const char* data, size_t n, size_t cap) {
  if (dst.size() >= cap) return;
  dst.append(data, std::min(n, cap - dst.size()));
}

}  // namespace

RunResult RunProcess(const std::vector<std::string>& argv,
                     const RunOptions& options) {
  if (argv.empty()) throw std::invalid_argument("empty argv");

  int out_pipe[2], err_pipe[2], exec_pipe[2];
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0 || pipe(exec_pipe) != 0) {
    throw std::runtime_error("pipe() failed");
  }
  fcntl(exec_pipe[1], F_SETFD, FD_CLOEXEC);

  const auto start = std::chrono::steady_clock::now();
  pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork() failed");

  if (pid == 0) {
    setpgid(0, 0);  // own process group so a timeout kill reaps helpers too
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    close(out_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[0]);
    close(err_pipe[1]);
    close(exec_pipe[0]);
    if (options.cwd && chdir(options.cwd->c_str()) != 0) {
      int e = errno;
      (void)!write(exec_pipe[1], &e, sizeof(e));
      _exit(127);
    }
    std::vector<char*> cargv;
    cargv.reserve(argv.size() + 1);
    for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
    cargv.push_back(nullptr);
    execvp(cargv[0], cargv.data());
    int e = errno;
    (void)!write(exec_pipe[1], &e, sizeof(e));
    _exit(127);
  }

  close(out_pipe[1]);
  close(err_pipe[1]);
  close(exec_pipe[1]);

  RunResult result;
  int exec_errno = 0;
  {
    ssize_t n = read(exec_pipe[0], &exec_errno, sizeof(exec_errno));
    if (n != sizeof(exec_errno)) exec_errno = 0;
  }
  close(exec_pipe[0]);

  struct pollfd fds[2] = {{out_pipe[0], POLLIN, 0}, {err_pipe[0], POLLIN, 0}};
  bool open_fd[2] = {true, true};
  char buf[4096];
  bool killed = false;

  while (open_fd[0] || open_fd[1]) {
    int timeout_ms = -1;
    if (options.timeout_s > 0 && !killed) {
      auto elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      double remain = options.timeout_s - elapsed;
      if (remain <= 0) {
        kill(-pid, SIGKILL);
        killed = true;
        result.timed_out = true;
        timeout_ms = -1;
      } else {
        timeout_ms = static_cast<int>(remain * 1000) + 1;
      }
    }
    fds[0].fd = open_fd[0] ? out_pipe[0] : -1;
    fds[1].fd = open_fd[1] ? err_pipe[0] : -1;
    int rc = poll(fds, 2, timeout_ms);
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (rc == 0) continue;  // deadline handled at loop top
    for (int i = 0; i < 2; ++i) {
      if (!open_fd[i] || fds[i].revents == 0) continue;
      ssize_t n = read(fds[i].fd, buf, sizeof(buf));
      if (n > 0) {
        AppendCapped(i == 0 ? result.out : result.err, buf, size_t(n),
                     options.max_capture_bytes);
      } else if (n == 0 || (n < 0 && errno != EINTR && errno != EAGAIN)) {
        close(fds[i].fd);
        open_fd[i] = false;
      }
    }
  }
  if (open_fd[0]) close(out_pipe[0]);
  if (open_fd[1]) close(err_pipe[0]);

  int status = 0;
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  result.duration_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (exec_errno != 0) {
    result.binary_missing = (exec_errno == ENOENT);
    result.exit_code = 127;
    if (result.err.empty()) {
      result.err = argv[0] + ": " + std::strerror(exec_errno);
    }
    return result;
  }
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    result.exit_code = 128 + WTERMSIG(status);
  }
  return result;
}

}  // namespace rtlbench::util
