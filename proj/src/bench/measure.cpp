// Copyright 2026 The lodforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lodforge/bench/measure.hpp"

#include <spawn.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <condition_variable>
#include <cstring>
#include <fstream>
#include <mutex>
#include <thread>

#include "lodforge/core/error.hpp"

extern char** environ;

namespace lodforge::bench {
namespace {

// VmHWM is the resident-set high-water mark of the current image; exec
// resets it, so a sample reflects the child alone.
std::uint64_t read_rss_kb(const std::string& status_file) {
  std::ifstream in(status_file);
  std::string line;
  std::uint64_t kb = 0;
  while (std::getline(in, line)) {
    if (line.starts_with("VmHWM:") || line.starts_with("VmRSS:")) {
      kb = std::max<std::uint64_t>(kb, std::strtoull(line.c_str() + 6, nullptr, 10));
    }
  }
  return kb;
}

}  // namespace

std::filesystem::path self_executable() { return std::filesystem::read_symlink("/proc/self/exe"); }

Measurement measure_command(const std::vector<std::string>& argv, std::chrono::milliseconds interval) {
  if (argv.empty()) throw Error(ErrorCode::kConfigError, "empty command");
  std::vector<char*> args;
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);

  // Upper bound on what the child's ru_maxrss can inherit from us.
  const std::uint64_t own_hwm_kb = read_rss_kb("/proc/self/status");
  const auto start = std::chrono::steady_clock::now();
  pid_t pid = 0;
  if (const int rc = posix_spawnp(&pid, args[0], nullptr, nullptr, args.data(), environ); rc != 0) {
    throw Error(ErrorCode::kPipelineFailed, "cannot start " + argv[0] + ": " + std::strerror(rc));
  }

  Measurement m;
  std::mutex mu;
  std::condition_variable cv;
  bool done = false;
  std::thread sampler([&] {
    const std::string status_file = "/proc/" + std::to_string(pid) + "/status";
    // Start at 1 ms and double up to `interval` so short runs are seen too.
    auto wait = std::min(interval, std::chrono::milliseconds(1));
    std::unique_lock lock(mu);
    while (!done) {
      lock.unlock();
      const auto rss = read_rss_kb(status_file);
      lock.lock();
      m.peak_rss_kb = std::max(m.peak_rss_kb, rss);
      ++m.rss_samples;
      cv.wait_for(lock, wait, [&] { return done; });
      wait = std::min(interval, wait * 2);
    }
  });

  // Wait without reaping so the sampler never reads a recycled pid.
  siginfo_t info{};
  while (waitid(P_PID, static_cast<id_t>(pid), &info, WEXITED | WNOWAIT) != 0 && errno == EINTR) {
  }
  m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  {
    std::lock_guard lock(mu);
    done = true;
  }
  cv.notify_all();
  sampler.join();

  // Across vfork+exec the child's ru_maxrss starts from our own high-water
  // mark, so it is only trusted when it exceeds that.
  int status = 0;
  rusage usage{};
  while (wait4(pid, &status, 0, &usage) < 0 && errno == EINTR) {
  }
  if (const auto maxrss = static_cast<std::uint64_t>(usage.ru_maxrss); maxrss > own_hwm_kb) {
    m.peak_rss_kb = std::max(m.peak_rss_kb, maxrss);
  }
  m.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  if (m.exit_code != 0) {
    throw Error(ErrorCode::kPipelineFailed, argv[0] + " " + (argv.size() > 1 ? argv[1] : "") + " exited with " +
                                                std::to_string(m.exit_code));
  }
  return m;
}

}  // namespace lodforge::bench
