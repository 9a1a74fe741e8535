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

#include "lodforge/core/log.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>

namespace lodforge {
namespace {

std::atomic<LogLevel> g_level{LogLevel::kWarning};
std::atomic<unsigned> g_warnings{0};
std::mutex g_mutex;
constexpr unsigned kMaxWarnings = 100;

}  // namespace

void set_log_level(LogLevel level) noexcept { g_level.store(level); }

LogLevel log_level() noexcept { return g_level.load(); }

void log_message(LogLevel level, std::string_view message) {
  if (level > g_level.load()) return;
  if (level == LogLevel::kWarning) {
    const unsigned n = ++g_warnings;
    if (n > kMaxWarnings) return;
    if (n == kMaxWarnings) message = "further warnings suppressed";
  }
  static constexpr const char* kNames[] = {"error", "warning", "info", "debug"};
  std::lock_guard lock(g_mutex);
  std::fprintf(stderr, "lodforge: %s: %.*s\n", kNames[static_cast<int>(level)],
               static_cast<int>(message.size()), message.data());
}

}  // namespace lodforge
