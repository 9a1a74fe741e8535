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

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lodforge/core/run_stats.hpp"

namespace lodforge::bench {

struct Measurement {
  double wall_seconds = 0.0;
  std::uint64_t peak_rss_kb = 0;  // max of VmHWM samples and (when trustworthy) ru_maxrss
  std::size_t rss_samples = 0;
  int exit_code = 0;
};

/// Runs argv[0] with argv as a child process, sampling its resident set
/// every `interval` until it exits. Throws Error{kPipelineFailed} if the
/// child cannot be started or exits nonzero.
Measurement measure_command(const std::vector<std::string>& argv,
                            std::chrono::milliseconds interval = std::chrono::milliseconds(100));

/// Path of the running executable (/proc/self/exe).
std::filesystem::path self_executable();

}  // namespace lodforge::bench
