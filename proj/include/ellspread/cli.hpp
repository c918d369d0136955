// Copyright 2026 The ellspread Authors
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

#include <iosfwd>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ellspread::cli {

enum class Command { construct, verify, classify, restrict, info };

struct JobSpec {
  Command command = Command::info;
  unsigned e = 1;
  std::optional<unsigned> m;
  std::vector<unsigned> chain;
  std::vector<std::uint64_t> zetas;
  /// "elliptic", "symplectic" or "desarguesian" (construct only).
  std::string kind = "elliptic";
  std::string mode = "counting";
  std::string input;
  std::string output;
  unsigned max_degree = 40;
  bool census = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitResource = 3;

/// Executes one job: JSON on `out`, a human summary on `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Parses argv into a JobSpec and runs it.
int main(int argc, char** argv);

}  // namespace ellspread::cli
