// Copyright 2026 The maxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAXLAB_TOOLS_CLI_H_
#define MAXLAB_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace maxlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  std::string subcommand;
  std::string space_path;
  std::string measure_path;
  std::string function_path;
  std::string nu_path;
  std::string mode = "exact";
  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::string seed_source = "default";
  std::string expect;
  std::string out_path;
  std::string space_out_path;
  std::string measure_out_path;
  bool parallel = false;
  std::size_t n = 10;
  std::string family = "ultrametric";
  std::size_t dim = 2;
  std::int64_t range = 9;
  double probability = 0.3;
  double zero_fraction = 0.0;
};

/// Parses argv (args[0] is the program name), dispatches, writes the report
/// to cfg.out_path or `out`, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxlab::cli

#endif  // MAXLAB_TOOLS_CLI_H_
