// Copyright 2026 The Schmidt Games Authors
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

#ifndef SCHMIDT_EXPERIMENT_H_
#define SCHMIDT_EXPERIMENT_H_

// Experiment orchestration behind the command-line tool. Each subcommand
// takes a JSON parameter record, writes its artifacts, and returns an exit
// status: 0 success, 2 invalid spec, 3 failed property check.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schmidt/rational.h"

namespace schmidt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidSpec = 2;
inline constexpr int kExitCheckFailed = 3;

struct ExperimentSpec {
  // "game play", "game windim-demo", "badness", "cf cylinders",
  // "cf ratio-check", "ifs render", "ifs dim", "measure doubling",
  // "measure decay", "theorem schedule".
  std::string subcommand;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 1;
  // Empty paths send the primary artifact (CSV for tabular commands, JSON
  // otherwise) to the output stream; secondary artifacts are skipped.
  std::string json_path;
  std::string csv_path;
  std::string svg_path;

  nlohmann::json ToJson() const;
};

std::vector<std::string> Subcommands();

// Never throws: invalid specs and runtime errors are reported on `err`.
int Run(const ExperimentSpec& spec, std::ostream& out, std::ostream& err);

// "base:kmin:kmax" for base^-k, k = kmin..kmax, or a comma list of
// rationals and decimals. Throws std::invalid_argument.
std::vector<Rational> ParseScales(const std::string& text);

// Comma-separated integers.
std::vector<long> ParseLongList(const std::string& text);

}  // namespace schmidt

#endif  // SCHMIDT_EXPERIMENT_H_
