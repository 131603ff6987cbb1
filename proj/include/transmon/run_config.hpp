// Copyright 2026 The transmon-wh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRANSMON_RUN_CONFIG_HPP
#define TRANSMON_RUN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "transmon/experiments.hpp"

namespace transmon {

enum class Command { potential, spectrum, wh, fig2, fig3, fig4 };

std::string to_string(Command command);

/// Values from a JSON config file or command-line flags. Unset fields fall
/// back to per-command defaults in resolve(). All physical quantities in GHz.
///
/// The J grid is given by exactly one of: `J` (single value), `j_grid`
/// (explicit list) or `j_max` / `j_points` (uniform grid).
struct RunConfig {
  std::optional<int> L;
  std::optional<double> mean;
  std::optional<double> delta;
  std::optional<double> e_c;
  std::optional<double> J;
  std::optional<std::vector<double>> j_grid;
  std::optional<double> j_max;
  std::optional<int> j_points;
  std::optional<std::string> engine;
  std::optional<std::string> disorder;
  std::optional<int> n_realizations;
  std::optional<std::uint64_t> seed;
  std::optional<double> denom_tol;
  std::optional<double> overlap_threshold;
  std::optional<int> max_ed_sites;
  std::optional<std::uint64_t> max_sector_dim;
  std::optional<std::string> out;
  std::optional<unsigned> threads;
};

/// Throws InvalidArgument for unknown keys, wrong value types or a
/// non-object document.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

/// Fields set in `flags` win. Setting any J-grid field in `flags` replaces
/// every J-grid field of `file`.
RunConfig merge(const RunConfig& file, const RunConfig& flags);

/// Applies per-command defaults and validates. potential, spectrum and wh
/// require L and take a single J (default 1 MHz); fig2 and fig3 default to
/// 2x3 on the 31-point grid up to 1.5 MHz; fig4 defaults to 2x20 at
/// J = 1 MHz, E_C = 0.15 GHz.
SweepSpec resolve(const RunConfig& config, Command command);

}  // namespace transmon

#endif  // TRANSMON_RUN_CONFIG_HPP
