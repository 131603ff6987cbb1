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

#include "transmon/run_config.hpp"

#include <fstream>

#include "transmon/error.hpp"

namespace transmon {

std::string to_string(Command command) {
  switch (command) {
    case Command::potential: return "potential";
    case Command::spectrum: return "spectrum";
    case Command::wh: return "wh";
    case Command::fig2: return "fig2";
    case Command::fig3: return "fig3";
    default: return "fig4";
  }
}

namespace {

template <typename T>
void read(const nlohmann::json& doc, const char* key, std::optional<T>& field) {
  try {
    field = doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("config key '") + key + "': " + e.what());
  }
}

template <typename T>
void take(std::optional<T>& into, const std::optional<T>& from) {
  if (from) into = from;
}

}  // namespace

RunConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidArgument("config must be a JSON object");
  RunConfig c;
  for (const auto& [key, value] : doc.items()) {
    if (key == "L") read(doc, "L", c.L);
    else if (key == "mean") read(doc, "mean", c.mean);
    else if (key == "delta") read(doc, "delta", c.delta);
    else if (key == "e_c") read(doc, "e_c", c.e_c);
    else if (key == "J") read(doc, "J", c.J);
    else if (key == "j_grid") read(doc, "j_grid", c.j_grid);
    else if (key == "j_max") read(doc, "j_max", c.j_max);
    else if (key == "j_points") read(doc, "j_points", c.j_points);
    else if (key == "engine") read(doc, "engine", c.engine);
    else if (key == "disorder") read(doc, "disorder", c.disorder);
    else if (key == "n_realizations") read(doc, "n_realizations", c.n_realizations);
    else if (key == "seed") {
      if (!value.is_number_integer() ||
          (!value.is_number_unsigned() && value.get<std::int64_t>() < 0)) {
        throw InvalidArgument("config key 'seed' must be an unsigned 64-bit integer");
      }
      read(doc, "seed", c.seed);
    }
    else if (key == "denom_tol") read(doc, "denom_tol", c.denom_tol);
    else if (key == "overlap_threshold") read(doc, "overlap_threshold", c.overlap_threshold);
    else if (key == "max_ed_sites") read(doc, "max_ed_sites", c.max_ed_sites);
    else if (key == "max_sector_dim") read(doc, "max_sector_dim", c.max_sector_dim);
    else if (key == "out") read(doc, "out", c.out);
    else if (key == "threads") read(doc, "threads", c.threads);
    else throw InvalidArgument("unknown config key '" + key + "'");
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

RunConfig merge(const RunConfig& file, const RunConfig& flags) {
  RunConfig c = file;
  if (flags.J || flags.j_grid || flags.j_max || flags.j_points) {
    c.J.reset();
    c.j_grid.reset();
    c.j_max.reset();
    c.j_points.reset();
  }
  take(c.L, flags.L);
  take(c.mean, flags.mean);
  take(c.delta, flags.delta);
  take(c.e_c, flags.e_c);
  take(c.J, flags.J);
  take(c.j_grid, flags.j_grid);
  take(c.j_max, flags.j_max);
  take(c.j_points, flags.j_points);
  take(c.engine, flags.engine);
  take(c.disorder, flags.disorder);
  take(c.n_realizations, flags.n_realizations);
  take(c.seed, flags.seed);
  take(c.denom_tol, flags.denom_tol);
  take(c.overlap_threshold, flags.overlap_threshold);
  take(c.max_ed_sites, flags.max_ed_sites);
  take(c.max_sector_dim, flags.max_sector_dim);
  take(c.out, flags.out);
  take(c.threads, flags.threads);
  return c;
}

SweepSpec resolve(const RunConfig& c, Command command) {
  const bool figure =
      command == Command::fig2 || command == Command::fig3 || command == Command::fig4;
  SweepSpec s;
  if (c.L) {
    s.L = *c.L;
  } else if (!figure) {
    throw InvalidArgument(to_string(command) + " requires L");
  } else {
    s.L = command == Command::fig4 ? 20 : 3;
  }
  s.e_c = command == Command::fig4 ? 0.15 : 0.33;
  if (c.mean) s.mean = *c.mean;
  if (c.delta) s.delta = *c.delta;
  if (c.e_c) s.e_c = *c.e_c;

  const int grid_sources = (c.J ? 1 : 0) + (c.j_grid ? 1 : 0) + ((c.j_max || c.j_points) ? 1 : 0);
  if (grid_sources > 1) {
    throw InvalidArgument("give only one of J, j_grid or j_max/j_points");
  }
  const bool single_j = command != Command::fig2 && command != Command::fig3;
  if (c.J) {
    s.j_grid = {*c.J};
  } else if (c.j_grid) {
    s.j_grid = *c.j_grid;
  } else if (c.j_max || c.j_points) {
    s.j_grid = uniform_j_grid(c.j_points.value_or(31), c.j_max.value_or(1.5e-3));
  } else if (single_j) {
    s.j_grid = {1e-3};
  }
  if (single_j && s.j_grid.size() != 1) {
    throw InvalidArgument(to_string(command) + " takes a single J value");
  }

  switch (command) {
    case Command::fig3: s.engine = Engine::both; break;
    case Command::fig4: s.engine = Engine::pt; break;
    default: s.engine = Engine::ed; break;
  }
  if (c.engine) s.engine = parse_engine(*c.engine);
  if (c.disorder) s.disorder = parse_disorder(*c.disorder);
  if (c.n_realizations) s.n_realizations = *c.n_realizations;
  if (c.seed) s.base_seed = *c.seed;
  if (c.denom_tol) s.denom_tol = *c.denom_tol;
  if (c.overlap_threshold) s.ed.overlap_threshold = *c.overlap_threshold;
  if (c.max_ed_sites) s.ed.max_sites = *c.max_ed_sites;
  if (c.max_sector_dim) s.ed.max_sector_dim = *c.max_sector_dim;

  if ((command == Command::spectrum || command == Command::wh) && s.engine == Engine::both) {
    throw InvalidArgument(to_string(command) + " takes engine ed or pt");
  }
  if (command == Command::fig2 && s.engine != Engine::ed) {
    throw InvalidArgument("fig2 runs on the ED engine only");
  }
  if (command == Command::fig3 && s.engine != Engine::both) {
    throw InvalidArgument("fig3 needs engine 'both'");
  }
  if (command == Command::fig4 && s.engine != Engine::pt) {
    throw InvalidArgument("fig4 runs on the PT engine only");
  }
  validate(s);
  return s;
}

}  // namespace transmon
