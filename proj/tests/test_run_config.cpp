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

#include <doctest.h>

#include "transmon/run_config.hpp"

using namespace transmon;
using nlohmann::json;

TEST_SUITE("run_config") {

TEST_CASE("parse accepts known keys and rejects the rest") {
  const RunConfig c = parse_config(json{{"L", 4}, {"e_c", 0.2}, {"seed", 7}, {"engine", "pt"}});
  CHECK(c.L == 4);
  CHECK(c.e_c == 0.2);
  CHECK(c.seed == 7u);
  CHECK(c.engine == "pt");
  CHECK_THROWS_AS(parse_config(json{{"Lx", 4}}), InvalidArgument);
  CHECK_THROWS_AS(parse_config(json{{"L", "four"}}), InvalidArgument);
  CHECK_THROWS_AS(parse_config(json{{"seed", -1}}), InvalidArgument);
  CHECK_THROWS_AS(parse_config(json::array()), InvalidArgument);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), InvalidArgument);
}

TEST_CASE("flags override file values") {
  RunConfig file = parse_config(json{{"L", 4}, {"mean", 5.0}, {"j_grid", {0.0, 1e-3}}});
  RunConfig flags;
  flags.L = 5;
  flags.J = 2e-3;
  const RunConfig merged = merge(file, flags);
  CHECK(merged.L == 5);
  CHECK(merged.mean == 5.0);
  CHECK(merged.J == 2e-3);
  CHECK_FALSE(merged.j_grid.has_value());
}

TEST_CASE("per-command defaults") {
  const SweepSpec f2 = resolve(RunConfig{}, Command::fig2);
  CHECK(f2.L == 3);
  CHECK(f2.e_c == 0.33);
  CHECK(f2.j_grid.size() == 31);
  CHECK(f2.engine == Engine::ed);
  CHECK(f2.n_realizations == 100);

  CHECK(resolve(RunConfig{}, Command::fig3).engine == Engine::both);

  const SweepSpec f4 = resolve(RunConfig{}, Command::fig4);
  CHECK(f4.L == 20);
  CHECK(f4.e_c == 0.15);
  CHECK(f4.j_grid == std::vector<double>{1e-3});
  CHECK(f4.engine == Engine::pt);

  RunConfig l3;
  l3.L = 3;
  CHECK(resolve(l3, Command::wh).j_grid == std::vector<double>{1e-3});
  CHECK_THROWS_AS(resolve(RunConfig{}, Command::potential), InvalidArgument);
}

TEST_CASE("resolve rejects inconsistent settings") {
  RunConfig c;
  c.engine = "ed";
  CHECK_THROWS_AS(resolve(c, Command::fig4), InvalidArgument);
  c.engine = "warp";
  CHECK_THROWS_AS(resolve(c, Command::fig2), InvalidArgument);

  RunConfig grid;
  grid.L = 3;
  grid.j_grid = std::vector<double>{0.0, 1e-3};
  CHECK_THROWS_AS(resolve(grid, Command::spectrum), InvalidArgument);
  grid.J = 1e-3;
  CHECK_THROWS_AS(resolve(grid, Command::fig2), InvalidArgument);

  RunConfig points;
  points.j_points = 5;
  CHECK(resolve(points, Command::fig2).j_grid.size() == 5);
}

}  // TEST_SUITE
