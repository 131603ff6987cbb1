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

#ifndef TRANSMON_EXPERIMENTS_HPP
#define TRANSMON_EXPERIMENTS_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "transmon/disorder.hpp"
#include "transmon/exact_diag.hpp"
#include "transmon/lattice.hpp"
#include "transmon/mbpt.hpp"
#include "transmon/walsh.hpp"

namespace transmon {

enum class Engine { ed, pt, both };
enum class DisorderMode { aa, gaussian_ensemble };

std::string to_string(Engine engine);
std::string to_string(DisorderMode mode);
Engine parse_engine(const std::string& text);            // "ed" | "pt" | "both"
DisorderMode parse_disorder(const std::string& text);    // "aa" | "gaussian"

/// `points` uniform values over [0, j_max] (GHz), endpoints included.
std::vector<double> uniform_j_grid(int points = 31, double j_max = 1.5e-3);

struct SweepSpec {
  int L = 3;
  double mean = 5.5;
  double delta = 1.0;
  double e_c = 0.33;
  std::vector<double> j_grid = uniform_j_grid();
  Engine engine = Engine::ed;
  DisorderMode disorder = DisorderMode::aa;
  int n_realizations = 100;
  std::uint64_t base_seed = 0;
  double denom_tol = kDefaultDenominatorTolerance;
  EdOptions ed;
};

/// Throws InvalidArgument for an empty or negative J grid, L < 1,
/// n_realizations < 1, a non-positive mean or negative delta / E_C.
void validate(const SweepSpec& spec);

/// 16 J E_C / <omega>
double effective_lambda(double J, double e_c, double mean);

/// AA pattern of the spec, or for a Gaussian ensemble the realization
/// `index` (seed base_seed + index, sigma matched to the AA pattern).
DisorderPattern sweep_pattern(const SweepSpec& spec, const Lattice& lattice,
                              int realization = 0);

/// Mean |w| over weight-2 coefficients whose two ones sit at Manhattan
/// distance `range`.
double mean_abs_w_at_range(const Lattice& lattice, const WalshTable<double>& table, int range);

struct Fig2Row {
  double J = 0;
  double lambda = 0;
  double aa = 0;     // mean |w|, l = 1, AA pattern
  double gauss = 0;  // same, averaged over the Gaussian ensemble
  int exceptions = 0;  // ambiguous labels at this grid point
};

struct Fig2Result {
  SweepSpec spec;
  double sigma = 0;
  std::vector<Fig2Row> rows;
  std::vector<std::string> warnings;
};

/// AA vs Gaussian disorder on the ED engine. Every (J, realization) item is
/// independent; results are reduced in grid order.
Fig2Result run_fig2(const SweepSpec& spec);

struct Fig3Row {
  double J = 0;
  double lambda = 0;
  Eigen::Index l1 = 0, l2 = 0;
  int range = 0;
  double w_ed = 0;
  double w_pt = 0;
  int exceptions = 0;  // ambiguous ED labels at this grid point
};

struct Fig3Result {
  SweepSpec spec;
  std::vector<Fig3Row> rows;  // grid order, then (l1, l2) lexicographic
  std::vector<std::string> warnings;
};

/// Every weight-2 coefficient from both engines (engine must be Both).
Fig3Result run_fig3(const SweepSpec& spec);

struct RangeBin {
  int range = 0;
  std::vector<Bond> pairs;
  double mean_abs_w = 0;
};

struct Fig4Result {
  SweepSpec spec;
  std::vector<RangeBin> bins;  // range 1 .. L
  std::vector<Resonance> resonances;
  std::vector<std::string> warnings;
};

/// Range-binned weight-2 hierarchy from perturbation theory (engine PT,
/// exactly one J).
Fig4Result run_fig4(const SweepSpec& spec);

/// Least-squares fit of log(y) against x; returns {slope, pearson r}.
std::pair<double, double> log_linear_fit(const std::vector<double>& x,
                                         const std::vector<double>& y);

// CSV and JSON sidecar writers.
void write_csv(std::ostream& out, const Fig2Result& result);
void write_csv(std::ostream& out, const Fig3Result& result);
void write_csv(std::ostream& out, const Fig4Result& result);

nlohmann::json spec_to_json(const SweepSpec& spec);

/// Spec, seeds, tolerances and warnings. `timestamp` is the only field that
/// changes between identical runs; pass an empty string to omit it.
nlohmann::json metadata(const Fig2Result& result, const std::string& timestamp);
nlohmann::json metadata(const Fig3Result& result, const std::string& timestamp);
nlohmann::json metadata(const Fig4Result& result, const std::string& timestamp);

}  // namespace transmon

#endif  // TRANSMON_EXPERIMENTS_HPP
