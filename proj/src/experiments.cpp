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

#include "transmon/experiments.hpp"

#include <cmath>
#include <numeric>

#include "transmon/export.hpp"
#include "transmon/parallel.hpp"
#include "transmon/walsh.hpp"

namespace transmon {

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::ed: return "ed";
    case Engine::pt: return "pt";
    default: return "both";
  }
}

std::string to_string(DisorderMode mode) {
  return mode == DisorderMode::aa ? "aa" : "gaussian";
}

Engine parse_engine(const std::string& text) {
  if (text == "ed") return Engine::ed;
  if (text == "pt") return Engine::pt;
  if (text == "both") return Engine::both;
  throw InvalidArgument("unknown engine '" + text + "' (expected ed, pt or both)");
}

DisorderMode parse_disorder(const std::string& text) {
  if (text == "aa") return DisorderMode::aa;
  if (text == "gaussian") return DisorderMode::gaussian_ensemble;
  throw InvalidArgument("unknown disorder '" + text + "' (expected aa or gaussian)");
}

std::vector<double> uniform_j_grid(int points, double j_max) {
  if (points < 1) throw InvalidArgument("J grid needs at least one point");
  if (!(j_max >= 0)) throw InvalidArgument("J grid maximum must be non-negative");
  if (points == 1) return {j_max};
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[i] = j_max * i / (points - 1);
  return grid;
}

void validate(const SweepSpec& spec) {
  if (spec.L < 1) throw InvalidArgument("L must be at least 1");
  if (!(spec.mean > 0)) throw InvalidArgument("mean frequency must be positive");
  if (!(spec.delta >= 0)) throw InvalidArgument("delta must be non-negative");
  if (!(spec.e_c >= 0)) throw InvalidArgument("E_C must be non-negative");
  if (spec.j_grid.empty()) throw InvalidArgument("J grid is empty");
  for (double J : spec.j_grid) {
    if (!(J >= 0) || !std::isfinite(J)) throw InvalidArgument("J grid values must be >= 0");
  }
  if (spec.n_realizations < 1) throw InvalidArgument("n_realizations must be at least 1");
  if (!(spec.denom_tol >= 0)) throw InvalidArgument("denom_tol must be non-negative");
  if (!(spec.ed.overlap_threshold >= 0 && spec.ed.overlap_threshold <= 1)) {
    throw InvalidArgument("overlap threshold must lie in [0, 1]");
  }
}

double effective_lambda(double J, double e_c, double mean) {
  if (!(mean > 0)) throw InvalidArgument("mean frequency must be positive");
  return 16.0 * J * e_c / mean;
}

DisorderPattern sweep_pattern(const SweepSpec& spec, const Lattice& lattice,
                              int realization) {
  DisorderSpec aa{DisorderKind::metallic_aa, spec.mean, spec.delta, 0.0, 0};
  DisorderPattern pattern = generate_pattern(lattice, aa);
  if (spec.disorder == DisorderMode::aa) return pattern;
  DisorderSpec g{DisorderKind::gaussian, spec.mean, spec.delta,
                 lattice.size() >= 2 ? matched_sigma(pattern) : 0.0,
                 spec.base_seed + static_cast<std::uint64_t>(realization)};
  return generate_pattern(lattice, g);
}

double mean_abs_w_at_range(const Lattice& lattice, const WalshTable<double>& table,
                           int range) {
  const auto pairs = pairs_at_range(lattice, range);
  if (pairs.empty()) return 0.0;
  double acc = 0;
  for (const auto& [i, j] : pairs) {
    acc += std::abs(table.coefficients[(std::uint64_t{1} << i) | (std::uint64_t{1} << j)]);
  }
  return acc / static_cast<double>(pairs.size());
}

namespace {

std::string tag(double J, int realization) {
  std::string s = "J=" + format_number(J);
  if (realization >= 0) s += " realization=" + std::to_string(realization);
  return s + ": ";
}

struct EdPoint {
  WalshTable<double> walsh;
  std::vector<std::string> warnings;
  int ambiguous = 0;
};

EdPoint ed_point(const Lattice& lattice, const DisorderPattern& pattern, double J,
                 const SweepSpec& spec) {
  const SpectrumTable<double> table = solve_qubit_spectrum(lattice, pattern, J, spec.e_c, spec.ed);
  EdPoint p{walsh_hadamard(std::span<const double>(table.energies)), table.warnings, 0};
  for (std::size_t m = 0; m < table.overlaps.size(); ++m) {
    if (table.overlaps[m] < spec.ed.overlap_threshold) ++p.ambiguous;
  }
  return p;
}

}  // namespace

Fig2Result run_fig2(const SweepSpec& spec) {
  validate(spec);
  if (spec.engine != Engine::ed) throw InvalidArgument("fig2 runs on the ED engine only");
  const Lattice lattice = build_lattice(spec.L);
  check_ed_size(static_cast<int>(lattice.size()), spec.ed);

  SweepSpec aa_spec = spec;
  aa_spec.disorder = DisorderMode::aa;
  SweepSpec g_spec = spec;
  g_spec.disorder = DisorderMode::gaussian_ensemble;
  const DisorderPattern aa = sweep_pattern(aa_spec, lattice);
  std::vector<DisorderPattern> ensemble;
  for (int r = 0; r < spec.n_realizations; ++r) {
    ensemble.push_back(sweep_pattern(g_spec, lattice, r));
  }

  const std::size_t n_j = spec.j_grid.size();
  const std::size_t per_j = 1 + ensemble.size();
  std::vector<double> value(n_j * per_j);
  std::vector<int> ambiguous(n_j * per_j);
  std::vector<std::vector<std::string>> warnings(n_j * per_j);
  parallel_for(std::size_t{0}, n_j * per_j, [&](std::size_t item) {
    const std::size_t j = item / per_j;
    const std::size_t r = item % per_j;
    const double J = spec.j_grid[j];
    const DisorderPattern& pattern = r == 0 ? aa : ensemble[r - 1];
    EdPoint p = ed_point(lattice, pattern, J, spec);
    value[item] = mean_abs_w_at_range(lattice, p.walsh, 1);
    ambiguous[item] = p.ambiguous;
    for (auto& w : p.warnings) {
      warnings[item].push_back(tag(J, static_cast<int>(r) - 1) + w);
    }
  });

  Fig2Result result;
  result.spec = spec;
  result.sigma = ensemble.front().spec.sigma;
  for (std::size_t j = 0; j < n_j; ++j) {
    Fig2Row row;
    row.J = spec.j_grid[j];
    row.lambda = effective_lambda(row.J, spec.e_c, spec.mean);
    row.aa = value[j * per_j];
    double acc = 0;
    for (std::size_t r = 1; r < per_j; ++r) acc += value[j * per_j + r];
    row.gauss = acc / static_cast<double>(ensemble.size());
    for (std::size_t r = 0; r < per_j; ++r) {
      row.exceptions += ambiguous[j * per_j + r];
      auto& w = warnings[j * per_j + r];
      result.warnings.insert(result.warnings.end(), w.begin(), w.end());
    }
    result.rows.push_back(row);
  }
  return result;
}

Fig3Result run_fig3(const SweepSpec& spec) {
  validate(spec);
  if (spec.engine != Engine::both) throw InvalidArgument("fig3 needs engine 'both'");
  const Lattice lattice = build_lattice(spec.L);
  check_ed_size(static_cast<int>(lattice.size()), spec.ed);
  const DisorderPattern pattern = sweep_pattern(spec, lattice);
  const auto n = static_cast<Eigen::Index>(lattice.size());

  std::vector<std::vector<Fig3Row>> rows(spec.j_grid.size());
  std::vector<std::vector<std::string>> warnings(spec.j_grid.size());
  parallel_for(std::size_t{0}, spec.j_grid.size(), [&](std::size_t j) {
    const double J = spec.j_grid[j];
    EdPoint ed = ed_point(lattice, pattern, J, spec);
    const auto modes = solve_single_particle<double>(lattice, pattern, J);
    const auto tensors = build_pt_tensors(modes, spec.e_c, spec.denom_tol);
    for (auto& w : ed.warnings) warnings[j].push_back(tag(J, -1) + w);
    for (const auto& r : tensors.resonances) {
      warnings[j].push_back(tag(J, -1) + (r.kind == ResonanceKind::site ? "site" : "mode") +
                            " resonance, denominator " + format_number(r.denominator));
    }
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = a + 1; b < n; ++b) {
        Fig3Row row;
        row.J = J;
        row.lambda = effective_lambda(J, spec.e_c, spec.mean);
        row.l1 = a;
        row.l2 = b;
        row.range = correlation_range(lattice, static_cast<std::size_t>(a),
                                      static_cast<std::size_t>(b));
        row.w_ed = ed.walsh.coefficients[(std::uint64_t{1} << a) | (std::uint64_t{1} << b)];
        row.w_pt = wh_pt_total({a, b}, tensors);
        row.exceptions = ed.ambiguous;
        rows[j].push_back(row);
      }
    }
  });

  Fig3Result result;
  result.spec = spec;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    result.rows.insert(result.rows.end(), rows[j].begin(), rows[j].end());
    result.warnings.insert(result.warnings.end(), warnings[j].begin(), warnings[j].end());
  }
  return result;
}

Fig4Result run_fig4(const SweepSpec& spec) {
  validate(spec);
  if (spec.engine != Engine::pt) throw InvalidArgument("fig4 runs on the PT engine only");
  if (spec.j_grid.size() != 1) throw InvalidArgument("fig4 takes exactly one J value");
  const double J = spec.j_grid.front();
  const Lattice lattice = build_lattice(spec.L);
  const DisorderPattern pattern = sweep_pattern(spec, lattice);
  const auto modes = solve_single_particle<double>(lattice, pattern, J);
  const auto tensors = build_pt_tensors(modes, spec.e_c, spec.denom_tol);

  Fig4Result result;
  result.spec = spec;
  result.resonances = tensors.resonances;
  result.warnings = modes.warnings;
  for (int range = 1; range <= spec.L; ++range) {
    RangeBin bin;
    bin.range = range;
    bin.pairs = pairs_at_range(lattice, range);
    std::vector<double> w(bin.pairs.size());
    parallel_for(std::size_t{0}, bin.pairs.size(), [&](std::size_t k) {
      const auto a = static_cast<Eigen::Index>(bin.pairs[k].first);
      const auto b = static_cast<Eigen::Index>(bin.pairs[k].second);
      w[k] = std::abs(wh_pt_total({a, b}, tensors));
    });
    double acc = 0;
    for (double v : w) acc += v;
    bin.mean_abs_w = bin.pairs.empty() ? 0.0 : acc / static_cast<double>(bin.pairs.size());
    result.bins.push_back(std::move(bin));
  }
  return result;
}

std::pair<double, double> log_linear_fit(const std::vector<double>& x,
                                         const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidArgument("log-linear fit needs two equal-length series of >= 2 points");
  }
  const auto n = static_cast<double>(x.size());
  std::vector<double> ly(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] > 0)) throw InvalidArgument("log-linear fit needs positive y values");
    ly[i] = std::log(y[i]);
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (ly[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  return {sxy / sxx, sxy / std::sqrt(sxx * syy)};
}

void write_csv(std::ostream& out, const Fig2Result& result) {
  out << "lambda,j_ghz,mean_abs_w_aa_ghz,mean_abs_w_gauss_ghz,exceptions\n";
  for (const auto& r : result.rows) {
    out << format_number(r.lambda) << ',' << format_number(r.J) << ',' << format_number(r.aa)
        << ',' << format_number(r.gauss) << ',' << r.exceptions << '\n';
  }
}

void write_csv(std::ostream& out, const Fig3Result& result) {
  const int n = 2 * result.spec.L;
  out << "lambda,j_ghz,bitstring,l1,l2,range_l,w_ed_ghz,w_pt_ghz,exceptions\n";
  for (const auto& r : result.rows) {
    out << format_number(r.lambda) << ',' << format_number(r.J) << ','
        << BitString::from_positions(n, {r.l1, r.l2}).str() << ',' << r.l1 << ',' << r.l2
        << ',' << r.range << ',' << format_number(r.w_ed) << ',' << format_number(r.w_pt)
        << ',' << r.exceptions << '\n';
  }
}

void write_csv(std::ostream& out, const Fig4Result& result) {
  out << "range_l,n_pairs,mean_abs_w_ghz\n";
  for (const auto& b : result.bins) {
    out << b.range << ',' << b.pairs.size() << ',' << format_number(b.mean_abs_w) << '\n';
  }
}

nlohmann::json spec_to_json(const SweepSpec& spec) {
  return {
      {"L", spec.L},
      {"mean", spec.mean},
      {"delta", spec.delta},
      {"e_c", spec.e_c},
      {"j_grid", spec.j_grid},
      {"engine", to_string(spec.engine)},
      {"disorder", to_string(spec.disorder)},
      {"n_realizations", spec.n_realizations},
      {"base_seed", spec.base_seed},
      {"denom_tol", spec.denom_tol},
      {"overlap_threshold", spec.ed.overlap_threshold},
      {"max_ed_sites", spec.ed.max_sites},
      {"max_sector_dim", spec.ed.max_sector_dim},
  };
}

namespace {

nlohmann::json base_metadata(const char* experiment, const SweepSpec& spec,
                             const std::vector<std::string>& warnings,
                             const std::string& timestamp) {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["spec"] = spec_to_json(spec);
  j["units"] = "GHz";
  j["warnings"] = warnings;
  if (!timestamp.empty()) j["timestamp"] = timestamp;
  return j;
}

}  // namespace

nlohmann::json metadata(const Fig2Result& result, const std::string& timestamp) {
  auto j = base_metadata("fig2", result.spec, result.warnings, timestamp);
  j["gaussian_sigma_ghz"] = result.sigma;
  std::vector<std::uint64_t> seeds;
  for (int r = 0; r < result.spec.n_realizations; ++r) {
    seeds.push_back(result.spec.base_seed + static_cast<std::uint64_t>(r));
  }
  j["seeds"] = seeds;
  j["averaged_range_l"] = 1;
  return j;
}

nlohmann::json metadata(const Fig3Result& result, const std::string& timestamp) {
  return base_metadata("fig3", result.spec, result.warnings, timestamp);
}

nlohmann::json metadata(const Fig4Result& result, const std::string& timestamp) {
  auto j = base_metadata("fig4", result.spec, result.warnings, timestamp);
  auto& res = j["resonances"] = nlohmann::json::array();
  for (const auto& r : result.resonances) {
    res.push_back({{"kind", r.kind == ResonanceKind::site ? "site" : "mode"},
                   {"indices", r.indices},
                   {"denominator_ghz", r.denominator}});
  }
  return j;
}

}  // namespace transmon
