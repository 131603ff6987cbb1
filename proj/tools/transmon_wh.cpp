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

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "transmon/error.hpp"
#include "transmon/experiments.hpp"
#include "transmon/export.hpp"
#include "transmon/parallel.hpp"
#include "transmon/run_config.hpp"
#include "transmon/walsh.hpp"

namespace fs = std::filesystem;
using namespace transmon;

namespace {

// Full 2^N PT spectrum enumeration is refused above this size.
constexpr int kMaxPtSpectrumSites = 20;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Output {
 public:
  explicit Output(const std::optional<std::string>& dir) : dir_(dir) {
    if (dir_) fs::create_directories(*dir_);
  }
  bool to_files() const { return dir_.has_value(); }

  // stdout when no output directory was given.
  std::ostream& open(const std::string& name) {
    if (!dir_) return std::cout;
    files_.push_back(std::make_unique<std::ofstream>(fs::path(*dir_) / name));
    if (!*files_.back()) throw InvalidArgument("cannot write " + (fs::path(*dir_) / name).string());
    return *files_.back();
  }

 private:
  std::optional<std::string> dir_;
  std::vector<std::unique_ptr<std::ofstream>> files_;
};

void report(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

DisorderPattern pattern_for(const SweepSpec& spec, const Lattice& lattice) {
  return sweep_pattern(spec, lattice, 0);
}

void cmd_potential(const SweepSpec& spec, Output& out) {
  const Lattice lattice = build_lattice(spec.L);
  write_pattern_csv(out.open("potential.csv"), lattice, pattern_for(spec, lattice));
}

void cmd_spectrum(const SweepSpec& spec, Output& out) {
  const Lattice lattice = build_lattice(spec.L);
  const DisorderPattern pattern = pattern_for(spec, lattice);
  const double J = spec.j_grid.front();
  const auto modes = solve_single_particle<double>(lattice, pattern, J);
  if (spec.engine == Engine::ed) {
    const auto table = solve_qubit_spectrum(lattice, pattern, J, spec.e_c, spec.ed);
    report(table.warnings);
    write_spectrum_csv(out.open("spectrum.csv"), table);
  } else {
    const int n = static_cast<int>(lattice.size());
    if (n > kMaxPtSpectrumSites) {
      throw SizeCapExceeded("full PT spectrum is capped at " +
                            std::to_string(kMaxPtSpectrumSites) + " sites");
    }
    const auto tensors = build_pt_tensors(modes, spec.e_c, spec.denom_tol);
    report(modes.warnings);
    std::ostream& os = out.open("spectrum.csv");
    os << "bitstring,energy_ghz,overlap\n";
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const BitString b(n, mask);
      os << b.str() << ',' << format_number(energy_pt(b, modes, tensors)) << ",\n";
    }
  }
  if (out.to_files()) write_modes_csv(out.open("modes.csv"), lattice, modes);
}

void cmd_wh(const SweepSpec& spec, Output& out) {
  const Lattice lattice = build_lattice(spec.L);
  const DisorderPattern pattern = pattern_for(spec, lattice);
  const double J = spec.j_grid.front();
  if (spec.engine == Engine::ed) {
    const auto table = solve_qubit_spectrum(lattice, pattern, J, spec.e_c, spec.ed);
    report(table.warnings);
    write_walsh_csv(out.open("wh.csv"), walsh_hadamard(std::span<const double>(table.energies)));
  } else {
    const auto modes = solve_single_particle<double>(lattice, pattern, J);
    const auto tensors = build_pt_tensors(modes, spec.e_c, spec.denom_tol);
    report(modes.warnings);
    for (const auto& r : tensors.resonances) {
      std::cerr << "warning: " << (r.kind == ResonanceKind::site ? "site" : "mode")
                << " resonance, denominator " << format_number(r.denominator) << '\n';
    }
    write_pt_walsh_csv(out.open("wh.csv"), lattice, tensors);
  }
}

template <typename Result>
void emit(const char* name, const Result& result, Output& out) {
  report(result.warnings);
  write_csv(out.open(std::string(name) + ".csv"), result);
  if (out.to_files()) {
    out.open(std::string(name) + ".json") << metadata(result, utc_timestamp()).dump(2) << '\n';
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Walsh-Hadamard crosstalk coefficients of transmon arrays"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  RunConfig flags;
  std::vector<double> j_grid;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--out", flags.out, "output directory (default: stdout)");
  app.add_option("--threads", flags.threads, "worker threads (0 = all cores)");
  app.add_option("--seed", flags.seed, "base seed of the Gaussian ensemble");
  app.add_option("--L", flags.L, "lattice length (2 x L sites)");
  app.add_option("--mean", flags.mean, "mean frequency <omega> [GHz]");
  app.add_option("--delta", flags.delta, "AA amplitude Delta [GHz]");
  app.add_option("--ec", flags.e_c, "charging energy E_C [GHz]");
  app.add_option("--J", flags.J, "coupling J [GHz]");
  app.add_option("--j-grid", j_grid, "explicit J grid [GHz]");
  app.add_option("--j-max", flags.j_max, "uniform J grid maximum [GHz]");
  app.add_option("--j-points", flags.j_points, "uniform J grid size");
  app.add_option("--engine", flags.engine, "ed, pt or both");
  app.add_option("--disorder", flags.disorder, "aa or gaussian");
  app.add_option("--realizations", flags.n_realizations, "Gaussian ensemble size");
  app.add_option("--denom-tol", flags.denom_tol, "resonance tolerance [GHz]");
  app.add_option("--overlap-threshold", flags.overlap_threshold, "ED labelling warning level");
  app.add_option("--max-ed-sites", flags.max_ed_sites, "ED site cap");
  app.add_option("--max-sector-dim", flags.max_sector_dim, "ED dense sector cap");

  const std::vector<std::pair<Command, const char*>> commands = {
      {Command::potential, "frequency pattern CSV"},
      {Command::spectrum, "qubit-state energies"},
      {Command::wh, "Walsh-Hadamard coefficients"},
      {Command::fig2, "AA vs Gaussian disorder sweep"},
      {Command::fig3, "ED vs PT weight-2 coefficients"},
      {Command::fig4, "weight-2 range hierarchy"},
  };
  Command chosen = Command::potential;
  for (const auto& [command, help] : commands) {
    auto* sub = app.add_subcommand(to_string(command), help);
    sub->fallthrough();
    sub->callback([&chosen, command = command] { chosen = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::config_error);
  }
  if (!j_grid.empty()) flags.j_grid = j_grid;

  const RunConfig config = merge(config_path ? load_config(*config_path) : RunConfig{}, flags);
  if (config.threads) set_thread_count(*config.threads);
  const SweepSpec spec = resolve(config, chosen);
  Output out(config.out);

  switch (chosen) {
    case Command::potential: cmd_potential(spec, out); break;
    case Command::spectrum: cmd_spectrum(spec, out); break;
    case Command::wh: cmd_wh(spec, out); break;
    case Command::fig2: emit("fig2", run_fig2(spec), out); break;
    case Command::fig3: emit("fig3", run_fig3(spec), out); break;
    case Command::fig4: emit("fig4", run_fig4(spec), out); break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::config_error);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::numerical_failure);
  }
}
