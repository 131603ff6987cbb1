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

#include "transmon/export.hpp"

#include <array>
#include <cstdio>
#include <vector>

namespace transmon {

std::string format_number(double value) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", value);
  return buf.data();
}

void write_pattern_csv(std::ostream& out, const Lattice& lattice,
                       const DisorderPattern& pattern) {
  if (static_cast<std::size_t>(pattern.frequencies.size()) != lattice.size()) {
    throw InvalidArgument("pattern and lattice disagree on the number of sites");
  }
  out << "x,y,omega_ghz\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out << lattice.sites[i].x << ',' << lattice.sites[i].y << ','
        << format_number(pattern.frequencies[static_cast<Eigen::Index>(i)]) << '\n';
  }
}

void write_modes_csv(std::ostream& out, const Lattice& lattice,
                     const SingleParticleModes<double>& modes) {
  out << "mu,E_mu_ghz,site_x,site_y,weight_on_home_site\n";
  for (Eigen::Index mu = 0; mu < modes.size(); ++mu) {
    const Site& s = lattice.sites.at(static_cast<std::size_t>(modes.mode_site_map[mu]));
    out << mu << ',' << format_number(modes.energies[mu]) << ',' << s.x << ',' << s.y
        << ',' << format_number(modes.home_weight[mu]) << '\n';
  }
}

void write_spectrum_csv(std::ostream& out, const SpectrumTable<double>& table) {
  out << "bitstring,energy_ghz,overlap\n";
  for (std::size_t mask = 0; mask < table.energies.size(); ++mask) {
    out << BitString(table.n_bits, mask).str() << ',' << format_number(table.energies[mask])
        << ',' << format_number(table.overlaps[mask]) << '\n';
  }
}

void write_walsh_csv(std::ostream& out, const WalshTable<double>& table) {
  out << "bitstring,weight,w_ghz\n";
  for (std::size_t mask = 0; mask < table.coefficients.size(); ++mask) {
    const BitString b(table.n_bits, mask);
    out << b.str() << ',' << b.weight() << ',' << format_number(table.coefficients[mask])
        << '\n';
  }
}

namespace {

void write_pt_row(std::ostream& out, const Lattice& lattice, const PTTensors<double>& t,
                  const std::vector<Eigen::Index>& pos) {
  const std::span<const Eigen::Index> p(pos);
  const double o0 = wh_pt(p, 0, t);
  const double o1 = wh_pt(p, 1, t);
  const double o2 = wh_pt(p, 2, t);
  out << pos.size();
  for (std::size_t k = 0; k < 3; ++k) {
    out << ',';
    if (k < pos.size()) out << pos[k];
  }
  out << ',' << format_number(o0) << ',' << format_number(o1) << ',' << format_number(o2)
      << ',' << format_number(o0 + o1 + o2) << ',';
  if (pos.size() == 2) {
    out << correlation_range(lattice, static_cast<std::size_t>(pos[0]),
                             static_cast<std::size_t>(pos[1]));
  }
  out << '\n';
}

}  // namespace

void write_pt_walsh_csv(std::ostream& out, const Lattice& lattice,
                        const PTTensors<double>& tensors) {
  const Eigen::Index n = tensors.size();
  if (static_cast<std::size_t>(n) != lattice.size()) {
    throw InvalidArgument("tensors and lattice disagree on the number of sites");
  }
  out << "weight,l1,l2,l3,order0_ghz,order1_ghz,order2_ghz,total_ghz,range_l\n";
  write_pt_row(out, lattice, tensors, {});
  for (Eigen::Index a = 0; a < n; ++a) write_pt_row(out, lattice, tensors, {a});
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) write_pt_row(out, lattice, tensors, {a, b});
  }
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      for (Eigen::Index c = b + 1; c < n; ++c) {
        write_pt_row(out, lattice, tensors, {a, b, c});
      }
    }
  }
}

}  // namespace transmon
