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

#ifndef TRANSMON_EXPORT_HPP
#define TRANSMON_EXPORT_HPP

#include <ostream>
#include <string>

#include "transmon/disorder.hpp"
#include "transmon/exact_diag.hpp"
#include "transmon/lattice.hpp"
#include "transmon/mbpt.hpp"
#include "transmon/single_particle.hpp"
#include "transmon/walsh.hpp"

namespace transmon {

// CSV writers. Numbers are printed with 17 significant digits so that a
// re-run with the same inputs is byte-identical and values round-trip.

std::string format_number(double value);

/// x,y,omega_ghz; one row per site in canonical order.
void write_pattern_csv(std::ostream& out, const Lattice& lattice,
                       const DisorderPattern& pattern);

/// mu,E_mu_ghz,site_x,site_y,weight_on_home_site. site_x/site_y give the
/// site carrying the largest weight of the mode.
void write_modes_csv(std::ostream& out, const Lattice& lattice,
                     const SingleParticleModes<double>& modes);

/// bitstring,energy_ghz,overlap; rows ordered by mask.
void write_spectrum_csv(std::ostream& out, const SpectrumTable<double>& table);

/// bitstring,weight,w_ghz; rows ordered by mask.
void write_walsh_csv(std::ostream& out, const WalshTable<double>& table);

/// weight,l1,l2,l3,order0_ghz,order1_ghz,order2_ghz,total_ghz,range_l for
/// every coefficient of weight <= 3. Positions are 0-based site indices and
/// empty when unused; range_l is filled for weight 2 only.
void write_pt_walsh_csv(std::ostream& out, const Lattice& lattice,
                        const PTTensors<double>& tensors);

}  // namespace transmon

#endif  // TRANSMON_EXPORT_HPP
