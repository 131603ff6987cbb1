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

#ifndef TRANSMON_DISORDER_HPP
#define TRANSMON_DISORDER_HPP

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "transmon/lattice.hpp"

namespace transmon {

// All frequencies and energies are in GHz (hbar = 1).

enum class DisorderKind { metallic_aa, gaussian };

struct DisorderSpec {
  DisorderKind kind = DisorderKind::metallic_aa;
  double mean = 5.5;   // <omega>
  double delta = 1.0;  // AA amplitude Delta (peak-to-peak)
  double sigma = 0.0;  // Gaussian standard deviation
  std::uint64_t seed = 0;
};

struct DisorderPattern {
  DisorderSpec spec;
  Eigen::VectorXd frequencies;  // one per site, canonical site order
};

/// omega(x, y) = mean + (delta / 2) sin[pi (y + sqrt(y^2 + 4)) x].
///
/// y + sqrt(y^2 + 4) is twice the y-th metallic ratio, so each row of the
/// lattice samples a sine with an irrational period.
double metallic_aa_frequency(int x, int y, double mean, double delta);

/// Deterministic for a given spec. The Gaussian branch draws from
/// std::mt19937_64 seeded with spec.seed and converts pairs of uniforms with
/// the Box-Muller transform (see StandardNormal), so the output does not
/// depend on the standard library's normal_distribution implementation.
DisorderPattern generate_pattern(const Lattice& lattice,
                                 const DisorderSpec& spec);

/// Population standard deviation of an AA pattern. The Gaussian ensemble
/// compared against the AA pattern uses this value as sigma.
double matched_sigma(const DisorderPattern& pattern);

/// Box-Muller standard normal sampler over a 64-bit Mersenne twister.
class StandardNormal {
 public:
  explicit StandardNormal(std::uint64_t seed) : engine_(seed) {}
  double operator()();

 private:
  double uniform_open();  // (0, 1]
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace transmon

#endif  // TRANSMON_DISORDER_HPP
