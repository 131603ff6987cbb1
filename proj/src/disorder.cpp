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

#include "transmon/disorder.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "transmon/error.hpp"

namespace transmon {

double metallic_aa_frequency(int x, int y, double mean, double delta) {
  if (x < 1 || y < 1 || delta < 0.0) {
    throw InvalidArgument("metallic_aa_frequency needs x >= 1, y >= 1, delta >= 0");
  }
  const double yy = static_cast<double>(y);
  const double phase = std::numbers::pi * (yy + std::sqrt(yy * yy + 4.0)) *
                       static_cast<double>(x);
  return mean + 0.5 * delta * std::sin(phase);
}

double StandardNormal::uniform_open() {
  // 53 random mantissa bits, shifted into (0, 1].
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double StandardNormal::operator()() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = uniform_open();
  const double u2 = uniform_open();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

DisorderPattern generate_pattern(const Lattice& lattice,
                                 const DisorderSpec& spec) {
  DisorderPattern pattern{spec, Eigen::VectorXd(lattice.size())};
  switch (spec.kind) {
    case DisorderKind::metallic_aa:
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        const Site& s = lattice.sites[i];
        pattern.frequencies[i] =
            metallic_aa_frequency(s.x, s.y, spec.mean, spec.delta);
      }
      break;
    case DisorderKind::gaussian: {
      if (spec.sigma < 0.0) {
        throw InvalidArgument("Gaussian sigma must be >= 0");
      }
      StandardNormal normal(spec.seed);
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        pattern.frequencies[i] = spec.mean + spec.sigma * normal();
      }
      break;
    }
  }
  return pattern;
}

double matched_sigma(const DisorderPattern& pattern) {
  if (pattern.spec.kind != DisorderKind::metallic_aa) {
    throw InvalidArgument("matched_sigma expects a metallic AA pattern");
  }
  const Eigen::Index n = pattern.frequencies.size();
  if (n < 2) {
    throw InvalidArgument("matched_sigma needs at least 2 sites, got " +
                          std::to_string(n));
  }
  const double mean = pattern.frequencies.mean();
  return std::sqrt((pattern.frequencies.array() - mean).square().mean());
}

}  // namespace transmon
