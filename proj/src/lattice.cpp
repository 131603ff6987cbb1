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

#include "transmon/lattice.hpp"

#include <cstdlib>
#include <string>

#include "transmon/error.hpp"

namespace transmon {

std::size_t Lattice::index_of(int x, int y) const {
  if (x < 1 || x > L || y < 1 || y > 2) {
    throw InvalidArgument("site (" + std::to_string(x) + ", " +
                          std::to_string(y) + ") is outside the 2x" +
                          std::to_string(L) + " lattice");
  }
  return static_cast<std::size_t>((y - 1) * L + (x - 1));
}

Lattice build_lattice(int L) {
  if (L < 1) {
    throw InvalidArgument("lattice length must be >= 1, got " +
                          std::to_string(L));
  }
  Lattice lattice;
  lattice.L = L;
  lattice.sites.reserve(2 * static_cast<std::size_t>(L));
  for (int y = 1; y <= 2; ++y) {
    for (int x = 1; x <= L; ++x) lattice.sites.push_back({x, y});
  }
  // Horizontal bonds per row, then the rungs.
  for (int y = 1; y <= 2; ++y) {
    for (int x = 1; x < L; ++x) {
      lattice.bonds.emplace_back(lattice.index_of(x, y),
                                 lattice.index_of(x + 1, y));
    }
  }
  for (int x = 1; x <= L; ++x) {
    lattice.bonds.emplace_back(lattice.index_of(x, 1), lattice.index_of(x, 2));
  }
  return lattice;
}

int correlation_range(const Lattice& lattice, std::size_t i, std::size_t j) {
  const Site& a = lattice.sites.at(i);
  const Site& b = lattice.sites.at(j);
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

std::vector<Bond> pairs_at_range(const Lattice& lattice, int range) {
  std::vector<Bond> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = i + 1; j < lattice.size(); ++j) {
      if (correlation_range(lattice, i, j) == range) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace transmon
