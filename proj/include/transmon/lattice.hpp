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

#ifndef TRANSMON_LATTICE_HPP
#define TRANSMON_LATTICE_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace transmon {

struct Site {
  int x;  // long axis, 1..L
  int y;  // short axis, 1..2
};

using Bond = std::pair<std::size_t, std::size_t>;

/// Quasi-1D 2 x L square lattice with nearest-neighbour bonds.
///
/// Sites are ordered row-major: the whole y = 1 row first, then y = 2, with x
/// ascending inside a row. Site index i therefore maps to
/// (x, y) = (i % L + 1, i / L + 1). Every tensor and bit-string index in the
/// library follows this order.
struct Lattice {
  int L = 0;
  std::vector<Site> sites;
  std::vector<Bond> bonds;  // first < second

  std::size_t size() const noexcept { return sites.size(); }
  std::size_t index_of(int x, int y) const;
};

/// Throws InvalidArgument for L < 1.
Lattice build_lattice(int L);

/// Manhattan distance between two sites; this is the correlation range of the
/// weight-2 coefficient with ones at sites i and j.
int correlation_range(const Lattice& lattice, std::size_t i, std::size_t j);

/// All unordered site pairs (i < j) at the given Manhattan distance.
std::vector<Bond> pairs_at_range(const Lattice& lattice, int range);

}  // namespace transmon

#endif  // TRANSMON_LATTICE_HPP
