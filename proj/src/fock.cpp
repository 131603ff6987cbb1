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

#include "transmon/fock.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "transmon/error.hpp"

namespace transmon {

std::optional<std::size_t> FockSector::index_of(const Occupation& state) const {
  // basis is sorted in descending order
  const auto it = std::lower_bound(basis.begin(), basis.end(), state,
                                   std::greater<Occupation>());
  if (it == basis.end() || *it != state) return std::nullopt;
  return static_cast<std::size_t>(it - basis.begin());
}

std::uint64_t sector_dimension(int n_sites, int k) {
  if (n_sites < 1 || k < 0) return 0;
  // C(k + N - 1, k) built incrementally; each partial product is itself a
  // binomial coefficient so the division is exact.
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  const auto r = static_cast<std::uint64_t>(std::min(k, n_sites - 1));
  const auto top = static_cast<std::uint64_t>(k + n_sites - 1);
  for (std::uint64_t i = 1; i <= r; ++i) {
    const std::uint64_t num = top - r + i;
    if (c > cap / num) return cap;
    c = c * num / i;
  }
  return c;
}

namespace {

void fill(int site, int left, Occupation& current, std::vector<Occupation>& out) {
  const int n = static_cast<int>(current.size());
  if (site == n - 1) {
    current[site] = static_cast<std::uint8_t>(left);
    out.push_back(current);
    return;
  }
  for (int occ = left; occ >= 0; --occ) {
    current[site] = static_cast<std::uint8_t>(occ);
    fill(site + 1, left - occ, current, out);
  }
}

}  // namespace

FockSector enumerate_sector(int n_sites, int k) {
  if (n_sites < 1 || k < 0 || k > 255) {
    throw InvalidArgument("sector needs n_sites >= 1 and 0 <= k <= 255");
  }
  FockSector sector;
  sector.n_sites = n_sites;
  sector.k = k;
  sector.basis.reserve(sector_dimension(n_sites, k));
  Occupation current(static_cast<std::size_t>(n_sites), 0);
  fill(0, k, current, sector.basis);
  return sector;
}

std::vector<FockSector> enumerate_sectors(int n_sites, int k_max) {
  std::vector<FockSector> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) out.push_back(enumerate_sector(n_sites, k));
  return out;
}

}  // namespace transmon
