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

#ifndef TRANSMON_FOCK_HPP
#define TRANSMON_FOCK_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace transmon {

using Occupation = std::vector<std::uint8_t>;

/// Fixed-excitation-number sector of the bosonic Fock space on N sites.
///
/// Basis states are all occupation vectors with sum k, in descending
/// lexicographic order: for N = 2, k = 1 the basis is (1,0), (0,1).
struct FockSector {
  int n_sites = 0;
  int k = 0;
  std::vector<Occupation> basis;

  std::size_t size() const noexcept { return basis.size(); }
  std::optional<std::size_t> index_of(const Occupation& state) const;
};

/// C(k + N - 1, N - 1), saturating at UINT64_MAX.
std::uint64_t sector_dimension(int n_sites, int k);

/// Throws InvalidArgument for n_sites < 1, k < 0 or k > 255.
FockSector enumerate_sector(int n_sites, int k);

/// Sectors 0..k_max, index = excitation number.
std::vector<FockSector> enumerate_sectors(int n_sites, int k_max);

}  // namespace transmon

#endif  // TRANSMON_FOCK_HPP
