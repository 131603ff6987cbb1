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

#ifndef TRANSMON_WALSH_HPP
#define TRANSMON_WALSH_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "transmon/bitstring.hpp"
#include "transmon/error.hpp"

namespace transmon {

/// Coefficients w_b of H = sum_b w_b Z_1^{b_1} ... Z_N^{b_N}, indexed by the
/// integer mask of b (bit i = site i).
template <typename Scalar = double>
struct WalshTable {
  int n_bits = 0;
  std::vector<Scalar> coefficients;

  Scalar operator[](const BitString& b) const { return coefficients.at(b.mask()); }
};

namespace detail {

inline int log2_exact(std::size_t size) {
  if (size == 0 || !std::has_single_bit(size)) {
    throw InvalidArgument("Walsh-Hadamard transform needs 2^N values");
  }
  return std::countr_zero(size);
}

// In-place unnormalised butterfly: v_b <- sum_a (-1)^{b.a} v_a.
template <typename Scalar>
void butterfly(std::vector<Scalar>& v) {
  const std::size_t size = v.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const Scalar x = v[j];
        const Scalar y = v[j + h];
        v[j] = x + y;
        v[j + h] = x - y;
      }
    }
  }
}

}  // namespace detail

/// w_b = 2^-N sum_a (-1)^{b . abar} E_a, with abar the complement of a.
///
/// Uses (-1)^{b . abar} = (-1)^{|b|} (-1)^{b . a} on top of the fast
/// transform, O(N 2^N). `energies` is indexed by mask.
template <typename Scalar>
WalshTable<Scalar> walsh_hadamard(std::span<const Scalar> energies) {
  const int n = detail::log2_exact(energies.size());
  WalshTable<Scalar> table{n, std::vector<Scalar>(energies.begin(), energies.end())};
  detail::butterfly(table.coefficients);
  const Scalar norm = Scalar(1) / Scalar(energies.size());
  for (std::size_t b = 0; b < table.coefficients.size(); ++b) {
    table.coefficients[b] *= norm;
    if (std::popcount(b) & 1) table.coefficients[b] = -table.coefficients[b];
  }
  return table;
}

/// E_a = sum_b w_b (-1)^{b . abar}; exact inverse of walsh_hadamard.
template <typename Scalar>
std::vector<Scalar> inverse_walsh_hadamard(const WalshTable<Scalar>& table) {
  detail::log2_exact(table.coefficients.size());
  std::vector<Scalar> v = table.coefficients;
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (std::popcount(b) & 1) v[b] = -v[b];
  }
  detail::butterfly(v);
  return v;
}

}  // namespace transmon

#endif  // TRANSMON_WALSH_HPP
