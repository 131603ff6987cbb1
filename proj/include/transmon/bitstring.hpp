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

#ifndef TRANSMON_BITSTRING_HPP
#define TRANSMON_BITSTRING_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "transmon/error.hpp"

namespace transmon {

inline constexpr int kMaxBits = 64;

/// Qubit bit-string over the lattice sites; bit i belongs to site i in
/// canonical site order. Mode labels share the same order, so b_mu is the
/// occupation of dressed mode mu.
class BitString {
 public:
  BitString() = default;
  BitString(int size, std::uint64_t mask) : size_(size), mask_(mask) {
    if (size < 0 || size > kMaxBits) {
      throw InvalidArgument("bit-string length must be in [0, 64]");
    }
    if (size < kMaxBits && (mask >> size) != 0) {
      throw InvalidArgument("bit-string mask has bits beyond its length");
    }
  }

  static BitString from_positions(int size, const std::vector<Eigen::Index>& ones) {
    std::uint64_t mask = 0;
    for (Eigen::Index p : ones) {
      if (p < 0 || p >= size) throw InvalidArgument("bit position out of range");
      mask |= std::uint64_t{1} << p;
    }
    return BitString(size, mask);
  }

  /// Parses "0110..." with character i giving bit i.
  static BitString parse(std::string_view text) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        mask |= std::uint64_t{1} << i;
      } else if (text[i] != '0') {
        throw InvalidArgument("bit-string may only contain 0 and 1");
      }
    }
    return BitString(static_cast<int>(text.size()), mask);
  }

  int size() const noexcept { return size_; }
  std::uint64_t mask() const noexcept { return mask_; }
  int weight() const noexcept { return std::popcount(mask_); }
  bool operator[](Eigen::Index i) const noexcept { return (mask_ >> i) & 1u; }

  std::vector<Eigen::Index> positions() const {
    std::vector<Eigen::Index> out;
    for (int i = 0; i < size_; ++i) {
      if ((*this)[i]) out.push_back(i);
    }
    return out;
  }

  template <typename Scalar = double>
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> as_vector() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v(size_);
    for (int i = 0; i < size_; ++i) v[i] = (*this)[i] ? Scalar(1) : Scalar(0);
    return v;
  }

  std::string str() const {
    std::string s(static_cast<std::size_t>(size_), '0');
    for (int i = 0; i < size_; ++i) {
      if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
  }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  int size_ = 0;
  std::uint64_t mask_ = 0;
};

}  // namespace transmon

#endif  // TRANSMON_BITSTRING_HPP
