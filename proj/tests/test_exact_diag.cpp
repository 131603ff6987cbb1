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

#include <doctest.h>

#include <cmath>
#include <set>

#include "transmon/disorder.hpp"
#include "transmon/exact_diag.hpp"
#include "transmon/experiments.hpp"
#include "transmon/walsh.hpp"

using namespace transmon;

namespace {

constexpr double kEc = 0.33;

DisorderPattern aa_pattern(const Lattice& lat) { return generate_pattern(lat, DisorderSpec{}); }

}  // namespace

TEST_SUITE("exact_diag") {

TEST_CASE("sector enumeration") {
  const FockSector s21 = enumerate_sector(2, 1);
  REQUIRE(s21.size() == 2);
  CHECK(s21.basis[0] == Occupation{1, 0});
  CHECK(s21.basis[1] == Occupation{0, 1});
  CHECK(enumerate_sector(6, 6).size() == 462);
  CHECK(enumerate_sector(4, 0).basis == std::vector<Occupation>{Occupation(4, 0)});

  std::size_t total = 0;
  for (const auto& s : enumerate_sectors(6, 6)) {
    CHECK(s.size() == sector_dimension(6, s.k));
    std::set<Occupation> unique(s.basis.begin(), s.basis.end());
    CHECK(unique.size() == s.size());
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s.basis[i - 1] > s.basis[i]);
    for (std::size_t i = 0; i < s.size(); ++i) {
      int sum = 0;
      for (auto n : s.basis[i]) sum += n;
      CHECK(sum == s.k);
      CHECK(s.index_of(s.basis[i]) == i);
    }
    total += s.size();
  }
  CHECK(total == 924);
  CHECK(sector_dimension(12, 11) == 705432);
  CHECK(sector_dimension(24, 12) == 834451800);
  CHECK(sector_dimension(12, 12) == 1352078);
  CHECK_THROWS_AS(enumerate_sector(0, 1), InvalidArgument);
  CHECK_FALSE(enumerate_sector(3, 2).index_of(Occupation{1, 1, 1}).has_value());
}

TEST_CASE("Bose-Hubbard matrix elements") {
  const Lattice lat = build_lattice(3);
  const DisorderPattern aa = aa_pattern(lat);
  const double J = 1e-3;

  const Eigen::MatrixXd h0 = build_hbh<double>(lat, aa, J, kEc, enumerate_sector(6, 0));
  CHECK(h0.rows() == 1);
  CHECK(h0(0, 0) == 0.0);

  const Eigen::MatrixXd h1 = build_hbh<double>(lat, aa, J, kEc, enumerate_sector(6, 1));
  const Eigen::MatrixXd expected =
      build_h0<double>(lat, aa, J) - kEc * Eigen::MatrixXd::Identity(6, 6);
  CHECK((h1 - expected).cwiseAbs().maxCoeff() < 1e-15);

  for (int k = 0; k <= 6; ++k) {
    const Eigen::MatrixXd h = build_hbh<double>(lat, aa, J, kEc, enumerate_sector(6, k));
    CHECK(h == h.transpose());
  }

  DisorderPattern flat;
  flat.frequencies = Eigen::Vector2d(5.0, 5.0);
  const Eigen::MatrixXd h2 = build_hbh<double>(build_lattice(1), flat, 0.0, kEc, enumerate_sector(2, 2));
  CHECK(h2.diagonal().isApprox(Eigen::Vector3d(10 - 3 * kEc, 10 - 2 * kEc, 10 - 3 * kEc), 1e-15));
  CHECK((h2 - Eigen::MatrixXd(h2.diagonal().asDiagonal())).isZero(0.0));

  // Two-site hop amplitude J sqrt(n_from (n_to + 1)): (2,0) <-> (1,1).
  const Eigen::MatrixXd hop = build_hbh<double>(build_lattice(1), flat, J, kEc, enumerate_sector(2, 2));
  CHECK(hop(0, 1) == doctest::Approx(J * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(hop(0, 2) == 0.0);

  CHECK_THROWS_AS(build_hbh<double>(lat, aa, J, kEc, enumerate_sector(4, 1)), InvalidArgument);
}

TEST_CASE("dressed product vectors") {
  const Lattice lat = build_lattice(3);
  const DisorderPattern aa = aa_pattern(lat);
  const auto chain = enumerate_sectors(6, 6);
  const std::span<const FockSector> span(chain);

  const auto bare = solve_single_particle<double>(lat, aa, 0.0);
  const BitString b = BitString::parse("101100");
  const Eigen::VectorXd v0 = dressed_product_vector(b, bare, span);
  const auto at = chain[3].index_of(Occupation{1, 0, 1, 1, 0, 0});
  REQUIRE(at.has_value());
  CHECK(v0[static_cast<Eigen::Index>(*at)] == 1.0);
  CHECK(v0.cwiseAbs().sum() == 1.0);

  const auto modes = solve_single_particle<double>(lat, aa, 1e-3);
  const Eigen::VectorXd single = dressed_product_vector(BitString::parse("000010"), modes, chain[1]);
  CHECK((single - modes.vectors.col(4)).cwiseAbs().maxCoeff() < 1e-15);

  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    CHECK(dressed_product_vector(BitString(6, mask), modes, span).norm() ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK_THROWS_AS(dressed_product_vector(b, modes, chain[2]), InvalidArgument);
}

TEST_CASE("uncoupled transmons are exact") {
  const Lattice lat = build_lattice(3);
  const DisorderPattern aa = aa_pattern(lat);
  const auto table = solve_qubit_spectrum<double>(lat, aa, 0.0, kEc);
  REQUIRE(table.energies.size() == 64);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const BitString b(6, mask);
    double expected = 0;
    for (auto i : b.positions()) expected += aa.frequencies[i] - kEc;
    CHECK(table.energies[mask] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(table.overlaps[mask] == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(table.energies[0] == 0.0);
  CHECK(table.warnings.empty());
}

TEST_CASE("harmonic limit gives free dressed bosons") {
  const Lattice lat = build_lattice(3);
  const DisorderPattern aa = aa_pattern(lat);
  const auto table = solve_qubit_spectrum<double>(lat, aa, 1e-3, 0.0);
  const auto modes = solve_single_particle<double>(lat, aa, 1e-3);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const BitString b(6, mask);
    CHECK(table.energies[mask] ==
          doctest::Approx(modes.energies.dot(b.as_vector<double>())).epsilon(1e-12));
    CHECK(table.overlaps[mask] > 0.0);
    CHECK(table.overlaps[mask] <= 1.0 + 1e-12);
  }
}

TEST_CASE("default-parameter spectrum is well labelled and thread-count independent") {
  const Lattice lat = build_lattice(3);
  const DisorderPattern aa = aa_pattern(lat);
  set_thread_count(1);
  const auto serial = solve_qubit_spectrum<double>(lat, aa, 1e-3, kEc);
  set_thread_count(4);
  const auto threaded = solve_qubit_spectrum<double>(lat, aa, 1e-3, kEc);
  set_thread_count(0);
  CHECK(serial.energies == threaded.energies);
  CHECK(serial.overlaps == threaded.overlaps);
  for (double o : serial.overlaps) CHECK(o > 0.5);
}

TEST_CASE("size caps refuse instead of switching algorithms") {
  const Lattice big = build_lattice(7);
  CHECK_THROWS_AS(solve_qubit_spectrum<double>(big, aa_pattern(big), 1e-3, kEc), SizeCapExceeded);
  const Lattice lat = build_lattice(3);
  EdOptions tight;
  tight.max_sector_dim = 100;
  CHECK_THROWS_AS(solve_qubit_spectrum<double>(lat, aa_pattern(lat), 1e-3, kEc, tight),
                  SizeCapExceeded);
}

TEST_CASE("sector ground energies do not increase with J") {
  const Lattice lat = build_lattice(3);
  const DisorderPattern aa = aa_pattern(lat);
  const auto sectors = enumerate_sectors(6, 6);
  std::vector<double> previous(7, INFINITY);
  for (double J : uniform_j_grid()) {
    for (int k = 0; k <= 6; ++k) {
      const Eigen::MatrixXd h = build_hbh<double>(lat, aa, J, kEc, sectors[k]);
      const double ground = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h).eigenvalues()[0];
      CHECK(ground <= previous[k] + 1e-12);
      previous[k] = ground;
    }
  }
}

TEST_CASE("Walsh-Hadamard transform") {
  const std::vector<double> constant(16, 2.5);
  const auto c = walsh_hadamard(std::span<const double>(constant));
  CHECK(c.n_bits == 4);
  CHECK(c.coefficients[0] == 2.5);
  for (std::size_t b = 1; b < 16; ++b) CHECK(c.coefficients[b] == 0.0);

  // E_a = w1 a_1 + w2 a_2 on two bits: weight-1 coefficients are w_i / 2
  // and the weight-2 coefficient vanishes.
  const double w1 = 5.1, w2 = 5.7;
  const std::vector<double> linear{0.0, w1, w2, w1 + w2};
  const auto l = walsh_hadamard(std::span<const double>(linear));
  CHECK(l.coefficients[0] == doctest::Approx((w1 + w2) / 2));
  CHECK(l.coefficients[1] == doctest::Approx(w1 / 2));
  CHECK(l.coefficients[2] == doctest::Approx(w2 / 2));
  CHECK(std::abs(l.coefficients[3]) < 1e-15);
  CHECK(l[BitString::parse("10")] == l.coefficients[1]);

  // Direct O(4^N) definition as oracle.
  std::vector<double> e(32);
  for (std::size_t a = 0; a < 32; ++a) e[a] = std::sin(1.0 + 0.37 * a) + 0.1 * a;
  const auto fast = walsh_hadamard(std::span<const double>(e));
  for (std::size_t b = 0; b < 32; ++b) {
    double direct = 0;
    for (std::size_t a = 0; a < 32; ++a) {
      const std::size_t abar = ~a & 31u;
      direct += (std::popcount(b & abar) % 2 ? -1.0 : 1.0) * e[a];
    }
    CHECK(fast.coefficients[b] == doctest::Approx(direct / 32).scale(1.0).epsilon(1e-14));
  }
  const auto back = inverse_walsh_hadamard(fast);
  for (std::size_t a = 0; a < 32; ++a) CHECK(back[a] == doctest::Approx(e[a]).epsilon(1e-14));

  const std::vector<double> bad(6, 0.0);
  CHECK_THROWS_AS(walsh_hadamard(std::span<const double>(bad)), InvalidArgument);
}

TEST_CASE("J = 0 spectrum has no weight >= 2 coefficients") {
  const Lattice lat = build_lattice(3);
  const auto table = solve_qubit_spectrum<double>(lat, aa_pattern(lat), 0.0, kEc);
  const auto wh = walsh_hadamard(std::span<const double>(table.energies));
  for (std::size_t b = 0; b < 64; ++b) {
    if (std::popcount(b) >= 2) CHECK(std::abs(wh.coefficients[b]) <= 1e-10);
  }
}

}  // TEST_SUITE
