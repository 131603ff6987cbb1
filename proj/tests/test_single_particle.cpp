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

#include "transmon/disorder.hpp"
#include "transmon/single_particle.hpp"

using namespace transmon;

namespace {

DisorderPattern explicit_pattern(std::initializer_list<double> w) {
  DisorderPattern p;
  p.frequencies = Eigen::Map<const Eigen::VectorXd>(w.begin(), static_cast<Eigen::Index>(w.size()));
  return p;
}

}  // namespace

TEST_SUITE("single_particle") {

TEST_CASE("H0 structure") {
  const Lattice one = build_lattice(1);
  const Eigen::MatrixXd h = build_h0<double>(one, explicit_pattern({5.0, 6.0}), 0.001);
  Eigen::Matrix2d expected;
  expected << 5.0, 0.001, 0.001, 6.0;
  CHECK(h == expected);

  const Lattice lat = build_lattice(3);
  const DisorderPattern aa = generate_pattern(lat, DisorderSpec{});
  const Eigen::MatrixXd h0 = build_h0<double>(lat, aa, 0.0);
  CHECK(h0 == Eigen::MatrixXd(aa.frequencies.asDiagonal()));

  const Eigen::MatrixXd h1 = build_h0<double>(lat, aa, 1e-3);
  Eigen::MatrixXd off = h1;
  off.diagonal().setZero();
  CHECK((off.array() != 0).count() == 14);
  CHECK(h1 == h1.transpose());

  CHECK_THROWS_AS(build_h0<double>(lat, explicit_pattern({5.0, 6.0}), 0.0), InvalidArgument);
}

TEST_CASE("J = 0 gives the identity basis") {
  const Lattice lat = build_lattice(3);
  const DisorderPattern aa = generate_pattern(lat, DisorderSpec{});
  const auto modes = solve_single_particle<double>(lat, aa, 0.0);
  CHECK(modes.energies == aa.frequencies);
  CHECK(modes.vectors == Eigen::MatrixXd::Identity(6, 6));
  for (Eigen::Index mu = 0; mu < 6; ++mu) CHECK(modes.mode_site_map[mu] == mu);
  CHECK(modes.warnings.empty());
}

TEST_CASE("two-site closed form") {
  const Lattice one = build_lattice(1);
  const auto modes = solve_single_particle<double>(one, explicit_pattern({5.0, 6.0}), 0.001);
  const double root = std::sqrt(1.0 + 4e-6);
  CHECK(modes.energies[0] == doctest::Approx((11.0 - root) / 2.0).epsilon(1e-15));
  CHECK(modes.energies[1] == doctest::Approx((11.0 + root) / 2.0).epsilon(1e-15));
  CHECK(modes.vectors(0, 0) > 0);
  CHECK(modes.vectors(1, 1) > 0);
}

TEST_CASE("default-parameter modes are localized, orthonormal and accurate") {
  const Lattice lat = build_lattice(3);
  const DisorderPattern aa = generate_pattern(lat, DisorderSpec{});
  const double J = 1e-3;
  const Eigen::MatrixXd h0 = build_h0<double>(lat, aa, J);
  const auto modes = eigendecompose<double>(h0);
  const Eigen::Index n = modes.size();

  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  CHECK((modes.vectors.transpose() * modes.vectors - I).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((modes.vectors * modes.vectors.transpose() - I).cwiseAbs().maxCoeff() < 1e-10);

  const double norm = h0.cwiseAbs().rowwise().sum().maxCoeff();
  const Eigen::MatrixXd residual =
      h0 * modes.vectors - modes.vectors * modes.energies.asDiagonal();
  CHECK(residual.cwiseAbs().maxCoeff() <= 1e-9 * norm);
  CHECK(modes.energies.sum() == doctest::Approx(h0.trace()).epsilon(1e-9));

  for (Eigen::Index mu = 0; mu < n; ++mu) {
    CHECK(modes.mode_site_map[mu] == mu);
    CHECK(modes.home_weight[mu] > 0.99);
    CHECK(modes.vectors(mu, mu) > 0);
    CHECK(std::abs(modes.energies[mu] - aa.frequencies[mu]) <= 10 * J * J / 1.0);
  }
  CHECK(modes.warnings.empty());
}

TEST_CASE("assign_modes") {
  const Eigen::Matrix3d I = Eigen::Matrix3d::Identity();
  const ModeAssignment id = assign_modes(I);
  CHECK(id.site_of_column == std::vector<Eigen::Index>{0, 1, 2});
  CHECK_FALSE(id.delocalized);

  Eigen::Matrix3d swapped = I;
  swapped.col(0).swap(swapped.col(2));
  CHECK(assign_modes(swapped).site_of_column == std::vector<Eigen::Index>{2, 1, 0});

  // Greedy argmax would send both columns to site 0; the optimal assignment
  // keeps a bijection and flags the weak column.
  Eigen::Matrix2d tie;
  tie.col(0) << std::sqrt(0.6), std::sqrt(0.4);
  tie.col(1) << std::sqrt(0.55), -std::sqrt(0.45);
  const ModeAssignment a = assign_modes(tie);
  CHECK(a.site_of_column == std::vector<Eigen::Index>{0, 1});
  CHECK(a.delocalized);
}

TEST_CASE("delocalized spectrum raises a warning") {
  const Lattice lat = build_lattice(3);
  DisorderSpec flat{};
  flat.delta = 0.0;
  const auto modes = solve_single_particle<double>(lat, generate_pattern(lat, flat), 0.01);
  CHECK_FALSE(modes.warnings.empty());
}

TEST_CASE("non-symmetric input is rejected") {
  Eigen::Matrix2d h;
  h << 5.0, 0.1, 0.0, 6.0;
  CHECK_THROWS_AS(eigendecompose<double>(h), InvalidArgument);
}

TEST_CASE("npoint functions") {
  const Lattice lat = build_lattice(3);
  const DisorderPattern aa = generate_pattern(lat, DisorderSpec{});
  const auto modes = solve_single_particle<double>(lat, aa, 1e-3);
  for (Eigen::Index mu = 0; mu < 6; ++mu) {
    CHECK(npoint(modes, {mu, mu}) == doctest::Approx(1.0).epsilon(1e-10));
    for (Eigen::Index nu = mu + 1; nu < 6; ++nu) CHECK(std::abs(npoint(modes, {mu, nu})) < 1e-10);
  }
  const auto bare = solve_single_particle<double>(lat, aa, 0.0);
  CHECK(npoint(bare, {0, 0, 1, 1}) == 0.0);
  CHECK(npoint(bare, {2, 2, 2, 2}) == 1.0);
  CHECK_THROWS_AS(npoint(modes, {0}), InvalidArgument);
  CHECK_THROWS_AS(npoint(modes, {0, 6}), InvalidArgument);
}

TEST_CASE("four-point correlations decay with distance") {
  const Lattice lat = build_lattice(10);
  const auto modes = solve_single_particle<double>(lat, generate_pattern(lat, DisorderSpec{}), 1e-3);
  const auto n = static_cast<Eigen::Index>(lat.size());
  double max_d1 = 0, max_far = 0;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      const int d = correlation_range(lat, a, b);
      // index set {a, a, b, b}: its maximum pairwise distance is d
      const double v = std::abs(npoint(modes, {a, a, b, b}));
      if (d == 1) max_d1 = std::max(max_d1, v);
      if (d >= 3) max_far = std::max(max_far, v);
    }
  }
  CHECK(max_far < max_d1);
}

TEST_CASE("long double modes agree with double") {
  const Lattice lat = build_lattice(3);
  const DisorderPattern aa = generate_pattern(lat, DisorderSpec{});
  const auto d = solve_single_particle<double>(lat, aa, 1e-3);
  const auto ld = solve_single_particle<long double>(lat, aa, 1e-3);
  CHECK((ld.cast<double>().vectors - d.vectors).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((ld.cast<double>().energies - d.energies).cwiseAbs().maxCoeff() < 1e-13);
}

}  // TEST_SUITE
