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

#ifndef TRANSMON_SINGLE_PARTICLE_HPP
#define TRANSMON_SINGLE_PARTICLE_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "transmon/assignment.hpp"
#include "transmon/disorder.hpp"
#include "transmon/error.hpp"
#include "transmon/lattice.hpp"

namespace transmon {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Home-site weight below which a mode is reported as delocalized.
inline constexpr double kDelocalizationThreshold = 0.5;

/// Eigenpairs of the tight-binding Hamiltonian, labelled by home site.
///
/// Mode mu is the eigenvector assigned to site mu, so energies(mu) is close to
/// omega_mu in the localized regime. Columns are orthonormal and signed so
/// that vectors(mu, mu) > 0.
template <typename Scalar = double>
struct SingleParticleModes {
  Vector<Scalar> energies;
  Matrix<Scalar> vectors;  // vectors(i, mu) = psi_mu(site i)
  // Site carrying the largest weight of each mode. Identity whenever every
  // mode is localized on its assigned site.
  std::vector<Eigen::Index> mode_site_map;
  Vector<Scalar> home_weight;  // |psi_mu(mu)|^2
  std::vector<std::string> warnings;

  Eigen::Index size() const noexcept { return energies.size(); }

  template <typename Other>
  SingleParticleModes<Other> cast() const {
    return {energies.template cast<Other>(), vectors.template cast<Other>(),
            mode_site_map, home_weight.template cast<Other>(), warnings};
  }
};

/// H0 = sum_i omega_i n_i + J sum_<ij> (a_i^dag a_j + h.c.) on the one-excitation
/// space: frequencies on the diagonal, J on every bond.
template <typename Scalar = double>
Matrix<Scalar> build_h0(const Lattice& lattice, const DisorderPattern& pattern,
                        double J) {
  const auto n = static_cast<Eigen::Index>(lattice.size());
  if (pattern.frequencies.size() != n) {
    throw InvalidArgument("pattern has " +
                          std::to_string(pattern.frequencies.size()) +
                          " frequencies for a lattice of " + std::to_string(n) +
                          " sites");
  }
  Matrix<Scalar> h = pattern.frequencies.template cast<Scalar>().asDiagonal();
  for (const auto& [i, j] : lattice.bonds) {
    h(i, j) = Scalar(J);
    h(j, i) = Scalar(J);
  }
  return h;
}

struct ModeAssignment {
  std::vector<Eigen::Index> site_of_column;  // eigenvector column -> site
  Eigen::VectorXd weight;                    // |psi|^2 on the assigned site
  bool delocalized = false;                  // some weight < threshold
};

/// Bijective column -> site assignment maximising total home-site weight.
/// Greedy argmax is kept when it is already a bijection; otherwise the
/// optimal assignment on the |psi|^2 matrix is used.
template <typename Derived>
ModeAssignment assign_modes(const Eigen::MatrixBase<Derived>& vectors) {
  const Eigen::Index n = vectors.cols();
  const Eigen::MatrixXd w = vectors.template cast<double>().array().square().matrix();

  ModeAssignment out;
  out.site_of_column.resize(n);
  std::vector<char> taken(n, 0);
  bool bijective = true;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index site = 0;
    w.col(c).maxCoeff(&site);
    out.site_of_column[c] = site;
    if (taken[site]) bijective = false;
    taken[site] = 1;
  }
  if (!bijective) {
    // rows = columns of psi, cols = sites
    out.site_of_column = max_weight_assignment(w.transpose());
  }
  out.weight.resize(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    out.weight[c] = w(out.site_of_column[c], c);
    if (out.weight[c] < kDelocalizationThreshold) out.delocalized = true;
  }
  return out;
}

/// Dense symmetric eigensolve of H0 followed by home-site relabelling and
/// sign fixing. Throws InvalidArgument for a non-symmetric matrix and
/// NumericalFailure if the eigen-residual check fails.
template <typename Scalar>
SingleParticleModes<Scalar> eigendecompose(const Matrix<Scalar>& h0) {
  using std::abs;
  const Eigen::Index n = h0.rows();
  if (h0.cols() != n) throw InvalidArgument("H0 must be square");
  const Scalar scale = h0.cwiseAbs().rowwise().sum().maxCoeff();
  const Scalar asym = (h0 - h0.transpose()).cwiseAbs().maxCoeff();
  if (asym > Scalar(64) * Eigen::NumTraits<Scalar>::epsilon() * scale) {
    throw InvalidArgument("H0 is not symmetric");
  }

  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(h0);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("symmetric eigensolver did not converge");
  }
  const Matrix<Scalar>& raw = solver.eigenvectors();
  const Vector<Scalar>& eval = solver.eigenvalues();

  const Scalar residual =
      (h0 * raw - raw * eval.asDiagonal()).cwiseAbs().maxCoeff();
  if (residual > Scalar(1e-9) * scale) {
    throw NumericalFailure("eigen-residual exceeds tolerance");
  }

  const ModeAssignment assignment = assign_modes(raw);
  SingleParticleModes<Scalar> modes;
  modes.energies.resize(n);
  modes.vectors.resize(n, n);
  modes.home_weight.resize(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::Index mu = assignment.site_of_column[c];
    const Scalar sign = raw(mu, c) < Scalar(0) ? Scalar(-1) : Scalar(1);
    modes.energies[mu] = eval[c];
    modes.vectors.col(mu) = sign * raw.col(c);
    modes.home_weight[mu] = raw(mu, c) * raw(mu, c);
  }
  modes.mode_site_map.resize(n);
  for (Eigen::Index mu = 0; mu < n; ++mu) {
    modes.vectors.col(mu).cwiseAbs().maxCoeff(&modes.mode_site_map[mu]);
    if (modes.home_weight[mu] < Scalar(kDelocalizationThreshold)) {
      modes.warnings.push_back("delocalized mode " + std::to_string(mu) +
                               ": home-site weight below " +
                               std::to_string(kDelocalizationThreshold));
    }
  }
  return modes;
}

/// Convenience: build H0 and diagonalize it.
template <typename Scalar = double>
SingleParticleModes<Scalar> solve_single_particle(const Lattice& lattice,
                                                  const DisorderPattern& pattern,
                                                  double J) {
  return eigendecompose<Scalar>(build_h0<Scalar>(lattice, pattern, J));
}

/// n-point function <psi_mu1 ... psi_mun> = sum_i prod_k psi_{mu_k}(i).
template <typename Scalar>
Scalar npoint(const SingleParticleModes<Scalar>& modes,
              std::span<const Eigen::Index> labels) {
  if (labels.size() < 2) {
    throw InvalidArgument("npoint needs at least two mode labels");
  }
  Vector<Scalar> prod = Vector<Scalar>::Ones(modes.size());
  for (Eigen::Index mu : labels) {
    if (mu < 0 || mu >= modes.size()) {
      throw InvalidArgument("mode label out of range");
    }
    prod.array() *= modes.vectors.col(mu).array();
  }
  return prod.sum();
}

template <typename Scalar>
Scalar npoint(const SingleParticleModes<Scalar>& modes,
              std::initializer_list<Eigen::Index> labels) {
  return npoint(modes, std::span<const Eigen::Index>(labels.begin(), labels.size()));
}

}  // namespace transmon

#endif  // TRANSMON_SINGLE_PARTICLE_HPP
