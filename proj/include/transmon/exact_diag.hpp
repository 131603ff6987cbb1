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

#ifndef TRANSMON_EXACT_DIAG_HPP
#define TRANSMON_EXACT_DIAG_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "transmon/assignment.hpp"
#include "transmon/bitstring.hpp"
#include "transmon/error.hpp"
#include "transmon/fock.hpp"
#include "transmon/parallel.hpp"
#include "transmon/single_particle.hpp"

namespace transmon {

struct EdOptions {
  int max_sites = 12;
  std::uint64_t max_sector_dim = 20000;
  double overlap_threshold = 0.5;
  // Eigenvectors considered per qubit state when labelling a sector.
  int candidates_per_state = 4;
};

/// Exact qubit-sector energies E_b for all 2^N bit-strings (indexed by mask)
/// together with the |overlap|^2 of each labelled eigenvector with its
/// dressed product state.
template <typename Scalar = double>
struct SpectrumTable {
  int n_bits = 0;
  std::vector<Scalar> energies;
  std::vector<Scalar> overlaps;
  std::vector<std::string> warnings;

  Scalar operator[](const BitString& b) const { return energies.at(b.mask()); }
};

/// Bose-Hubbard Hamiltonian restricted to one excitation-number sector:
///
///   H = sum_i omega_i n_i + J sum_<ij> (a_i^dag a_j + h.c.)
///       - (E_C / 2) sum_i n_i (n_i + 1)
///
/// Hopping preserves the excitation number, so every generated matrix element
/// stays inside the sector; a hop that leaves it is a NumericalFailure.
template <typename Scalar = double>
Eigen::SparseMatrix<Scalar> build_hbh(const Lattice& lattice,
                                      const DisorderPattern& pattern, double J,
                                      double e_c, const FockSector& sector) {
  const auto n_sites = static_cast<int>(lattice.size());
  if (sector.n_sites != n_sites) {
    throw InvalidArgument("sector and lattice disagree on the number of sites");
  }
  if (pattern.frequencies.size() != n_sites) {
    throw InvalidArgument("pattern and lattice disagree on the number of sites");
  }
  using std::sqrt;
  const Scalar half_ec = Scalar(e_c) / Scalar(2);
  std::vector<Eigen::Triplet<Scalar>> triplets;
  triplets.reserve(sector.size() * (1 + 2 * lattice.bonds.size()));

  for (std::size_t s = 0; s < sector.size(); ++s) {
    const Occupation& occ = sector.basis[s];
    Scalar diag(0);
    for (int i = 0; i < n_sites; ++i) {
      const Scalar n_i(occ[i]);
      diag += Scalar(pattern.frequencies[i]) * n_i - half_ec * n_i * (n_i + Scalar(1));
    }
    triplets.emplace_back(s, s, diag);
    if (J == 0.0) continue;

    for (const auto& [i, j] : lattice.bonds) {
      for (const auto& [to, from] : {std::pair{i, j}, std::pair{j, i}}) {
        if (occ[from] == 0) continue;
        Occupation hopped = occ;
        --hopped[from];
        ++hopped[to];
        const auto t = sector.index_of(hopped);
        if (!t) throw NumericalFailure("hop left the excitation-number sector");
        const Scalar amp =
            Scalar(J) * sqrt(Scalar(occ[from]) * (Scalar(occ[to]) + Scalar(1)));
        triplets.emplace_back(*t, s, amp);
      }
    }
  }
  Eigen::SparseMatrix<Scalar> h(sector.size(), sector.size());
  h.setFromTriplets(triplets.begin(), triplets.end());
  return h;
}

/// Applies c_mu^dag = sum_i psi_mu(i) a_i^dag to a vector of sector `from`,
/// giving a vector of sector `to` (to.k == from.k + 1).
template <typename Scalar>
Vector<Scalar> apply_dressed_creation(Eigen::Index mu,
                                      const SingleParticleModes<Scalar>& modes,
                                      const FockSector& from, const FockSector& to,
                                      const Vector<Scalar>& v) {
  using std::sqrt;
  Vector<Scalar> out = Vector<Scalar>::Zero(to.size());
  for (std::size_t s = 0; s < from.size(); ++s) {
    if (v[s] == Scalar(0)) continue;
    Occupation raised = from.basis[s];
    for (int i = 0; i < from.n_sites; ++i) {
      const Scalar c = modes.vectors(i, mu);
      if (c == Scalar(0)) continue;
      ++raised[i];
      out[*to.index_of(raised)] += v[s] * c * sqrt(Scalar(raised[i]));
      --raised[i];
    }
  }
  return out;
}

/// prod_mu (c_mu^dag)^{b_mu} |0> expanded in the Fock basis of sector
/// weight(b). `chain` must hold sectors 0..weight(b), index = excitation
/// number. The result has unit norm because the modes are orthonormal and
/// each is occupied at most once.
template <typename Scalar>
Vector<Scalar> dressed_product_vector(const BitString& b,
                                      const SingleParticleModes<Scalar>& modes,
                                      std::span<const FockSector> chain) {
  const int k = b.weight();
  if (static_cast<int>(chain.size()) <= k) {
    throw InvalidArgument("sector chain does not reach the bit-string weight");
  }
  if (b.size() != modes.size()) {
    throw InvalidArgument("bit-string length does not match the mode count");
  }
  Vector<Scalar> v = Vector<Scalar>::Ones(1);
  int level = 0;
  for (Eigen::Index mu : b.positions()) {
    v = apply_dressed_creation(mu, modes, chain[level], chain[level + 1], v);
    ++level;
  }
  return v;
}

/// Single-sector convenience overload; throws if weight(b) != sector.k.
template <typename Scalar>
Vector<Scalar> dressed_product_vector(const BitString& b,
                                      const SingleParticleModes<Scalar>& modes,
                                      const FockSector& sector) {
  if (b.weight() != sector.k) {
    throw InvalidArgument("bit-string weight " + std::to_string(b.weight()) +
                          " does not match sector k = " + std::to_string(sector.k));
  }
  const std::vector<FockSector> chain = enumerate_sectors(sector.n_sites, sector.k);
  return dressed_product_vector(b, modes, std::span<const FockSector>(chain));
}

/// Throws SizeCapExceeded when the qubit-spectrum pipeline would exceed the
/// configured site count or dense sector size.
inline void check_ed_size(int n_sites, const EdOptions& options) {
  if (n_sites > options.max_sites) {
    throw SizeCapExceeded("exact diagonalization is capped at " +
                          std::to_string(options.max_sites) + " sites; lattice has " +
                          std::to_string(n_sites));
  }
  const std::uint64_t largest = sector_dimension(n_sites, n_sites);
  if (largest > options.max_sector_dim) {
    throw SizeCapExceeded("largest excitation sector has " + std::to_string(largest) +
                          " states, above the dense-solver cap of " +
                          std::to_string(options.max_sector_dim));
  }
}

/// Diagonalizes every sector k = 0..N and labels, inside each sector, the
/// C(N, k) eigenvectors that continue the dressed product states of weight-k
/// bit-strings. Labels come from an optimal assignment on |overlap|^2 over a
/// candidate set of eigenvectors; assigned overlaps below the threshold are
/// reported as ambiguous.
template <typename Scalar = double>
SpectrumTable<Scalar> solve_qubit_spectrum(const Lattice& lattice,
                                           const DisorderPattern& pattern, double J,
                                           double e_c, const EdOptions& options = {}) {
  const int n = static_cast<int>(lattice.size());
  check_ed_size(n, options);
  const SingleParticleModes<Scalar> modes = solve_single_particle<Scalar>(lattice, pattern, J);
  const std::vector<FockSector> chain = enumerate_sectors(n, n);

  std::vector<std::vector<std::uint64_t>> by_weight(n + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    by_weight[std::popcount(mask)].push_back(mask);
  }

  SpectrumTable<Scalar> table;
  table.n_bits = n;
  table.energies.assign(std::size_t{1} << n, Scalar(0));
  table.overlaps.assign(std::size_t{1} << n, Scalar(0));
  std::vector<std::vector<std::string>> sector_warnings(n + 1);

  parallel_for(0, n + 1, [&](int k) {
    const FockSector& sector = chain[k];
    const Matrix<Scalar> h = Matrix<Scalar>(build_hbh<Scalar>(lattice, pattern, J, e_c, sector));
    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(h);
    if (solver.info() != Eigen::Success) {
      throw NumericalFailure("sector " + std::to_string(k) + " eigensolver failed");
    }
    const auto& masks = by_weight[k];
    const auto count = static_cast<Eigen::Index>(masks.size());
    const auto dim = static_cast<Eigen::Index>(sector.size());

    Matrix<Scalar> products(dim, count);
    for (Eigen::Index r = 0; r < count; ++r) {
      products.col(r) = dressed_product_vector(BitString(n, masks[r]), modes,
                                               std::span<const FockSector>(chain));
    }
    const Matrix<Scalar> overlap =
        (products.transpose() * solver.eigenvectors()).array().square().matrix();

    // Candidate eigenvectors: the best few for every qubit state.
    const Eigen::Index per_row =
        std::min<Eigen::Index>(dim, std::max(1, options.candidates_per_state));
    std::vector<Eigen::Index> candidates;
    std::vector<Eigen::Index> order(dim);
    for (Eigen::Index r = 0; r < count; ++r) {
      std::iota(order.begin(), order.end(), Eigen::Index{0});
      std::partial_sort(order.begin(), order.begin() + per_row, order.end(),
                        [&](Eigen::Index a, Eigen::Index b) {
                          return overlap(r, a) > overlap(r, b);
                        });
      candidates.insert(candidates.end(), order.begin(), order.begin() + per_row);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    Eigen::MatrixXd weight(count, static_cast<Eigen::Index>(candidates.size()));
    for (Eigen::Index c = 0; c < weight.cols(); ++c) {
      weight.col(c) = overlap.col(candidates[c]).template cast<double>();
    }
    const std::vector<Eigen::Index> match = max_weight_assignment(weight);
    for (Eigen::Index r = 0; r < count; ++r) {
      const Eigen::Index col = candidates[match[r]];
      table.energies[masks[r]] = solver.eigenvalues()[col];
      table.overlaps[masks[r]] = overlap(r, col);
      if (overlap(r, col) < Scalar(options.overlap_threshold)) {
        sector_warnings[k].push_back("ambiguous label for " + BitString(n, masks[r]).str() +
                                     ": overlap " +
                                     std::to_string(static_cast<double>(overlap(r, col))));
      }
    }
  });

  table.warnings = modes.warnings;
  for (auto& w : sector_warnings) {
    table.warnings.insert(table.warnings.end(), w.begin(), w.end());
  }
  return table;
}

}  // namespace transmon

#endif  // TRANSMON_EXACT_DIAG_HPP
