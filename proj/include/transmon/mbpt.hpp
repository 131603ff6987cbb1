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

#ifndef TRANSMON_MBPT_HPP
#define TRANSMON_MBPT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "transmon/bitstring.hpp"
#include "transmon/error.hpp"
#include "transmon/parallel.hpp"
#include "transmon/single_particle.hpp"

// Second-order perturbation theory in the anharmonicity E_C around the
// dressed (tight-binding eigenmode) basis, for qubit states only.
//
// Index convention: every tensor index is a mode label, which equals the home
// site of the mode. Sums over "distinct" indices exclude coincident labels;
// they are evaluated as full contractions minus their diagonal parts, never
// by branching inside the inner loops.

namespace transmon {

/// Near-vanishing energy denominators are flagged below this value (GHz).
inline constexpr double kDefaultDenominatorTolerance = 1e-6;

/// Dense four-index array F(a, b, m, n) stored as an N^2 x N^2 matrix with
/// row a + N b and column m + N n.
template <typename Scalar>
class FourIndexArray {
 public:
  FourIndexArray() = default;
  explicit FourIndexArray(Eigen::Index n)
      : n_(n), data_(Matrix<Scalar>::Zero(n * n, n * n)) {}

  Eigen::Index extent() const noexcept { return n_; }

  Scalar& operator()(Eigen::Index a, Eigen::Index b, Eigen::Index m,
                     Eigen::Index n) {
    return data_(a + n_ * b, m + n_ * n);
  }
  Scalar operator()(Eigen::Index a, Eigen::Index b, Eigen::Index m,
                    Eigen::Index n) const {
    return data_(a + n_ * b, m + n_ * n);
  }

  const Matrix<Scalar>& pair_matrix() const noexcept { return data_; }
  Matrix<Scalar>& pair_matrix() noexcept { return data_; }

 private:
  Eigen::Index n_ = 0;
  Matrix<Scalar> data_;
};

enum class ResonanceKind { site, mode };

/// A near-zero energy denominator with a nonzero numerator. Site resonances
/// come from the two-mode denominators of S (indices m, n), mode resonances
/// from the three- or four-mode denominators of D (indices a, b, m, n).
struct Resonance {
  ResonanceKind kind;
  std::array<Eigen::Index, 4> indices;  // unused slots are -1
  double denominator;
};

/// Four-point functions <psi_a psi_b psi_m psi_n> for all label tuples.
///
/// Computed as one GEMM of the pair-product matrix with itself, then made
/// exactly permutation symmetric by copying the value of the sorted tuple to
/// every permutation. Downstream symmetry identities of S and D rely on that.
template <typename Scalar>
FourIndexArray<Scalar> four_point_array(const SingleParticleModes<Scalar>& modes) {
  const Eigen::Index n = modes.size();
  const Matrix<Scalar>& psi = modes.vectors;
  Matrix<Scalar> pairs(n * n, n);
  for (Eigen::Index b = 0; b < n; ++b) {
    for (Eigen::Index a = 0; a < n; ++a) {
      pairs.row(a + n * b) = psi.col(a).cwiseProduct(psi.col(b)).transpose();
    }
  }
  const Matrix<Scalar> gram = pairs * pairs.transpose();

  FourIndexArray<Scalar> out(n);
  parallel_for(Eigen::Index{0}, n, [&](Eigen::Index d) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index b = 0; b < n; ++b) {
        for (Eigen::Index a = 0; a < n; ++a) {
          std::array<Eigen::Index, 4> k{a, b, c, d};
          std::sort(k.begin(), k.end());
          out(a, b, c, d) = gram(k[0] + n * k[1], k[2] + n * k[3]);
        }
      }
    }
  });
  return out;
}

/// Emat(mu, nu) = -E_C <psi_mu^2 psi_nu^2>. The diagonal is stored; the
/// first-order energy only uses mu != nu.
template <typename Scalar>
Matrix<Scalar> tensor_E(const SingleParticleModes<Scalar>& modes, Scalar e_c) {
  const Matrix<Scalar> sq = modes.vectors.cwiseAbs2();
  const Matrix<Scalar> gram = sq.transpose() * sq;
  Matrix<Scalar> sym = gram.template selfadjointView<Eigen::Upper>();
  return -e_c * sym;
}

namespace detail {

// Denominator E_a + E_b - E_m - E_n. When the two index pairs share a label
// it reduces to a single difference, which keeps S_{aabn} = 4 D_{abav} and
// every D symmetry exact in floating point.
template <typename Scalar>
Scalar pair_denominator(const Vector<Scalar>& e, Eigen::Index a, Eigen::Index b,
                        Eigen::Index m, Eigen::Index n) {
  if (a == m) return e[b] - e[n];
  if (a == n) return e[b] - e[m];
  if (b == m) return e[a] - e[n];
  if (b == n) return e[a] - e[m];
  return (e[a] + e[b]) - (e[m] + e[n]);
}

inline bool same_pair(Eigen::Index a, Eigen::Index b, Eigen::Index m,
                      Eigen::Index n) {
  return (a == m && b == n) || (a == n && b == m);
}

}  // namespace detail

/// S(a, b, m, n) = 4 E_C^2 <psi_a^2 psi_m psi_n><psi_b^2 psi_m psi_n> / (E_m - E_n)
/// for m != n, zero for m == n. Appends site resonances to `report`.
template <typename Scalar>
FourIndexArray<Scalar> tensor_S(const SingleParticleModes<Scalar>& modes,
                                const FourIndexArray<Scalar>& four_point,
                                Scalar e_c, double denom_tol,
                                std::vector<Resonance>* report = nullptr) {
  using std::abs;
  const Eigen::Index n = modes.size();
  const Vector<Scalar>& e = modes.energies;
  const Scalar c4 = Scalar(4) * (e_c * e_c);
  FourIndexArray<Scalar> s(n);
  parallel_for(Eigen::Index{0}, n, [&](Eigen::Index nu) {
    for (Eigen::Index mu = 0; mu < n; ++mu) {
      if (mu == nu) continue;
      const Scalar den = e[mu] - e[nu];
      if (den == Scalar(0)) continue;
      for (Eigen::Index b = 0; b < n; ++b) {
        const Scalar pb = four_point(b, b, mu, nu);
        for (Eigen::Index a = 0; a < n; ++a) {
          s(a, b, mu, nu) = (c4 * (four_point(a, a, mu, nu) * pb)) / den;
        }
      }
    }
  });
  if (report != nullptr) {
    for (Eigen::Index mu = 0; mu < n; ++mu) {
      for (Eigen::Index nu = mu + 1; nu < n; ++nu) {
        const Scalar den = e[mu] - e[nu];
        if (abs(den) >= Scalar(denom_tol)) continue;
        bool nonzero = false;
        for (Eigen::Index a = 0; a < n && !nonzero; ++a) {
          nonzero = four_point(a, a, mu, nu) != Scalar(0);
        }
        if (nonzero) {
          report->push_back({ResonanceKind::site, {mu, nu, -1, -1},
                             static_cast<double>(den)});
        }
      }
    }
  }
  return s;
}

/// D(a, b, m, n) = E_C^2 <psi_a psi_b psi_m psi_n>^2 / (E_a + E_b - E_m - E_n)
/// unless {a, b} = {m, n} as sets. Appends mode resonances to `report`.
template <typename Scalar>
FourIndexArray<Scalar> tensor_D(const SingleParticleModes<Scalar>& modes,
                                const FourIndexArray<Scalar>& four_point,
                                Scalar e_c, double denom_tol,
                                std::vector<Resonance>* report = nullptr) {
  using std::abs;
  const Eigen::Index n = modes.size();
  const Vector<Scalar>& e = modes.energies;
  const Scalar c1 = e_c * e_c;
  FourIndexArray<Scalar> d(n);
  parallel_for(Eigen::Index{0}, n, [&](Eigen::Index nu) {
    for (Eigen::Index mu = 0; mu < n; ++mu) {
      for (Eigen::Index b = 0; b < n; ++b) {
        for (Eigen::Index a = 0; a < n; ++a) {
          if (detail::same_pair(a, b, mu, nu)) continue;
          const Scalar den = detail::pair_denominator(e, a, b, mu, nu);
          if (den == Scalar(0)) continue;
          const Scalar p = four_point(a, b, mu, nu);
          d(a, b, mu, nu) = (c1 * (p * p)) / den;
        }
      }
    }
  });
  if (report != nullptr) {
    // One entry per equivalence class: a <= b, m <= n, (a, b) < (m, n).
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = a; b < n; ++b) {
        for (Eigen::Index mu = a; mu < n; ++mu) {
          for (Eigen::Index nu = mu; nu < n; ++nu) {
            if (mu == a && nu <= b) continue;
            const Scalar den = detail::pair_denominator(e, a, b, mu, nu);
            if (abs(den) >= Scalar(denom_tol)) continue;
            if (four_point(a, b, mu, nu) == Scalar(0)) continue;
            report->push_back({ResonanceKind::mode, {a, b, mu, nu},
                               static_cast<double>(den)});
          }
        }
      }
    }
  }
  return d;
}

/// Everything second-order perturbation theory needs for one set of modes,
/// plus the partial contractions shared by the energy and Walsh formulas:
///
///   pair_sum(a, b)          = sum_{m,n} D(a, b, m, n)
///   triple_sum(a + N b, m)  = sum_n [2 D + S](a, b, m, n)
///
/// Immutable after construction.
template <typename Scalar = double>
struct PTTensors {
  Scalar e_c{};
  double denom_tol = kDefaultDenominatorTolerance;
  Vector<Scalar> energies;  // single-particle E_mu
  Matrix<Scalar> emat;
  FourIndexArray<Scalar> s;
  FourIndexArray<Scalar> d;
  Matrix<Scalar> pair_sum;    // N x N
  Matrix<Scalar> triple_sum;  // N^2 x N
  // Diagonal slices of triple_sum: B(a,a,m), B(a,b,a), B(a,b,b), B(a,a,a).
  Matrix<Scalar> triple_aam;
  Matrix<Scalar> triple_aba;
  Matrix<Scalar> triple_abb;
  Vector<Scalar> triple_aaa;
  std::vector<Resonance> resonances;

  Eigen::Index size() const noexcept { return energies.size(); }
  Scalar triple(Eigen::Index a, Eigen::Index b, Eigen::Index m) const {
    return triple_sum(a + size() * b, m);
  }
};

template <typename Scalar>
PTTensors<Scalar> build_pt_tensors(const SingleParticleModes<Scalar>& modes,
                                   Scalar e_c,
                                   double denom_tol = kDefaultDenominatorTolerance) {
  const Eigen::Index n = modes.size();
  PTTensors<Scalar> t;
  t.e_c = e_c;
  t.denom_tol = denom_tol;
  t.energies = modes.energies;
  t.emat = tensor_E(modes, e_c);
  {
    const FourIndexArray<Scalar> p4 = four_point_array(modes);
    t.s = tensor_S(modes, p4, e_c, denom_tol, &t.resonances);
    t.d = tensor_D(modes, p4, e_c, denom_tol, &t.resonances);
  }

  const Vector<Scalar> rows = t.d.pair_matrix().rowwise().sum();
  t.pair_sum = Eigen::Map<const Matrix<Scalar>>(rows.data(), n, n);

  t.triple_sum = Matrix<Scalar>::Zero(n * n, n);
  for (Eigen::Index nu = 0; nu < n; ++nu) {
    t.triple_sum += Scalar(2) * t.d.pair_matrix().middleCols(nu * n, n) +
                    t.s.pair_matrix().middleCols(nu * n, n);
  }

  t.triple_aam.resize(n, n);
  t.triple_aba.resize(n, n);
  t.triple_abb.resize(n, n);
  t.triple_aaa.resize(n);
  for (Eigen::Index b = 0; b < n; ++b) {
    for (Eigen::Index a = 0; a < n; ++a) {
      t.triple_aam(a, b) = t.triple(a, a, b);
      t.triple_aba(a, b) = t.triple(a, b, a);
      t.triple_abb(a, b) = t.triple(a, b, b);
    }
    t.triple_aaa[b] = t.triple(b, b, b);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Qubit-sector energies.

namespace detail {
inline void check_size(const BitString& b, Eigen::Index n) {
  if (b.size() != n) {
    throw InvalidArgument("bit-string length " + std::to_string(b.size()) +
                          " does not match " + std::to_string(n) + " modes");
  }
}
}  // namespace detail

/// sum_mu E_mu b_mu
template <typename Scalar>
Scalar energy_order0(const BitString& b, const SingleParticleModes<Scalar>& modes) {
  detail::check_size(b, modes.size());
  return modes.energies.dot(b.as_vector<Scalar>());
}

/// -E_C sum_mu b_mu - E_C sum_{mu != nu} b_mu b_nu <psi_mu^2 psi_nu^2>
template <typename Scalar>
Scalar energy_order1(const BitString& b, const SingleParticleModes<Scalar>& modes,
                     Scalar e_c) {
  detail::check_size(b, modes.size());
  const std::vector<Eigen::Index> occ = b.positions();
  Scalar cross(0);
  for (Eigen::Index mu : occ) {
    for (Eigen::Index nu : occ) {
      if (mu != nu) {
        cross += modes.vectors.col(mu).cwiseAbs2().dot(modes.vectors.col(nu).cwiseAbs2());
      }
    }
  }
  return -e_c * Scalar(b.weight()) - e_c * cross;
}

/// Same quantity through the Emat contraction.
template <typename Scalar>
Scalar energy_order1(const BitString& b, const PTTensors<Scalar>& t) {
  detail::check_size(b, t.size());
  const Vector<Scalar> x = b.as_vector<Scalar>();
  return -t.e_c * Scalar(b.weight()) + x.dot(t.emat * x) -
         x.dot(t.emat.diagonal().cwiseProduct(x));
}

/// sum over distinct a, b of D(a,b,m,n) b_a b_b, plus sum over distinct
/// a, b, m of [2D + S](a,b,m,n) b_a b_b b_m, all free lower indices summed.
/// The four-bit term cancels identically and is not evaluated.
template <typename Scalar>
Scalar energy_order2(const BitString& b, const PTTensors<Scalar>& t) {
  detail::check_size(b, t.size());
  if (b.weight() < 2) return Scalar(0);
  const Eigen::Index n = t.size();
  const Vector<Scalar> x = b.as_vector<Scalar>();

  const Scalar pair = x.dot(t.pair_sum * x) - x.dot(t.pair_sum.diagonal().cwiseProduct(x));

  const Matrix<Scalar> xx = x * x.transpose();
  const Eigen::Map<const Vector<Scalar>> xx_flat(xx.data(), n * n);
  const Scalar full = xx_flat.dot(t.triple_sum * x);
  const Scalar triple = full - x.dot(t.triple_aam * x) - x.dot(t.triple_aba * x) -
                        x.dot(t.triple_abb * x) + Scalar(2) * x.dot(t.triple_aaa);
  return pair + triple;
}

template <typename Scalar>
Scalar energy_pt(const BitString& b, const SingleParticleModes<Scalar>& modes,
                 const PTTensors<Scalar>& t) {
  return energy_order0(b, modes) + energy_order1(b, t) + energy_order2(b, t);
}

// ---------------------------------------------------------------------------
// Walsh-Hadamard coefficients of the perturbative spectrum, weight <= 3.

/// Order-n contribution to w_{l1..lm}. Order 0 reaches weight 1, order 1
/// weight 2 and order 2 weight 3; heavier coefficients are zero.
///
/// Throws InvalidArgument for duplicate or out-of-range positions, more than
/// three positions, or order > 2.
template <typename Scalar>
Scalar wh_pt(std::span<const Eigen::Index> positions, int order,
             const PTTensors<Scalar>& t) {
  const Eigen::Index n = t.size();
  const std::size_t m = positions.size();
  if (m > 3) throw InvalidArgument("wh_pt supports at most three positions");
  if (order < 0 || order > 2) throw InvalidArgument("wh_pt order must be 0, 1 or 2");
  for (std::size_t i = 0; i < m; ++i) {
    if (positions[i] < 0 || positions[i] >= n) {
      throw InvalidArgument("wh_pt position out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (positions[i] == positions[j]) {
        throw InvalidArgument("wh_pt positions must be pairwise distinct");
      }
    }
  }
  if (static_cast<int>(m) > order + 1) return Scalar(0);

  const Scalar half(0.5), quarter(0.25), eighth(0.125);
  const auto& D = t.d;
  const auto& S = t.s;

  if (order == 0) {
    return m == 0 ? half * t.energies.sum() : half * t.energies[positions[0]];
  }

  if (order == 1) {
    // Emat enters with distinct indices only.
    const Matrix<Scalar>& em = t.emat;
    switch (m) {
      case 0:
        return quarter * (em.sum() - em.trace()) - Scalar(n) * t.e_c * half;
      case 1: {
        const Eigen::Index l = positions[0];
        return half * (em.col(l).sum() - em(l, l)) - half * t.e_c;
      }
      default:
        return half * em(positions[0], positions[1]);
    }
  }

  switch (m) {
    case 0: {
      Scalar acc(0), diag(0);
      for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index nu = 0; nu < n; ++nu) {
          for (Eigen::Index mu = 0; mu < n; ++mu) acc += D(mu, nu, a, a);
          diag += D(a, a, a, nu);
        }
      }
      return half * acc + Scalar(1.5) * diag;
    }
    case 1: {
      const Eigen::Index l = positions[0];
      const Scalar pairs = t.pair_sum.row(l).sum() - t.pair_sum(l, l);
      // sum over distinct (l, b, m) of B(l, b, m)
      Scalar lead(0);
      for (Eigen::Index b = 0; b < n; ++b) lead += t.triple_sum.row(l + n * b).sum();
      lead += -t.triple_aam.row(l).sum() - t.triple_aba.row(l).sum() -
              t.triple_abb.row(l).sum() + Scalar(2) * t.triple_aaa[l];
      // sum over distinct (a, b, l) of B(a, b, l)
      Scalar tail = t.triple_sum.col(l).sum() - t.triple_aam.col(l).sum() -
                    t.triple_aba.row(l).sum() - t.triple_abb.col(l).sum() +
                    Scalar(2) * t.triple_aaa[l];
      return half * pairs + quarter * lead + eighth * tail;
    }
    case 2: {
      const Eigen::Index l1 = positions[0], l2 = positions[1];
      Scalar acc = t.pair_sum(l1, l2);
      for (Eigen::Index nu = 0; nu < n; ++nu) {
        acc -= Scalar(2) * D(l1, l2, l1, nu) + Scalar(2) * D(l1, l2, l2, nu) +
               half * D(l1, l1, l2, nu) + half * D(l2, l2, l1, nu) +
               half * S(l1, l2, l1, nu) + half * S(l1, l2, l2, nu);
      }
      return acc;
    }
    default: {
      const Eigen::Index l1 = positions[0], l2 = positions[1], l3 = positions[2];
      Scalar acc(0);
      for (Eigen::Index nu = 0; nu < n; ++nu) {
        acc += half * (D(l1, l2, l3, nu) + D(l1, l3, l2, nu) + D(l2, l3, l1, nu)) +
               quarter * (S(l1, l2, l3, nu) + S(l1, l3, l2, nu) + S(l2, l3, l1, nu));
      }
      return acc;
    }
  }
}

template <typename Scalar>
Scalar wh_pt(std::initializer_list<Eigen::Index> positions, int order,
             const PTTensors<Scalar>& t) {
  return wh_pt(std::span<const Eigen::Index>(positions.begin(), positions.size()),
               order, t);
}

template <typename Scalar>
Scalar wh_pt_total(std::span<const Eigen::Index> positions, const PTTensors<Scalar>& t) {
  return wh_pt(positions, 0, t) + wh_pt(positions, 1, t) + wh_pt(positions, 2, t);
}

template <typename Scalar>
Scalar wh_pt_total(std::initializer_list<Eigen::Index> positions,
                   const PTTensors<Scalar>& t) {
  return wh_pt_total(std::span<const Eigen::Index>(positions.begin(), positions.size()), t);
}

}  // namespace transmon

#endif  // TRANSMON_MBPT_HPP
