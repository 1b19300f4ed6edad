// Copyright 2026 The gkpcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GKPCODE_SYMPLECTIC_HPP
#define GKPCODE_SYMPLECTIC_HPP

#include <cmath>
#include <cstddef>
#include <string>

#include <Eigen/Dense>

#include "gkpcode/errors.hpp"

/// Symplectic matrices of Gaussian circuit elements.
///
/// Quadratures are interleaved, (q1, p1, q2, p2, ..., qN, pN), with hbar = 1
/// so that [q, p] = i and the vacuum variance is 1/2. Modes are numbered from
/// 1, matching circuit diagrams. A transform S maps the quadrature vector x to
/// S x; compose(a, b) = a * b, so b acts first.
namespace gkp {

using NoiseVector = Eigen::VectorXd;

/// Omega = direct sum of N blocks [[0, 1], [-1, 0]].
inline Eigen::MatrixXd symplectic_form(std::size_t n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (std::size_t k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

/// max_ij |(S Omega S^T - Omega)_ij|. Requires a square matrix of even size.
inline double symplectic_defect(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
    throw DimensionError("symplectic_defect: expected a non-empty 2N x 2N matrix");
  }
  const auto omega = symplectic_form(static_cast<std::size_t>(m.rows() / 2));
  return (m * omega * m.transpose() - omega).cwiseAbs().maxCoeff();
}

class SymplecticTransform {
 public:
  static SymplecticTransform identity(std::size_t n_modes) {
    if (n_modes == 0) {
      throw DimensionError("SymplecticTransform: n_modes must be positive");
    }
    return SymplecticTransform(Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
  }

  /// Wraps an arbitrary matrix after checking shape and S Omega S^T = Omega.
  /// The tolerance is relative to the squared magnitude of the entries so that
  /// products of strongly squeezing elements still validate.
  static SymplecticTransform from_matrix(Eigen::MatrixXd m, double tol = 1e-12) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
      throw DimensionError("SymplecticTransform: expected a non-empty 2N x 2N matrix");
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double defect = symplectic_defect(m);
    if (!(defect <= tol * scale * scale)) {
      throw DomainError("SymplecticTransform: matrix is not symplectic (defect " +
                        std::to_string(defect) + ")");
    }
    return SymplecticTransform(std::move(m));
  }

  std::size_t n_modes() const { return static_cast<std::size_t>(matrix_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  double operator()(Eigen::Index row, Eigen::Index col) const { return matrix_(row, col); }

  friend SymplecticTransform compose(const SymplecticTransform& a, const SymplecticTransform& b);
  friend SymplecticTransform inverse(const SymplecticTransform& a);
  friend SymplecticTransform direct_sum(const SymplecticTransform& a, const SymplecticTransform& b);
  friend class SymplecticBuilder;

 private:
  explicit SymplecticTransform(Eigen::MatrixXd m) : matrix_(std::move(m)) {}

  Eigen::MatrixXd matrix_;
};

/// Internal helper used by the gate constructors.
class SymplecticBuilder {
 public:
  explicit SymplecticBuilder(std::size_t n_modes) {
    if (n_modes == 0) {
      throw DimensionError("gate: n_modes must be positive");
    }
    m_ = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  }
  Eigen::MatrixXd& matrix() { return m_; }
  SymplecticTransform build() && { return SymplecticTransform(std::move(m_)); }

 private:
  Eigen::MatrixXd m_;
};

namespace detail {

inline void check_mode(std::size_t mode, std::size_t n_modes, const char* op) {
  if (mode < 1 || mode > n_modes) {
    throw InvalidModeError(std::string(op) + ": mode " + std::to_string(mode) +
                           " outside 1.." + std::to_string(n_modes));
  }
}

inline void check_pair(std::size_t j, std::size_t k, std::size_t n_modes, const char* op) {
  check_mode(j, n_modes, op);
  check_mode(k, n_modes, op);
  if (j == k) {
    throw InvalidModeError(std::string(op) + ": modes must differ");
  }
}

inline Eigen::Index q_of(std::size_t mode) { return static_cast<Eigen::Index>(2 * (mode - 1)); }
inline Eigen::Index p_of(std::size_t mode) { return q_of(mode) + 1; }

}  // namespace detail

/// SUM_{j->k}: q_k -> q_k + q_j, p_j -> p_j - p_k.
inline SymplecticTransform sum_gate(std::size_t j, std::size_t k, std::size_t n_modes) {
  detail::check_pair(j, k, n_modes, "sum_gate");
  SymplecticBuilder b(n_modes);
  b.matrix()(detail::q_of(k), detail::q_of(j)) = 1.0;
  b.matrix()(detail::p_of(j), detail::p_of(k)) = -1.0;
  return std::move(b).build();
}

/// Sq_j(lambda): q_j -> lambda q_j, p_j -> p_j / lambda.
inline SymplecticTransform single_mode_squeeze(double lambda, std::size_t j, std::size_t n_modes) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("single_mode_squeeze: lambda must be positive and finite");
  }
  detail::check_mode(j, n_modes, "single_mode_squeeze");
  SymplecticBuilder b(n_modes);
  b.matrix()(detail::q_of(j), detail::q_of(j)) = lambda;
  b.matrix()(detail::p_of(j), detail::p_of(j)) = 1.0 / lambda;
  return std::move(b).build();
}

/// TS_{j,k}(G) = [[sqrt(G) I, sqrt(G-1) Z], [sqrt(G-1) Z, sqrt(G) I]], Z = diag(1, -1).
inline SymplecticTransform two_mode_squeeze(double gain, std::size_t j, std::size_t k,
                                            std::size_t n_modes) {
  if (!(gain >= 1.0) || !std::isfinite(gain)) {
    throw DomainError("two_mode_squeeze: gain must be >= 1");
  }
  detail::check_pair(j, k, n_modes, "two_mode_squeeze");
  const double c = std::sqrt(gain);
  const double s = std::sqrt(gain - 1.0);
  SymplecticBuilder b(n_modes);
  auto& m = b.matrix();
  using detail::p_of;
  using detail::q_of;
  m(q_of(j), q_of(j)) = c;
  m(p_of(j), p_of(j)) = c;
  m(q_of(k), q_of(k)) = c;
  m(p_of(k), p_of(k)) = c;
  m(q_of(j), q_of(k)) = s;
  m(p_of(j), p_of(k)) = -s;
  m(q_of(k), q_of(j)) = s;
  m(p_of(k), p_of(j)) = -s;
  return std::move(b).build();
}

/// BS_{j,k}(eta) = [[sqrt(eta) I, sqrt(1-eta) I], [-sqrt(1-eta) I, sqrt(eta) I]].
inline SymplecticTransform beam_splitter(double eta, std::size_t j, std::size_t k,
                                         std::size_t n_modes) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw DomainError("beam_splitter: transmissivity must lie in [0, 1]");
  }
  detail::check_pair(j, k, n_modes, "beam_splitter");
  const double t = std::sqrt(eta);
  const double r = std::sqrt(1.0 - eta);
  SymplecticBuilder b(n_modes);
  auto& m = b.matrix();
  using detail::p_of;
  using detail::q_of;
  m(q_of(j), q_of(j)) = t;
  m(p_of(j), p_of(j)) = t;
  m(q_of(k), q_of(k)) = t;
  m(p_of(k), p_of(k)) = t;
  m(q_of(j), q_of(k)) = r;
  m(p_of(j), p_of(k)) = r;
  m(q_of(k), q_of(j)) = -r;
  m(p_of(k), p_of(j)) = -r;
  return std::move(b).build();
}

inline SymplecticTransform compose(const SymplecticTransform& a, const SymplecticTransform& b) {
  if (a.n_modes() != b.n_modes()) {
    throw DimensionError("compose: mode counts differ");
  }
  return SymplecticTransform(a.matrix_ * b.matrix_);
}

/// S^{-1} = -Omega S^T Omega; exact up to sign flips, no factorization.
inline SymplecticTransform inverse(const SymplecticTransform& a) {
  const auto omega = symplectic_form(a.n_modes());
  return SymplecticTransform(-omega * a.matrix_.transpose() * omega);
}

/// Block-diagonal a (first modes) plus b (remaining modes).
inline SymplecticTransform direct_sum(const SymplecticTransform& a, const SymplecticTransform& b) {
  const auto na = a.matrix_.rows();
  const auto nb = b.matrix_.rows();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(na + nb, na + nb);
  m.topLeftCorner(na, na) = a.matrix_;
  m.bottomRightCorner(nb, nb) = b.matrix_;
  return SymplecticTransform(std::move(m));
}

inline NoiseVector apply(const SymplecticTransform& a, const NoiseVector& v) {
  if (v.size() != a.matrix().rows()) {
    throw DimensionError("apply: vector length " + std::to_string(v.size()) + " != 2N = " +
                         std::to_string(a.matrix().rows()));
  }
  return a.matrix() * v;
}

inline bool is_symplectic(const Eigen::MatrixXd& m, double tol = 1e-12) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
    return false;
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return symplectic_defect(m) <= tol * scale * scale;
}

inline bool is_symplectic(const SymplecticTransform& a, double tol = 1e-12) {
  return is_symplectic(a.matrix(), tol);
}

inline double determinant(const SymplecticTransform& a) { return a.matrix().determinant(); }

}  // namespace gkp

#endif  // GKPCODE_SYMPLECTIC_HPP
