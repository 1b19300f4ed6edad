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

#ifndef GKPCODE_NOISE_HPP
#define GKPCODE_NOISE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gkpcode/errors.hpp"
#include "gkpcode/rng.hpp"
#include "gkpcode/symplectic.hpp"

namespace gkp {

/// Every quadrature of every mode gets an independent N(0, sigma^2) shift.
struct IidNoiseModel {
  double sigma = 0.0;
  std::size_t n_modes = 1;

  IidNoiseModel() = default;
  IidNoiseModel(double sigma_, std::size_t n_modes_) : sigma(sigma_), n_modes(n_modes_) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
      throw DomainError("IidNoiseModel: sigma must be finite and >= 0");
    }
    if (n_modes == 0) {
      throw DimensionError("IidNoiseModel: n_modes must be positive");
    }
  }
};

class NoiseCovariance {
 public:
  explicit NoiseCovariance(Eigen::MatrixXd m, double tol = 1e-12) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() % 2 != 0 || matrix_.rows() == 0) {
      throw DimensionError("NoiseCovariance: expected a non-empty 2N x 2N matrix");
    }
    const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
    if ((matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
      throw DomainError("NoiseCovariance: matrix is not symmetric");
    }
    matrix_ = 0.5 * (matrix_ + matrix_.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(matrix_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -tol * scale) {
      throw DomainError("NoiseCovariance: matrix is not positive semidefinite");
    }
  }

  static NoiseCovariance isotropic(double sigma, std::size_t n_modes) {
    return NoiseCovariance(sigma * sigma * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
  }

  std::size_t n_modes() const { return static_cast<std::size_t>(matrix_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXd matrix_;
};

/// Fills `out` (length 2N) from `rng`, coordinate order q1, p1, q2, ...
inline void sample_iid_into(const IidNoiseModel& model, GaussianStream& rng, NoiseVector& out) {
  out.resize(static_cast<Eigen::Index>(2 * model.n_modes));
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    out[i] = rng.normal(model.sigma);
  }
}

/// `count` noise vectors from stream (seed, shard).
inline std::vector<NoiseVector> sample_iid(const IidNoiseModel& model, std::uint64_t seed,
                                           std::size_t count, std::uint64_t shard = 0) {
  if (count == 0) {
    throw DomainError("sample_iid: count must be >= 1");
  }
  GaussianStream rng(seed, shard);
  std::vector<NoiseVector> out(count);
  for (auto& v : out) {
    sample_iid_into(model, rng, v);
  }
  return out;
}

/// z = S^{-1} xi.
inline NoiseVector reshape_noise(const SymplecticTransform& enc, const NoiseVector& xi) {
  return apply(inverse(enc), xi);
}

/// S^{-1} V S^{-T}.
inline NoiseCovariance propagate_covariance(const SymplecticTransform& enc,
                                            const NoiseCovariance& v) {
  if (enc.n_modes() != v.n_modes()) {
    throw DimensionError("propagate_covariance: mode counts differ");
  }
  const Eigen::MatrixXd si = inverse(enc).matrix();
  return NoiseCovariance(si * v.matrix() * si.transpose(), 1e-9);
}

/// Pure loss gamma, amplified back to unit transmissivity: sigma = sqrt(gamma).
inline double loss_to_sigma(double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw DomainError("loss_to_sigma: gamma must lie in [0, 1)");
  }
  return std::sqrt(gamma);
}

inline double gkp_sigma_from_delta(double delta) {
  if (!(delta > 0.0)) {
    throw DomainError("gkp_sigma_from_delta: delta must be positive");
  }
  return std::sqrt(-std::expm1(-delta) / (1.0 + std::exp(-delta)));
}

/// s_gkp = -10 log10(2 sigma_gkp^2); infinite squeezing maps to sigma_gkp = 0.
inline double gkp_sigma_from_db(double s_db) {
  if (std::isnan(s_db)) {
    throw DomainError("gkp_sigma_from_db: NaN squeezing");
  }
  if (std::isinf(s_db) && s_db > 0) {
    return 0.0;
  }
  return std::sqrt(0.5 * std::pow(10.0, -s_db / 10.0));
}

inline double gkp_db_from_sigma(double sigma_gkp) {
  if (!(sigma_gkp >= 0.0)) {
    throw DomainError("gkp_db_from_sigma: sigma_gkp must be >= 0");
  }
  if (sigma_gkp == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return -10.0 * std::log10(2.0 * sigma_gkp * sigma_gkp);
}

}  // namespace gkp

#endif  // GKPCODE_NOISE_HPP
