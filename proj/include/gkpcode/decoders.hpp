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

#ifndef GKPCODE_DECODERS_HPP
#define GKPCODE_DECODERS_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gkpcode/codes.hpp"
#include "gkpcode/errors.hpp"
#include "gkpcode/modular.hpp"
#include "gkpcode/rng.hpp"
#include "gkpcode/symplectic.hpp"

// Decoders take the reshaped noise z = S^{-1} xi of a single code block and
// return the logical noise left on data mode 1 after the counter displacement.
namespace gkp {

struct DecodeOutcome {
  double xi_q = 0.0;
  double xi_p = 0.0;
};

/// Linear estimator weights; the data correction is -c * (measured ancilla).
struct EstimatorCoefficients {
  double c_q = 0.0;
  double c_p = 0.0;
};

namespace detail {

inline void check_length(const NoiseVector& z, std::size_t n_modes, const char* op) {
  if (static_cast<std::size_t>(z.size()) != 2 * n_modes) {
    throw DimensionError(std::string(op) + ": expected a noise vector of length " +
                         std::to_string(2 * n_modes) + ", got " + std::to_string(z.size()));
  }
}

}  // namespace detail

/// Position-eigenstate ancillas report z exactly. The maximum-likelihood
/// estimate averages the position noise; momentum noise accumulates.
inline DecodeOutcome decode_gaussian_repetition(const NoiseVector& z, std::size_t n) {
  if (n < 2) {
    throw DomainError("decode_gaussian_repetition: n must be >= 2");
  }
  detail::check_length(z, n, "decode_gaussian_repetition");
  double acc = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    acc += z[static_cast<Eigen::Index>(2 * k)];
  }
  return {z[0] + acc / static_cast<double>(n), z[1]};
}

inline DecodeOutcome decode_gkp_repetition(const NoiseVector& z, double sigma_gkp,
                                           GaussianStream& rng) {
  detail::check_length(z, 2, "decode_gkp_repetition");
  const double mq = modular_measure(z[2], sigma_gkp, rng).value;
  const double mp = modular_measure(z[3], sigma_gkp, rng).value;
  return {z[0] + 0.5 * mq, z[1] - mp};
}

inline DecodeOutcome decode_gkp_repetition(const NoiseVector& z, double sigma_gkp = 0.0,
                                           std::uint64_t seed = 0) {
  GaussianStream rng(seed, 0);
  return decode_gkp_repetition(z, sigma_gkp, rng);
}

/// Optimal linear estimate of z^(1) from the noisy modular readout of z^(2).
inline EstimatorCoefficients mmse_coefficients(double gain, double sigma, double sigma_gkp) {
  if (!(gain >= 1.0) || !std::isfinite(gain)) {
    throw DomainError("mmse_coefficients: gain must be >= 1");
  }
  if (!(sigma >= 0.0) || !(sigma_gkp >= 0.0)) {
    throw DomainError("mmse_coefficients: noise levels must be >= 0");
  }
  const double k = 2.0 * std::sqrt(gain * (gain - 1.0));
  const double den = (2.0 * gain - 1.0) * sigma * sigma + 2.0 * sigma_gkp * sigma_gkp;
  const double c = den > 0.0 ? k * sigma * sigma / den : k / (2.0 * gain - 1.0);
  return {-c, c};
}

inline DecodeOutcome decode_gkp_tms(const NoiseVector& z, const EstimatorCoefficients& c,
                                    double sigma_gkp, GaussianStream& rng) {
  detail::check_length(z, 2, "decode_gkp_tms");
  const double mq = modular_measure(z[2], sigma_gkp, rng).value;
  const double mp = modular_measure(z[3], sigma_gkp, rng).value;
  return {z[0] - c.c_q * mq, z[1] - c.c_p * mp};
}

inline DecodeOutcome decode_gkp_tms(const NoiseVector& z, double gain, double sigma,
                                    double sigma_gkp, GaussianStream& rng) {
  return decode_gkp_tms(z, mmse_coefficients(gain, sigma, sigma_gkp), sigma_gkp, rng);
}

inline DecodeOutcome decode_gkp_tms(const NoiseVector& z, double gain, double sigma,
                                    double sigma_gkp, std::uint64_t seed) {
  GaussianStream rng(seed, 0);
  return decode_gkp_tms(z, gain, sigma, sigma_gkp, rng);
}

/// Sequential decoder of the squeezed repetition code.
///
/// Ancilla rows of A = S^{-1} are read from the last mode backwards. Each
/// readout, minus the part explained by noise already estimated, pins one
/// more physical noise entry: in position, row r reveals xi_q^(r-1); in
/// momentum, row r reveals xi_p^(r). The data row is then corrected with all
/// estimates, leaving xi^(N) / lambda^(N-1) per quadrature.
class SqueezedRepetitionDecoder {
 public:
  static constexpr std::size_t kMaxModes = 16;

  SqueezedRepetitionDecoder(std::size_t n, double lam, double sigma_gkp = 0.0)
      : n_(n), sigma_gkp_(sigma_gkp) {
    if (n > kMaxModes) {
      throw UnsupportedError("SqueezedRepetitionDecoder: n > " + std::to_string(kMaxModes) +
                             " is not supported");
    }
    if (!(sigma_gkp >= 0.0)) {
      throw DomainError("SqueezedRepetitionDecoder: sigma_gkp must be >= 0");
    }
    const auto spec = gkp_squeezed_repetition(n, lam);
    a_ = inverse(spec.encoder).matrix();
  }

  std::size_t n_modes() const { return n_; }

  DecodeOutcome decode(const NoiseVector& z, GaussianStream& rng) const {
    detail::check_length(z, n_, "decode_gkp_squeezed_repetition");
    return {chain(z, rng, 0), chain(z, rng, 1)};
  }

 private:
  // offset 0: position rows/columns, 1: momentum.
  double chain(const NoiseVector& z, GaussianStream& rng, Eigen::Index offset) const {
    const auto n = static_cast<Eigen::Index>(n_);
    std::vector<double> est(n_, 0.0);
    std::vector<bool> known(n_, false);
    for (Eigen::Index r = n - 1; r >= 1; --r) {
      const Eigen::Index row = 2 * r + offset;
      const Eigen::Index pivot = offset == 0 ? r - 1 : r;
      double explained = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (known[j]) {
          explained += a_(row, 2 * j + offset) * est[j];
        }
      }
      const double m = modular_measure(z[row], sigma_gkp_, rng).value;
      est[pivot] = reduce(m - explained) / a_(row, 2 * pivot + offset);
      known[pivot] = true;
    }
    double residual = z[offset];
    for (Eigen::Index j = 0; j < n; ++j) {
      if (known[j]) {
        residual -= a_(offset, 2 * j + offset) * est[j];
      }
    }
    return residual;
  }

  std::size_t n_;
  double sigma_gkp_;
  Eigen::MatrixXd a_;
};

inline DecodeOutcome decode_gkp_squeezed_repetition(const NoiseVector& z, std::size_t n,
                                                    double lam, std::uint64_t seed = 0,
                                                    double sigma_gkp = 0.0) {
  GaussianStream rng(seed, 0);
  return SqueezedRepetitionDecoder(n, lam, sigma_gkp).decode(z, rng);
}

}  // namespace gkp

#endif  // GKPCODE_DECODERS_HPP
