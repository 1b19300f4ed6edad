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

#ifndef GKPCODE_MODULAR_HPP
#define GKPCODE_MODULAR_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "gkpcode/errors.hpp"
#include "gkpcode/rng.hpp"

namespace gkp {

/// Lattice spacing of the square GKP code.
inline constexpr double kSqrt2Pi = 2.506628274631000502415765284811;

/// Nearest lattice index to z/s. Half-way points go to the index of smaller
/// magnitude, so reduce(+s/2) = +s/2 and reduce(-s/2) = -s/2.
inline double nearest_index(double z, double s) {
  const double x = z / s;
  const double n = std::round(x);  // half away from zero
  if (std::abs(x - n) == 0.5) {
    return n - std::copysign(1.0, n);
  }
  return n;
}

/// Centered remainder z - n* s in [-s/2, s/2].
inline double reduce(double z, double s = kSqrt2Pi) {
  if (!(s > 0.0)) {
    throw DomainError("reduce: modulus must be positive");
  }
  const double r = z - nearest_index(z, s) * s;
  // Rounding in z/s can leave r a few ulps outside the cell.
  return std::clamp(r, -0.5 * s, 0.5 * s);
}

struct ModularOutcome {
  double value = 0.0;
  double modulus = kSqrt2Pi;
};

/// R_s(value + xi_gkp) with xi_gkp ~ N(0, 2 sigma_gkp^2): one finite-energy GKP
/// ancilla for the syndrome plus one for the readout.
inline ModularOutcome modular_measure(double true_value, double sigma_gkp, GaussianStream& rng,
                                      double s = kSqrt2Pi) {
  if (!(sigma_gkp >= 0.0)) {
    throw DomainError("modular_measure: sigma_gkp must be >= 0");
  }
  double v = true_value;
  if (sigma_gkp > 0.0) {
    v += rng.normal(std::numbers::sqrt2 * sigma_gkp);
  }
  return {reduce(v, s), s};
}

inline ModularOutcome modular_measure(double true_value, double sigma_gkp, std::uint64_t seed,
                                      std::uint64_t stream = 0, double s = kSqrt2Pi) {
  GaussianStream rng(seed, stream);
  return modular_measure(true_value, sigma_gkp, rng, s);
}

}  // namespace gkp

#endif  // GKPCODE_MODULAR_HPP
