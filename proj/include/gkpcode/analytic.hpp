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


#ifndef GKPCODE_ANALYTIC_HPP
#define GKPCODE_ANALYTIC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "gkpcode/errors.hpp"
#include "gkpcode/modular.hpp"
#include "gkpcode/quadrature.hpp"

/// Closed-form logical noise statistics of the two-mode codes.
namespace gkp {

inline double gaussian_pdf(double z, double sigma) {
  if (!(sigma > 0.0)) {
    throw DomainError("gaussian_pdf: sigma must be positive");
  }
  const double u = z / sigma;
  return std::exp(-0.5 * u * u) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

inline double gaussian_cdf(double z, double sigma) {
  if (!(sigma > 0.0)) {
    throw DomainError("gaussian_cdf: sigma must be positive");
  }
  return 0.5 * std::erfc(-z / (sigma * std::numbers::sqrt2));
}

/// P(lo <= X <= hi) for X ~ N(0, sd^2), accurate far into either tail.
inline double gaussian_interval_mass(double lo, double hi, double sd) {
  if (sd == 0.0) {
    return (lo <= 0.0 && 0.0 <= hi) ? 1.0 : 0.0;
  }
  const double k = 1.0 / (sd * std::numbers::sqrt2);
  if (lo >= 0.0) {
    return 0.5 * (std::erfc(lo * k) - std::erfc(hi * k));
  }
  if (hi <= 0.0) {
    return 0.5 * (std::erfc(-hi * k) - std::erfc(-lo * k));
  }
  return 1.0 - 0.5 * (std::erfc(-lo * k) + std::erfc(hi * k));
}

/// Mass of N(0, sd^2) in the lattice cell centred on n * s.
inline double lattice_cell_mass(int n, double sd, double s = kSqrt2Pi) {
  return gaussian_interval_mass((n - 0.5) * s, (n + 0.5) * s, sd);
}

/// Cells beyond this index carry < 1e-18 of a N(0, sd^2) variable (9 sd;
/// a 6 sd cut would still leave ~2e-9 of the mass).
inline int lattice_n_max(double sd, double s = kSqrt2Pi) {
  return std::max(5, static_cast<int>(std::ceil(9.0 * sd / s)));
}

/// sum_n q_n N(mu_n, base_sigma^2), components indexed n = -n_max..n_max.
struct MixturePdf {
  std::vector<double> weights;
  std::vector<double> shifts;
  double base_sigma = 1.0;
  int truncation_n_max = 0;

  double total_weight() const {
    double t = 0.0;
    for (double w : weights) {
      t += w;
    }
    return t;
  }

  double pdf(double x) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i] * gaussian_pdf(x - shifts[i], base_sigma);
    }
    return acc;
  }

  double cdf(double x) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i] * gaussian_cdf(x - shifts[i], base_sigma);
    }
    return acc;
  }

  double mean() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i] * shifts[i];
    }
    return acc;
  }

  double variance() const {
    double acc = base_sigma * base_sigma;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i] * shifts[i] * shifts[i];
    }
    const double m = mean();
    return acc - m * m;
  }
};

namespace detail {

inline void check_tms_args(double sigma, double gain, const char* op) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError(std::string(op) + ": sigma must be positive");
  }
  if (!(gain >= 1.0) || !std::isfinite(gain)) {
    throw DomainError(std::string(op) + ": gain must be >= 1");
  }
}

inline double tms_slope(double gain) {
  return 2.0 * std::sqrt(gain * (gain - 1.0)) / (2.0 * gain - 1.0);
}

}  // namespace detail

/// Logical noise of the GKP two-mode-squeezing code with ideal ancillas.
/// The same mixture describes both quadratures.
inline MixturePdf tms_mixture(double sigma, double gain) {
  detail::check_tms_args(sigma, gain, "tms_mixture");
  const double sd = std::sqrt(2.0 * gain - 1.0) * sigma;
  const double k = detail::tms_slope(gain);
  int n_max = lattice_n_max(sd);
  while (n_max > 0 && lattice_cell_mass(n_max, sd) < 1e-16) {
    --n_max;
  }
  if (k == 0.0) {
    n_max = 0;  // no encoding: every cell maps to zero shift
  }
  MixturePdf m;
  m.base_sigma = sigma / std::sqrt(2.0 * gain - 1.0);
  m.truncation_n_max = n_max;
  for (int n = -n_max; n <= n_max; ++n) {
    m.weights.push_back(n_max == 0 ? 1.0 : lattice_cell_mass(n, sd));
    m.shifts.push_back(k * kSqrt2Pi * n);
  }
  return m;
}

/// sigma^2/(2G-1) + sum_n q_n mu_n^2.
inline double tms_variance(double sigma, double gain) {
  detail::check_tms_args(sigma, gain, "tms_variance");
  const double sd = std::sqrt(2.0 * gain - 1.0) * sigma;
  const double k = detail::tms_slope(gain) * kSqrt2Pi;
  double acc = 0.0;
  const int n_max = lattice_n_max(sd);
  for (int n = n_max; n >= 1; --n) {  // small terms first
    acc += 2.0 * lattice_cell_mass(n, sd) * (k * n) * (k * n);
  }
  return sigma * sigma / (2.0 * gain - 1.0) + acc;
}

/// Keeps only the first lattice shell, whose mass is written with erfc.
inline double tms_variance_erfc_approx(double sigma, double gain) {
  detail::check_tms_args(sigma, gain, "tms_variance_erfc_approx");
  const double d = 2.0 * gain - 1.0;
  const double pi = std::numbers::pi;
  return sigma * sigma / d +
         8.0 * pi * gain * (gain - 1.0) / (d * d) *
             std::erfc(std::sqrt(pi) / (2.0 * std::sqrt(d) * sigma));
}

struct AsymptoticOptimum {
  double g_star = 1.0;
  double sigma_L_star = 0.0;
};

/// Leading-order minimiser of the erfc approximation for small sigma.
inline AsymptoticOptimum tms_asymptotic_optimum(double sigma) {
  if (!(sigma > 0.0 && sigma < 0.3)) {
    throw DomainError("tms_asymptotic_optimum: requires 0 < sigma < 0.3");
  }
  const double pi = std::numbers::pi;
  const double s2 = sigma * sigma;
  const double log_term = std::log(std::pow(pi, 1.5) / (2.0 * s2 * s2));
  return {pi / (8.0 * s2) / log_term + 0.5, 2.0 * s2 / std::sqrt(pi) * std::sqrt(log_term)};
}

/// Var of the TMS logical noise when each modular readout carries extra
/// N(0, 2 sigma_gkp^2) noise and the decoder uses the MMSE weight.
///
/// With w = z_q^(2) + readout noise, the output splits into a part
/// independent of w plus (my w - a s n(w)), so only a 1-D integral per
/// lattice cell of w remains.
inline double tms_variance_noisy_gkp(double sigma, double sigma_gkp, double gain) {
  detail::check_tms_args(sigma, gain, "tms_variance_noisy_gkp");
  if (!(sigma_gkp >= 0.0)) {
    throw DomainError("tms_variance_noisy_gkp: sigma_gkp must be >= 0");
  }
  if (sigma_gkp == 0.0) {
    return tms_variance(sigma, gain);
  }
  const double d = 2.0 * gain - 1.0;
  const double root = 2.0 * std::sqrt(gain * (gain - 1.0));
  const double a_var = d * sigma * sigma;        // Var z_q^(2)
  const double x_var = 2.0 * sigma_gkp * sigma_gkp;  // readout noise
  const double w_var = a_var + x_var;
  const double a = root * sigma * sigma / w_var;            // MMSE weight
  const double b = root * x_var / (d * w_var);              // residual correlation
  const double my = (a * x_var - b * a_var) / w_var;        // E[. | w] slope
  const double vy = (a + b) * (a + b) * a_var * x_var / w_var;  // Var[. | w]
  const double w_sd = std::sqrt(w_var);
  const double s = kSqrt2Pi;

  double cells = 0.0;
  const int n_max = lattice_n_max(w_sd);
  for (int n = n_max; n >= -n_max; --n) {
    if (lattice_cell_mass(n, w_sd) < 1e-16) {
      continue;
    }
    const double shift = a * s * n;
    auto f = [&](double w) {
      const double y = my * w - shift;
      return y * y * gaussian_pdf(w, w_sd);
    };
    cells += integrate(f, (n - 0.5) * s, (n + 0.5) * s).value;
  }
  return sigma * sigma / d + vy + cells;
}

/// Standard deviations of the GKP-repetition logical noise.
struct QuadratureStds {
  double sigma_q = 0.0;
  double sigma_p = 0.0;
};

/// Q(xi_q) and P(xi_p) densities of the GKP-repetition code.
struct GkpRepDensity {
  double q = 0.0;
  double p = 0.0;
};

/// Q(x) = sum_n int_{-s/2}^{s/2} phi(x - r/2) phi(x + r/2 + s n) dr,
/// P(x) = sum_n w_n phi(x - s n), w_n the cell mass of N(0, sigma^2).
inline GkpRepDensity gkp_rep_pdfs(double xi, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("gkp_rep_pdfs: sigma must be positive");
  }
  const double s = kSqrt2Pi;
  GkpRepDensity out;
  const int nq = lattice_n_max(std::numbers::sqrt2 * sigma);
  for (int n = -nq; n <= nq; ++n) {
    auto f = [&](double r) {
      return gaussian_pdf(xi - 0.5 * r, sigma) * gaussian_pdf(xi + 0.5 * r + s * n, sigma);
    };
    out.q += integrate(f, -0.5 * s, 0.5 * s, 1e-10, 1e-300).value;
  }
  const int np = lattice_n_max(sigma);
  for (int n = -np; n <= np; ++n) {
    out.p += lattice_cell_mass(n, sigma) * gaussian_pdf(xi - s * n, sigma);
  }
  return out;
}

/// Second moments of Q and P in closed form:
/// Var q = sigma^2/2 + (s^2/4) sum n^2 P(n*(d) = n), d ~ N(0, 2 sigma^2);
/// Var p = sigma^2 + s^2 sum n^2 w_n.
inline QuadratureStds gkp_rep_stds(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("gkp_rep_stds: sigma must be positive");
  }
  const double s = kSqrt2Pi;
  const double dsd = std::numbers::sqrt2 * sigma;
  double vq = 0.0;
  for (int n = lattice_n_max(dsd); n >= 1; --n) {
    vq += 2.0 * n * n * lattice_cell_mass(n, dsd);
  }
  double vp = 0.0;
  for (int n = lattice_n_max(sigma); n >= 1; --n) {
    vp += 2.0 * n * n * lattice_cell_mass(n, sigma);
  }
  return {std::sqrt(0.5 * sigma * sigma + 0.25 * s * s * vq),
          std::sqrt(sigma * sigma + s * s * vp)};
}

}  // namespace gkp

#endif  // GKPCODE_ANALYTIC_HPP
