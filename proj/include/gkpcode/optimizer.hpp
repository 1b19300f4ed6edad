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


#ifndef GKPCODE_OPTIMIZER_HPP
#define GKPCODE_OPTIMIZER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "gkpcode/analytic.hpp"
#include "gkpcode/errors.hpp"
#include "gkpcode/golden_section.hpp"
#include "gkpcode/noise.hpp"

namespace gkp {

enum class Objective { Exact, ErfcApprox, NoisyGkp };

/// 20 log10(sqrt(G) + sqrt(G - 1)): single-mode squeezing equivalent of TS(G).
inline double db_from_gain(double gain) {
  if (!(gain >= 1.0)) {
    throw DomainError("db_from_gain: gain must be >= 1");
  }
  return 20.0 * std::log10(std::sqrt(gain) + std::sqrt(gain - 1.0));
}

struct GainOptimum {
  double sigma = 0.0;
  double sigma_gkp = 0.0;
  double g_star = 1.0;
  double lambda_star = 1.0;
  double squeeze_db = 0.0;
  double sigma_L_star = 0.0;
  double qec_gain = 1.0;

  /// Encoding strictly helps (beyond rounding of the objective).
  bool nontrivial() const { return g_star > 1.0 && sigma_L_star < sigma * (1.0 - 1e-12); }
};

/// sigma_L^2 of the GKP two-mode-squeezing code under the chosen model.
inline double objective_variance(Objective obj, double sigma, double sigma_gkp, double gain) {
  switch (obj) {
    case Objective::Exact:
      return tms_variance(sigma, gain);
    case Objective::ErfcApprox:
      return tms_variance_erfc_approx(sigma, gain);
    case Objective::NoisyGkp:
      return tms_variance_noisy_gkp(sigma, sigma_gkp, gain);
  }
  throw DomainError("objective_variance: unknown objective");
}

inline constexpr std::size_t kGainGridPoints = 256;

inline Objective default_objective(double sigma_gkp) {
  return sigma_gkp > 0.0 ? Objective::NoisyGkp : Objective::Exact;
}

/// 256-point log grid on G in [1, max(2, pi / (2 sigma^2))], then golden
/// section around the best grid point to |dG|/G < 1e-6. Without an explicit
/// objective, noisy ancillas select NoisyGkp and ideal ones Exact.
inline GainOptimum optimize(double sigma, double sigma_gkp = 0.0,
                            std::optional<Objective> objective = std::nullopt) {
  const Objective obj = objective.value_or(default_objective(sigma_gkp));
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("optimize: sigma must be positive");
  }
  if (!(sigma_gkp >= 0.0)) {
    throw DomainError("optimize: sigma_gkp must be >= 0");
  }
  auto f = [&](double g) { return objective_variance(obj, sigma, sigma_gkp, g); };
  const double g_max = std::max(2.0, std::numbers::pi / (2.0 * sigma * sigma));
  std::vector<double> grid(kGainGridPoints);
  std::size_t best = 0;
  double best_v = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = std::exp(std::log(g_max) * static_cast<double>(i) / (grid.size() - 1));
    const double v = f(grid[i]);
    if (i == 0 || v < best_v) {
      best = i;
      best_v = v;
    }
  }
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  const auto refined = golden_section_minimize(f, lo, hi, 1e-6);
  double g = grid[best], v = best_v;
  if (refined.fx < v) {
    g = refined.x;
    v = refined.fx;
  }
  // G = 1 leaves the noise untouched; never report worse than that.
  if (!(v < sigma * sigma)) {
    g = 1.0;
    v = sigma * sigma;
  }
  GainOptimum o;
  o.sigma = sigma;
  o.sigma_gkp = sigma_gkp;
  o.g_star = g;
  o.lambda_star = std::sqrt(g) + std::sqrt(g - 1.0);
  o.squeeze_db = db_from_gain(g);
  o.sigma_L_star = std::sqrt(v);
  o.qec_gain = sigma * sigma / v;
  return o;
}

/// Best QEC gain over input noise sigma in [sigma_lo, sigma_hi]: grid scan,
/// then golden section on the neighbouring grid interval.
inline GainOptimum max_qec_gain(double sigma_gkp, double sigma_lo = 0.01, double sigma_hi = 0.7,
                                std::size_t points = 40) {
  const Objective obj = default_objective(sigma_gkp);
  auto neg_gain = [&](double s) { return -optimize(s, sigma_gkp, obj).qec_gain; };
  std::vector<double> grid(points);
  std::size_t best = 0;
  double best_v = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = sigma_lo * std::pow(sigma_hi / sigma_lo, static_cast<double>(i) / (points - 1));
    const double v = neg_gain(grid[i]);
    if (i == 0 || v < best_v) {
      best = i;
      best_v = v;
    }
  }
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, points - 1)];
  const auto refined = golden_section_minimize(neg_gain, lo, hi, 1e-5);
  const double s = refined.fx < best_v ? refined.x : grid[best];
  return optimize(s, sigma_gkp, obj);
}

/// Largest input noise for which encoding still helps. Bisects between the
/// best-gain sigma and sigma = 1 to `tol`. std::nullopt when no sigma gives
/// a QEC gain above one.
inline std::optional<double> threshold_sigma(double sigma_gkp, double tol = 1e-4) {
  const Objective obj = default_objective(sigma_gkp);
  const auto peak = max_qec_gain(sigma_gkp);
  if (!peak.nontrivial()) {
    return std::nullopt;
  }
  double lo = peak.sigma, hi = 1.0;
  if (optimize(hi, sigma_gkp, obj).nontrivial()) {
    throw NumericalError("threshold_sigma: encoding still helps at sigma = 1; no bracket");
  }
  while (hi - lo > 0.25 * tol) {
    const double mid = 0.5 * (lo + hi);
    (optimize(mid, sigma_gkp, obj).nontrivial() ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Critical GKP squeezing: the smallest s_gkp (dB) at which some sigma gets
/// a QEC gain above 1 + gain_margin. Bisection on s_gkp in [lo_db, hi_db].
inline double critical_gkp_squeezing_db(double lo_db = 5.0, double hi_db = 30.0,
                                        double tol_db = 2e-3, double gain_margin = 1e-9) {
  auto helps = [&](double db) { return max_qec_gain(gkp_sigma_from_db(db)).qec_gain > 1.0 + gain_margin; };
  if (helps(lo_db) || !helps(hi_db)) {
    throw NumericalError("critical_gkp_squeezing_db: [" + std::to_string(lo_db) + ", " +
                         std::to_string(hi_db) + "] dB does not bracket the transition");
  }
  while (hi_db - lo_db > tol_db) {
    const double mid = 0.5 * (lo_db + hi_db);
    (helps(mid) ? hi_db : lo_db) = mid;
  }
  return 0.5 * (lo_db + hi_db);
}

}  // namespace gkp

#endif  // GKPCODE_OPTIMIZER_HPP
