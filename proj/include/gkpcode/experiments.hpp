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


#ifndef GKPCODE_EXPERIMENTS_HPP
#define GKPCODE_EXPERIMENTS_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gkpcode/analytic.hpp"
#include "gkpcode/codes.hpp"
#include "gkpcode/errors.hpp"
#include "gkpcode/modular.hpp"
#include "gkpcode/monte_carlo.hpp"
#include "gkpcode/noise.hpp"
#include "gkpcode/optimizer.hpp"
#include "gkpcode/rng.hpp"
#include "gkpcode/symplectic.hpp"

/// Noise sweeps over the codes, tabulated as plain numeric tables.
namespace gkp {

inline constexpr const char* kCsvSchema = "gkpcode-csv v1";

struct SigmaGrid {
  double min = 0.02;
  double max = 0.6;
  std::size_t points = 30;
  bool log = false;

  std::vector<double> values() const {
    if (points < 2) {
      throw DomainError("SigmaGrid: points must be >= 2");
    }
    if (!(min > 0.0) || !(max > min)) {
      throw DomainError("SigmaGrid: need 0 < min < max");
    }
    std::vector<double> v(points);
    for (std::size_t i = 0; i < points; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(points - 1);
      v[i] = log ? min * std::pow(max / min, t) : min + (max - min) * t;
    }
    v.back() = max;
    return v;
  }
};

struct Table {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) {
        return i;
      }
    }
    throw DimensionError("Table: no column '" + name + "'");
  }
};

/// 12 significant digits; non-finite values as inf, -inf, nan.
inline std::string format_number(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// A versioned comment line, "# key=value" lines, the header, then rows.
inline void write_csv(std::ostream& out, const Table& t) {
  out << "# " << kCsvSchema << " experiment=" << t.experiment << "\n";
  for (const auto& [k, v] : t.meta) {
    out << "# " << k << "=" << v << "\n";
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << t.columns[i];
  }
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_number(row[i]);
    }
    out << "\n";
  }
}

struct McConfig {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  std::size_t shards = 1;
};

namespace detail {

inline std::vector<std::pair<std::string, std::string>> mc_meta(const McConfig& mc) {
  // Shard count is left out: results do not depend on it.
  return {{"trials", std::to_string(mc.trials)}, {"seed", std::to_string(mc.seed)}};
}

// Each grid point gets its own seed so rows do not share noise.
inline std::uint64_t point_seed(std::uint64_t seed, std::size_t index) {
  return seed * 0x9E3779B97F4A7C15ull + index;
}

}  // namespace detail

/// GKP-repetition logical noise against input noise.
inline Table fig3_table(const SigmaGrid& grid, const McConfig& mc) {
  Table t{"fig3", detail::mc_meta(mc),
          {"sigma", "sigma_q_analytic", "sigma_p_analytic", "sigma_q_mc", "sigma_p_mc", "se_q", "se_p"},
          {}};
  const auto sigmas = grid.values();
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    const double s = sigmas[i];
    const auto a = gkp_rep_stds(s);
    const auto r = run(gkp_repetition(), {s, mc.trials, detail::point_seed(mc.seed, i), mc.shards});
    t.rows.push_back({s, a.sigma_q, a.sigma_p, r.std_q(), r.std_p(), r.se_std_q(), r.se_std_p()});
  }
  return t;
}

/// Optimal two-mode-squeezing gain and logical noise, with the small-sigma
/// asymptotics (nan where they do not apply).
inline Table fig45_table(const SigmaGrid& grid) {
  Table t{"fig45", {}, {"sigma", "g_star", "squeeze_db", "sigma_L_star", "sigma_L_asymptotic", "g_star_asymptotic"}, {}};
  for (double s : grid.values()) {
    const auto o = optimize(s);
    double sl_a = std::numeric_limits<double>::quiet_NaN(), g_a = sl_a;
    if (s < 0.3) {
      const auto a = tms_asymptotic_optimum(s);
      sl_a = a.sigma_L_star;
      g_a = a.g_star;
    }
    t.rows.push_back({s, o.g_star, o.squeeze_db, o.sigma_L_star, sl_a, g_a});
  }
  return t;
}

inline std::vector<double> default_fig8_db() {
  return {11.0, 12.8, 15.0, 20.0, 25.0, 30.0, std::numeric_limits<double>::infinity()};
}

/// Optimal QEC gain with finite-squeezing ancillas; rows grouped by s_gkp.
inline Table fig8_table(const SigmaGrid& grid, const std::vector<double>& s_gkp_db) {
  Table t{"fig8", {}, {"s_gkp_db", "sigma", "qec_gain", "g_star", "squeeze_db"}, {}};
  for (double db : s_gkp_db) {
    const double sg = gkp_sigma_from_db(db);
    for (double s : grid.values()) {
      const auto o = optimize(s, sg);
      t.rows.push_back({db, s, o.qec_gain, o.g_star, o.squeeze_db});
    }
  }
  return t;
}

/// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DimensionError("loglog_slope: need two equally long series of length >= 2");
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

/// Ancilla noise stays inside its sqrt(2 pi) cell when lambda sigma is a small
/// fraction c of the period; see the decisions notes for the choice of c.
inline constexpr double kSqueezedRepetitionC = 0.08;

inline double squeezed_repetition_lambda(double sigma, double c = kSqueezedRepetitionC) {
  return kSqrt2Pi * c / sigma;
}

struct AppendixDConfig {
  std::vector<std::size_t> modes{2, 3};
  double c = kSqueezedRepetitionC;
};

/// Squeezed-repetition scaling: sigma_L = sqrt((sigma_q^2 + sigma_p^2) / 2)
/// by Monte Carlo, with the fitted log-log slope per n repeated on its rows.
inline Table appendix_d_table(const SigmaGrid& grid, const McConfig& mc, const AppendixDConfig& cfg = {}) {
  Table t{"appendix-d", detail::mc_meta(mc), {"n", "sigma", "lambda", "sigma_q_mc", "sigma_p_mc", "sigma_L_mc", "se_L", "slope"}, {}};
  t.meta.emplace_back("c", format_number(cfg.c));
  const auto sigmas = grid.values();
  for (std::size_t n : cfg.modes) {
    std::vector<double> ls;
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
      const double s = sigmas[i];
      const double lam = squeezed_repetition_lambda(s, cfg.c);
      const auto r = run(gkp_squeezed_repetition(n, lam), {s, mc.trials, detail::point_seed(mc.seed, 100 * n + i), mc.shards});
      const double vq = r.q.variance(), vp = r.p.variance();
      const double sl = std::sqrt(0.5 * (vq + vp));
      const double se = std::sqrt(0.25 * (std::pow(r.q.se_variance(), 2) + std::pow(r.p.se_variance(), 2))) / (2 * sl);
      ls.push_back(sl);
      rows.push_back({static_cast<double>(n), s, lam, r.std_q(), r.std_p(), sl, se, 0.0});
    }
    const double slope = loglog_slope(sigmas, ls);
    for (auto& row : rows) {
      row.back() = slope;
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

/// Monte Carlo against the analytic variance of the two-mode-squeezing code
/// at its optimal gain, for every (s_gkp, sigma).
inline Table sweep_table(const SigmaGrid& grid, const std::vector<double>& s_gkp_db, const McConfig& mc) {
  Table t{"sweep", detail::mc_meta(mc), {"s_gkp_db", "sigma", "g_star", "sigma_L_analytic", "sigma_L_mc", "se_L", "z_score"}, {}};
  const auto sigmas = grid.values();
  std::size_t k = 0;
  for (double db : s_gkp_db) {
    const double sg = gkp_sigma_from_db(db);
    for (double s : sigmas) {
      const auto o = optimize(s, sg);
      const auto r = run(gkp_tms(o.g_star, sg), {s, mc.trials, detail::point_seed(mc.seed, k++), mc.shards});
      const double va = o.sigma_L_star * o.sigma_L_star;
      t.rows.push_back({db, s, o.g_star, o.sigma_L_star, r.std_q(), r.se_std_q(), (r.q.variance() - va) / r.q.se_variance()});
    }
  }
  return t;
}

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // largest deviation seen
  double tolerance = 0.0;
};

struct CheckOptions {
  bool inject_nonsymplectic = false;
  int property_trials = 1000;
  std::uint64_t seed = 1;
};

namespace detail {

// Parameter draws for the randomized symplectic check.
class CheckGen {
 public:
  explicit CheckGen(std::uint64_t seed) : rng_(seed, 0xC4EC) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.uniform(); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return lo + std::min<std::size_t>(hi - lo, static_cast<std::size_t>(rng_.uniform() * (hi - lo + 1)));
  }

 private:
  GaussianStream rng_;
};

inline double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace detail

/// Structural identities and normalizations; every entry must pass.
inline std::vector<CheckResult> run_checks(const CheckOptions& opt = {}) {
  std::vector<CheckResult> out;
  detail::CheckGen gen(opt.seed);

  {
    CheckResult c{"symplectic_constructors", true, 0.0, 1e-12};
    for (int t = 0; t < opt.property_trials; ++t) {
      const std::size_t n = gen.index(2, 5);
      const std::size_t j = gen.index(1, n);
      std::size_t k = gen.index(1, n - 1);
      k += k >= j ? 1 : 0;
      const SymplecticTransform gates[] = {
          sum_gate(j, k, n), single_mode_squeeze(gen.uniform(0.1, 10.0), j, n),
          two_mode_squeeze(gen.uniform(1.0, 30.0), j, k, n), beam_splitter(gen.uniform(0.0, 1.0), j, k, n)};
      for (const auto& g : gates) {
        c.worst = std::max(c.worst, symplectic_defect(g.matrix()));
      }
      c.worst = std::max(c.worst, symplectic_defect(compose(gates[0], gates[3]).matrix()));
    }
    if (opt.inject_nonsymplectic) {
      Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(4, 4);
      bad(0, 1) = 0.5;
      bad(1, 1) = 2.0;
      c.worst = std::max(c.worst, symplectic_defect(bad));
    }
    c.pass = c.worst <= c.tolerance;
    out.push_back(c);
  }

  {
    CheckResult c{"tms_beam_splitter_decomposition", true, 0.0, 1e-10};
    for (double g : {1.0, 1.5, 4.806, 20.0}) {
      const double lam = std::sqrt(g) + std::sqrt(g - 1.0);
      const auto bs = beam_splitter(0.5, 1, 2, 2);
      const auto chain = compose(bs, compose(single_mode_squeeze(1.0 / lam, 1, 2),
                                             compose(single_mode_squeeze(lam, 2, 2), inverse(bs))));
      c.worst = std::max(c.worst, detail::max_abs(chain.matrix() - two_mode_squeeze(g, 1, 2, 2).matrix()));
    }
    c.pass = c.worst <= c.tolerance;
    out.push_back(c);
  }

  {
    CheckResult c{"transversal_beam_splitter", true, 0.0, 1e-10};
    for (double g : {1.5, 5.0, 20.0}) {
      for (double eta : {0.1, 0.5, 0.9}) {
        const auto phys = logical_gate(gkp_tms_pair(g), beam_splitter(eta, 1, 2, 2), beam_splitter(eta, 1, 2, 2));
        const auto expected = compose(beam_splitter(eta, 1, 2, 4), beam_splitter(eta, 3, 4, 4));
        c.worst = std::max(c.worst, detail::max_abs(phys.matrix() - expected.matrix()));
      }
    }
    c.pass = c.worst <= c.tolerance;
    out.push_back(c);
  }

  {
    // Passive network then noise vs noise then network, on covariances.
    CheckResult c{"beam_splitter_noise_commutation", true, 0.0, 1e-12};
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = gen.index(2, 5);
      auto s = SymplecticTransform::identity(n);
      for (int d = 0; d < 6; ++d) {
        const std::size_t j = gen.index(1, n);
        std::size_t k = gen.index(1, n - 1);
        k += k >= j ? 1 : 0;
        s = compose(beam_splitter(gen.uniform(0.0, 1.0), j, k, n), s);
      }
      const auto dim = static_cast<Eigen::Index>(2 * n);
      Eigen::MatrixXd l(dim, dim);
      for (Eigen::Index a = 0; a < dim; ++a) {
        for (Eigen::Index b = 0; b < dim; ++b) {
          l(a, b) = gen.uniform(-1.0, 1.0);
        }
      }
      const Eigen::MatrixXd v = l * l.transpose();
      const double s2 = std::pow(gen.uniform(0.0, 1.0), 2);
      const Eigen::MatrixXd& m = s.matrix();
      const Eigen::MatrixXd noise = s2 * Eigen::MatrixXd::Identity(dim, dim);
      const Eigen::MatrixXd after = m * v * m.transpose() + noise;
      const Eigen::MatrixXd before = m * (v + noise) * m.transpose();
      c.worst = std::max(c.worst, detail::max_abs(after - before) / std::max(1.0, detail::max_abs(after)));
    }
    c.pass = c.worst <= c.tolerance;
    out.push_back(c);
  }

  {
    CheckResult c{"squeezed_repetition_three_mode_matrix", true, 0.0, 1e-12};
    const double l = 2.3;
    Eigen::MatrixXd expected(6, 6);
    expected << 1 / (l * l), 0, 0, 0, 0, 0, 0, l * l, 0, -l, 0, 0, 1, 0, l, 0, 0, 0, 0, 0, 0, 1 / l, 0, -l,
        l * l, 0, l * l * l, 0, l, 0, 0, 0, 0, 0, 0, 1 / l;
    c.worst = detail::max_abs(gkp_squeezed_repetition(3, l).encoder.matrix() - expected);
    c.pass = c.worst <= c.tolerance;
    out.push_back(c);
  }

  {
    CheckResult c{"code_encoders_symplectic", true, 0.0, 1e-12};
    for (const auto& code : {gaussian_repetition(5), gkp_repetition(), gkp_tms(4.806), gkp_tms_pair(3.0),
                             gkp_squeezed_repetition(4, 3.0)}) {
      const double scale = std::max(1.0, detail::max_abs(code.encoder.matrix()));
      c.worst = std::max(c.worst, symplectic_defect(code.encoder.matrix()) / (scale * scale));
    }
    c.pass = c.worst <= c.tolerance;
    out.push_back(c);
  }

  {
    CheckResult c{"pdf_normalization", true, 0.0, 1e-6};
    const double inf = std::numeric_limits<double>::infinity();
    for (double s : {0.1, 0.3, 0.5}) {
      const double q = integrate([&](double x) { return gkp_rep_pdfs(x, s).q; }, -inf, inf, 1e-9).value;
      const double p = integrate([&](double x) { return gkp_rep_pdfs(x, s).p; }, -inf, inf, 1e-9).value;
      c.worst = std::max({c.worst, std::abs(q - 1.0), std::abs(p - 1.0)});
      for (double g : {1.0, 4.806, 20.0}) {
        const auto m = tms_mixture(s, g);
        c.worst = std::max(c.worst, std::abs(integrate([&](double x) { return m.pdf(x); }, -inf, inf, 1e-9).value - 1.0));
      }
    }
    c.pass = c.worst <= c.tolerance;
    out.push_back(c);
  }
  return out;
}

}  // namespace gkp

#endif  // GKPCODE_EXPERIMENTS_HPP
