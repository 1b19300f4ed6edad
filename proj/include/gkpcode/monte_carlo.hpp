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


#ifndef GKPCODE_MONTE_CARLO_HPP
#define GKPCODE_MONTE_CARLO_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "gkpcode/analytic.hpp"
#include "gkpcode/codes.hpp"
#include "gkpcode/decoders.hpp"
#include "gkpcode/errors.hpp"
#include "gkpcode/noise.hpp"
#include "gkpcode/rng.hpp"
#include "gkpcode/statistics.hpp"

/// Trial engine: sample xi, reshape with the inverse encoder, decode, accumulate.
///
/// Trials are grouped in fixed blocks of kBlockSize; block b draws all of its
/// randomness from GaussianStream(seed, b). Shard s of S processes blocks
/// s, s + S, ... Per-block moment accumulators are merged in block order and
/// histograms are integer sums, so a report depends on (seed, n_trials) only,
/// never on the shard count.
namespace gkp {

enum class DecoderKind { Auto, GaussianRepetition, GkpRepetition, GkpTms, GkpSqueezedRepetition };

inline const char* to_string(DecoderKind k) {
  switch (k) {
    case DecoderKind::Auto:
      return "auto";
    case DecoderKind::GaussianRepetition:
      return "gaussian-repetition";
    case DecoderKind::GkpRepetition:
      return "gkp-repetition";
    case DecoderKind::GkpTms:
      return "gkp-tms";
    case DecoderKind::GkpSqueezedRepetition:
      return "gkp-squeezed-repetition";
  }
  return "unknown";
}

inline constexpr std::size_t kBlockSize = 4096;
inline constexpr std::size_t kHistogramBins = 201;

struct RunConfig {
  double sigma = 0.1;
  std::uint64_t n_trials = 100000;
  std::uint64_t seed = 1;
  std::size_t shards = 1;
  DecoderKind decoder = DecoderKind::Auto;
};

struct TrialReport {
  std::uint64_t n_trials = 0;
  std::uint64_t seed = 0;
  double sigma = 0.0;
  RunningMoments q;
  RunningMoments p;
  Histogram hist_q;
  Histogram hist_p;

  double mean_q() const { return q.mean(); }
  double mean_p() const { return p.mean(); }
  double std_q() const { return q.stddev(); }
  double std_p() const { return p.stddev(); }
  double se_std_q() const { return q.se_stddev(); }
  double se_std_p() const { return p.se_stddev(); }
};

namespace detail {

inline DecoderKind natural_decoder(CodeFamily f) {
  switch (f) {
    case CodeFamily::GaussianRepetition:
      return DecoderKind::GaussianRepetition;
    case CodeFamily::GkpRepetition:
      return DecoderKind::GkpRepetition;
    case CodeFamily::GkpTwoModeSqueezing:
      return DecoderKind::GkpTms;
    case CodeFamily::GkpSqueezedRepetition:
      return DecoderKind::GkpSqueezedRepetition;
  }
  return DecoderKind::Auto;
}

struct BlockMoments {
  RunningMoments q;
  RunningMoments p;
};

// Runs one block; `sink(outcome)` sees every trial.
template <class Decode, class Sink>
void run_block(const CodeSpec& code, const Eigen::MatrixXd& inv, double sigma, std::uint64_t seed,
               std::uint64_t block, std::uint64_t count, const Decode& decode, Sink&& sink) {
  GaussianStream rng(seed, block);
  const IidNoiseModel model(sigma, code.n_modes);
  NoiseVector xi, z;
  for (std::uint64_t t = 0; t < count; ++t) {
    sample_iid_into(model, rng, xi);
    z.noalias() = inv * xi;
    sink(decode(z, rng));
  }
}

template <class Decode>
TrialReport run_with(const CodeSpec& code, const RunConfig& cfg, const Decode& decode) {
  const Eigen::MatrixXd inv = inverse(code.encoder).matrix();
  const std::uint64_t n_blocks = (cfg.n_trials + kBlockSize - 1) / kBlockSize;
  auto block_count = [&](std::uint64_t b) {
    return std::min<std::uint64_t>(kBlockSize, cfg.n_trials - b * kBlockSize);
  };

  // Histogram range from a pilot pass over block 0.
  RunningMoments pilot;
  run_block(code, inv, cfg.sigma, cfg.seed, 0, block_count(0), decode, [&](const DecodeOutcome& o) {
    pilot.push(o.xi_q);
    pilot.push(o.xi_p);
  });
  double half = 6.0 * std::max(cfg.sigma, std::sqrt(pilot.central2() + pilot.mean() * pilot.mean()));
  if (!(half > 0.0)) {
    half = 1.0;
  }

  const std::size_t shards = std::max<std::size_t>(1, std::min<std::uint64_t>(cfg.shards, n_blocks));
  std::vector<BlockMoments> blocks(n_blocks);
  std::vector<Histogram> hq(shards, Histogram(-half, half, kHistogramBins));
  std::vector<Histogram> hp(shards, Histogram(-half, half, kHistogramBins));
  auto work = [&](std::size_t s) {
    for (std::uint64_t b = s; b < n_blocks; b += shards) {
      auto& m = blocks[b];
      run_block(code, inv, cfg.sigma, cfg.seed, b, block_count(b), decode, [&](const DecodeOutcome& o) {
        m.q.push(o.xi_q);
        m.p.push(o.xi_p);
        hq[s].add(o.xi_q);
        hp[s].add(o.xi_p);
      });
    }
  };
  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(shards);
    for (std::size_t s = 0; s < shards; ++s) {
      pool.emplace_back(work, s);
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  TrialReport r;
  r.n_trials = cfg.n_trials;
  r.seed = cfg.seed;
  r.sigma = cfg.sigma;
  for (const auto& m : blocks) {
    r.q.merge(m.q);
    r.p.merge(m.p);
  }
  r.hist_q = hq[0];
  r.hist_p = hp[0];
  for (std::size_t s = 1; s < shards; ++s) {
    r.hist_q.merge(hq[s]);
    r.hist_p.merge(hp[s]);
  }
  return r;
}

}  // namespace detail

/// Monte Carlo estimate of the logical noise on data mode 1.
inline TrialReport run(const CodeSpec& code, const RunConfig& cfg) {
  code.validate();
  if (cfg.n_trials == 0) {
    throw DomainError("run: n_trials must be >= 1");
  }
  if (!(cfg.sigma >= 0.0) || !std::isfinite(cfg.sigma)) {
    throw DomainError("run: sigma must be finite and >= 0");
  }
  const DecoderKind natural = detail::natural_decoder(code.family);
  const DecoderKind kind = cfg.decoder == DecoderKind::Auto ? natural : cfg.decoder;
  if (kind != natural || code.data_modes != 1) {
    throw MismatchError(std::string("run: decoder ") + to_string(kind) + " cannot decode " +
                        to_string(code.family) + " with " + std::to_string(code.data_modes) +
                        " data mode(s)");
  }
  const double sg = code.ancilla_sigma_gkp.empty() ? 0.0 : code.ancilla_sigma_gkp[0];
  switch (kind) {
    case DecoderKind::GaussianRepetition: {
      const std::size_t n = code.n_modes;
      return detail::run_with(code, cfg, [n](const NoiseVector& z, GaussianStream&) {
        return decode_gaussian_repetition(z, n);
      });
    }
    case DecoderKind::GkpRepetition:
      return detail::run_with(code, cfg, [sg](const NoiseVector& z, GaussianStream& rng) {
        return decode_gkp_repetition(z, sg, rng);
      });
    case DecoderKind::GkpTms: {
      const auto c = mmse_coefficients(code.gain, cfg.sigma, sg);
      return detail::run_with(code, cfg, [c, sg](const NoiseVector& z, GaussianStream& rng) {
        return decode_gkp_tms(z, c, sg, rng);
      });
    }
    case DecoderKind::GkpSqueezedRepetition: {
      const SqueezedRepetitionDecoder dec(code.n_modes, code.lambda, sg);
      return detail::run_with(code, cfg, [&dec](const NoiseVector& z, GaussianStream& rng) {
        return dec.decode(z, rng);
      });
    }
    case DecoderKind::Auto:
      break;
  }
  throw MismatchError("run: no decoder selected");
}

/// Reference distribution for one quadrature.
struct AnalyticDistribution {
  std::function<double(double)> cdf;
  double mean = 0.0;
  double variance = 0.0;
};

inline AnalyticDistribution as_distribution(const MixturePdf& m) {
  return {[m](double x) { return m.cdf(x); }, m.mean(), m.variance()};
}

inline AnalyticDistribution gaussian_distribution(double sigma) {
  return {[sigma](double x) { return gaussian_cdf(x, sigma); }, 0.0, sigma * sigma};
}

struct CompareThresholds {
  double ks_alpha = 0.01;
  double max_abs_z = 4.0;
};

struct QuadratureComparison {
  double ks = 0.0;          // binned statistic
  double z_mean = 0.0;      // (sample mean - mean) / se
  double z_variance = 0.0;  // (sample var - var) / se
};

struct ComparisonReport {
  QuadratureComparison q;
  QuadratureComparison p;
  double ks_critical = 0.0;
  bool pass = false;
};

namespace detail {

inline QuadratureComparison compare_one(const RunningMoments& m, const Histogram& h,
                                        const AnalyticDistribution& d) {
  QuadratureComparison c;
  c.ks = ks_statistic_binned(h, d.cdf);
  const double se_mean = std::sqrt(d.variance / static_cast<double>(m.count()));
  c.z_mean = se_mean > 0.0 ? (m.mean() - d.mean) / se_mean : (m.mean() == d.mean ? 0.0 : INFINITY);
  const double se_var = m.se_variance();
  const double diff = m.variance() - d.variance;
  c.z_variance = se_var > 0.0 ? diff / se_var : (std::abs(diff) < 1e-300 ? 0.0 : INFINITY);
  return c;
}

}  // namespace detail

/// KS statistic at the histogram edges plus moment z-scores, per quadrature.
inline ComparisonReport compare(const TrialReport& r, const AnalyticDistribution& dq,
                                const AnalyticDistribution& dp, const CompareThresholds& th = {}) {
  if (r.n_trials == 0 || r.q.count() == 0) {
    throw DomainError("compare: empty report");
  }
  ComparisonReport c;
  c.q = detail::compare_one(r.q, r.hist_q, dq);
  c.p = detail::compare_one(r.p, r.hist_p, dp);
  c.ks_critical = ks_critical_value(r.n_trials, th.ks_alpha);
  auto ok = [&](const QuadratureComparison& x) {
    return x.ks < c.ks_critical && std::abs(x.z_mean) < th.max_abs_z &&
           std::abs(x.z_variance) < th.max_abs_z;
  };
  c.pass = ok(c.q) && ok(c.p);
  return c;
}

inline ComparisonReport compare(const TrialReport& r, const AnalyticDistribution& d,
                                const CompareThresholds& th = {}) {
  return compare(r, d, d, th);
}

inline ComparisonReport compare(const TrialReport& r, const MixturePdf& m,
                                const CompareThresholds& th = {}) {
  return compare(r, as_distribution(m), th);
}

}  // namespace gkp

#endif  // GKPCODE_MONTE_CARLO_HPP
