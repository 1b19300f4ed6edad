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


#ifndef GKPCODE_STATISTICS_HPP
#define GKPCODE_STATISTICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "gkpcode/errors.hpp"

namespace gkp {

/// Single-pass central moments up to fourth order.
///
/// merge() uses the pairwise update of Chan et al. / Pebay, so partial
/// accumulators can be combined; merging in a fixed order gives the same
/// bits regardless of how the partials were produced.
class RunningMoments {
 public:
  void push(double x) {
    const double n1 = static_cast<double>(n_);
    ++n_;
    const double n = static_cast<double>(n_);
    const double delta = x - mean_;
    const double dn = delta / n;
    const double dn2 = dn * dn;
    const double term1 = delta * dn * n1;
    mean_ += dn;
    m4_ += term1 * dn2 * (n * n - 3 * n + 3) + 6 * dn2 * m2_ - 4 * dn * m3_;
    m3_ += term1 * dn * (n - 2) - 3 * dn * m2_;
    m2_ += term1;
  }

  void merge(const RunningMoments& b) {
    if (b.n_ == 0) {
      return;
    }
    if (n_ == 0) {
      *this = b;
      return;
    }
    const double na = static_cast<double>(n_), nb = static_cast<double>(b.n_);
    const double n = na + nb;
    const double delta = b.mean_ - mean_;
    const double d2 = delta * delta, d3 = d2 * delta, d4 = d2 * d2;
    const double m2 = m2_ + b.m2_ + d2 * na * nb / n;
    const double m3 = m3_ + b.m3_ + d3 * na * nb * (na - nb) / (n * n) +
                      3.0 * delta * (na * b.m2_ - nb * m2_) / n;
    const double m4 = m4_ + b.m4_ + d4 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                      6.0 * d2 * (na * na * b.m2_ + nb * nb * m2_) / (n * n) +
                      4.0 * delta * (na * b.m3_ - nb * m3_) / n;
    mean_ += delta * nb / n;
    m2_ = m2;
    m3_ = m3;
    m4_ = m4;
    n_ += b.n_;
  }

  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  /// Population (1/n) central moments.
  double central2() const { return n_ ? m2_ / static_cast<double>(n_) : 0.0; }
  double central3() const { return n_ ? m3_ / static_cast<double>(n_) : 0.0; }
  double central4() const { return n_ ? m4_ / static_cast<double>(n_) : 0.0; }
  /// Unbiased sample variance.
  double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  double stddev() const { return std::sqrt(variance()); }

  double se_mean() const { return n_ ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0; }
  /// Large-sample standard error of the variance, sqrt((mu4 - mu2^2) / n).
  double se_variance() const {
    if (n_ < 2) {
      return 0.0;
    }
    const double m2 = central2();
    return std::sqrt(std::max(0.0, central4() - m2 * m2) / static_cast<double>(n_));
  }
  /// Delta method: se(s) = se(s^2) / (2 s).
  double se_stddev() const {
    const double s = stddev();
    return s > 0.0 ? se_variance() / (2.0 * s) : 0.0;
  }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double m3_ = 0.0;
  double m4_ = 0.0;
};

/// Uniform bins on [lo, hi] plus underflow and overflow counters.
class Histogram {
 public:
  Histogram() = default;
  Histogram(double lo, double hi, std::size_t bins) : lo_(lo), hi_(hi), counts_(bins, 0) {
    if (bins == 0 || !(hi > lo)) {
      throw DomainError("Histogram: need bins > 0 and hi > lo");
    }
  }

  void add(double x) {
    if (x < lo_) {
      ++underflow_;
    } else if (x >= hi_) {
      ++overflow_;
    } else {
      auto i = static_cast<std::size_t>((x - lo_) / (hi_ - lo_) * static_cast<double>(counts_.size()));
      counts_[std::min(i, counts_.size() - 1)] += 1;
    }
  }

  void merge(const Histogram& o) {
    if (o.counts_.size() != counts_.size() || o.lo_ != lo_ || o.hi_ != hi_) {
      throw DimensionError("Histogram: merging incompatible histograms");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      counts_[i] += o.counts_[i];
    }
    underflow_ += o.underflow_;
    overflow_ += o.overflow_;
  }

  std::size_t bins() const { return counts_.size(); }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double edge(std::size_t i) const {
    return lo_ + (hi_ - lo_) * static_cast<double>(i) / static_cast<double>(counts_.size());
  }
  std::vector<double> edges() const {
    std::vector<double> e(counts_.size() + 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = edge(i);
    }
    return e;
  }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t underflow() const { return underflow_; }
  std::uint64_t overflow() const { return overflow_; }
  std::uint64_t total() const {
    std::uint64_t t = underflow_ + overflow_;
    for (auto c : counts_) {
      t += c;
    }
    return t;
  }

 private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  std::vector<std::uint64_t> counts_;
  std::uint64_t underflow_ = 0;
  std::uint64_t overflow_ = 0;
};

/// sup |F_emp - F| over the histogram edges. A lower bound on the exact
/// statistic that converges to it as the bins shrink.
inline double ks_statistic_binned(const Histogram& h, const std::function<double(double)>& cdf) {
  const double n = static_cast<double>(h.total());
  if (n == 0) {
    throw DomainError("ks_statistic_binned: empty histogram");
  }
  double cum = static_cast<double>(h.underflow());
  double d = std::abs(cum / n - cdf(h.edge(0)));
  for (std::size_t i = 0; i < h.bins(); ++i) {
    cum += static_cast<double>(h.counts()[i]);
    d = std::max(d, std::abs(cum / n - cdf(h.edge(i + 1))));
  }
  return d;
}

/// Exact one-sample statistic; sorts a copy of the samples.
inline double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) {
    throw DomainError("ks_statistic: no samples");
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

/// Asymptotic critical value sqrt(-ln(alpha/2)/2) / sqrt(n).
inline double ks_critical_value(std::uint64_t n, double alpha = 0.01) {
  if (n == 0 || !(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("ks_critical_value: need n > 0 and alpha in (0, 1)");
  }
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

}  // namespace gkp

#endif  // GKPCODE_STATISTICS_HPP
