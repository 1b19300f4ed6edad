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


#include <cmath>

#include <gtest/gtest.h>

#include "gkpcode/analytic.hpp"
#include "gkpcode/codes.hpp"
#include "gkpcode/monte_carlo.hpp"

namespace gkp {
namespace {

TEST(MonteCarlo, ZeroNoiseGivesZeroLogicalNoise) {
  for (const auto& code : {gkp_repetition(), gkp_tms(3.0), gaussian_repetition(3),
                           gkp_squeezed_repetition(3, 4.0)}) {
    const auto r = run(code, {0.0, 10000, 1, 1});
    EXPECT_EQ(r.std_q(), 0.0);
    EXPECT_EQ(r.std_p(), 0.0);
    EXPECT_EQ(r.hist_q.total(), 10000u);
  }
}

TEST(MonteCarlo, GkpTmsOptimum) {
  const auto r = run(gkp_tms(4.806), {0.1, 10'000'000, 2, 1});
  EXPECT_NEAR(r.std_q(), 0.036, 0.001);
  EXPECT_NEAR(r.std_p(), 0.036, 0.001);
  EXPECT_EQ(r.hist_q.total(), 10'000'000u);
  EXPECT_EQ(r.hist_q.bins(), 201u);
}

TEST(MonteCarlo, GaussianRepetitionSqueezes) {
  const double sigma = 0.2;
  const auto r = run(gaussian_repetition(3), {sigma, 1'000'000, 3, 1});
  EXPECT_NEAR(r.std_q() / (sigma / std::sqrt(3.0)), 1.0, 0.01);
  EXPECT_NEAR(r.std_p() / (sigma * std::sqrt(3.0)), 1.0, 0.01);
}

TEST(MonteCarlo, ShardCountDoesNotChangeResults) {
  const auto code = gkp_tms(2.5).with_sigma_gkp(0.05);
  const RunConfig base{0.15, 300'001, 42, 1};
  const auto ref = run(code, base);
  for (std::size_t shards : {4u, 16u}) {
    RunConfig cfg = base;
    cfg.shards = shards;
    const auto r = run(code, cfg);
    EXPECT_EQ(r.q.mean(), ref.q.mean());
    EXPECT_EQ(r.q.variance(), ref.q.variance());
    EXPECT_EQ(r.p.central4(), ref.p.central4());
    EXPECT_EQ(r.hist_q.counts(), ref.hist_q.counts());
    EXPECT_EQ(r.hist_p.counts(), ref.hist_p.counts());
  }
}

TEST(MonteCarlo, SeedDeterminism) {
  const auto a = run(gkp_repetition(), {0.3, 50'000, 9, 2});
  const auto b = run(gkp_repetition(), {0.3, 50'000, 9, 3});
  const auto c = run(gkp_repetition(), {0.3, 50'000, 10, 2});
  EXPECT_EQ(a.q.variance(), b.q.variance());
  EXPECT_NE(a.q.variance(), c.q.variance());
}

TEST(MonteCarlo, StandardErrorScalesAsInverseRootN) {
  const auto small = run(gkp_tms(3.0), {0.1, 10'000, 5, 1});
  const auto large = run(gkp_tms(3.0), {0.1, 1'000'000, 5, 1});
  EXPECT_NEAR(small.se_std_q() / large.se_std_q(), 10.0, 1.5);
  EXPECT_NEAR(small.se_std_p() / large.se_std_p(), 10.0, 1.5);
}

TEST(MonteCarlo, RejectsMismatchAndEmptyRuns) {
  RunConfig cfg{0.1, 1000, 1, 1, DecoderKind::GkpTms};
  EXPECT_THROW(run(gkp_repetition(), cfg), MismatchError);
  EXPECT_THROW(run(gkp_tms_pair(2.0), RunConfig{}), MismatchError);
  EXPECT_THROW(run(gkp_tms(2.0), {0.1, 0, 1, 1}), DomainError);
}

TEST(Compare, MixtureAcceptsMonteCarlo) {
  const double sigma = 0.1, g = 4.806;
  const auto r = run(gkp_tms(g), {sigma, 1'000'000, 6, 1});
  const auto c = compare(r, tms_mixture(sigma, g));
  EXPECT_NEAR(c.ks_critical * 1000, 1.6276, 1e-3);
  EXPECT_LT(c.q.ks, c.ks_critical);
  EXPECT_LT(c.p.ks, c.ks_critical);
  EXPECT_TRUE(c.pass);
}

TEST(Compare, NullCodePassesAgainstGaussian) {
  const double sigma = 0.2;
  const auto r = run(gkp_tms(1.0), {sigma, 200'000, 7, 1});
  EXPECT_TRUE(compare(r, gaussian_distribution(sigma)).pass);
}

TEST(Compare, WrongSigmaFails) {
  const double sigma = 0.2;
  const auto r = run(gkp_tms(1.0), {sigma, 200'000, 8, 1});
  const auto c = compare(r, gaussian_distribution(1.05 * sigma));
  EXPECT_FALSE(c.pass);
  EXPECT_GT(std::abs(c.q.z_variance), 4.0);
}

TEST(Compare, EmptyReportThrows) {
  EXPECT_THROW(compare(TrialReport{}, gaussian_distribution(1.0)), DomainError);
}

}  // namespace
}  // namespace gkp
