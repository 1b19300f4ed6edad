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
#include <cstdint>

#include <gtest/gtest.h>

#include "gkpcode/noise.hpp"
#include "gkpcode/symplectic.hpp"
#include "test_util.hpp"

namespace gkp {
namespace {

using testing::Gen;
using testing::kPropertyTrials;
using testing::max_abs_diff;

TEST(SampleIid, ZeroSigmaGivesZeros) {
  for (const auto& v : sample_iid(IidNoiseModel(0.0, 3), 7, 100)) {
    EXPECT_EQ(v, Eigen::VectorXd::Zero(6));
  }
}

TEST(SampleIid, VarianceWithinThreeStandardErrors) {
  const double sigma = 0.1;
  const std::size_t n = 1'000'000;
  const auto xs = sample_iid(IidNoiseModel(sigma, 1), 12345, n);
  for (int c = 0; c < 2; ++c) {
    double s2 = 0.0;
    for (const auto& v : xs) {
      s2 += v[c] * v[c];
    }
    const double var = s2 / static_cast<double>(n);
    const double se = sigma * sigma * std::sqrt(2.0 / static_cast<double>(n));
    EXPECT_NEAR(var, sigma * sigma, 3.0 * se) << "coordinate " << c;
  }
}

TEST(SampleIid, DeterministicPerSeedAndShard) {
  const IidNoiseModel model(0.3, 2);
  const auto a = sample_iid(model, 99, 50, 3);
  const auto b = sample_iid(model, 99, 50, 3);
  const auto c = sample_iid(model, 99, 50, 4);
  const auto d = sample_iid(model, 100, 50, 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
  }
  EXPECT_NE(a[0], c[0]);
  EXPECT_NE(a[0], d[0]);
}

TEST(SampleIid, DistinctShardsUncorrelated) {
  const std::size_t n = 200'000;
  const auto a = sample_iid(IidNoiseModel(1.0, 1), 5, n, 0);
  const auto b = sample_iid(IidNoiseModel(1.0, 1), 5, n, 1);
  double cross = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cross += a[i][0] * b[i][0];
  }
  EXPECT_LT(std::abs(cross / static_cast<double>(n)), 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST(SampleIid, RejectsEmptyRequest) {
  EXPECT_THROW(sample_iid(IidNoiseModel(0.1, 1), 1, 0), DomainError);
  EXPECT_THROW(IidNoiseModel(-0.1, 1), DomainError);
}

TEST(ReshapeNoise, TwoModeSqueezeColumn) {
  const double g = 3.0;
  const auto z = reshape_noise(two_mode_squeeze(g, 1, 2, 2), Eigen::Vector4d(1, 0, 0, 0));
  EXPECT_LT((z - Eigen::Vector4d(std::sqrt(g), 0, -std::sqrt(g - 1), 0)).cwiseAbs().maxCoeff(),
            1e-15);
}

TEST(ReshapeNoise, IdentityAndSumGate) {
  const Eigen::Vector4d xi(0.3, -0.2, 0.7, 0.11);
  EXPECT_EQ(reshape_noise(SymplecticTransform::identity(2), xi), xi);
  const auto z = reshape_noise(sum_gate(1, 2, 2), xi);
  EXPECT_DOUBLE_EQ(z[0], xi[0]);
  EXPECT_DOUBLE_EQ(z[1], xi[1] + xi[3]);
  EXPECT_DOUBLE_EQ(z[2], xi[2] - xi[0]);
  EXPECT_DOUBLE_EQ(z[3], xi[3]);
  EXPECT_THROW(reshape_noise(sum_gate(1, 2, 2), Eigen::VectorXd::Zero(6)), DimensionError);
}

TEST(PropagateCovariance, TwoModeSqueezeBlocks) {
  const double g = 4.806, s2 = 0.01;
  const auto v = propagate_covariance(two_mode_squeeze(g, 1, 2, 2), NoiseCovariance::isotropic(0.1, 2));
  const double d = (2 * g - 1) * s2, o = 2 * std::sqrt(g * (g - 1)) * s2;
  Eigen::Matrix4d expected;
  expected << d, 0, -o, 0,
              0, d, 0, o,
              -o, 0, d, 0,
              0, o, 0, d;
  EXPECT_LT(max_abs_diff(v.matrix(), expected), 1e-15);
}

TEST(PropagateCovariance, BeamSplitterAndZero) {
  const auto iso = NoiseCovariance::isotropic(0.2, 2);
  EXPECT_LT(max_abs_diff(propagate_covariance(beam_splitter(0.37, 1, 2, 2), iso).matrix(),
                         iso.matrix()),
            1e-15);
  const NoiseCovariance zero(Eigen::MatrixXd::Zero(4, 4));
  EXPECT_EQ(propagate_covariance(two_mode_squeeze(5, 1, 2, 2), zero).matrix(),
            Eigen::MatrixXd::Zero(4, 4));
  EXPECT_THROW(propagate_covariance(sum_gate(1, 2, 3), iso), DimensionError);
}

TEST(NoiseCovariance, RejectsAsymmetricAndIndefinite) {
  Eigen::Matrix2d a;
  a << 1, 0.5, 0, 1;
  EXPECT_THROW(NoiseCovariance{a}, DomainError);
  Eigen::Matrix2d b;
  b << 1, 2, 2, 1;
  EXPECT_THROW(NoiseCovariance{b}, DomainError);
}

TEST(NoiseProperty, PropagationPreservesSymmetryAndPsd) {
  Gen gen(11);
  for (int t = 0; t < kPropertyTrials; ++t) {
    const std::size_t n = gen.index(2, 4);
    const auto size = static_cast<Eigen::Index>(2 * n);
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
      l.row(i).head(i + 1) = gen.vector(i + 1).transpose();
    }
    const NoiseCovariance v(l * l.transpose());
    const auto out = propagate_covariance(compose(gen.gate(n), gen.gate(n)), v);
    const Eigen::MatrixXd& m = out.matrix();
    ASSERT_LT(max_abs_diff(m, m.transpose()), 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    ASSERT_GE(eig.eigenvalues().minCoeff(), -1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff()));
  }
}

// Beam splitters commute with iid Gaussian noise at the level of covariances.
TEST(NoiseProperty, PassiveNetworksPreserveIsotropicNoise) {
  Gen gen(12);
  for (int t = 0; t < kPropertyTrials; ++t) {
    const std::size_t n = gen.index(2, 5);
    auto s = SymplecticTransform::identity(n);
    for (int d = 0; d < 5; ++d) {
      const auto [j, k] = gen.mode_pair(n);
      s = compose(beam_splitter(gen.uniform(0, 1), j, k, n), s);
    }
    const double sigma = gen.uniform(0.0, 1.0);
    const auto iso = NoiseCovariance::isotropic(sigma, n);
    ASSERT_LT(max_abs_diff(propagate_covariance(s, iso).matrix(), iso.matrix()), 1e-12);
  }
}

TEST(NoiseProperty, SampleCovarianceConvergesToPropagated) {
  const std::size_t count = 200'000;
  const double sigma = 0.2;
  const auto enc = compose(two_mode_squeeze(2.5, 1, 2, 2), sum_gate(2, 1, 2));
  const auto predicted = propagate_covariance(enc, NoiseCovariance::isotropic(sigma, 2)).matrix();
  const auto inv = inverse(enc);
  Eigen::Matrix4d acc = Eigen::Matrix4d::Zero();
  for (const auto& xi : sample_iid(IidNoiseModel(sigma, 2), 77, count)) {
    const Eigen::Vector4d z = apply(inv, xi);
    acc += z * z.transpose();
  }
  acc /= static_cast<double>(count);
  const double tol = 4.0 / std::sqrt(static_cast<double>(count)) * predicted.cwiseAbs().maxCoeff();
  EXPECT_LT(max_abs_diff(acc, predicted), tol);
}

TEST(LossToSigma, SquareRoot) {
  EXPECT_DOUBLE_EQ(loss_to_sigma(0.01), 0.1);
  EXPECT_EQ(loss_to_sigma(0.0), 0.0);
  EXPECT_NEAR(loss_to_sigma(0.311), 0.5577, 1e-4);
  EXPECT_THROW(loss_to_sigma(1.0), DomainError);
  EXPECT_THROW(loss_to_sigma(-0.1), DomainError);
}

TEST(GkpSigma, ConversionsAndRoundTrip) {
  EXPECT_LT(gkp_sigma_from_delta(1e-12), 1e-5);
  EXPECT_THROW(gkp_sigma_from_delta(0.0), DomainError);
  EXPECT_NEAR(gkp_sigma_from_delta(0.5), std::sqrt((1 - std::exp(-0.5)) / (1 + std::exp(-0.5))),
              1e-15);
  EXPECT_NEAR(gkp_sigma_from_db(30.0), std::sqrt(1e-3 / 2), 1e-15);
  EXPECT_NEAR(gkp_db_from_sigma(gkp_sigma_from_db(11.0)), 11.0, 1e-10);
  EXPECT_EQ(gkp_sigma_from_db(INFINITY), 0.0);
  EXPECT_TRUE(std::isinf(gkp_db_from_sigma(0.0)));
}

}  // namespace
}  // namespace gkp
