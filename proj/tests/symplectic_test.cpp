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
#include <numbers>

#include <gtest/gtest.h>

#include "gkpcode/symplectic.hpp"
#include "test_util.hpp"

namespace gkp {
namespace {

using testing::Gen;
using testing::kPropertyTrials;
using testing::max_abs_diff;

Eigen::Vector4d vec4(double a, double b, double c, double d) { return Eigen::Vector4d(a, b, c, d); }

TEST(SumGate, MapsQ1IntoQ2) {
  const auto s = sum_gate(1, 2, 2);
  EXPECT_EQ(apply(s, vec4(1, 0, 0, 0)), vec4(1, 0, 1, 0));
  EXPECT_EQ(apply(s, vec4(0, 0, 0, 1)), vec4(0, -1, 0, 1));
  EXPECT_EQ(apply(s, vec4(0, 0, 0, 0)), vec4(0, 0, 0, 0));
}

TEST(SumGate, InverseComposesToIdentity) {
  const auto s = sum_gate(1, 2, 2);
  EXPECT_EQ(compose(s, inverse(s)).matrix(), Eigen::MatrixXd::Identity(4, 4));
}

TEST(SumGate, RejectsBadModes) {
  EXPECT_THROW(sum_gate(1, 1, 2), InvalidModeError);
  EXPECT_THROW(sum_gate(0, 1, 2), InvalidModeError);
  EXPECT_THROW(sum_gate(1, 3, 2), InvalidModeError);
}

TEST(SingleModeSqueeze, ScalesQuadratures) {
  const auto s = single_mode_squeeze(2.0, 1, 1);
  EXPECT_EQ(apply(s, Eigen::Vector2d(1, 1)), Eigen::Vector2d(2.0, 0.5));
  EXPECT_EQ(single_mode_squeeze(1.0, 1, 3).matrix(), Eigen::MatrixXd::Identity(6, 6));
  EXPECT_TRUE(is_symplectic(single_mode_squeeze(3.7, 1, 1)));
  EXPECT_THROW(single_mode_squeeze(0.0, 1, 1), DomainError);
  EXPECT_THROW(single_mode_squeeze(-1.0, 1, 1), DomainError);
  EXPECT_THROW(single_mode_squeeze(2.0, 2, 1), InvalidModeError);
}

TEST(TwoModeSqueeze, MatchesBlockForm) {
  EXPECT_EQ(two_mode_squeeze(1.0, 1, 2, 2).matrix(), Eigen::MatrixXd::Identity(4, 4));
  const double r2 = std::numbers::sqrt2;
  Eigen::Matrix4d expected;
  expected << r2, 0, 1, 0,
              0, r2, 0, -1,
              1, 0, r2, 0,
              0, -1, 0, r2;
  EXPECT_LT(max_abs_diff(two_mode_squeeze(2.0, 1, 2, 2).matrix(), expected), 1e-15);
  EXPECT_LT(symplectic_defect(two_mode_squeeze(4.806, 1, 2, 2).matrix()), 1e-12);
  EXPECT_THROW(two_mode_squeeze(0.99, 1, 2, 2), DomainError);
}

TEST(BeamSplitter, MatchesBlockForm) {
  EXPECT_EQ(beam_splitter(1.0, 1, 2, 2).matrix(), Eigen::MatrixXd::Identity(4, 4));
  const double h = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix4d expected;
  expected << h, 0, h, 0,
              0, h, 0, h,
              -h, 0, h, 0,
              0, -h, 0, h;
  EXPECT_LT(max_abs_diff(beam_splitter(0.5, 1, 2, 2).matrix(), expected), 1e-15);
  EXPECT_NEAR(determinant(beam_splitter(0.3, 1, 2, 2)), 1.0, 1e-12);
  EXPECT_THROW(beam_splitter(1.1, 1, 2, 2), DomainError);
  EXPECT_THROW(beam_splitter(-0.1, 1, 2, 2), DomainError);
}

// TS(G) = BS(1/2) Sq1(1/l) Sq2(l) BS(1/2)^{-1}, l = sqrt(G) + sqrt(G-1).
TEST(TwoModeSqueeze, BeamSplitterDecomposition) {
  for (double g : {1.0, 1.5, 4.806, 20.0}) {
    const double lam = std::sqrt(g) + std::sqrt(g - 1.0);
    const auto bs = beam_splitter(0.5, 1, 2, 2);
    const auto chain =
        compose(bs, compose(single_mode_squeeze(1.0 / lam, 1, 2),
                            compose(single_mode_squeeze(lam, 2, 2), inverse(bs))));
    EXPECT_LT(max_abs_diff(chain.matrix(), two_mode_squeeze(g, 1, 2, 2).matrix()), 1e-10) << g;
  }
}

TEST(Compose, IdentityAndDimensions) {
  const auto id = SymplecticTransform::identity(3);
  EXPECT_EQ(inverse(id).matrix(), id.matrix());
  EXPECT_THROW(compose(id, SymplecticTransform::identity(2)), DimensionError);
  EXPECT_THROW(apply(id, Eigen::VectorXd::Zero(4)), DimensionError);
}

TEST(Compose, RightFactorActsFirst) {
  // Squeeze then SUM: q2 picks up the already-squeezed q1.
  const auto s = compose(sum_gate(1, 2, 2), single_mode_squeeze(3.0, 1, 2));
  EXPECT_EQ(apply(s, vec4(1, 0, 0, 0)), vec4(3, 0, 3, 0));
}

TEST(FromMatrix, ValidatesShapeAndForm) {
  EXPECT_THROW(SymplecticTransform::from_matrix(Eigen::MatrixXd::Identity(3, 3)), DimensionError);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(4, 4);
  m(0, 0) = 2.0;
  EXPECT_THROW(SymplecticTransform::from_matrix(m), DomainError);
  EXPECT_FALSE(is_symplectic(m));
  EXPECT_NO_THROW(SymplecticTransform::from_matrix(two_mode_squeeze(3.0, 1, 2, 2).matrix()));
}

TEST(DirectSum, PlacesBlocks) {
  const auto s = direct_sum(single_mode_squeeze(2.0, 1, 1), sum_gate(1, 2, 2));
  EXPECT_EQ(s.n_modes(), 3u);
  EXPECT_TRUE(is_symplectic(s));
  EXPECT_EQ(s(0, 0), 2.0);
  EXPECT_EQ(s(4, 2), 1.0);
}

TEST(SymplecticProperty, ConstructorsPreserveForm) {
  Gen gen(101);
  for (int t = 0; t < kPropertyTrials; ++t) {
    const std::size_t n = gen.index(1, 5);
    const auto s = gen.gate(n);
    ASSERT_LT(symplectic_defect(s.matrix()), 1e-12) << "trial " << t;
    ASSERT_NEAR(determinant(s), 1.0, 1e-9) << "trial " << t;
  }
}

TEST(SymplecticProperty, CompositionsPreserveForm) {
  Gen gen(202);
  for (int t = 0; t < kPropertyTrials; ++t) {
    const std::size_t n = gen.index(2, 4);
    const auto a = gen.gate(n);
    const auto b = gen.gate(n);
    const auto s = compose(a, b);
    ASSERT_LT(symplectic_defect(s.matrix()), 1e-12) << "trial " << t;
    ASSERT_LT(symplectic_defect(inverse(s).matrix()), 1e-12) << "trial " << t;
  }
}

TEST(SymplecticProperty, DeepCircuitsStaySymplecticRelativeToScale) {
  Gen gen(303);
  for (int t = 0; t < kPropertyTrials; ++t) {
    const auto s = gen.circuit(gen.index(2, 4), 6);
    ASSERT_TRUE(is_symplectic(s)) << "trial " << t;
  }
}

TEST(SymplecticProperty, InverseRoundTrip) {
  Gen gen(404);
  for (int t = 0; t < kPropertyTrials; ++t) {
    const std::size_t n = gen.index(1, 4);
    const auto s = compose(gen.gate(n), gen.gate(n));
    const Eigen::VectorXd v = gen.vector(static_cast<Eigen::Index>(2 * n));
    const double scale = std::max(1.0, s.matrix().cwiseAbs().maxCoeff());
    ASSERT_LT((apply(inverse(s), apply(s, v)) - v).cwiseAbs().maxCoeff(), 1e-12 * scale * scale);
    ASSERT_LT(max_abs_diff(compose(s, inverse(s)).matrix(),
                           Eigen::MatrixXd::Identity(2 * n, 2 * n)),
              1e-12 * scale * scale);
  }
}

TEST(SymplecticProperty, ApplyIsLinear) {
  Gen gen(505);
  for (int t = 0; t < kPropertyTrials; ++t) {
    const std::size_t n = gen.index(1, 4);
    const auto s = gen.gate(n);
    const auto size = static_cast<Eigen::Index>(2 * n);
    const Eigen::VectorXd u = gen.vector(size), v = gen.vector(size);
    const double a = gen.uniform(-2, 2), b = gen.uniform(-2, 2);
    const Eigen::VectorXd lhs = apply(s, a * u + b * v);
    const Eigen::VectorXd rhs = a * apply(s, u) + b * apply(s, v);
    ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12) << "trial " << t;
  }
}

}  // namespace
}  // namespace gkp
