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
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "gkpcode/experiments.hpp"

namespace gkp {
namespace {

std::string to_csv(const Table& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

TEST(SigmaGrid, EndpointsAndSpacing) {
  const auto lin = SigmaGrid{0.1, 0.5, 5, false}.values();
  EXPECT_DOUBLE_EQ(lin[1], 0.2);
  EXPECT_EQ(lin.back(), 0.5);
  const auto lg = SigmaGrid{0.01, 1.0, 3, true}.values();
  EXPECT_NEAR(lg[1], 0.1, 1e-15);
  EXPECT_THROW((SigmaGrid{0.1, 0.5, 1, false}.values()), DomainError);
  EXPECT_THROW((SigmaGrid{0.5, 0.1, 3, false}.values()), DomainError);
}

TEST(Csv, FormatsTwelveSignificantDigits) {
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  Table t{"demo", {{"seed", "7"}}, {"a", "b"}, {{1.0, 2.5}, {-3.0, 1e-20}}};
  EXPECT_EQ(to_csv(t), "# gkpcode-csv v1 experiment=demo\n# seed=7\na,b\n1,2.5\n-3,1e-20\n");
}

TEST(Csv, SameSeedGivesIdenticalBytes) {
  const SigmaGrid g{0.05, 0.3, 3, false};
  const auto a = to_csv(fig3_table(g, {20000, 9, 1}));
  EXPECT_EQ(a, to_csv(fig3_table(g, {20000, 9, 1})));
  EXPECT_EQ(a, to_csv(fig3_table(g, {20000, 9, 3})));
  EXPECT_NE(a, to_csv(fig3_table(g, {20000, 10, 1})));
}

TEST(Fig3, AnalyticMatchesMonteCarlo) {
  const auto t = fig3_table({0.05, 0.3, 4, false}, {200000, 3, 1});
  ASSERT_EQ(t.columns.size(), 7u);
  for (const auto& r : t.rows) {
    EXPECT_LT(std::abs(r[t.column("sigma_q_mc")] - r[t.column("sigma_q_analytic")]), 4 * r[t.column("se_q")]);
    EXPECT_LT(std::abs(r[t.column("sigma_p_mc")] - r[t.column("sigma_p_analytic")]), 4 * r[t.column("se_p")]);
  }
}

TEST(Fig45, AsymptoticColumnsOnlyBelowPointThree) {
  const auto t = fig45_table({0.05, 0.5, 4, false});
  ASSERT_EQ(t.rows.size(), 4u);
  for (const auto& r : t.rows) {
    const bool small = r[0] < 0.3;
    EXPECT_EQ(std::isnan(r[t.column("sigma_L_asymptotic")]), !small);
    EXPECT_EQ(std::isnan(r[t.column("g_star_asymptotic")]), !small);
    EXPECT_LE(r[t.column("sigma_L_star")], r[0] * (1 + 1e-12));
  }
}

TEST(Fig8, RowsGroupedBySqueezingAndGainAtLeastOne) {
  const auto t = fig8_table({0.05, 0.3, 3, false}, {12.0, 20.0, std::numeric_limits<double>::infinity()});
  ASSERT_EQ(t.rows.size(), 9u);
  EXPECT_EQ(t.rows[0][0], 12.0);
  EXPECT_TRUE(std::isinf(t.rows[8][0]));
  for (std::size_t i = 0; i < 3; ++i) {
    // More ancilla squeezing never hurts.
    EXPECT_LE(t.rows[i][2], t.rows[i + 3][2] * (1 + 1e-9));
    EXPECT_LE(t.rows[i + 3][2], t.rows[i + 6][2] * (1 + 1e-9));
  }
  for (const auto& r : t.rows) {
    EXPECT_GE(r[t.column("qec_gain")], 1.0);
  }
}

TEST(LogLogSlope, RecoversPowerLaw) {
  std::vector<double> x{0.1, 0.2, 0.5, 1.0}, y;
  for (double v : x) {
    y.push_back(3.0 * std::pow(v, 2.5));
  }
  EXPECT_NEAR(loglog_slope(x, y), 2.5, 1e-12);
  EXPECT_THROW(loglog_slope({1.0}, {1.0}), DimensionError);
}

TEST(AppendixD, SlopeEqualsModeCount) {
  const auto t = appendix_d_table({0.01, 0.05, 3, true}, {50000, 2, 1});
  ASSERT_EQ(t.rows.size(), 6u);
  EXPECT_NEAR(t.rows[0][t.column("slope")], 2.0, 0.2);
  EXPECT_NEAR(t.rows[5][t.column("slope")], 3.0, 0.2);
}

TEST(Sweep, MonteCarloAgreesWithAnalytic) {
  const auto t = sweep_table({0.1, 0.3, 3, false}, {20.0, std::numeric_limits<double>::infinity()}, {100000, 4, 1});
  ASSERT_EQ(t.rows.size(), 6u);
  for (const auto& r : t.rows) {
    EXPECT_LT(std::abs(r[t.column("z_score")]), 4.0);
  }
}

TEST(Checks, AllPassByDefault) {
  for (const auto& r : run_checks()) {
    EXPECT_TRUE(r.pass) << r.name << " worst=" << r.worst;
  }
}

TEST(Checks, InjectedNonSymplecticFails) {
  const auto rs = run_checks({true, 10, 1});
  EXPECT_FALSE(rs.front().pass);
  for (std::size_t i = 1; i < rs.size(); ++i) {
    EXPECT_TRUE(rs[i].pass);
  }
}

}  // namespace
}  // namespace gkp
