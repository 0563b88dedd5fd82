// Copyright 2026 The identlab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "identlab/roots.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "identlab/common.hpp"
#include "oracles.hpp"

namespace identlab {
namespace {

double min_distance(const std::vector<Complex>& set, Complex z) {
  double best = 1e300;
  for (const auto& w : set) best = std::min(best, std::abs(w - z));
  return best;
}

TEST(Roots, Quadratic) {
  const std::vector<double> c = {2.0, -3.0, 1.0};  // (t-1)(t-2)
  const auto r = univariate_roots(std::span<const double>(c));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(std::abs(r[0] - Complex(1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r[1] - Complex(2.0)), 0.0, 1e-14);
}

TEST(Roots, ExactZeroRootsAndComplexPairs) {
  const std::vector<double> c = {0.0, 0.0, 1.0, 0.0, 1.0};  // t^2 (t^2 + 1)
  const auto r = univariate_roots(std::span<const double>(c));
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(std::count(r.begin(), r.end(), Complex(0.0)), 2);
  EXPECT_LE(min_distance(r, Complex(0, 1)), 1e-14);
  EXPECT_LE(min_distance(r, Complex(0, -1)), 1e-14);
}

TEST(Roots, TrimsNegligibleLeadingCoefficients) {
  std::vector<Complex> c = {Complex(-1), Complex(1), Complex(1e-15), Complex(0)};
  EXPECT_EQ(trim_leading(c), 2);
  EXPECT_EQ(c.size(), 2u);
  const auto r = univariate_roots(std::vector<Complex>{Complex(-1), Complex(1), Complex(1e-15)});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0].real(), 1.0, 1e-12);
}

TEST(Roots, ZeroPolynomialRejected) {
  const std::vector<double> z = {0.0, 0.0};
  EXPECT_THROW(univariate_roots(std::span<const double>(z)), ConfigError);
  const std::vector<double> k = {3.0};
  EXPECT_TRUE(univariate_roots(std::span<const double>(k)).empty());
}

TEST(Roots, MatchCompanionEigenvaluesAndBackwardError) {
  Rng rng(1234);
  std::uniform_int_distribution<int> deg(1, 12);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = deg(rng);
    std::vector<double> c(static_cast<std::size_t>(n + 1));
    for (auto& v : c) v = normal(rng);
    const auto r = univariate_roots(std::span<const double>(c));
    ASSERT_EQ(static_cast<int>(r.size()), n);
    std::vector<Complex> cc(c.begin(), c.end());
    for (const auto& z : r) EXPECT_LE(root_backward_error(cc, z), 1e-8);
    const auto ref = oracle::companion_roots(c);
    for (const auto& z : ref) {
      EXPECT_LE(min_distance(r, z), 1e-6 * (1.0 + std::abs(z)));
    }
  }
}

TEST(Roots, SortedByRealThenImaginary) {
  const std::vector<double> c = {6.0, -5.0, -2.0, 1.0};  // (t-1)(t+2)(t-3)
  const auto r = univariate_roots(std::span<const double>(c));
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0].real(), -2.0, 1e-12);
  EXPECT_NEAR(r[1].real(), 1.0, 1e-12);
  EXPECT_NEAR(r[2].real(), 3.0, 1e-12);
}

TEST(Roots, DoubleRootClustersWithMultiplicityTwo) {
  const std::vector<double> c = {1.0, -2.0, 1.0};  // (t - 1)^2
  const auto r = univariate_roots(std::span<const double>(c));
  const auto clusters = cluster_roots(r, 1e-6);
  ASSERT_EQ(clusters.size(), 1u);
  EXPECT_EQ(clusters[0].multiplicity, 2);
  EXPECT_NEAR(std::abs(clusters[0].value - Complex(1.0)), 0.0, 1e-7);
}

TEST(Roots, ClusterIsSingleLinkage) {
  const std::vector<Complex> pts = {Complex(0), Complex(0.8), Complex(1.6), Complex(5)};
  const auto clusters = cluster_roots(pts, 1.0);
  ASSERT_EQ(clusters.size(), 2u);
  int total = 0;
  for (const auto& c : clusters) total += c.multiplicity;
  EXPECT_EQ(total, 4);
}

}  // namespace
}  // namespace identlab
