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


#include "identlab/fiber_solver.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace identlab {
namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

LinearFunctional lf(std::initializer_list<double> v) { return {vec(v), {}}; }

MeasurementSystem system_of(std::vector<LinearFunctional> fs,
                            std::initializer_list<double> y) {
  MeasurementSystem s;
  s.functionals = std::move(fs);
  s.values = vec(y);
  return s;
}

TEST(Residual, ParabolaValues) {
  const auto p = make_parabola();
  EXPECT_DOUBLE_EQ(residual(p, system_of({lf({1, 0})}, {1}), vec({1}))(0), 0.0);
  EXPECT_DOUBLE_EQ(residual(p, system_of({lf({0, 1})}, {1}), vec({-1}))(0), 0.0);
  EXPECT_DOUBLE_EQ(residual(p, system_of({lf({0, 1})}, {1}), vec({2}))(0), 3.0);
  EXPECT_THROW(residual(p, system_of({lf({0, 1, 0})}, {1}), vec({2})), DimensionError);
  EXPECT_THROW(residual(p, system_of({lf({0, 1})}, {1}), vec({2, 3})), DimensionError);
}

TEST(ResidualJacobian, ParabolaRows) {
  const auto p = make_parabola();
  EXPECT_DOUBLE_EQ(residual_jacobian(p, system_of({lf({0, 1})}, {0}), vec({3}))(0, 0), 6.0);
  EXPECT_DOUBLE_EQ(residual_jacobian(p, system_of({lf({1, 1})}, {0}), vec({1}))(0, 0), 3.0);
}

TEST(ResidualJacobian, MatchesFiniteDifferencesOnLowRank) {
  const auto v = make_low_rank(3, 4, 2);
  Rng rng(31);
  const auto fam = rank_one_family(3, 4);
  const auto sys = measure_all(random_point(v, rng).x, fam.sample(rng, 9));
  for (int trial = 0; trial < 10; ++trial) {
    const Vector theta = standard_normal(rng, v.param_dim);
    const Matrix j = residual_jacobian(v, sys, theta);
    const Matrix fd = oracle::fd_jacobian(
        [&](const Vector& t) { return residual(v, sys, t); }, theta, 1e-5);
    EXPECT_LE((j - fd).cwiseAbs().maxCoeff(), 1e-6 * (1.0 + j.norm()));
  }
}

TEST(LocalSolve, ConvergesToUniqueRoot) {
  const auto p = make_parabola();
  const auto sys = system_of({lf({1, 0}), lf({0, 1})}, {1, 1});
  SolverOptions opts;
  const auto res = local_solve(p, sys, vec({0.9}), opts);
  ASSERT_TRUE(res.converged);
  EXPECT_LE(std::abs(res.theta(0) - 1.0), 1e-8);
  EXPECT_LE(res.iterations, opts.max_iters);
}

TEST(LocalSolve, NeverFlagsLargeResidualAsSuccess) {
  const auto p = make_parabola();
  const auto sys = system_of({lf({1, 0}), lf({0, 1})}, {1, 1});
  SolverOptions opts;
  const auto res = local_solve(p, sys, vec({-0.9}), opts);
  const double tol = opts.residual_tol * (1.0 + sys.values.norm());
  if (res.converged) {
    EXPECT_LE(std::abs(res.theta(0) - 1.0), 1e-8);
    EXPECT_LE(res.residual_norm, tol);
  }
  const auto unsolvable = system_of({lf({0, 1})}, {-1});
  const auto miss = local_solve(p, unsolvable, vec({0.5}), opts);
  EXPECT_FALSE(miss.converged);
}

TEST(LocalSolve, LowRankFromSomeStart) {
  const auto v = make_low_rank(2, 2, 1);
  Rng rng(17);
  const auto sample = random_point(v, rng);
  const auto sys = measure_all(sample.x, rank_one_family(2, 2).sample(rng, 4));
  SolverOptions opts;
  bool hit = false;
  for (int s = 0; s < 20 && !hit; ++s) {
    const auto res = local_solve(v, sys, standard_normal(rng, 4, 2.0), opts);
    hit = res.converged && (v.eval(res.theta) - sample.x).norm() <= 1e-6;
  }
  EXPECT_TRUE(hit);
}

TEST(EnumerateFiber, ParabolaOneCutMatchesQuadraticFormula) {
  const auto p = make_parabola();
  const auto sys = measure_all(vec({1, 1}), {lf({0.3, 1.1})});
  const FiberTarget target{vec({1}), vec({1, 1})};
  const auto rep = enumerate_fiber(p, sys, SolverOptions{}, 1, target);
  ASSERT_EQ(rep.cardinality(), 2);
  ASSERT_TRUE(rep.contains_target());
  EXPECT_LE((rep.points[static_cast<std::size_t>(*rep.target_index)] - vec({1, 1})).norm(), 1e-6);
  std::vector<Vector> ref;
  for (double t : oracle::quadratic_real_roots(1.1, 0.3, -sys.values(0))) {
    ref.push_back(oracle::parabola_point(t));
  }
  EXPECT_LE(oracle::point_set_distance(rep.points, ref), 1e-8);
}

TEST(EnumerateFiber, ParabolaCoordinateCutIsSingle) {
  const auto p = make_parabola();
  const auto sys = measure_all(vec({1, 1}), {lf({1, 0})});
  const auto rep = enumerate_fiber(p, sys, SolverOptions{}, 2, FiberTarget{vec({1}), vec({1, 1})});
  ASSERT_EQ(rep.cardinality(), 1);
  EXPECT_LE((rep.points[0] - vec({1, 1})).norm(), 1e-8);
}

TEST(EnumerateFiber, ParabolaTwoGenericCutsIsSingle) {
  const auto p = make_parabola();
  const auto sys = measure_all(vec({1, 1}), {lf({0.3, 1.1}), lf({-0.7, 0.45})});
  const auto rep = enumerate_fiber(p, sys, SolverOptions{}, 3);
  ASSERT_EQ(rep.cardinality(), 1);
  EXPECT_LE((rep.points[0] - vec({1, 1})).norm(), 1e-6);
}

TEST(EnumerateFiber, EmptyForUnreachableValues) {
  const auto p = make_parabola();
  const auto sys = system_of({lf({0, 1})}, {-1});
  SolverOptions opts;
  opts.num_starts = 20;
  const auto rep = enumerate_fiber(p, sys, opts, 4);
  EXPECT_EQ(rep.cardinality(), 0);
  EXPECT_EQ(rep.failed_starts, 20);
  EXPECT_FALSE(rep.contains_target());
}

TEST(EnumerateFiber, IndependentOfWorkerCount) {
  const auto v = make_low_rank(3, 3, 1);
  Rng rng(41);
  const auto sample = random_point(v, rng);
  const auto sys = measure_all(sample.x, rank_one_family(3, 3).sample(rng, 5));
  SolverOptions one;
  SolverOptions many = one;
  many.workers = 3;
  const FiberTarget target{sample.theta, sample.x};
  const auto a = enumerate_fiber(v, sys, one, 9, target);
  const auto b = enumerate_fiber(v, sys, many, 9, target);
  ASSERT_EQ(a.cardinality(), b.cardinality());
  EXPECT_EQ(a.basin_counts, b.basin_counts);
  EXPECT_EQ(a.failed_starts, b.failed_starts);
  for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ(a.points[i], b.points[i]);
}

class FiberProperties : public ::testing::TestWithParam<int> {};

TEST_P(FiberProperties, SoundSeparatedAndContainTarget) {
  const int seed = GetParam();
  const auto v = make_low_rank(2, 2, 1);
  Rng rng(derive_seed(500, static_cast<std::uint64_t>(seed), "fiber-test"));
  const auto sample = random_point(v, rng);
  const auto fs = rank_one_family(2, 2).sample(rng, 4);
  const auto sys = measure_all(sample.x, fs);
  SolverOptions opts;
  const FiberTarget target{sample.theta, sample.x};
  const auto small = enumerate_fiber(v, sys.prefix(3), opts, 77, target);
  const auto big = enumerate_fiber(v, sys, opts, 77, target);

  EXPECT_TRUE(small.contains_target());
  EXPECT_TRUE(big.contains_target());
  EXPECT_LE(big.cardinality(), small.cardinality());
  EXPECT_GT(small.min_pairwise_distance(), opts.cluster_tol);

  const auto sub = sys.prefix(3);
  const double tol = 10.0 * opts.residual_tol * (1.0 + sub.values.norm());
  for (const auto& p : small.points) {
    for (int i = 0; i < sub.size(); ++i) {
      EXPECT_LE(std::abs(sub.functionals[static_cast<std::size_t>(i)](p) - sub.values(i)), tol);
    }
  }
  for (std::size_t i = 1; i < small.basin_counts.size(); ++i) {
    EXPECT_GE(small.basin_counts[i - 1], small.basin_counts[i]);
  }
  const auto filtered = filter_fiber(small, fs[3], sys.values(3), 1e-6);
  EXPECT_EQ(filtered.cardinality(), 1);
  EXPECT_TRUE(filtered.contains_target());
}

INSTANTIATE_TEST_SUITE_P(Seeds, FiberProperties, ::testing::Range(0, 12));

TEST(ClusterSolutions, GreedyByResidual) {
  const std::vector<Vector> pts = {vec({0, 0}), vec({1e-8, 0}), vec({1, 0}),
                                   vec({1, 1e-9})};
  const std::vector<double> res = {1e-12, 1e-14, 1e-13, 1e-13};
  const auto rep = cluster_solutions(pts, res, 1e-6);
  ASSERT_EQ(rep.cardinality(), 2);
  EXPECT_EQ(rep.basin_counts, (std::vector<int>{2, 2}));
  // The lowest-residual member represents its cluster.
  bool has_second = false;
  for (const auto& p : rep.points) has_second = has_second || p == pts[1];
  EXPECT_TRUE(has_second);
  EXPECT_GT(rep.min_pairwise_distance(), 1e-6);
}

TEST(ClusterSolutions, OrderIndependentUpToRepresentative) {
  const std::vector<Vector> pts = {vec({0, 0}), vec({3, 0}), vec({0, 3}), vec({3, 1e-9})};
  const std::vector<double> res = {1e-12, 2e-12, 3e-12, 1e-12};
  const std::vector<Vector> rev(pts.rbegin(), pts.rend());
  const std::vector<double> rres(res.rbegin(), res.rend());
  const auto a = cluster_solutions(pts, res, 1e-6);
  const auto b = cluster_solutions(rev, rres, 1e-6);
  EXPECT_EQ(a.cardinality(), b.cardinality());
  EXPECT_LE(oracle::point_set_distance(a.points, b.points), 1e-6);
}

TEST(LocalIdentifiability, RankCases) {
  const auto p = make_parabola();
  const auto one = local_identifiability(p, {lf({0.3, 1.1})}, vec({0.7}));
  EXPECT_EQ(one.rank, 1);
  EXPECT_TRUE(one.identifiable);

  const auto v = make_low_rank(2, 2, 1);
  Rng rng(51);
  const Vector theta = standard_normal(rng, 4);
  const auto fam = rank_one_family(2, 2);
  const auto two = local_identifiability(v, fam.sample(rng, 2), theta);
  EXPECT_LE(two.rank, 2);
  EXPECT_FALSE(two.identifiable);
  const auto three = local_identifiability(v, fam.sample(rng, 3), theta);
  EXPECT_EQ(three.rank, 3);
  EXPECT_TRUE(three.identifiable);
}

TEST(GenericityWitness, SaturationAndRepeats) {
  const auto p = make_parabola();
  const auto steps = genericity_witness_check(p, {lf({1, 0}), lf({0, 1})}, vec({1}));
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0].rank, 1);
  EXPECT_EQ(steps[1].rank, 1);
  EXPECT_FALSE(steps[0].degenerate);
  EXPECT_FALSE(steps[1].degenerate);

  const auto dup = genericity_witness_check(p, {lf({0.3, 1.1}), lf({0.3, 1.1})}, vec({1}));
  EXPECT_FALSE(dup[1].degenerate);

  const auto v = make_low_rank(2, 2, 1);
  const auto e11 = entry_functional(2, 2, 0, 0);
  const auto e12 = entry_functional(2, 2, 0, 1);
  const auto lr = genericity_witness_check(v, {e11, e11, e12}, vec({0.8, -1.3, 0.6, 1.9}));
  ASSERT_EQ(lr.size(), 3u);
  EXPECT_EQ(lr[0].rank, 1);
  EXPECT_EQ(lr[1].rank, 1);
  EXPECT_TRUE(lr[1].degenerate);
  EXPECT_EQ(lr[2].rank, 2);
  EXPECT_FALSE(lr[2].degenerate);
}

TEST(SolverOptions, Validation) {
  SolverOptions o;
  EXPECT_NO_THROW(o.validate());
  o.cluster_tol = 1e-11;
  EXPECT_THROW(o.validate(), ConfigError);
  o = SolverOptions{};
  o.num_starts = 0;
  EXPECT_THROW(o.validate(), ConfigError);
  o = SolverOptions{};
  o.start_radius = -1.0;
  EXPECT_THROW(o.validate(), ConfigError);
}

}  // namespace
}  // namespace identlab
