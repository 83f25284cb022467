#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mvlab/rootfind.hpp"
#include "oracles.hpp"

namespace mvlab {
namespace {

using testing::C;

void expect_roots(const RootSet& rs, const std::vector<C>& expected, double tol) {
  ASSERT_TRUE(rs.converged);
  ASSERT_EQ(rs.roots.size(), expected.size());
  EXPECT_LE(testing::optimal_match_distance(rs.roots, expected), tol);
}

std::vector<C> unit_roots(int n) {
  std::vector<C> r;
  for (int j = 0; j < n; ++j) r.push_back(std::polar(1.0, 2.0 * std::numbers::pi * j / n));
  return r;
}

TEST(FindRoots, Examples) {
  expect_roots(find_roots(Polynomial{1.0, 0.0, 1.0}), {{0.0, 1.0}, {0.0, -1.0}}, 1e-14);
  expect_roots(find_roots(Polynomial{-1.0, 0.0, 0.0, 1.0}), unit_roots(3), 1e-12);
  expect_roots(find_roots(Polynomial{-6.0, 11.0, -6.0, 1.0}), {1.0, 2.0, 3.0}, 1e-10);
}

TEST(FindRoots, LinearAndRejectsConstants) {
  expect_roots(find_roots(Polynomial{{2.0, 1.0}, {0.0, 1.0}}), {C(2.0, 1.0) / C(0.0, -1.0)}, 1e-15);
  try {
    find_roots(Polynomial{3.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooSmall);
  }
}

TEST(FindRoots, ResidualsWithinToleranceAndReported) {
  testing::Rng rng(31);
  const ToleranceConfig cfg;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<C> c(rng.integer(1, 20) + 1);
    for (auto& x : c) x = rng.disk(2.0);
    const Polynomial p(c);
    const RootSet rs = find_roots(p, cfg);
    ASSERT_TRUE(rs.converged);
    ASSERT_EQ(static_cast<int>(rs.roots.size()), p.degree());
    ASSERT_EQ(rs.residuals.size(), rs.roots.size());
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      EXPECT_LE(rs.residuals[i], cfg.residual_tol);
      EXPECT_DOUBLE_EQ(rs.residuals[i], relative_residual(p, rs.roots[i]));
    }
  }
}

TEST(FindRoots, VietaIdentities) {
  testing::Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(1, 12);
    std::vector<C> c(n + 1);
    for (auto& x : c) x = rng.unit_square();
    const RootSet rs = find_roots(Polynomial(c));
    ASSERT_TRUE(rs.converged);
    C sum{}, prod{1.0};
    for (const C r : rs.roots) {
      sum += r;
      prod *= r;
    }
    const C want_sum = -c[n - 1] / c[n];
    const C want_prod = (n % 2 == 0 ? 1.0 : -1.0) * c[0] / c[n];
    EXPECT_LE(std::abs(sum - want_sum), 1e-8 * std::max(1.0, std::abs(want_sum)));
    EXPECT_LE(std::abs(prod - want_prod), 1e-8 * std::max(1.0, std::abs(want_prod)));
  }
}

TEST(FindRoots, RealCoefficientsGiveConjugateClosedSet) {
  testing::Rng rng(33);
  const ToleranceConfig cfg;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<C> c(rng.integer(2, 9) + 1);
    for (auto& x : c) x = rng.uniform(-2.0, 2.0);
    const RootSet rs = find_roots(Polynomial(c), cfg);
    ASSERT_TRUE(rs.converged);
    std::vector<C> conj;
    for (const C r : rs.roots) conj.push_back(std::conj(r));
    EXPECT_LE(testing::optimal_match_distance(rs.roots, conj), cfg.cluster_tol);
  }
}

TEST(FindRoots, AgreesWithOracle) {
  testing::Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<C> c(rng.integer(1, 6) + 1);
    for (auto& x : c) x = rng.unit_square();
    const Polynomial p(c);
    const RootSet fast = find_roots(p);
    const RootSet slow = oracle_roots(p);
    ASSERT_TRUE(fast.converged);
    ASSERT_EQ(fast.roots.size(), slow.roots.size());
    EXPECT_LE(testing::optimal_match_distance(fast.roots, slow.roots), 1e-7) << "trial " << trial;
  }
}

TEST(FindRoots, MultipleRootsConsolidate) {
  // (1 + z)^n has one n-fold root; coefficients built by the test.
  for (int n = 2; n <= 10; ++n) {
    std::vector<C> c(n + 1);
    for (int j = 0; j <= n; ++j) c[j] = testing::binomial(n, j);
    const RootSet rs = find_roots(Polynomial(c));
    ASSERT_TRUE(rs.converged) << n;
    for (const C r : rs.roots) EXPECT_LE(std::abs(r + 1.0), 1e-10) << "n=" << n;
  }
}

TEST(FindRoots, DeterministicAcrossCalls) {
  const Polynomial p{{0.3, 0.1}, {-1.0, 2.0}, 0.5, {0.0, 1.0}, 1.0, 2.0};
  const RootSet a = find_roots(p), b = find_roots(p);
  EXPECT_EQ(a.roots, b.roots);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(FindRoots, NonConvergenceReturnsPartialSet) {
  ToleranceConfig cfg;
  cfg.max_iters = 1;
  cfg.residual_tol = 1e-300;
  const RootSet rs = find_roots(Polynomial{1.0, 2.0, 3.0, 4.0, 5.0, 6.0}, cfg);
  EXPECT_FALSE(rs.converged);
  EXPECT_EQ(rs.roots.size(), 5u);
  try {
    require_converged(rs);
    FAIL();
  } catch (const NoConvergenceError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoConvergence);
    EXPECT_EQ(e.partial().roots, rs.roots);
  }
}

TEST(ToleranceConfig, Validates) {
  EXPECT_NO_THROW(ToleranceConfig{}.validate());
  EXPECT_THROW((ToleranceConfig{-1.0, 200, 1e-8}.validate()), Error);
  EXPECT_THROW((ToleranceConfig{1e-10, 0, 1e-8}.validate()), Error);
  EXPECT_THROW((ToleranceConfig{1e-10, 200, 0.0}.validate()), Error);
}

TEST(RefineRoot, Examples) {
  EXPECT_NEAR(std::abs(refine_root(Polynomial{-2.0, 0.0, 1.0}, 1.4) - std::sqrt(2.0)), 0.0, 1e-10);
  EXPECT_LE(std::abs(refine_root(Polynomial{0.0, 1.0}, 0.1)), 1e-15);
  EXPECT_NEAR(std::abs(refine_root(Polynomial{-1.0, 0.0, 0.0, 1.0}, 0.9) - 1.0), 0.0, 1e-12);
}

TEST(RefineRoot, DerivativeVanished) {
  try {
    refine_root(Polynomial{1.0, 0.0, 1.0}, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DerivativeVanished);
  }
}

TEST(OracleRoots, Examples) {
  expect_roots(oracle_roots(Polynomial{1.0, 0.0, 1.0}), {{0.0, 1.0}, {0.0, -1.0}}, 1e-12);
  const RootSet dbl = oracle_roots(Polynomial{1.0, -2.0, 1.0});
  ASSERT_EQ(dbl.roots.size(), 2u);
  for (const C r : dbl.roots) EXPECT_LE(std::abs(r - 1.0), 1e-7);
  expect_roots(oracle_roots(Polynomial{-1.0, 0.0, 0.0, 0.0, 1.0}), unit_roots(4), 1e-12);
}

TEST(OracleRoots, DegreeTooHigh) {
  try {
    oracle_roots(Polynomial(std::vector<C>(8, C{1.0})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooHigh);
  }
}

TEST(CauchyRadius, BoundsEveryRoot) {
  EXPECT_DOUBLE_EQ(cauchy_radius(Polynomial{-6.0, 11.0, -6.0, 1.0}), 12.0);
  testing::Rng rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<C> c(rng.integer(1, 10) + 1);
    for (auto& x : c) x = rng.disk(3.0);
    const Polynomial p(c);
    for (const C r : find_roots(p).roots) EXPECT_LE(std::abs(r), cauchy_radius(p));
  }
}

}  // namespace
}  // namespace mvlab
