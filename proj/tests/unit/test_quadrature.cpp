#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ulb/bounds.hpp"
#include "ulb/codes.hpp"
#include "ulb/error.hpp"
#include "ulb/orthopoly.hpp"
#include "ulb/quadrature.hpp"

using namespace ulb;

namespace {

void expect_rule_invariants(const QuadratureRule& r) {
  ASSERT_EQ(static_cast<int>(r.nodes.size()), r.k);
  ASSERT_EQ(r.nodes.size(), r.weights.size());
  EXPECT_GE(r.nodes.front(), -1.0);
  EXPECT_LT(r.nodes.back(), 1.0);
  EXPECT_EQ(r.nodes.back(), r.s);
  double total = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    if (i) EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
    EXPECT_GT(r.weights[i], 0.0);
    total += r.weights[i];
  }
  EXPECT_NEAR(total, (r.N - 1.0) / r.N, 1e-12);
  if (r.tau % 2 == 0) EXPECT_EQ(r.nodes.front(), -1.0);
  if (r.tau % 2 == 1) EXPECT_GT(r.nodes.front(), -1.0);
  for (int j = 0; j <= r.tau; ++j) EXPECT_LT(std::abs(exactness_residual(r, j)), 1e-9);
}

}  // namespace

TEST(Nodes, OddCaseFourTwentyFour) {
  const double s = *solve_s(classify_tau(4, 24)).s;
  const auto nodes = nodes_odd(4, 3, s);
  ASSERT_EQ(nodes.size(), 3u);
  EXPECT_NEAR(nodes[2], s, 1e-12);
  EXPECT_GT(nodes[0], -1.0);
  // Residual of the defining combination at every node.
  const JacobiParams p = JacobiParams::adjacent(4, 1, 0);
  for (double a : nodes) {
    const double g = jacobi_eval(p, 3, a) * jacobi_eval(p, 2, s) -
                     jacobi_eval(p, 3, s) * jacobi_eval(p, 2, a);
    EXPECT_LT(std::abs(g), 1e-10);
  }
  // Independent zeros of the same combination.
  const auto ref = oracle::grid_roots(
      [&](double t) {
        return jacobi_eval(p, 3, t) * jacobi_eval(p, 2, s) -
               jacobi_eval(p, 3, s) * jacobi_eval(p, 2, t);
      },
      -1.0, 0.999, 200001);
  ASSERT_EQ(ref.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(nodes[i], ref[i], 1e-9);
}

TEST(Nodes, SingleNode) {
  for (int n : {3, 5, 8}) {
    const LevenshteinInterval iv = levenshtein_interval(n, 1);
    const double s = 0.5 * (iv.lo + iv.hi);
    const auto nodes = nodes_odd(n, 1, s);
    ASSERT_EQ(nodes.size(), 1u);
    EXPECT_EQ(nodes[0], s);
  }
}

TEST(Nodes, EvenCase) {
  const auto simplex = nodes_even(3, 2, -1.0 / 3.0);
  ASSERT_EQ(simplex.size(), 2u);
  EXPECT_EQ(simplex[0], -1.0);
  EXPECT_NEAR(simplex[1], -1.0 / 3.0, 1e-15);

  const LevenshteinInterval iv = levenshtein_interval(4, 4);
  const double s = 0.3 * iv.lo + 0.7 * iv.hi;
  const auto nodes = nodes_even(4, 3, s);
  ASSERT_EQ(nodes.size(), 3u);
  EXPECT_EQ(nodes[0], -1.0);
  const JacobiParams p = JacobiParams::adjacent(4, 1, 1);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double g = jacobi_eval(p, 2, nodes[i]) * jacobi_eval(p, 1, s) -
                     jacobi_eval(p, 2, s) * jacobi_eval(p, 1, nodes[i]);
    EXPECT_LT(std::abs(g), 1e-10);
  }
}

TEST(Nodes, EvenTransitionPointIsSymmetric) {
  // At s = t_{k-1}^{1,1} the interior nodes are symmetric.
  for (int n : {3, 4, 7}) {
    for (int k = 3; k <= 5; ++k) {
      const double s = greatest_zeros(n, k - 1).t_k_11;
      const auto nodes = nodes_even(n, k, s);
      EXPECT_NEAR(std::abs(nodes[1]), std::abs(nodes.back()), 1e-10);
    }
  }
}

TEST(Nodes, IntervalChecked) {
  const LevenshteinInterval iv = levenshtein_interval(4, 5);
  EXPECT_THROW(nodes_odd(4, 3, iv.hi + 1e-3), DomainError);
  EXPECT_THROW(nodes_even(4, 3, iv.hi), DomainError);
}

TEST(Weights, SimplexOnTwoSphereDegenerateEvenRule) {
  // The even-degree rule at s = -1/3 puts zero weight on -1; the simplex
  // belongs to tau = 1 with the single node -1/3.
  const auto nodes = nodes_even(3, 2, -1.0 / 3.0);
  try {
    const auto w = weights_for(nodes, 3, 4.0, 2);
    EXPECT_NEAR(w[0], 0.0, 1e-14);
    EXPECT_NEAR(w[1], 0.75, 1e-14);
  } catch (const ConstructionError&) {
    SUCCEED();
  }
  const QuadratureRule r = build_rule(3, 4);
  EXPECT_EQ(r.tau, 1);
  ASSERT_EQ(r.nodes.size(), 1u);
  EXPECT_NEAR(r.nodes[0], -1.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.weights[0], 0.75, 1e-12);
}

TEST(Weights, ResidualsAboveK) {
  const QuadratureRule r = build_rule(4, 24);
  for (int j = 3; j <= 5; ++j) EXPECT_LT(std::abs(exactness_residual(r, j)), 1e-9);
  EXPECT_GT(std::abs(exactness_residual(r, 6)), 1e-3);
}

TEST(Weights, NonpositiveWeightRejected) {
  // Sum rho_i alpha_i = -1/3 cannot hold with both weights positive.
  const std::vector<double> nodes{0.1, 0.9};
  EXPECT_THROW(weights_for(nodes, 4, 3.0, 1), ConstructionError);
  const std::vector<double> unsorted{0.2, -0.1};
  EXPECT_THROW(weights_for(unsorted, 4, 10.0), DomainError);
}

TEST(BuildRule, FourTwentyFour) {
  const QuadratureRule r = build_rule(4, 24);
  EXPECT_EQ(r.tau, 5);
  EXPECT_EQ(r.k, 3);
  expect_rule_invariants(r);
  EXPECT_NEAR(r.nodes[2], 0.4749504897, 1e-9);
  EXPECT_TRUE(node_ordering_holds(r));
}

TEST(BuildRule, TransitionFourTwenty) {
  const QuadratureRule r = build_rule(4, 20);
  EXPECT_EQ(r.tau, 4);
  expect_rule_invariants(r);
  EXPECT_NEAR(r.s, greatest_zeros(4, 2).t_k_11, 1e-12);
  EXPECT_NEAR(std::abs(r.nodes[1]), std::abs(r.nodes[2]), 1e-10);
}

TEST(BuildRule, Antipodal) {
  const QuadratureRule r = build_rule(5, 2);
  EXPECT_EQ(r.tau, 0);
  ASSERT_EQ(r.nodes.size(), 1u);
  EXPECT_EQ(r.nodes[0], -1.0);
  EXPECT_EQ(r.weights[0], 0.5);
}

TEST(BuildRule, ExactnessOnRandomPolynomials) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 14);
    const int N = 3 + static_cast<int>(rng() % 198);
    const QuadratureRule r = build_rule(n, N);
    std::vector<double> mono(static_cast<std::size_t>(r.tau) + 1);
    for (double& c : mono) c = uc(rng);
    const auto f = [&](double t) {
      double acc = 0.0;
      for (auto it = mono.rbegin(); it != mono.rend(); ++it) acc = acc * t + *it;
      return acc;
    };
    const double f0 = oracle::weighted_mean(n, f);
    double rhs = f(1.0) / N;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) rhs += r.weights[i] * f(r.nodes[i]);
    EXPECT_LT(std::abs(f0 - rhs), 1e-8 * (1.0 + std::abs(f0))) << "n=" << n << " N=" << N;
  }
}

TEST(BuildRule, PositiveWeightsOnFullSweeps) {
  for (int n : {3, 4, 5}) {
    for (int tau = 1; tau <= 8; ++tau) {
      const auto lo = dgs_bound(n, tau) + 1;
      const auto hi = dgs_bound(n, tau + 1);
      for (auto N = lo; N <= hi; ++N) {
        const QuadratureRule r = build_rule(n, static_cast<double>(N));
        EXPECT_EQ(r.tau, tau);
        for (double w : r.weights) EXPECT_GT(w, 0.0);
        EXPECT_TRUE(node_ordering_holds(r)) << n << " " << N;
      }
    }
  }
}

TEST(BuildRule, NodesIncreaseWithN) {
  const int n = 4;
  for (int tau = 2; tau <= 6; ++tau) {
    const auto lo = dgs_bound(n, tau) + 1;
    const auto hi = dgs_bound(n, tau + 1);
    QuadratureRule prev = build_rule(n, static_cast<double>(lo));
    for (auto N = lo + 1; N <= hi; ++N) {
      const QuadratureRule cur = build_rule(n, static_cast<double>(N));
      for (std::size_t i = 0; i < cur.nodes.size(); ++i) EXPECT_GE(cur.nodes[i], prev.nodes[i]);
      prev = cur;
    }
  }
}

TEST(BuildRule, AgreesWithConfigurationQuadrature) {
  for (int n = 3; n <= 10; ++n) {
    for (const char* name : {"simplex", "cross"}) {
      const SphericalCode c = builtin_code(name, n);
      const ConfigurationQuadrature q = configuration_quadrature(c);
      const QuadratureRule r = build_rule(n, static_cast<double>(c.size()));
      ASSERT_EQ(q.nodes.size(), r.nodes.size()) << name << " " << n;
      for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        EXPECT_NEAR(q.nodes[i], r.nodes[i], 1e-9);
        EXPECT_NEAR(q.weights[i], r.weights[i], 1e-9);
      }
    }
  }
}

TEST(BuildRule, LowerDegreeRules) {
  for (int m = 1; m <= 5; ++m) {
    const QuadratureRule r = build_rule_for_degree(4, 24, m);
    EXPECT_EQ(r.tau, m);
    for (double w : r.weights) EXPECT_GT(w, 0.0);
    for (int j = 0; j <= m; ++j) EXPECT_LT(std::abs(exactness_residual(r, j)), 1e-9);
  }
}
