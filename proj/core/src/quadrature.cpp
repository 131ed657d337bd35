#include "ulb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "root_bracket.hpp"
#include "ulb/bounds.hpp"
#include "ulb/error.hpp"
#include "ulb/orthopoly.hpp"

namespace ulb {

namespace {

constexpr double kResidualTol = 1e-9;

// The m zeros of P_m(t) P_{m-1}(s) - P_m(s) P_{m-1}(t), one of which is s.
// Zeros of P_{m-1} separate m-2 of them; the last one is located by
// deflating s out and checking the two outer brackets.
std::vector<double> combination_roots(const JacobiParams& p, int m, double s) {
  if (m == 1) return {s};
  const double pm_s = jacobi_eval(p, m, s);
  const double pm1_s = jacobi_eval(p, m - 1, s);
  const auto g = [&](double t) {
    return jacobi_eval(p, m, t) * pm1_s - pm_s * jacobi_eval(p, m - 1, t);
  };
  const auto dg = [&](double t) {
    return derivative_eval(p, m, t, 1) * pm1_s - pm_s * derivative_eval(p, m - 1, t, 1);
  };
  const std::vector<double> sep = all_roots(p, m - 1);
  if (!(s > sep.back())) {
    std::ostringstream os;
    os.precision(17);
    os << "node equation expects s above the greatest separating zero " << sep.back()
       << ", got s=" << s;
    throw ConstructionError(os.str());
  }
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i + 1 < sep.size(); ++i) {
    roots.push_back(detail::bracketed_root(g, dg, sep[i], sep[i + 1]));
  }

  const double dg_s = dg(s);
  const auto deflated = [&](double t) {
    const double d = t - s;
    return std::abs(d) > 1e-7 ? g(t) / d : dg_s;
  };
  const double q_lo = deflated(-1.0);
  const double q_first = deflated(sep.front());
  const double q_last = deflated(sep.back());
  const double q_hi = deflated(1.0);
  const double scale = std::max({std::abs(q_lo), std::abs(q_first), 1e-300});
  if (q_lo == 0.0 || std::abs(q_lo) <= 1e-13 * scale) {
    roots.push_back(-1.0);
  } else if (detail::opposite_signs(q_lo, q_first)) {
    roots.push_back(detail::bracketed_root(g, dg, -1.0, sep.front()));
  } else if (detail::opposite_signs(q_last, q_hi)) {
    const auto dq = [&](double t) { return (deflated(t + 1e-8) - deflated(t - 1e-8)) / 2e-8; };
    roots.push_back(detail::bracketed_root(deflated, dq, sep.back(), 1.0));
  } else {
    std::ostringstream os;
    os.precision(17);
    os << "node equation of degree " << m << " at s=" << s
       << " has a zero outside [-1, 1]";
    throw ConstructionError(os.str());
  }
  roots.push_back(s);
  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (!(roots[i] > roots[i - 1])) {
      throw ConstructionError("quadrature nodes are not distinct");
    }
  }
  return roots;
}

void require_in_interval(int n, int tau, double s) {
  const LevenshteinInterval iv = levenshtein_interval(n, tau);
  if (s < iv.lo - 1e-12 || s > iv.hi + 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "s=" << s << " outside I_" << tau << " = [" << iv.lo << ", " << iv.hi << "]";
    throw DomainError(os.str());
  }
}

void check_node_count(const std::vector<double>& nodes, int k) {
  if (static_cast<int>(nodes.size()) != k) {
    throw ConstructionError("expected " + std::to_string(k) + " quadrature nodes, found " +
                            std::to_string(nodes.size()));
  }
  if (nodes.front() < -1.0 || !(nodes.back() < 1.0)) {
    throw ConstructionError("quadrature nodes leave [-1, 1)");
  }
}

}  // namespace

std::vector<double> nodes_odd(int n, int k, double s) {
  if (k < 1) throw DomainError("nodes_odd requires k >= 1");
  require_in_interval(n, 2 * k - 1, s);
  std::vector<double> nodes = combination_roots(JacobiParams::adjacent(n, 1, 0), k, s);
  check_node_count(nodes, k);
  return nodes;
}

std::vector<double> nodes_even(int n, int k, double s) {
  if (k < 2) throw DomainError("nodes_even requires k >= 2");
  require_in_interval(n, 2 * k - 2, s);
  std::vector<double> nodes{-1.0};
  const std::vector<double> rest =
      combination_roots(JacobiParams::adjacent(n, 1, 1), k - 1, s);
  nodes.insert(nodes.end(), rest.begin(), rest.end());
  check_node_count(nodes, k);
  return nodes;
}

std::vector<double> levenshtein_nodes(int n, int tau, double s) {
  if (tau < 1) throw DomainError("levenshtein_nodes requires tau >= 1");
  if (tau % 2 == 1) {
    const int k = (tau + 1) / 2;
    std::vector<double> nodes = combination_roots(JacobiParams::adjacent(n, 1, 0), k, s);
    check_node_count(nodes, k);
    return nodes;
  }
  const int k = tau / 2 + 1;
  std::vector<double> nodes{-1.0};
  const std::vector<double> rest =
      combination_roots(JacobiParams::adjacent(n, 1, 1), k - 1, s);
  nodes.insert(nodes.end(), rest.begin(), rest.end());
  check_node_count(nodes, k);
  return nodes;
}

std::vector<double> weights_for(std::span<const double> nodes, int n, double N,
                                int check_degree) {
  const int k = static_cast<int>(nodes.size());
  if (k == 0) throw DomainError("weights_for needs at least one node");
  for (int i = 1; i < k; ++i) {
    if (!(nodes[i] > nodes[i - 1])) throw DomainError("nodes must be distinct and sorted");
  }
  const int max_degree = std::max(k - 1, check_degree);
  std::vector<std::vector<double>> values;
  values.reserve(nodes.size());
  for (double a : nodes) values.push_back(gegenbauer_values(n, max_degree, a));

  Eigen::MatrixXd A(k, k);
  Eigen::VectorXd rhs(k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) A(j, i) = values[i][j];
    rhs(j) = (j == 0 ? 1.0 : 0.0) - 1.0 / N;
  }
  const Eigen::VectorXd rho = A.fullPivLu().solve(rhs);
  std::vector<double> weights(rho.data(), rho.data() + k);

  for (int j = 0; j <= max_degree; ++j) {
    double lhs = 0.0;
    for (int i = 0; i < k; ++i) lhs += weights[i] * values[i][j];
    const double residual = lhs - ((j == 0 ? 1.0 : 0.0) - 1.0 / N);
    if (!(std::abs(residual) < kResidualTol)) {
      std::ostringstream os;
      os << "quadrature exactness fails for P_" << j << ": residual " << residual;
      throw ConstructionError(os.str());
    }
  }
  for (int i = 0; i < k; ++i) {
    if (!(weights[i] > 0.0)) {
      std::ostringstream os;
      os.precision(17);
      os << "nonpositive quadrature weight rho_" << (i + 1) << " = " << weights[i]
         << " at node " << nodes[i];
      throw ConstructionError(os.str());
    }
  }
  return weights;
}

double exactness_residual(const QuadratureRule& rule, int j) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * gegenbauer_eval(rule.n, j, rule.nodes[i]);
  }
  return (j == 0 ? 1.0 : 0.0) - 1.0 / rule.N - acc;
}

QuadratureRule build_rule(int n, double N) {
  QuadratureRule rule;
  rule.n = n;
  rule.N = N;
  if (N == 2.0) {
    if (n < 2) throw DomainError("dimension n must be >= 2");
    rule.tau = 0;
    rule.k = 1;
    rule.s = -1.0;
    rule.nodes = {-1.0};
    rule.weights = {0.5};
    return rule;
  }
  const BoundContext ctx = solve_s(classify_tau(n, N));
  rule.tau = ctx.tau;
  rule.k = ctx.k;
  rule.s = *ctx.s;
  rule.nodes = ctx.tau % 2 == 1 ? nodes_odd(n, ctx.k, rule.s) : nodes_even(n, ctx.k, rule.s);
  rule.weights = weights_for(rule.nodes, n, N, ctx.tau);

  double total = 0.0;
  for (double w : rule.weights) total += w;
  if (std::abs(total - (N - 1.0) / N) > 1e-10) {
    throw ConstructionError("quadrature weights do not sum to (N-1)/N");
  }
  return rule;
}

QuadratureRule build_rule_for_degree(int n, double N, int m) {
  const BoundContext ctx = classify_tau(n, N);
  if (m == ctx.tau) return build_rule(n, N);
  QuadratureRule rule;
  rule.n = n;
  rule.N = N;
  rule.tau = m;
  rule.k = (m + 2) / 2;
  rule.s = solve_s_for_degree(n, N, m);
  rule.nodes = levenshtein_nodes(n, m, rule.s);
  rule.weights = weights_for(rule.nodes, n, N, m);
  return rule;
}

bool node_ordering_holds(const QuadratureRule& rule, double tol) {
  const int k = static_cast<int>(rule.nodes.size());
  if (k == 0) return false;
  const bool lobatto = rule.tau % 2 == 0;
  std::vector<int> order;
  int lo = 0;
  int hi = k - 1;
  if (lobatto) {
    if (std::abs(rule.nodes[0] + 1.0) > tol) return false;
    order.push_back(0);
    lo = 1;
  }
  bool take_lo = true;
  while (lo <= hi) {
    order.push_back(take_lo ? lo++ : hi--);
    take_lo = !take_lo;
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (std::abs(rule.nodes[order[i]]) > std::abs(rule.nodes[order[i - 1]]) + tol) {
      return false;
    }
  }
  return true;
}

}  // namespace ulb
