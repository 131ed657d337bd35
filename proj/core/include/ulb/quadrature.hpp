#pragma once

#include <span>
#include <vector>

namespace ulb {

/// Levenshtein 1/N-quadrature rule
///   f_0 = f(1)/N + Sum_i rho_i f(alpha_i)   for all f of degree <= tau,
/// with -1 <= alpha_1 < ... < alpha_k = s < 1 and positive weights.
///
/// The antipodal pair (N = 2) is represented as tau = 0 with the single node
/// -1 of weight 1/2.
struct QuadratureRule {
  int n = 0;
  double N = 0.0;
  int tau = 0;
  int k = 0;
  double s = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes for odd tau = 2k-1: zeros of
///   P_k(t) P_{k-1}(s) - P_k(s) P_{k-1}(t),  P_i = P_i^{((n-1)/2, (n-3)/2)}.
/// Requires s in I_{2k-1}.
std::vector<double> nodes_odd(int n, int k, double s);

/// Nodes for even tau = 2k-2: -1 followed by the zeros of
///   P_{k-1}(t) P_{k-2}(s) - P_{k-1}(s) P_{k-2}(t),  P_i = P_i^{((n-1)/2, (n-1)/2)}.
/// Requires s in I_{2k-2}.
std::vector<double> nodes_even(int n, int k, double s);

/// Nodes for degree tau at s without checking s against I_tau. Used for the
/// lower-degree linear programs, whose s lies to the right of I_tau.
std::vector<double> levenshtein_nodes(int n, int tau, double s);

/// Weights solving Sum_i rho_i P_j(alpha_i) = delta_{j0} - 1/N for
/// j = 0..k-1. Degrees k..check_degree are verified as residuals (< 1e-9).
/// Throws ConstructionError on a nonpositive weight or a residual failure.
std::vector<double> weights_for(std::span<const double> nodes, int n, double N,
                                int check_degree = -1);

/// f_0 - f(1)/N - Sum_i rho_i f(alpha_i) for f = P_j^{(n)}.
double exactness_residual(const QuadratureRule& rule, int j);

/// The rule for (n, N); N = 2 gives the antipodal rule.
QuadratureRule build_rule(int n, double N);

/// Rule of the degree-m linear program (m <= tau(n, N)), with nodes
/// determined by L_m(n, s) = N.
QuadratureRule build_rule_for_degree(int n, double N, int m);

/// Checks the ordering of |alpha_i| that the Levenshtein nodes satisfy:
///   even tau: 1 = |alpha_1| > |alpha_2| >= |alpha_k| >= |alpha_3| >= ...
///   odd tau:  |alpha_1| > |alpha_k| >= |alpha_2| >= |alpha_{k-1}| >= ...
bool node_ordering_holds(const QuadratureRule& rule, double tol = 1e-10);

}  // namespace ulb
