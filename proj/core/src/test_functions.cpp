#include "ulb/test_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ulb/error.hpp"
#include "ulb/orthopoly.hpp"

namespace ulb {

namespace {

constexpr int kEpsGrid = 2000;
constexpr int kEpsRefinedGrid = 20000;
constexpr double kEpsUpper = 1.0 - 1e-6;

double grid_point(int g, int points) { return -1.0 + (kEpsUpper + 1.0) * g / (points - 1); }

// True when h - eps P_j has nonnegative derivatives of orders 0..j on the grid.
bool shifted_abs_monotone(const Potential& h, int n, int j, double eps, int points) {
  for (int g = 0; g < points; ++g) {
    const double t = grid_point(g, points);
    for (int i = 0; i <= j; ++i) {
      if (h.deriv(t, i) - eps * gegenbauer_derivative(n, j, t, i) < 0.0) return false;
    }
  }
  return true;
}

Improvement build_improvement(const QuadratureRule& rule, const Potential& h, int j,
                              double eps, double base, double q_j) {
  const int n = rule.n;
  const auto shifted = [&](double t, int i) {
    return h.deriv(t, i) - eps * gegenbauer_derivative(n, j, t, i);
  };
  const HermiteInterpolant g = hermite_interpolant(rule, shifted);
  std::vector<double> coeffs;
  if (g.poly.gegenbauer()) coeffs = g.poly.gegenbauer()->coeffs;
  if (static_cast<int>(coeffs.size()) <= j) coeffs.resize(static_cast<std::size_t>(j) + 1, 0.0);
  coeffs[static_cast<std::size_t>(j)] += eps;

  Improvement out;
  out.j = j;
  out.q_j = q_j;
  out.base = base;
  out.epsilon = eps;
  out.value = base - eps * rule.N * rule.N * q_j;
  out.polynomial = Polynomial::from_gegenbauer(n, std::move(coeffs));
  out.certificate = certify_feasibility(
      out.polynomial, [&h](double t, int i) { return h.deriv(t, i); }, n, rule.nodes);
  const double lp = lp_value_of(out.polynomial, n, rule.N);
  out.identity_residual = std::abs(lp - out.value) / std::max(1.0, std::abs(out.value));
  out.certified = out.certificate.ok() && out.identity_residual < 1e-9;
  return out;
}

}  // namespace

double test_function(const QuadratureRule& rule, int j) {
  if (j < 0) throw DomainError("test function degree must be nonnegative");
  double acc = 1.0 / rule.N;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * gegenbauer_eval(rule.n, j, rule.nodes[i]);
  }
  return acc;
}

std::vector<double> test_functions(const QuadratureRule& rule, int j_max) {
  std::vector<double> q(static_cast<std::size_t>(j_max) + 1, 1.0 / rule.N);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const std::vector<double> p = gegenbauer_values(rule.n, j_max, rule.nodes[i]);
    for (int j = 0; j <= j_max; ++j) q[j] += rule.weights[i] * p[j];
  }
  return q;
}

double emn_envelope(int n, int j, double t) {
  if (n < 3) throw DomainError("emn_envelope requires n >= 3");
  if (j < 0) throw DomainError("emn_envelope requires j >= 0");
  if (!(std::abs(t) < 1.0)) throw DomainError("emn_envelope requires |t| < 1");
  const double nn = n;
  const double jj = j;
  const double log_inner = (nn - 2.0) * std::numbers::ln2 + 1.0 +
                           std::log(4.0 + (nn - 3.0) * std::numbers::sqrt2) +
                           std::lgamma(jj + 1.0) - std::log(std::numbers::pi) -
                           std::log(2.0 * jj + nn - 2.0) - std::lgamma(jj + nn - 2.0);
  const double log_value =
      std::lgamma((nn - 1.0) / 2.0) - (nn - 2.0) / 4.0 * std::log1p(-t * t) + 0.5 * log_inner;
  return std::exp(log_value);
}

J0Selection j0_selection(const QuadratureRule& rule) {
  if (rule.N <= 2.0 || rule.nodes.empty()) {
    throw DomainError("j0 is defined for N > 2");
  }
  J0Selection sel;
  if (rule.nodes[0] > -1.0) {
    sel.selection_case = 1;
    sel.t_star = rule.nodes[0];
    sel.threshold = 1.0 / (rule.N - 1.0);
  } else {
    if (rule.nodes.size() < 2) throw DomainError("j0 needs a second node when alpha_1 = -1");
    sel.t_star = rule.nodes[1];
    if (std::abs(rule.weights[0] - 1.0 / rule.N) <= 1e-12) {
      sel.selection_case = 3;
      sel.threshold = 2.0 / (rule.N - 2.0);
    } else {
      sel.selection_case = 2;
      sel.threshold = 1.0 / (rule.N - 1.0);
    }
  }
  constexpr int kCap = 1000000;
  for (int j = rule.tau + 1; j < kCap; ++j) {
    if (emn_envelope(rule.n, j, sel.t_star) < sel.threshold) {
      sel.j0 = j;
      return sel;
    }
  }
  throw ConvergenceError("j0 search exceeded degree cap");
}

int j0_cutoff(int n, double N) { return j0_selection(build_rule(n, N)).j0; }

TestFunctionScan lp_optimality_verdict(int n, double N, int j_max_extra, double negative_tol) {
  TestFunctionScan scan;
  scan.rule = build_rule(n, N);
  scan.ctx = BoundContext{n, N, scan.rule.tau, scan.rule.k, scan.rule.s};
  scan.j_first = scan.rule.tau + 1;
  int last = scan.rule.tau + std::max(j_max_extra, 1);
  if (N > 2.0) {
    scan.j0 = j0_selection(scan.rule);
    last = std::max(last, scan.j0->j0 - 1);
  }
  scan.j_last = std::max(last, scan.j_first);
  const std::vector<double> q = test_functions(scan.rule, scan.j_last);
  scan.values.assign(q.begin() + scan.j_first, q.end());
  for (int j = scan.j_first; j <= scan.j_last; ++j) {
    const double v = q[static_cast<std::size_t>(j)];
    if (v < -negative_tol) {
      scan.negative_js.push_back(j);
      if (!scan.j0 || j < scan.j0->j0) scan.all_nonneg_upto_j0 = false;
    } else if (v <= negative_tol) {
      scan.indeterminate_js.push_back(j);
    }
  }
  scan.verdict = scan.negative_js.empty() ? LpVerdict::lp_optimal : LpVerdict::improvable;
  return scan;
}

Improvement improve_with_epsilon(int n, double N, const Potential& h, int j, double eps) {
  if (eps < 0.0) throw DomainError("epsilon must be nonnegative");
  const QuadratureRule rule = build_rule(n, N);
  if (j <= rule.tau) throw DomainError("improvement degree must exceed tau");
  const UlbReport base = ulb_for_rule(rule, h);
  return build_improvement(rule, h, j, eps, base.value, test_function(rule, j));
}

Improvement improve_bound(int n, double N, const Potential& h, int j) {
  if (!h.strictly_abs_monotone()) {
    throw DomainError("improvement requires a strictly absolutely monotone potential");
  }
  const QuadratureRule rule = build_rule(n, N);
  if (j <= rule.tau) throw DomainError("improvement degree must exceed tau");
  const double q_j = test_function(rule, j);
  if (!(q_j < -kNegativeTol)) {
    std::ostringstream os;
    os.precision(12);
    os << "Q_" << j << " = " << q_j << " is not negative; no improvement at this degree";
    throw DomainError(os.str());
  }
  const UlbReport base = ulb_for_rule(rule, h);

  // Largest eps for which every sampled derivative of h - eps P_j stays
  // nonnegative on the coarse grid.
  double eps_hi = std::numeric_limits<double>::infinity();
  for (int g = 0; g < kEpsGrid; ++g) {
    const double t = grid_point(g, kEpsGrid);
    for (int i = 0; i <= j; ++i) {
      const double dp = std::max(std::abs(gegenbauer_derivative(n, j, t, i)), 1e-300);
      eps_hi = std::min(eps_hi, h.deriv(t, i) / dp);
    }
  }
  if (!(eps_hi > 0.0)) {
    throw ConstructionError("no positive epsilon keeps h - eps P_j absolutely monotone");
  }

  // Confirm on a finer grid, bisecting downwards if needed.
  double eps = eps_hi;
  if (!shifted_abs_monotone(h, n, j, eps, kEpsRefinedGrid)) {
    double lo = 0.0;
    double hi = eps_hi;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (shifted_abs_monotone(h, n, j, mid, kEpsRefinedGrid) ? lo : hi) = mid;
    }
    eps = lo;
  }

  for (int attempt = 0; attempt < 30 && eps > 0.0; ++attempt) {
    Improvement out = build_improvement(rule, h, j, eps, base.value, q_j);
    if (out.certified) return out;
    eps *= 0.5;
  }
  throw ConstructionError("epsilon search failed to produce a certified improvement");
}

double k1(int n) {
  if (n < 2) throw DomainError("k1 requires n >= 2");
  return std::sqrt(static_cast<double>(n - 2));
}

int k2(int n) {
  for (int k = 9;; ++k) {
    const double kk = k;
    const double rad = kk * kk * kk * kk - 8 * kk * kk * kk - 6 * kk * kk + 24 * kk + 25;
    if (4.0 * n <= kk * kk - 4 * kk + 5 + std::sqrt(rad)) return k;
  }
}

}  // namespace ulb
