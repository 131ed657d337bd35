#include "ulb/energy_bound.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ulb/error.hpp"
#include "ulb/log.hpp"
#include "ulb/orthopoly.hpp"

namespace ulb {

namespace {

constexpr int kGridPoints = 10000;
constexpr double kViolationTol = 1e-9;
constexpr double kCoeffTol = -1e-10;
constexpr double kIdentityTol = 1e-9;

double eval_poly(const Polynomial& f, int n, double t) {
  const auto& g = f.gegenbauer();
  if (g && g->n == n) return gegenbauer_series_eval(n, g->coeffs, t);
  return f(t);
}

std::vector<double> gegenbauer_of(const Polynomial& f, int n) {
  const auto& g = f.gegenbauer();
  if (g && g->n == n) return g->coeffs;
  return to_gegenbauer(n, f.monomial());
}

}  // namespace

HermiteInterpolant hermite_interpolant(const QuadratureRule& rule, const Potential& h) {
  return hermite_interpolant(rule, [&h](double t, int i) { return h.deriv(t, i); });
}

HermiteInterpolant hermite_interpolant(const QuadratureRule& rule, const DerivativeFn& h) {
  HermiteInterpolant out;
  out.nodes = rule.nodes;
  const bool lobatto = rule.tau % 2 == 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    out.multiplicity.push_back(lobatto && i == 0 ? 1 : 2);
  }

  // Divided differences over the node sequence with repeats.
  std::vector<double> z;
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    for (int m = 0; m < out.multiplicity[i]; ++m) z.push_back(out.nodes[i]);
  }
  const std::size_t len = z.size();
  std::vector<double> column(len);
  for (std::size_t i = 0; i < len; ++i) column[i] = h(z[i], 0);
  std::vector<double> newton{column[0]};
  for (std::size_t order = 1; order < len; ++order) {
    for (std::size_t i = len - 1; i >= order; --i) {
      const double dz = z[i] - z[i - order];
      column[i] = dz == 0.0 ? h(z[i], 1) : (column[i] - column[i - 1]) / dz;
    }
    newton.push_back(column[order]);
  }

  // Expand the Newton form in both bases independently.
  std::vector<double> mono{newton.back()};
  std::vector<double> geg{newton.back()};
  for (std::size_t j = len - 1; j-- > 0;) {
    std::vector<double> next(mono.size() + 1, 0.0);
    for (std::size_t c = 0; c < mono.size(); ++c) {
      next[c + 1] += mono[c];
      next[c] -= z[j] * mono[c];
    }
    next[0] += newton[j];
    mono = std::move(next);
    geg = gegenbauer_times_linear(rule.n, geg, z[j]);
    geg[0] += newton[j];
  }
  out.poly = Polynomial::from_both(std::move(mono), rule.n, std::move(geg));
  return out;
}

Feasibility certify_feasibility(const Polynomial& f, const DerivativeFn& h, int n,
                                std::span<const double> nodes) {
  std::vector<double> grid;
  grid.reserve(kGridPoints + 2 * nodes.size());
  for (int g = 0; g < kGridPoints; ++g) grid.push_back(-1.0 + 2.0 * g / (kGridPoints - 1));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    grid.push_back(nodes[i]);
    if (i + 1 < nodes.size()) grid.push_back(0.5 * (nodes[i] + nodes[i + 1]));
  }

  Feasibility out;
  bool first = true;
  for (double t : grid) {
    const double ht = h(t, 0);
    if (std::isinf(ht)) continue;
    const double v = (eval_poly(f, n, t) - ht) / std::max(1.0, std::abs(ht));
    if (first || v > out.max_violation) {
      out.max_violation = v;
      out.worst_t = t;
      first = false;
    }
  }
  out.f_le_h = out.max_violation <= kViolationTol;

  const std::vector<double> coeffs = gegenbauer_of(f, n);
  out.gegenbauer_nonneg = true;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (out.worst_coeff_index < 0 || coeffs[i] < out.worst_coeff) {
      out.worst_coeff = coeffs[i];
      out.worst_coeff_index = static_cast<int>(i);
    }
  }
  if (out.worst_coeff_index >= 0 && out.worst_coeff < kCoeffTol) out.gegenbauer_nonneg = false;
  return out;
}

Feasibility certify_feasibility(const HermiteInterpolant& f, const Potential& h, int n) {
  return certify_feasibility(f.poly, [&h](double t, int i) { return h.deriv(t, i); }, n,
                             f.nodes);
}

double lp_value_of(const Polynomial& f, int n, double N) {
  const std::vector<double> coeffs = gegenbauer_of(f, n);
  const double f0 = coeffs.empty() ? 0.0 : coeffs[0];
  double f1 = 0.0;
  for (double c : coeffs) f1 += c;  // P_i(1) = 1
  return N * (f0 * N - f1);
}

UlbReport ulb_for_rule(const QuadratureRule& rule, const Potential& h) {
  UlbReport r;
  r.rule = rule;
  r.ctx = BoundContext{rule.n, rule.N, rule.tau, rule.k, rule.s};
  r.potential = h.name();
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * h(rule.nodes[i]);
  r.value = rule.N * rule.N * acc;
  r.interpolant = hermite_interpolant(rule, h);
  r.feasibility = certify_feasibility(r.interpolant, h, rule.n);
  r.lp_value = lp_value_of(r.interpolant.poly, rule.n, rule.N);
  r.identity_residual = std::abs(r.lp_value - r.value) / std::max(1.0, std::abs(r.value));
  r.verified = r.feasibility.ok() && r.identity_residual < kIdentityTol;
  if (!r.verified) {
    std::ostringstream os;
    os.precision(10);
    os << "bound for (n=" << rule.n << ", N=" << rule.N << ", " << h.name()
       << ") is unverified: max violation " << r.feasibility.max_violation << " at t="
       << r.feasibility.worst_t << ", smallest coefficient f_"
       << r.feasibility.worst_coeff_index << "=" << r.feasibility.worst_coeff
       << ", identity residual " << r.identity_residual;
    log_warning(os.str());
  }
  return r;
}

UlbReport compute_ulb(int n, double N, const Potential& h, bool enforce_monotone) {
  const QuadratureRule rule = build_rule(n, N);
  const int max_order = std::min(rule.tau + 1, 30);
  const int min_order = h.nonnegative() || h.kind() == PotentialKind::custom ? 0 : 1;
  const MonotonicityReport mono = check_abs_monotone(h, max_order, min_order);
  if (!mono.ok) {
    std::ostringstream os;
    os.precision(10);
    os << "potential " << h.name() << " is not absolutely monotone up to order " << max_order
       << ": derivative of order " << mono.worst_order << " is " << mono.worst_value
       << " at t=" << mono.worst_t;
    if (enforce_monotone) throw DomainError(os.str());
    log_warning(os.str());
  }
  return ulb_for_rule(rule, h);
}

UlbReport suboptimal_lp(int n, double N, int m, const Potential& h) {
  const BoundContext ctx = classify_tau(n, N);
  if (m < 1 || m > ctx.tau) {
    throw DomainError("degree m must satisfy 1 <= m <= tau(n, N) = " + std::to_string(ctx.tau));
  }
  return ulb_for_rule(build_rule_for_degree(n, N, m), h);
}

}  // namespace ulb
