#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ulb/bounds.hpp"
#include "ulb/polynomial.hpp"
#include "ulb/potentials.hpp"
#include "ulb/quadrature.hpp"

namespace ulb {

/// (t, i) -> i-th derivative of the function being interpolated or bounded.
using DerivativeFn = std::function<double(double, int)>;

/// Hermite interpolant of h at the quadrature nodes. A node of multiplicity 2
/// matches value and first derivative; a node of multiplicity 1 (only -1 for
/// even tau) matches the value.
struct HermiteInterpolant {
  Polynomial poly;
  std::vector<double> nodes;
  std::vector<int> multiplicity;
};

HermiteInterpolant hermite_interpolant(const QuadratureRule& rule, const Potential& h);
HermiteInterpolant hermite_interpolant(const QuadratureRule& rule, const DerivativeFn& h);

/// Outcome of the two LP-feasibility checks on a polynomial f:
///   f <= h on a grid of [-1, 1], and Gegenbauer coefficients f_1.. >= -1e-10.
struct Feasibility {
  bool f_le_h = false;
  bool gegenbauer_nonneg = false;
  /// Largest (f - h) / max(1, |h|) over the grid; negative when f < h
  /// everywhere.
  double max_violation = 0.0;
  double worst_t = 0.0;
  /// Index and value of the smallest Gegenbauer coefficient f_i, i >= 1.
  int worst_coeff_index = -1;
  double worst_coeff = 0.0;

  bool ok() const noexcept { return f_le_h && gegenbauer_nonneg; }
};

/// Grid of 10^4 uniform points plus the given nodes and the midpoints
/// between consecutive nodes. Points where h is infinite are skipped.
Feasibility certify_feasibility(const Polynomial& f, const DerivativeFn& h, int n,
                                std::span<const double> nodes = {});
Feasibility certify_feasibility(const HermiteInterpolant& f, const Potential& h, int n);

/// LP objective N^2 (f_0 - f(1)/N) = N (f_0 N - f(1)).
double lp_value_of(const Polynomial& f, int n, double N);

struct UlbReport {
  BoundContext ctx;
  QuadratureRule rule;
  std::string potential;
  /// N^2 Sum_i rho_i h(alpha_i).
  double value = 0.0;
  HermiteInterpolant interpolant;
  Feasibility feasibility;
  /// lp_value_of(interpolant) and its relative distance from value.
  double lp_value = 0.0;
  double identity_residual = 0.0;
  /// Feasibility holds and the identity residual is below 1e-9.
  bool verified = false;
};

/// Universal lower bound R_tau(n, N; h) with its certificate. When
/// enforce_monotone is set, a potential failing check_abs_monotone up to
/// order tau+1 is rejected with DomainError; otherwise a warning is logged.
/// Order 0 is not checked for potentials that are negative by design
/// (log, fejes_toth).
UlbReport compute_ulb(int n, double N, const Potential& h, bool enforce_monotone = true);

/// Optimum of the degree-m linear program, 1 <= m <= tau(n, N), from the
/// Hermite interpolant at the nodes of L_m(n, s) = N.
UlbReport suboptimal_lp(int n, double N, int m, const Potential& h);

/// Report for an already constructed rule.
UlbReport ulb_for_rule(const QuadratureRule& rule, const Potential& h);

}  // namespace ulb
