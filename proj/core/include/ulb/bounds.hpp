#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ulb {

/// Delsarte-Goethals-Seidel bound D(n, tau) on the size of spherical
/// tau-designs on S^{n-1}. Exact; throws DomainError on int64 overflow.
std::int64_t dgs_bound(int n, int tau);

/// The closed interval I_tau on which L_tau(n, .) is the Levenshtein bound:
/// [t_{k-1}^{1,1}, t_k^{1,0}] for tau = 2k-1 and [t_k^{1,0}, t_k^{1,1}] for tau = 2k.
struct LevenshteinInterval {
  int tau = 0;
  double lo = -1.0;
  double hi = -1.0;
};

LevenshteinInterval levenshtein_interval(int n, int tau);

/// L_tau(n, s) evaluated from its closed form with no interval check. The
/// formula is smooth away from the zeros of its denominator and is used
/// outside I_tau for lower-degree linear programs.
double levenshtein_formula(int n, int tau, double s);

/// L_tau(n, s) for s in I_tau (validated with 1e-12 slack).
double levenshtein_bound(int n, int tau, double s);

/// tau = tau(n, N) with N in (D(n,tau), D(n,tau+1)], k = ceil((tau+1)/2), and
/// optionally the solution s in I_tau of L_tau(n, s) = N.
struct BoundContext {
  int n = 0;
  double N = 0.0;
  int tau = 0;
  int k = 0;
  std::optional<double> s;
};

/// Requires N > 2 (N = 2 is the antipodal special case handled by callers).
BoundContext classify_tau(int n, double N);

/// Fills ctx.s by bisection on I_tau followed by a Newton polish.
BoundContext solve_s(BoundContext ctx);

/// Solves L_m(n, s) = N for a degree m <= tau(n, N). For m = tau this is
/// solve_s; for m < tau the root lies to the right of I_m, below the first
/// pole of the closed form.
double solve_s_for_degree(int n, double N, int m);

/// tau with s in I_tau (the smallest such tau at shared endpoints).
int locate_tau(int n, double s);

struct CurvePoint {
  double s = 0.0;
  int tau = 0;
  double value = 0.0;
};

/// The continuous Levenshtein function L(n, s) on a grid inside [-1, 1).
std::vector<CurvePoint> levenshtein_curve(int n, std::span<const double> s_grid);

}  // namespace ulb
