#pragma once

#include <span>
#include <vector>

#include "ulb/polynomial.hpp"

namespace ulb {

/// Highest polynomial degree supported by the evaluators and root finders.
inline constexpr int kMaxDegree = 200;

/// Exponents of the Jacobi weight (1-t)^a (1+t)^b.
struct JacobiParams {
  double a = 0.0;
  double b = 0.0;

  /// Exponents (n-3)/2 for both ends: the Gegenbauer family of S^{n-1}.
  static JacobiParams gegenbauer(int n);
  /// Adjacent family: exponents shifted by da, db above (n-3)/2.
  static JacobiParams adjacent(int n, int da, int db);

  bool symmetric() const noexcept { return a == b; }
};

void validate(const JacobiParams& p);

// ---------------------------------------------------------------------------
// Gegenbauer polynomials P_i^{(n)}, normalized by P_i^{(n)}(1) = 1.

/// P_i^{(n)}(t) by the three-term recurrence. Throws DomainError for t
/// outside [-1, 1] beyond 1e-12.
double gegenbauer_eval(int n, int i, double t);

/// P_0^{(n)}(t), ..., P_max^{(n)}(t) in one sweep (no domain check on t).
std::vector<double> gegenbauer_values(int n, int max_degree, double t);

/// d^order/dt^order P_i^{(n)}(t), exact through the Jacobi derivative identity.
double gegenbauer_derivative(int n, int i, double t, int order);

/// Monomial coefficients of P_i^{(n)}.
std::vector<double> gegenbauer_monomial(int n, int i);

/// Sum_i c_i P_i^{(n)}(t) by Clenshaw summation.
double gegenbauer_series_eval(int n, std::span<const double> coeffs, double t);

// ---------------------------------------------------------------------------
// Jacobi polynomials in Szego normalization, P_i^{(a,b)}(1) = binom(i+a, i).

double jacobi_eval(const JacobiParams& p, int i, double t);
double jacobi_at_one(const JacobiParams& p, int i);

/// d^order/dt^order P_i^{(a,b)}(t); zero when order > i.
double derivative_eval(const JacobiParams& p, int i, double t, int order);

/// All i zeros of P_i^{(a,b)}, strictly increasing, found by interlacing
/// brackets from lower degrees, bisection and a Newton polish.
std::vector<double> all_roots(const JacobiParams& p, int i);

/// Greatest zero of P_i^{(a,b)}, i >= 1.
double greatest_zero(const JacobiParams& p, int i);

/// Greatest zeros t_k^{1,0}, t_k^{1,1} of the adjacent Jacobi polynomials and
/// t_k^{0,0} of the Gegenbauer polynomial. For k = 0 all three are -1.
struct GreatestZeros {
  int n = 0;
  int k = 0;
  double t_k_10 = -1.0;
  double t_k_11 = -1.0;
  double t_k_00 = -1.0;
};

GreatestZeros greatest_zeros(int n, int k);

// ---------------------------------------------------------------------------
// Change of basis.

/// Gegenbauer coefficients (f_0, ..., f_d) of the polynomial with the given
/// monomial coefficients.
std::vector<double> to_gegenbauer(int n, std::span<const double> monomial);
std::vector<double> to_gegenbauer(int n, const Polynomial& p);

/// Monomial coefficients of Sum_i c_i P_i^{(n)}.
std::vector<double> from_gegenbauer(int n, std::span<const double> coeffs);

/// Gegenbauer coefficients of (t - z) * p, where p is given by its
/// Gegenbauer coefficients.
std::vector<double> gegenbauer_times_linear(int n, std::span<const double> coeffs,
                                            double z);

/// f_0 = gamma_n * Integral f(t) (1-t^2)^{(n-3)/2} dt.
double weighted_mean(int n, const Polynomial& p);

}  // namespace ulb
