#include "ulb/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "root_bracket.hpp"
#include "ulb/error.hpp"
#include "ulb/log.hpp"

namespace ulb {

namespace {

constexpr double kDomainSlack = 1e-12;

void check_dimension(int n) {
  if (n < 2) throw DomainError("dimension n must be >= 2, got " + std::to_string(n));
}

void check_degree(int i) {
  if (i < 0 || i > kMaxDegree) {
    throw DomainError("degree must lie in [0, " + std::to_string(kMaxDegree) +
                      "], got " + std::to_string(i));
  }
}

// (P_{i-1}, P_i) for the Jacobi family, i >= 1.
std::pair<double, double> jacobi_pair(const JacobiParams& p, int i, double t) {
  const double a = p.a;
  const double b = p.b;
  double prev = 1.0;
  double cur = 0.5 * ((a - b) + (a + b + 2.0) * t);
  for (int m = 1; m < i; ++m) {
    const double s = 2.0 * m + a + b;
    const double c1 = 2.0 * (m + 1) * (m + a + b + 1.0) * s;
    const double c2 = (s + 1.0) * (a * a - b * b);
    const double c3 = s * (s + 1.0) * (s + 2.0);
    const double c4 = 2.0 * (m + a) * (m + b) * (s + 2.0);
    const double next = ((c2 + c3 * t) * cur - c4 * prev) / c1;
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

}  // namespace

JacobiParams JacobiParams::gegenbauer(int n) {
  check_dimension(n);
  const double base = 0.5 * (n - 3);
  return {base, base};
}

JacobiParams JacobiParams::adjacent(int n, int da, int db) {
  check_dimension(n);
  const double base = 0.5 * (n - 3);
  return {base + da, base + db};
}

void validate(const JacobiParams& p) {
  if (!(p.a > -1.0) || !(p.b > -1.0)) {
    std::ostringstream os;
    os << "Jacobi exponents must exceed -1, got a=" << p.a << ", b=" << p.b;
    throw DomainError(os.str());
  }
}

double gegenbauer_eval(int n, int i, double t) {
  check_dimension(n);
  check_degree(i);
  if (t < -1.0 - kDomainSlack || t > 1.0 + kDomainSlack || std::isnan(t)) {
    std::ostringstream os;
    os << "Gegenbauer argument outside [-1,1]: t=" << t;
    throw DomainError(os.str());
  }
  if (i == 0) return 1.0;
  double prev = 1.0;
  double cur = t;
  for (int m = 1; m < i; ++m) {
    const double next = ((2.0 * m + n - 2) * t * cur - m * prev) / (m + n - 2.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> gegenbauer_values(int n, int max_degree, double t) {
  check_dimension(n);
  check_degree(max_degree);
  std::vector<double> out(static_cast<std::size_t>(max_degree) + 1);
  out[0] = 1.0;
  if (max_degree >= 1) out[1] = t;
  for (int m = 1; m < max_degree; ++m) {
    out[m + 1] = ((2.0 * m + n - 2) * t * out[m] - m * out[m - 1]) / (m + n - 2.0);
  }
  return out;
}

double gegenbauer_derivative(int n, int i, double t, int order) {
  check_dimension(n);
  check_degree(i);
  if (order == 0) return gegenbauer_eval(n, i, t);
  const JacobiParams p = JacobiParams::gegenbauer(n);
  return derivative_eval(p, i, t, order) / jacobi_at_one(p, i);
}

std::vector<double> gegenbauer_monomial(int n, int i) {
  check_dimension(n);
  check_degree(i);
  std::vector<double> prev{1.0};
  if (i == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (int m = 1; m < i; ++m) {
    std::vector<double> next(cur.size() + 1, 0.0);
    const double scale = (2.0 * m + n - 2) / (m + n - 2.0);
    const double back = m / (m + n - 2.0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += scale * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= back * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double gegenbauer_series_eval(int n, std::span<const double> coeffs, double t) {
  check_dimension(n);
  if (coeffs.empty()) return 0.0;
  // P_{m+1} = alpha_m P_m - beta_m P_{m-1}, with alpha_0 = t and P_{-1} = 0.
  const auto alpha = [&](int m) {
    return m == 0 ? t : (2.0 * m + n - 2) * t / (m + n - 2.0);
  };
  const auto beta = [&](int m) { return m / (m + n - 2.0); };
  double b1 = 0.0;  // b_{m+1}
  double b2 = 0.0;  // b_{m+2}
  for (int m = static_cast<int>(coeffs.size()) - 1; m >= 0; --m) {
    const double bm = coeffs[m] + alpha(m) * b1 - beta(m + 1) * b2;
    b2 = b1;
    b1 = bm;
  }
  return b1;
}

double jacobi_eval(const JacobiParams& p, int i, double t) {
  validate(p);
  check_degree(i);
  if (i == 0) return 1.0;
  return jacobi_pair(p, i, t).second;
}

double jacobi_at_one(const JacobiParams& p, int i) {
  validate(p);
  check_degree(i);
  double v = 1.0;
  for (int m = 1; m <= i; ++m) v *= (p.a + m) / m;
  return v;
}

double derivative_eval(const JacobiParams& p, int i, double t, int order) {
  validate(p);
  check_degree(i);
  if (order < 0) throw DomainError("derivative order must be >= 0");
  if (order > i) return 0.0;
  if (order == 0) return jacobi_eval(p, i, t);
  double factor = 1.0;
  for (int j = 1; j <= order; ++j) factor *= 0.5 * (p.a + p.b + i + j);
  const JacobiParams shifted{p.a + order, p.b + order};
  return factor * jacobi_eval(shifted, i - order, t);
}

namespace {

double root_in(const JacobiParams& p, int degree, double lo, double hi) {
  const auto f = [&](double x) { return jacobi_pair(p, degree, x).second; };
  const auto df = [&](double x) { return derivative_eval(p, degree, x, 1); };
  try {
    return detail::bracketed_root(f, df, lo, hi);
  } catch (const ConvergenceError& e) {
    std::ostringstream os;
    os << "Jacobi root bracketing failed (a=" << p.a << ", b=" << p.b
       << ", degree=" << degree << "): " << e.what();
    throw ConvergenceError(os.str());
  }
}

}  // namespace

std::vector<double> all_roots(const JacobiParams& p, int i) {
  validate(p);
  check_degree(i);
  if (i < 1) throw DomainError("all_roots requires degree >= 1");
  std::vector<double> roots{(p.b - p.a) / (p.a + p.b + 2.0)};
  for (int d = 2; d <= i; ++d) {
    std::vector<double> next;
    next.reserve(static_cast<std::size_t>(d));
    double lo = -1.0;
    for (std::size_t j = 0; j <= roots.size(); ++j) {
      const double hi = j < roots.size() ? roots[j] : 1.0;
      next.push_back(root_in(p, d, lo, hi));
      lo = hi;
    }
    roots = std::move(next);
  }
  for (std::size_t j = 1; j < roots.size(); ++j) {
    if (!(roots[j] > roots[j - 1])) {
      throw ConvergenceError("Jacobi roots are not strictly increasing at degree " +
                             std::to_string(i));
    }
  }
  return roots;
}

double greatest_zero(const JacobiParams& p, int i) {
  validate(p);
  check_degree(i);
  if (i < 1) throw DomainError("greatest_zero requires degree >= 1");
  // The greatest zero of degree d is the only zero above that of degree d-1.
  double r = (p.b - p.a) / (p.a + p.b + 2.0);
  for (int d = 2; d <= i; ++d) r = root_in(p, d, r, 1.0);
  return r;
}

GreatestZeros greatest_zeros(int n, int k) {
  check_dimension(n);
  if (k < 0) throw DomainError("greatest_zeros requires k >= 0");
  GreatestZeros z;
  z.n = n;
  z.k = k;
  if (k == 0) return z;
  z.t_k_10 = greatest_zero(JacobiParams::adjacent(n, 1, 0), k);
  z.t_k_11 = greatest_zero(JacobiParams::adjacent(n, 1, 1), k);
  z.t_k_00 = greatest_zero(JacobiParams::gegenbauer(n), k);
  return z;
}

std::vector<double> gegenbauer_times_linear(int n, std::span<const double> coeffs,
                                            double z) {
  check_dimension(n);
  std::vector<double> out(coeffs.size() + 1, 0.0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double c = coeffs[i];
    if (c == 0.0) continue;
    if (i == 0) {
      out[1] += c;
    } else {
      const double den = 2.0 * i + n - 2;
      out[i + 1] += c * (i + n - 2.0) / den;
      out[i - 1] += c * static_cast<double>(i) / den;
    }
    out[i] -= z * c;
  }
  return out;
}

std::vector<double> to_gegenbauer(int n, std::span<const double> monomial) {
  check_dimension(n);
  if (monomial.empty()) return {};
  // Horner's scheme with multiplication by t carried out in the Gegenbauer basis.
  std::vector<double> g{monomial.back()};
  for (int j = static_cast<int>(monomial.size()) - 2; j >= 0; --j) {
    g = gegenbauer_times_linear(n, g, 0.0);
    g[0] += monomial[j];
  }
  return g;
}

std::vector<double> to_gegenbauer(int n, const Polynomial& p) {
  if (p.gegenbauer() && p.gegenbauer()->n == n) return p.gegenbauer()->coeffs;
  return to_gegenbauer(n, p.monomial());
}

std::vector<double> from_gegenbauer(int n, std::span<const double> coeffs) {
  check_dimension(n);
  if (coeffs.empty()) return {};
  const int deg = static_cast<int>(coeffs.size()) - 1;
  check_degree(deg);
  std::vector<double> out(coeffs.size(), 0.0);
  double scale = 0.0;
  std::vector<double> prev{1.0};
  std::vector<double> cur{0.0, 1.0};
  for (int i = 0; i <= deg; ++i) {
    const std::vector<double>& basis = i == 0 ? prev : cur;
    double basis_max = 0.0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      out[j] += coeffs[i] * basis[j];
      basis_max = std::max(basis_max, std::abs(basis[j]));
    }
    scale = std::max(scale, std::abs(coeffs[i]) * basis_max);
    if (i >= 1 && i < deg) {
      std::vector<double> next(cur.size() + 1, 0.0);
      const double up = (2.0 * i + n - 2) / (i + n - 2.0);
      const double back = i / (i + n - 2.0);
      for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += up * cur[j];
      for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= back * prev[j];
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  double result_max = 0.0;
  for (double c : out) result_max = std::max(result_max, std::abs(c));
  if (result_max > 0.0 && scale / result_max > 1e12) {
    std::ostringstream os;
    os << "ill-conditioned Gegenbauer-to-monomial conversion (degree " << deg
       << ", cancellation ratio " << scale / result_max << ")";
    log_warning(os.str());
  }
  return out;
}

double weighted_mean(int n, const Polynomial& p) {
  const std::vector<double> g = to_gegenbauer(n, p);
  return g.empty() ? 0.0 : g.front();
}

}  // namespace ulb
