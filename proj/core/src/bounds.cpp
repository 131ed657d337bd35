#include "ulb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "root_bracket.hpp"
#include "ulb/error.hpp"
#include "ulb/orthopoly.hpp"

namespace ulb {

namespace {

constexpr double kIntervalSlack = 1e-12;
constexpr double kDenominatorFloor = 1e-14;

std::int64_t binomial_exact(std::int64_t m, std::int64_t r) {
  if (r < 0 || m < r) return 0;
  r = std::min(r, m - r);
  std::int64_t acc = 1;
  for (std::int64_t j = 1; j <= r; ++j) {
    // acc * (m - r + j) / j is an integer; divide first to delay overflow.
    const std::int64_t g = std::gcd(acc, j);
    const std::int64_t factor = (m - r + j) / (j / g);
    if (__builtin_mul_overflow(acc / g, factor, &acc)) {
      throw DomainError("binomial coefficient overflows int64: C(" + std::to_string(m) +
                        ", " + std::to_string(r) + ")");
    }
  }
  return acc;
}

double binomial_real(int m, int r) {
  if (r < 0 || m < r) return 0.0;
  r = std::min(r, m - r);
  double acc = 1.0;
  for (int j = 1; j <= r; ++j) acc = acc * (m - r + j) / j;
  return acc;
}

struct FormulaParts {
  double value = 0.0;
  double denominator = 0.0;
};

FormulaParts levenshtein_parts(int n, int tau, double s) {
  if (n < 2) throw DomainError("dimension n must be >= 2");
  if (tau < 1) throw DomainError("tau must be >= 1");
  const double nm1 = n - 1.0;
  FormulaParts out;
  if (tau % 2 == 1) {
    const int k = (tau + 1) / 2;
    const std::vector<double> P = gegenbauer_values(n, k, s);
    out.denominator = (1.0 - s) * P[k];
    if (std::abs(out.denominator) < kDenominatorFloor) return out;
    out.value = binomial_real(k + n - 3, k - 1) *
                ((2.0 * k + n - 3) / nm1 - (P[k - 1] - P[k]) / out.denominator);
  } else {
    const int k = tau / 2;
    const std::vector<double> P = gegenbauer_values(n, k + 1, s);
    out.denominator = (1.0 - s) * (P[k] + P[k + 1]);
    if (std::abs(out.denominator) < kDenominatorFloor) return out;
    out.value = binomial_real(k + n - 2, k) *
                ((2.0 * k + n - 1) / nm1 - (1.0 + s) * (P[k] - P[k + 1]) / out.denominator);
  }
  return out;
}

double interval_hi(int n, int tau) {
  const int k = (tau + 1) / 2;
  return tau % 2 == 1 ? greatest_zero(JacobiParams::adjacent(n, 1, 0), k)
                      : greatest_zero(JacobiParams::adjacent(n, 1, 1), k);
}

}  // namespace

std::int64_t dgs_bound(int n, int tau) {
  if (n < 2) throw DomainError("dimension n must be >= 2");
  if (tau < 0) throw DomainError("tau must be >= 0");
  if (tau % 2 == 1) {
    const int k = (tau + 1) / 2;
    const std::int64_t c = binomial_exact(n + k - 2, n - 1);
    if (c > std::numeric_limits<std::int64_t>::max() / 2) {
      throw DomainError("D(n,tau) overflows int64");
    }
    return 2 * c;
  }
  const int k = tau / 2;
  const std::int64_t a = binomial_exact(n + k - 1, n - 1);
  const std::int64_t b = binomial_exact(n + k - 2, n - 1);
  if (a > std::numeric_limits<std::int64_t>::max() - b) {
    throw DomainError("D(n,tau) overflows int64");
  }
  return a + b;
}

LevenshteinInterval levenshtein_interval(int n, int tau) {
  if (tau < 1) throw DomainError("tau must be >= 1");
  LevenshteinInterval iv;
  iv.tau = tau;
  if (tau % 2 == 1) {
    const int k = (tau + 1) / 2;
    iv.lo = k == 1 ? -1.0 : greatest_zero(JacobiParams::adjacent(n, 1, 1), k - 1);
    iv.hi = greatest_zero(JacobiParams::adjacent(n, 1, 0), k);
  } else {
    const int k = tau / 2;
    iv.lo = greatest_zero(JacobiParams::adjacent(n, 1, 0), k);
    iv.hi = greatest_zero(JacobiParams::adjacent(n, 1, 1), k);
  }
  return iv;
}

double levenshtein_formula(int n, int tau, double s) {
  if (!(s >= -1.0 - kIntervalSlack) || !(s < 1.0)) {
    std::ostringstream os;
    os << "Levenshtein bound needs s in [-1, 1), got " << s;
    throw DomainError(os.str());
  }
  const FormulaParts parts = levenshtein_parts(n, tau, s);
  if (std::abs(parts.denominator) < kDenominatorFloor) {
    std::ostringstream os;
    os << "near-zero denominator " << parts.denominator << " in L_" << tau << "(" << n
       << ", " << s << ")";
    throw DomainError(os.str());
  }
  return parts.value;
}

double levenshtein_bound(int n, int tau, double s) {
  const LevenshteinInterval iv = levenshtein_interval(n, tau);
  if (s < iv.lo - kIntervalSlack || s > iv.hi + kIntervalSlack) {
    std::ostringstream os;
    os.precision(17);
    os << "s=" << s << " outside I_" << tau << " = [" << iv.lo << ", " << iv.hi << "]";
    throw DomainError(os.str());
  }
  return levenshtein_formula(n, tau, s);
}

BoundContext classify_tau(int n, double N) {
  if (n < 2) throw DomainError("dimension n must be >= 2");
  if (!std::isfinite(N) || !(N > 2.0)) {
    std::ostringstream os;
    os << "cardinality must exceed 2 (N = 2 is the antipodal case), got " << N;
    throw DomainError(os.str());
  }
  for (int tau = 1; tau <= 2 * kMaxDegree; ++tau) {
    const double lower = static_cast<double>(dgs_bound(n, tau));
    const double upper = static_cast<double>(dgs_bound(n, tau + 1));
    if (N > lower && N <= upper) {
      BoundContext ctx;
      ctx.n = n;
      ctx.N = N;
      ctx.tau = tau;
      ctx.k = (tau + 2) / 2;  // ceil((tau+1)/2)
      return ctx;
    }
  }
  throw DomainError("cardinality too large for the supported degree range");
}

BoundContext solve_s(BoundContext ctx) {
  const int n = ctx.n;
  const int tau = ctx.tau;
  const double N = ctx.N;
  const LevenshteinInterval iv = levenshtein_interval(n, tau);
  if (N >= static_cast<double>(dgs_bound(n, tau + 1))) {
    ctx.s = iv.hi;
    return ctx;
  }
  const auto f = [&](double s) { return levenshtein_formula(n, tau, s) - N; };
  double lo = iv.lo;
  double hi = iv.hi;
  double flo = f(lo);
  const double fhi = f(hi);
  if (!detail::opposite_signs(flo, fhi)) {
    std::ostringstream os;
    os << "L_" << tau << "(" << n << ", s) = " << N << " is not bracketed by I_" << tau
       << ": f(lo)=" << flo << ", f(hi)=" << fhi;
    throw ConvergenceError(os.str());
  }
  for (int it = 0; it < 50; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if (detail::opposite_signs(flo, fm)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  double s = 0.5 * (lo + hi);
  double fs = f(s);
  // Newton polish with a central-difference slope.
  for (int it = 0; it < 8 && fs != 0.0; ++it) {
    const double h = 1e-7 * std::max(1e-3, iv.hi - iv.lo);
    const double a = std::max(iv.lo, s - h);
    const double b = std::min(iv.hi, s + h);
    const double slope = (f(b) - f(a)) / (b - a);
    if (!(slope > 0.0)) break;
    const double next = std::clamp(s - fs / slope, iv.lo, iv.hi);
    const double fnext = f(next);
    if (std::abs(fnext) >= std::abs(fs)) break;
    s = next;
    fs = fnext;
  }
  if (std::abs(fs) > 1e-9 * N) {
    std::ostringstream os;
    os << "solve_s residual " << fs << " exceeds 1e-9*N for (n,N)=(" << n << "," << N << ")";
    throw ConvergenceError(os.str());
  }
  ctx.s = s;
  return ctx;
}

double solve_s_for_degree(int n, double N, int m) {
  const BoundContext ctx = classify_tau(n, N);
  if (m < 1 || m > ctx.tau) {
    throw DomainError("degree m must lie in [1, tau(n,N)] = [1, " +
                      std::to_string(ctx.tau) + "], got " + std::to_string(m));
  }
  if (m == ctx.tau) return *solve_s(ctx).s;

  const LevenshteinInterval iv = levenshtein_interval(n, m);
  const auto parts = [&](double s) { return levenshtein_parts(n, m, s); };
  const FormulaParts at_hi = parts(iv.hi);
  const double den_sign = at_hi.denominator;
  const int steps = 8192;
  const double step = (1.0 - iv.hi) / steps;
  double prev = iv.hi;
  for (int g = 1; g < steps; ++g) {
    const double s = iv.hi + g * step;
    const FormulaParts p = parts(s);
    if (detail::opposite_signs(p.denominator, den_sign) || p.denominator == 0.0) {
      // Crossed the pole: the root lies between prev and the pole.
      const auto den = [&](double x) { return parts(x).denominator; };
      const double pole = detail::bracketed_root(
          den, [&](double x) { return (den(x + 1e-9) - den(x - 1e-9)) / 2e-9; }, prev, s);
      // L_m grows without bound towards the pole; approach it geometrically.
      double right = prev;
      bool bracketed = false;
      for (double gap = 0.5 * (pole - prev); gap > 0.0 && !bracketed; gap *= 0.5) {
        right = pole - gap;
        const FormulaParts q = parts(right);
        bracketed = std::abs(q.denominator) >= kDenominatorFloor && q.value - N > 0.0;
        if (gap < 1e-15) break;
      }
      if (!bracketed) break;
      const auto f = [&](double x) { return levenshtein_formula(n, m, x) - N; };
      return detail::bracketed_root(
          f, [&](double x) { return (f(x + 1e-9) - f(x - 1e-9)) / 2e-9; }, prev, right,
          1e-15);
    }
    if (p.value - N >= 0.0) {
      const auto f = [&](double x) { return levenshtein_formula(n, m, x) - N; };
      return detail::bracketed_root(
          f, [&](double x) { return (f(x + 1e-9) - f(x - 1e-9)) / 2e-9; }, prev, s, 1e-15);
    }
    prev = s;
  }
  std::ostringstream os;
  os << "L_" << m << "(" << n << ", s) = " << N << " has no solution right of I_" << m;
  throw ConstructionError(os.str());
}

int locate_tau(int n, double s) {
  if (!(s >= -1.0) || !(s < 1.0)) throw DomainError("s must lie in [-1, 1)");
  for (int tau = 1; tau <= 2 * kMaxDegree; ++tau) {
    if (s <= interval_hi(n, tau)) return tau;
  }
  throw DomainError("s too close to 1 for the supported degree range");
}

std::vector<CurvePoint> levenshtein_curve(int n, std::span<const double> s_grid) {
  std::vector<CurvePoint> out;
  if (s_grid.empty()) return out;
  double s_max = -1.0;
  for (double s : s_grid) {
    if (!(s >= -1.0) || !(s < 1.0)) {
      std::ostringstream os;
      os << "curve grid point " << s << " outside [-1, 1)";
      throw DomainError(os.str());
    }
    s_max = std::max(s_max, s);
  }
  std::vector<double> his;
  while (his.empty() || his.back() < s_max) {
    const int tau = static_cast<int>(his.size()) + 1;
    if (tau > 2 * kMaxDegree) throw DomainError("s too close to 1 for the curve");
    his.push_back(interval_hi(n, tau));
  }
  out.reserve(s_grid.size());
  for (double s : s_grid) {
    const auto it = std::lower_bound(his.begin(), his.end(), s);
    const int tau = static_cast<int>(it - his.begin()) + 1;
    out.push_back({s, tau, levenshtein_formula(n, tau, s)});
  }
  return out;
}

}  // namespace ulb
