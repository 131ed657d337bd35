#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace ulb {

enum class PotentialKind { riesz, newton, gauss, korevaar, log, fejes_toth, custom };

/// A potential h(t) of the inner product t = <x, y> together with its
/// derivatives of every order.
///
/// Built-in kinds:
///   riesz(a)       [2(1-t)]^{-a/2}, a > 0
///   newton(n)      riesz(n-2), the harmonic potential of S^{n-1}
///   gauss          e^{2t-2}
///   korevaar(r,n)  (1 + r^2 - 2rt)^{-(n-2)/2}, 0 < r < 1
///   log            -(1/2) ln(1-t)
///   fejes_toth(a)  -[2(1-t)]^{a/2}, 0 < a < 2
///
/// Kinds singular at t = 1 return +infinity there (fejes_toth returns its
/// finite value 0; its derivatives are infinite). Arguments above 1 throw
/// DomainError. Instances are immutable.
class Potential {
 public:
  /// (t, i) -> h^{(i)}(t); order 0 is the value.
  using DerivativeFn = std::function<double(double, int)>;

  static Potential riesz(double alpha);
  static Potential newton(int n);
  static Potential gauss();
  static Potential korevaar(double r, int n);
  static Potential log();
  static Potential fejes_toth(double alpha);
  /// A user-supplied potential. Nothing is assumed about its monotonicity;
  /// check_abs_monotone decides.
  static Potential custom(std::string name, DerivativeFn derivative);

  double operator()(double t) const { return deriv(t, 0); }
  double eval(double t) const { return deriv(t, 0); }
  double deriv(double t, int i) const;

  PotentialKind kind() const noexcept { return kind_; }
  /// Spec string accepted by parse_potential, e.g. "riesz:1".
  const std::string& name() const noexcept { return name_; }
  /// All derivatives (including order 0) are positive on [-1, 1).
  bool strictly_abs_monotone() const noexcept { return strictly_abs_monotone_; }
  bool singular_at_one() const noexcept { return singular_at_one_; }
  /// h >= 0 on [-1, 1); false for log and fejes_toth.
  bool nonnegative() const noexcept { return nonnegative_; }

 private:
  Potential(PotentialKind kind, std::string name, DerivativeFn fn, bool strict, bool singular,
            bool nonneg);

  PotentialKind kind_ = PotentialKind::custom;
  std::string name_;
  DerivativeFn fn_;
  bool strictly_abs_monotone_ = false;
  bool singular_at_one_ = false;
  bool nonnegative_ = false;
};

/// Parses "newton", "riesz:a", "gauss", "korevaar:r", "log" or "ft:a".
/// Dimension-dependent kinds use n. Throws ParseError on bad input.
Potential parse_potential(std::string_view spec, int n);

struct MonotonicityReport {
  bool ok = true;
  int worst_order = -1;
  double worst_t = 0.0;
  /// Smallest sampled derivative value (at worst_order, worst_t).
  double worst_value = 0.0;
};

/// Samples h^{(i)} for min_order <= i <= max_order on 2000 uniform points of
/// [-1, 1 - 1e-6]; ok iff every sample is >= -1e-12. max_order <= 30.
MonotonicityReport check_abs_monotone(const Potential& h, int max_order, int min_order = 0);

}  // namespace ulb
