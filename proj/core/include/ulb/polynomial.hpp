#pragma once

#include <optional>
#include <span>
#include <vector>

namespace ulb {

/// Coefficients of a polynomial in the Gegenbauer basis P_0^{(n)}, P_1^{(n)}, ...
struct GegenbauerCoeffs {
  int n = 0;
  std::vector<double> coeffs;
};

/// Univariate real polynomial carried in the monomial basis, optionally
/// together with its expansion in the Gegenbauer basis of a fixed dimension.
///
/// Trailing exact zeros of the monomial vector are trimmed, so the leading
/// coefficient is nonzero unless the polynomial is identically zero.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial from_monomial(std::vector<double> coeffs);
  /// Builds both representations from Gegenbauer coefficients.
  static Polynomial from_gegenbauer(int n, std::vector<double> coeffs);
  /// Builds a polynomial from two independently computed representations
  /// of the same function.
  static Polynomial from_both(std::vector<double> monomial, int n,
                             std::vector<double> gegenbauer);

  /// Attaches the Gegenbauer expansion for dimension n (computed from the
  /// monomial coefficients).
  Polynomial with_gegenbauer(int n) const;

  int degree() const noexcept;
  bool is_zero() const noexcept { return monomial_.empty(); }

  double operator()(double t) const noexcept;
  double derivative(double t, int order = 1) const noexcept;
  double leading_coefficient() const noexcept;

  std::span<const double> monomial() const noexcept { return monomial_; }
  const std::optional<GegenbauerCoeffs>& gegenbauer() const noexcept {
    return gegenbauer_;
  }

  /// Largest relative disagreement between the two representations over a
  /// uniform grid of [-1, 1]; zero when no Gegenbauer expansion is attached.
  double representation_mismatch(int grid_points = 201) const;

 private:
  std::vector<double> monomial_;
  std::optional<GegenbauerCoeffs> gegenbauer_;
};

}  // namespace ulb
