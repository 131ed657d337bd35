#include "ulb/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ulb/orthopoly.hpp"

namespace ulb {

namespace {

void trim(std::vector<double>& c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
}

}  // namespace

Polynomial Polynomial::from_monomial(std::vector<double> coeffs) {
  Polynomial p;
  trim(coeffs);
  p.monomial_ = std::move(coeffs);
  return p;
}

Polynomial Polynomial::from_gegenbauer(int n, std::vector<double> coeffs) {
  Polynomial p = from_monomial(ulb::from_gegenbauer(n, coeffs));
  trim(coeffs);
  p.gegenbauer_ = GegenbauerCoeffs{n, std::move(coeffs)};
  return p;
}

Polynomial Polynomial::from_both(std::vector<double> monomial, int n,
                                 std::vector<double> gegenbauer) {
  Polynomial p = from_monomial(std::move(monomial));
  trim(gegenbauer);
  p.gegenbauer_ = GegenbauerCoeffs{n, std::move(gegenbauer)};
  return p;
}

Polynomial Polynomial::with_gegenbauer(int n) const {
  Polynomial p = *this;
  p.gegenbauer_ = GegenbauerCoeffs{n, to_gegenbauer(n, monomial_)};
  return p;
}

int Polynomial::degree() const noexcept {
  return monomial_.empty() ? 0 : static_cast<int>(monomial_.size()) - 1;
}

double Polynomial::operator()(double t) const noexcept {
  double acc = 0.0;
  for (auto it = monomial_.rbegin(); it != monomial_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Polynomial::derivative(double t, int order) const noexcept {
  if (order <= 0) return (*this)(t);
  const int deg = degree();
  if (order > deg || monomial_.empty()) return 0.0;
  double acc = 0.0;
  for (int j = deg; j >= order; --j) {
    double falling = 1.0;
    for (int m = 0; m < order; ++m) falling *= static_cast<double>(j - m);
    acc = acc * t + falling * monomial_[static_cast<std::size_t>(j)];
  }
  return acc;
}

double Polynomial::leading_coefficient() const noexcept {
  return monomial_.empty() ? 0.0 : monomial_.back();
}

double Polynomial::representation_mismatch(int grid_points) const {
  if (!gegenbauer_) return 0.0;
  double worst = 0.0;
  for (int g = 0; g < grid_points; ++g) {
    const double t = -1.0 + 2.0 * g / (grid_points - 1);
    const double a = (*this)(t);
    const double b = gegenbauer_series_eval(gegenbauer_->n, gegenbauer_->coeffs, t);
    worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
  }
  return worst;
}

}  // namespace ulb
