#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ulb/potentials.hpp"

namespace ulb {

/// One distinct inner product alpha_l of a code together with
/// q_l = #{(i, j) : <x_i, x_j> = alpha_l} / N^2 over ordered pairs i != j.
struct SpectrumEntry {
  double alpha = 0.0;
  double q = 0.0;
  std::size_t count = 0;
};

/// A finite set of distinct unit vectors in R^n.
///
/// Rows must have unit norm to 1e-10. Inner products within 1e-9 of each
/// other are merged into one spectrum entry.
class SphericalCode {
 public:
  SphericalCode(int n, std::vector<std::vector<double>> points, std::string name = "");

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::vector<double>>& points() const noexcept { return points_; }
  double inner(std::size_t i, std::size_t j) const;

  /// Sorted by alpha; the q_l sum to (N-1)/N.
  const std::vector<SpectrumEntry>& spectrum() const noexcept { return spectrum_; }

 private:
  int n_;
  std::vector<std::vector<double>> points_;
  std::string name_;
  std::vector<SpectrumEntry> spectrum_;
};

/// E(C; h): sum of h(<x, y>) over ordered pairs x != y (each unordered pair
/// counted twice).
double energy(const SphericalCode& code, const Potential& h);

/// M_0, ..., M_{k_max} with M_k = Sum_{i,j} P_k^{(n)}(<x_i, x_j>).
std::vector<double> moments(const SphericalCode& code, int k_max);

/// Largest t <= k_max with |M_1|, ..., |M_t| < 1e-8 N^2.
int design_strength(const SphericalCode& code, int k_max = 40);

/// Degrees 1 <= k <= k_max with |M_k| < 1e-8 N^2.
std::vector<int> index_set(const SphericalCode& code, int k_max);

struct ConfigurationQuadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// The spectrum as a 1/N-quadrature rule (alpha_l, q_l).
ConfigurationQuadrature configuration_quadrature(const SphericalCode& code);

/// delta_{j0} - 1/N - Sum_l q_l P_j^{(n)}(alpha_l); vanishes for j in the
/// index set.
double configuration_residual(const SphericalCode& code, int j);

/// "simplex" (n+1 points), "cross" (2n points) or "d4" (24 points, n = 4).
SphericalCode builtin_code(std::string_view name, int n);

/// One point per line, whitespace-separated coordinates, '#' comment lines.
/// Rows within 1e-6 of unit norm are renormalized. expected_n = 0 takes the
/// dimension from the first row. Throws ParseError with a line number.
SphericalCode parse_code(std::istream& in, int expected_n = 0, std::string name = "");
SphericalCode load_code(const std::filesystem::path& path, int expected_n = 0);

struct EnergyComparison {
  std::string code;
  std::string potential;
  double energy = 0.0;
  double ulb = 0.0;
  double gap = 0.0;
  double relative_gap = 0.0;
};

/// Energy of the code against the bound for (n, |C|).
EnergyComparison compare_energy(const SphericalCode& code, const Potential& h);

}  // namespace ulb
