#include "ulb/codes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "ulb/energy_bound.hpp"
#include "ulb/error.hpp"
#include "ulb/orthopoly.hpp"

namespace ulb {

namespace {

constexpr double kUnitTol = 1e-10;
constexpr double kClusterTol = 1e-9;
constexpr double kMomentTol = 1e-8;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

SphericalCode::SphericalCode(int n, std::vector<std::vector<double>> points, std::string name)
    : n_(n), points_(std::move(points)), name_(std::move(name)) {
  if (n < 2) throw DomainError("code dimension must be >= 2");
  if (points_.size() < 2) throw DomainError("a code needs at least two points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (static_cast<int>(points_[i].size()) != n) {
      throw DomainError("point " + std::to_string(i + 1) + " has dimension " +
                        std::to_string(points_[i].size()) + ", expected " + std::to_string(n));
    }
    if (std::abs(std::sqrt(dot(points_[i], points_[i])) - 1.0) > kUnitTol) {
      throw DomainError("point " + std::to_string(i + 1) + " is not a unit vector");
    }
  }

  std::vector<double> products;
  products.reserve(points_.size() * (points_.size() - 1) / 2);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      const double t = std::clamp(dot(points_[i], points_[j]), -1.0, 1.0);
      if (t > 1.0 - 1e-12) {
        throw DomainError("duplicate points " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1));
      }
      products.push_back(t);
    }
  }
  std::sort(products.begin(), products.end());
  const double n2 = static_cast<double>(points_.size()) * static_cast<double>(points_.size());
  std::size_t start = 0;
  while (start < products.size()) {
    std::size_t end = start + 1;
    double sum = products[start];
    while (end < products.size() && products[end] - products[start] <= kClusterTol) {
      sum += products[end];
      ++end;
    }
    const std::size_t pairs = end - start;
    spectrum_.push_back(SpectrumEntry{sum / static_cast<double>(pairs), 2.0 * pairs / n2,
                                      2 * pairs});
    start = end;
  }
}

double SphericalCode::inner(std::size_t i, std::size_t j) const {
  return dot(points_.at(i), points_.at(j));
}

double energy(const SphericalCode& code, const Potential& h) {
  double acc = 0.0;
  const auto& pts = code.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      acc += h(std::clamp(dot(pts[i], pts[j]), -1.0, 1.0));
    }
  }
  return 2.0 * acc;
}

std::vector<double> moments(const SphericalCode& code, int k_max) {
  const double N = static_cast<double>(code.size());
  std::vector<double> m(static_cast<std::size_t>(k_max) + 1, N);
  for (const SpectrumEntry& e : code.spectrum()) {
    const std::vector<double> p = gegenbauer_values(code.n(), k_max, e.alpha);
    for (int k = 0; k <= k_max; ++k) m[k] += static_cast<double>(e.count) * p[k];
  }
  return m;
}

int design_strength(const SphericalCode& code, int k_max) {
  const std::vector<double> m = moments(code, k_max);
  const double tol = kMomentTol * static_cast<double>(code.size() * code.size());
  int t = 0;
  while (t < k_max && std::abs(m[t + 1]) < tol) ++t;
  return t;
}

std::vector<int> index_set(const SphericalCode& code, int k_max) {
  const std::vector<double> m = moments(code, k_max);
  const double tol = kMomentTol * static_cast<double>(code.size() * code.size());
  std::vector<int> out;
  for (int k = 1; k <= k_max; ++k) {
    if (std::abs(m[k]) < tol) out.push_back(k);
  }
  return out;
}

ConfigurationQuadrature configuration_quadrature(const SphericalCode& code) {
  ConfigurationQuadrature q;
  for (const SpectrumEntry& e : code.spectrum()) {
    q.nodes.push_back(e.alpha);
    q.weights.push_back(e.q);
  }
  return q;
}

double configuration_residual(const SphericalCode& code, int j) {
  double acc = 0.0;
  for (const SpectrumEntry& e : code.spectrum()) acc += e.q * gegenbauer_eval(code.n(), j, e.alpha);
  return (j == 0 ? 1.0 : 0.0) - 1.0 / static_cast<double>(code.size()) - acc;
}

SphericalCode builtin_code(std::string_view name, int n) {
  std::vector<std::vector<double>> pts;
  if (name == "simplex") {
    if (n < 2) throw DomainError("simplex needs n >= 2");
    // v_i = a e_i + b 1 (i <= n) and v_{n+1} = -1/sqrt(n) 1.
    const double nn = n;
    const double a = std::sqrt((nn + 1.0) / nn);
    const double b = (1.0 / std::sqrt(nn) - a) / nn;
    for (int i = 0; i < n; ++i) {
      std::vector<double> v(static_cast<std::size_t>(n), b);
      v[static_cast<std::size_t>(i)] += a;
      pts.push_back(std::move(v));
    }
    pts.emplace_back(static_cast<std::size_t>(n), -1.0 / std::sqrt(nn));
    // Exact up to rounding; renormalize so the unit-norm check is tight.
    for (auto& v : pts) {
      const double r = std::sqrt(dot(v, v));
      for (double& x : v) x /= r;
    }
  } else if (name == "cross") {
    if (n < 2) throw DomainError("cross-polytope needs n >= 2");
    for (int i = 0; i < n; ++i) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> v(static_cast<std::size_t>(n), 0.0);
        v[static_cast<std::size_t>(i)] = sign;
        pts.push_back(std::move(v));
      }
    }
  } else if (name == "d4") {
    if (n != 4) throw DomainError("d4 is defined for n = 4");
    const double c = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        for (double si : {1.0, -1.0}) {
          for (double sj : {1.0, -1.0}) {
            std::vector<double> v(4, 0.0);
            v[static_cast<std::size_t>(i)] = si * c;
            v[static_cast<std::size_t>(j)] = sj * c;
            pts.push_back(std::move(v));
          }
        }
      }
    }
  } else {
    throw DomainError("unknown builtin code '" + std::string(name) +
                      "' (expected simplex, cross, d4)");
  }
  return SphericalCode(n, std::move(pts), std::string(name));
}

SphericalCode parse_code(std::istream& in, int expected_n, std::string name) {
  std::vector<std::vector<double>> pts;
  std::string line;
  int line_no = 0;
  int n = expected_n;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    std::vector<double> v;
    std::string token;
    while (row >> token) {
      std::size_t used = 0;
      double x = 0.0;
      try {
        x = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || !std::isfinite(x)) {
        throw ParseError("line " + std::to_string(line_no) + ": bad coordinate '" + token + "'",
                         line_no);
      }
      v.push_back(x);
    }
    if (n == 0) n = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != n) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                           " coordinates, found " + std::to_string(v.size()),
                       line_no);
    }
    const double norm = std::sqrt(dot(v, v));
    if (std::abs(norm - 1.0) > 1e-6) {
      std::ostringstream os;
      os << "line " << line_no << " (point " << pts.size() + 1 << "): norm " << norm
         << " is not 1 within 1e-6";
      throw ParseError(os.str(), line_no);
    }
    for (double& x : v) x /= norm;
    pts.push_back(std::move(v));
  }
  if (pts.size() < 2) throw ParseError("code file has fewer than two points", line_no);
  return SphericalCode(n, std::move(pts), std::move(name));
}

SphericalCode load_code(const std::filesystem::path& path, int expected_n) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open code file " + path.string());
  return parse_code(in, expected_n, path.filename().string());
}

EnergyComparison compare_energy(const SphericalCode& code, const Potential& h) {
  EnergyComparison c;
  c.code = code.name();
  c.potential = h.name();
  c.energy = energy(code, h);
  c.ulb = compute_ulb(code.n(), static_cast<double>(code.size()), h, false).value;
  c.gap = c.energy - c.ulb;
  c.relative_gap = c.gap / std::abs(c.ulb);
  return c;
}

}  // namespace ulb
