#include "ulb/potentials.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "ulb/error.hpp"

namespace ulb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_argument(double t, int i) {
  if (t > 1.0) {
    std::ostringstream os;
    os.precision(17);
    os << "potential argument t=" << t << " exceeds 1";
    throw DomainError(os.str());
  }
  if (i < 0) throw DomainError("derivative order must be nonnegative");
}

std::string format_param(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// d^i/dt^i of c (1-t)^{-e} = c (e)_i (1-t)^{-e-i}, rising factorial (e)_i.
double inverse_power_derivative(double scale, double e, double t, int i) {
  double rising = 1.0;
  for (int m = 0; m < i; ++m) rising *= e + m;
  if (t == 1.0) return kInf;
  return scale * rising * std::pow(1.0 - t, -e - static_cast<double>(i));
}

}  // namespace

Potential::Potential(PotentialKind kind, std::string name, DerivativeFn fn, bool strict,
                     bool singular, bool nonneg)
    : kind_(kind),
      name_(std::move(name)),
      fn_(std::move(fn)),
      strictly_abs_monotone_(strict),
      singular_at_one_(singular),
      nonnegative_(nonneg) {}

double Potential::deriv(double t, int i) const {
  check_argument(t, i);
  return fn_(t, i);
}

Potential Potential::riesz(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("riesz potential needs alpha > 0");
  const double e = alpha / 2.0;
  const double scale = std::pow(2.0, -e);
  return Potential(
      PotentialKind::riesz, "riesz:" + format_param(alpha),
      [e, scale](double t, int i) { return inverse_power_derivative(scale, e, t, i); }, true,
      true, true);
}

Potential Potential::newton(int n) {
  if (n < 3) throw DomainError("newton potential needs n >= 3");
  Potential p = riesz(static_cast<double>(n - 2));
  p.kind_ = PotentialKind::newton;
  p.name_ = "newton";
  return p;
}

Potential Potential::gauss() {
  return Potential(
      PotentialKind::gauss, "gauss",
      [](double t, int i) { return std::ldexp(std::exp(2.0 * t - 2.0), i); }, true, false,
      true);
}

Potential Potential::korevaar(double r, int n) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("korevaar potential needs 0 < r < 1");
  if (n < 3) throw DomainError("korevaar potential needs n >= 3");
  const double beta = (n - 2) / 2.0;
  return Potential(
      PotentialKind::korevaar, "korevaar:" + format_param(r),
      [r, beta](double t, int i) {
        double rising = 1.0;
        for (int m = 0; m < i; ++m) rising *= beta + m;
        const double base = 1.0 + r * r - 2.0 * r * t;
        return rising * std::pow(2.0 * r, i) * std::pow(base, -beta - i);
      },
      true, false, true);
}

Potential Potential::log() {
  return Potential(
      PotentialKind::log, "log",
      [](double t, int i) {
        if (t == 1.0) return kInf;
        if (i == 0) return -0.5 * std::log1p(-t);
        return std::exp(std::lgamma(static_cast<double>(i))) / (2.0 * std::pow(1.0 - t, i));
      },
      false, true, false);
}

Potential Potential::fejes_toth(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw DomainError("fejes_toth potential needs 0 < alpha < 2");
  }
  const double p = alpha / 2.0;
  return Potential(
      PotentialKind::fejes_toth, "ft:" + format_param(alpha),
      [p](double t, int i) {
        // h^{(i)} = -2^p (-1)^i p(p-1)...(p-i+1) (1-t)^{p-i}
        double falling = 1.0;
        for (int m = 0; m < i; ++m) falling *= p - m;
        const double sign = (i % 2 == 0) ? -1.0 : 1.0;
        if (t == 1.0) return i == 0 ? 0.0 : kInf;
        return sign * std::pow(2.0, p) * falling * std::pow(1.0 - t, p - i);
      },
      false, true, false);
}

Potential Potential::custom(std::string name, DerivativeFn derivative) {
  if (!derivative) throw DomainError("custom potential needs a derivative callback");
  return Potential(PotentialKind::custom, std::move(name), std::move(derivative), false, false,
                   false);
}

Potential parse_potential(std::string_view spec, int n) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const bool has_param = colon != std::string_view::npos;
  double param = 0.0;
  if (has_param) {
    const std::string_view tail = spec.substr(colon + 1);
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), param);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.empty()) {
      throw ParseError("bad potential parameter in '" + std::string(spec) + "'");
    }
  }
  const auto no_param = [&] {
    if (has_param) {
      throw ParseError("potential '" + std::string(head) + "' takes no parameter");
    }
  };
  const auto need_param = [&] {
    if (!has_param) {
      throw ParseError("potential '" + std::string(head) + "' needs a parameter, e.g. " +
                       std::string(head) + ":1");
    }
  };
  try {
    if (head == "newton") {
      no_param();
      return Potential::newton(n);
    }
    if (head == "gauss") {
      no_param();
      return Potential::gauss();
    }
    if (head == "log") {
      no_param();
      return Potential::log();
    }
    if (head == "riesz") {
      need_param();
      return Potential::riesz(param);
    }
    if (head == "korevaar") {
      need_param();
      return Potential::korevaar(param, n);
    }
    if (head == "ft") {
      need_param();
      return Potential::fejes_toth(param);
    }
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown potential '" + std::string(spec) +
                   "' (expected newton, riesz:a, gauss, korevaar:r, log, ft:a)");
}

MonotonicityReport check_abs_monotone(const Potential& h, int max_order, int min_order) {
  if (max_order > 30) throw DomainError("check_abs_monotone supports max_order <= 30");
  constexpr int kPoints = 2000;
  constexpr double kUpper = 1.0 - 1e-6;
  MonotonicityReport report;
  bool first = true;
  for (int i = min_order; i <= max_order; ++i) {
    for (int g = 0; g < kPoints; ++g) {
      const double t = -1.0 + (kUpper + 1.0) * g / (kPoints - 1);
      const double v = h.deriv(t, i);
      if (first || v < report.worst_value) {
        report.worst_value = v;
        report.worst_order = i;
        report.worst_t = t;
        first = false;
      }
      if (!(v >= -1e-12)) report.ok = false;
    }
  }
  return report;
}

}  // namespace ulb
