#include "ulb/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace ulb {

namespace {

using nlohmann::json;

json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig(x);
}

json nums(std::span<const double> xs) {
  json a = json::array();
  for (double x : xs) a.push_back(num(x));
  return a;
}

const char* verdict_name(LpVerdict v) {
  return v == LpVerdict::lp_optimal ? "lp_optimal" : "improvable";
}

}  // namespace

double round_sig(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

json to_json(const QuadratureRule& rule) {
  return json{{"n", rule.n},          {"N", num(rule.N)},
              {"tau", rule.tau},      {"k", rule.k},
              {"s", num(rule.s)},     {"nodes", nums(rule.nodes)},
              {"weights", nums(rule.weights)}};
}

json to_json(const Feasibility& f) {
  return json{{"f_le_h", f.f_le_h},
              {"gegenbauer_nonneg", f.gegenbauer_nonneg},
              {"max_violation", num(f.max_violation)},
              {"worst_t", num(f.worst_t)},
              {"worst_coeff_index", f.worst_coeff_index},
              {"worst_coeff", num(f.worst_coeff)}};
}

json to_json(const UlbReport& r) {
  json j = to_json(r.rule);
  j["potential"] = r.potential;
  j["ulb"] = num(r.value);
  j["lp_value"] = num(r.lp_value);
  std::vector<double> coeffs;
  if (r.interpolant.poly.gegenbauer()) coeffs = r.interpolant.poly.gegenbauer()->coeffs;
  j["gegenbauer_coeffs"] = nums(coeffs);
  j["feasibility"] = to_json(r.feasibility);
  j["verified"] = r.verified;
  return j;
}

json to_json(const TestFunctionScan& scan) {
  json values = json::array();
  for (int jj = scan.j_first; jj <= scan.j_last; ++jj) {
    values.push_back(json{{"j", jj}, {"Q", num(scan.q(jj))}});
  }
  json j{{"n", scan.ctx.n},
         {"N", num(scan.ctx.N)},
         {"tau", scan.ctx.tau},
         {"s", num(scan.rule.s)},
         {"values", values},
         {"negative_js", scan.negative_js},
         {"indeterminate_js", scan.indeterminate_js},
         {"all_nonneg_upto_j0", scan.all_nonneg_upto_j0},
         {"verdict", verdict_name(scan.verdict)}};
  if (scan.j0) {
    j["j0"] = scan.j0->j0;
    j["j0_t_star"] = num(scan.j0->t_star);
    j["j0_threshold"] = num(scan.j0->threshold);
  } else {
    j["j0"] = nullptr;
  }
  return j;
}

json to_json(const Improvement& imp) {
  std::vector<double> coeffs;
  if (imp.polynomial.gegenbauer()) coeffs = imp.polynomial.gegenbauer()->coeffs;
  return json{{"j", imp.j},
              {"Q_j", num(imp.q_j)},
              {"base", num(imp.base)},
              {"epsilon", num(imp.epsilon)},
              {"value", num(imp.value)},
              {"degree", imp.polynomial.degree()},
              {"gegenbauer_coeffs", nums(coeffs)},
              {"certificate", to_json(imp.certificate)},
              {"certified", imp.certified}};
}

json to_json(const EnergyComparison& c) {
  return json{{"code", c.code},          {"potential", c.potential}, {"energy", num(c.energy)},
              {"ulb", num(c.ulb)},       {"gap", num(c.gap)},
              {"relative_gap", num(c.relative_gap)}};
}

json to_json(std::span<const CurvePoint> curve) {
  json a = json::array();
  for (const CurvePoint& p : curve) {
    a.push_back(json{{"s", num(p.s)}, {"tau", p.tau}, {"L", num(p.value)}});
  }
  return a;
}

}  // namespace ulb
