#include "ulb_cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "format.hpp"
#include "ulb/report_json.hpp"
#include "ulb/ulb.hpp"

namespace ulb::cli {

namespace {

using detail::csv_row;
using detail::join;
using detail::kDataDigits;
using detail::kTextDigits;
using detail::number;

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kCertificate;
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kCertificate;
  }
}

std::string text(double x) { return number(x, kTextDigits); }
std::string data(double x) { return number(x, kDataDigits); }

void require_N(double N) {
  if (!(N >= 2.0)) throw DomainError("N must be >= 2");
}

const char* classify(double q, double tol) {
  if (q < -tol) return "negative";
  if (q <= tol) return "zero";
  return "positive";
}

void print_feasibility(std::ostream& out, const Feasibility& f) {
  if (f.ok()) {
    out << "  certificate: verified (f <= h on the grid, Gegenbauer coefficients >= 0)\n";
    return;
  }
  out << "  certificate: FAILED";
  if (!f.f_le_h) out << " (f - h reaches " << text(f.max_violation) << " at t=" << text(f.worst_t) << ")";
  if (!f.gegenbauer_nonneg) {
    out << " (f_" << f.worst_coeff_index << " = " << text(f.worst_coeff) << ")";
  }
  out << '\n';
}

std::map<int, double> read_reference(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open reference file " + path.string());
  std::map<int, double> ref;
  std::string line;
  int line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const bool header_allowed = std::exchange(first_row, false);
    const auto comma = line.find(',');
    const std::string a = line.substr(0, comma);
    const std::string b = comma == std::string::npos ? "" : line.substr(comma + 1);
    try {
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const int N = std::stoi(a, &used_a);
      const double e = std::stod(b, &used_b);
      if (a.find_first_not_of(" \t", used_a) != std::string::npos ||
          b.find_first_not_of(" \t", used_b) != std::string::npos) {
        throw std::invalid_argument("trailing characters");
      }
      ref[N] = e;
    } catch (const std::exception&) {
      if (header_allowed) continue;
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                           ": expected 'N,energy', got '" + line + "'",
                       line_no);
    }
  }
  return ref;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw ParseError("unknown format '" + name + "' (expected text, csv, json)");
}

double tolerance_from_env(double fallback) {
  const char* v = std::getenv("ULB_TOL");
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const double tol = std::strtod(v, &end);
  if (end == v || *end != '\0' || !(tol > 0.0)) {
    throw ParseError(std::string("ULB_TOL must be a positive number, got '") + v + "'");
  }
  return tol;
}

int cmd_bound(const BoundArgs& args, const Common& common, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    require_N(args.N);
    const Potential h = parse_potential(args.potential, args.n);
    const UlbReport r = compute_ulb(args.n, args.N, h);
    switch (common.format) {
      case Format::json:
        out << to_json(r).dump(2) << '\n';
        break;
      case Format::csv:
        csv_row(out, {"n", "N", "potential", "tau", "k", "s", "ulb", "verified"});
        csv_row(out, {std::to_string(args.n), data(args.N), h.name(), std::to_string(r.rule.tau),
                      std::to_string(r.rule.k), data(r.rule.s), data(r.value),
                      r.verified ? "true" : "false"});
        break;
      case Format::text:
        out << "ULB for n=" << args.n << ", N=" << text(args.N) << ", h=" << h.name() << '\n'
            << "  tau     = " << r.rule.tau << "  (k = " << r.rule.k << ")\n"
            << "  s       = " << text(r.rule.s) << '\n'
            << "  nodes   = " << join(r.rule.nodes, kTextDigits) << '\n'
            << "  weights = " << join(r.rule.weights, kTextDigits) << '\n'
            << "  ULB     = " << text(r.value) << '\n';
        print_feasibility(out, r.feasibility);
        break;
    }
    return r.verified ? kOk : kCertificate;
  });
}

int cmd_table(const TableArgs& args, const Common& common, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (args.N_min < 2 || args.N_max < args.N_min) {
      throw DomainError("need 2 <= N-min <= N-max");
    }
    const Potential h = parse_potential(args.potential, args.n);
    std::map<int, double> ref;
    if (args.reference) ref = read_reference(*args.reference);
    const bool with_ref = args.reference.has_value();

    nlohmann::json rows = nlohmann::json::array();
    bool all_verified = true;
    if (common.format == Format::csv) {
      std::vector<std::string> header{"N", "tau", "s", "ulb"};
      if (with_ref) header.insert(header.end(), {"energy", "gap"});
      csv_row(out, header);
    } else if (common.format == Format::text) {
      out << std::setw(6) << "N" << std::setw(5) << "tau" << std::setw(14) << "s"
          << std::setw(14) << "ULB";
      if (with_ref) out << std::setw(14) << "energy" << std::setw(14) << "gap";
      out << '\n';
    }
    for (int N = args.N_min; N <= args.N_max; ++N) {
      const UlbReport r = compute_ulb(args.n, N, h);
      all_verified = all_verified && r.verified;
      const auto it = ref.find(N);
      const bool has_ref = it != ref.end();
      switch (common.format) {
        case Format::json: {
          nlohmann::json row{{"N", N},
                             {"tau", r.rule.tau},
                             {"s", round_sig(r.rule.s)},
                             {"ulb", round_sig(r.value)},
                             {"verified", r.verified}};
          if (has_ref) {
            row["energy"] = round_sig(it->second);
            row["gap"] = round_sig(it->second - r.value);
          }
          rows.push_back(row);
          break;
        }
        case Format::csv: {
          std::vector<std::string> f{std::to_string(N), std::to_string(r.rule.tau),
                                     data(r.rule.s), data(r.value)};
          if (with_ref) {
            f.push_back(has_ref ? data(it->second) : "");
            f.push_back(has_ref ? data(it->second - r.value) : "");
          }
          csv_row(out, f);
          break;
        }
        case Format::text:
          out << std::setw(6) << N << std::setw(5) << r.rule.tau << std::setw(14)
              << text(r.rule.s) << std::setw(14) << text(r.value);
          if (has_ref) {
            out << std::setw(14) << text(it->second) << std::setw(14)
                << text(it->second - r.value);
          }
          out << '\n';
          break;
      }
    }
    if (common.format == Format::json) {
      out << nlohmann::json{{"n", args.n}, {"potential", h.name()}, {"rows", rows}}.dump(2)
          << '\n';
    }
    if (!all_verified) err << "warning: some rows failed certification\n";
    return all_verified ? kOk : kCertificate;
  });
}

int cmd_curve(const CurveArgs& args, const Common& common, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (args.steps < 2) throw DomainError("steps must be >= 2");
    if (!(args.s_min >= -1.0 && args.s_min < args.s_max && args.s_max < 1.0)) {
      throw DomainError("need -1 <= s-min < s-max < 1");
    }
    std::vector<double> grid;
    for (int i = 0; i < args.steps; ++i) {
      grid.push_back(args.s_min + (args.s_max - args.s_min) * i / (args.steps - 1));
    }
    const std::vector<CurvePoint> curve = levenshtein_curve(args.n, grid);
    switch (common.format) {
      case Format::json:
        out << nlohmann::json{{"n", args.n}, {"points", to_json(curve)}}.dump(2) << '\n';
        break;
      case Format::csv:
        csv_row(out, {"s", "tau", "L"});
        for (const CurvePoint& p : curve) {
          csv_row(out, {data(p.s), std::to_string(p.tau), data(p.value)});
        }
        break;
      case Format::text:
        out << std::setw(14) << "s" << std::setw(5) << "tau" << std::setw(14) << "L(n,s)"
            << '\n';
        for (const CurvePoint& p : curve) {
          out << std::setw(14) << text(p.s) << std::setw(5) << p.tau << std::setw(14)
              << text(p.value) << '\n';
        }
        break;
    }
    return kOk;
  });
}

int cmd_testfn(const TestfnArgs& args, const Common& common, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    require_N(args.N);
    if (args.j_max < 0) throw DomainError("j-max must be >= 0");
    const QuadratureRule rule = build_rule(args.n, args.N);
    const std::vector<double> q = test_functions(rule, args.j_max);
    std::vector<int> negative;
    for (int j = rule.tau + 1; j <= args.j_max; ++j) {
      if (q[j] < -common.tol) negative.push_back(j);
    }
    switch (common.format) {
      case Format::json: {
        nlohmann::json values = nlohmann::json::array();
        for (int j = 0; j <= args.j_max; ++j) {
          values.push_back({{"j", j}, {"Q", round_sig(q[j])}, {"class", classify(q[j], common.tol)}});
        }
        out << nlohmann::json{{"n", args.n},
                              {"N", round_sig(args.N)},
                              {"tau", rule.tau},
                              {"s", round_sig(rule.s)},
                              {"values", values},
                              {"negative_js", negative}}
                   .dump(2)
            << '\n';
        break;
      }
      case Format::csv:
        csv_row(out, {"j", "Q", "class"});
        for (int j = 0; j <= args.j_max; ++j) {
          csv_row(out, {std::to_string(j), data(q[j]), classify(q[j], common.tol)});
        }
        break;
      case Format::text:
        out << "test functions for n=" << args.n << ", N=" << text(args.N)
            << ": tau = " << rule.tau << ", s = " << text(rule.s) << '\n';
        for (int j = 0; j <= args.j_max; ++j) {
          out << "  Q_" << std::left << std::setw(4) << j << std::right << std::setw(14)
              << text(q[j]) << "  " << classify(q[j], common.tol) << '\n';
        }
        out << "negative above tau: " << (negative.empty() ? "none" : join(negative)) << '\n';
        break;
    }
    return kOk;
  });
}

int cmd_verdict(const VerdictArgs& args, const Common& common, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    require_N(args.N);
    const TestFunctionScan scan = lp_optimality_verdict(args.n, args.N, args.j_extra, common.tol);
    std::string conclusion;
    if (scan.verdict == LpVerdict::improvable) {
      conclusion = "Q_j < 0 for j = " + join(scan.negative_js, ", ") +
                   ": adding a multiple of P_j raises the bound above the ULB (see `improve`)";
    } else if (scan.j0) {
      conclusion =
          "no Q_j is negative for tau < j < j0 and Q_j >= 0 for j >= j0, so the degree-tau "
          "interpolant solves the linear program; codes of this size with energy above "
          "the ULB are not LP-universally optimal";
    } else {
      conclusion = "no negative Q_j in the scanned range";
    }
    switch (common.format) {
      case Format::json: {
        nlohmann::json j = to_json(scan);
        j["conclusion"] = conclusion;
        out << j.dump(2) << '\n';
        break;
      }
      case Format::csv:
        csv_row(out, {"j", "Q", "class"});
        for (int j = scan.j_first; j <= scan.j_last; ++j) {
          csv_row(out, {std::to_string(j), data(scan.q(j)), classify(scan.q(j), common.tol)});
        }
        break;
      case Format::text:
        out << "n=" << args.n << ", N=" << text(args.N) << ": tau = " << scan.ctx.tau
            << ", s = " << text(scan.rule.s) << '\n';
        if (scan.j0) {
          out << "j0 = " << scan.j0->j0 << "  (t* = " << text(scan.j0->t_star)
              << ", threshold " << text(scan.j0->threshold) << ")\n";
        }
        for (int j = scan.j_first; j <= scan.j_last; ++j) {
          out << "  Q_" << std::left << std::setw(4) << j << std::right << std::setw(14)
              << text(scan.q(j)) << "  " << classify(scan.q(j), common.tol) << '\n';
        }
        if (!scan.indeterminate_js.empty()) {
          out << "indeterminate (|Q_j| <= tol): " << join(scan.indeterminate_js) << '\n';
        }
        out << "conclusion: " << conclusion << '\n';
        break;
    }
    return kOk;
  });
}

int cmd_energy(const EnergyArgs& args, const Common& common, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const std::string& spec = args.code;
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string param = colon == std::string::npos ? "" : spec.substr(colon + 1);
    const auto parse_dim = [&] {
      try {
        std::size_t used = 0;
        const int n = std::stoi(param, &used);
        if (used == param.size()) return n;
      } catch (const std::exception&) {
      }
      throw ParseError("code '" + spec + "' needs an integer dimension, e.g. " + kind + ":4");
    };
    std::optional<SphericalCode> code;
    if (kind == "file") {
      if (param.empty()) throw ParseError("use file:PATH");
      code.emplace(load_code(param));
    } else if (kind == "d4") {
      code.emplace(builtin_code("d4", 4));
    } else if (kind == "simplex" || kind == "cross") {
      code.emplace(builtin_code(kind, parse_dim()));
    } else {
      throw ParseError("unknown code '" + spec + "' (expected simplex:n, cross:n, d4, file:PATH)");
    }
    const Potential h = parse_potential(args.potential, code->n());
    if (!h.nonnegative()) {
      err << "warning: potential " << h.name()
          << " takes negative values, so the energy may be negative\n";
    }
    const EnergyComparison cmp = compare_energy(*code, h);
    const int strength = design_strength(*code, 40);
    switch (common.format) {
      case Format::json: {
        nlohmann::json j = to_json(cmp);
        j["n"] = code->n();
        j["N"] = code->size();
        j["design_strength"] = strength;
        out << j.dump(2) << '\n';
        break;
      }
      case Format::csv:
        csv_row(out, {"code", "n", "N", "potential", "energy", "ulb", "gap", "relative_gap"});
        csv_row(out, {cmp.code, std::to_string(code->n()), std::to_string(code->size()),
                      cmp.potential, data(cmp.energy), data(cmp.ulb), data(cmp.gap),
                      data(cmp.relative_gap)});
        break;
      case Format::text:
        out << "code " << cmp.code << ": n=" << code->n() << ", N=" << code->size()
            << ", design strength " << strength << '\n'
            << "  energy (ordered pairs) = " << text(cmp.energy) << '\n'
            << "  ULB                    = " << text(cmp.ulb) << '\n'
            << "  gap                    = " << text(cmp.gap) << "  (relative "
            << text(cmp.relative_gap) << ")\n";
        break;
    }
    return kOk;
  });
}

int cmd_improve(const ImproveArgs& args, const Common& common, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    require_N(args.N);
    const Potential h = parse_potential(args.potential, args.n);
    const Improvement imp = improve_bound(args.n, args.N, h, args.j);
    switch (common.format) {
      case Format::json:
        out << to_json(imp).dump(2) << '\n';
        break;
      case Format::csv:
        csv_row(out, {"n", "N", "potential", "j", "Q_j", "epsilon", "ulb", "improved",
                      "certified"});
        csv_row(out, {std::to_string(args.n), data(args.N), h.name(), std::to_string(imp.j),
                      data(imp.q_j), data(imp.epsilon), data(imp.base), data(imp.value),
                      imp.certified ? "true" : "false"});
        break;
      case Format::text:
        out << "improvement for n=" << args.n << ", N=" << text(args.N) << ", h=" << h.name()
            << " with P_" << imp.j << '\n'
            << "  Q_" << imp.j << "      = " << text(imp.q_j) << '\n'
            << "  epsilon  = " << text(imp.epsilon) << '\n'
            << "  ULB      = " << number(imp.base, 10) << '\n'
            << "  improved = " << number(imp.value, 10) << '\n';
        print_feasibility(out, imp.certificate);
        break;
    }
    return imp.certified ? kOk : kCertificate;
  });
}

}  // namespace ulb::cli
