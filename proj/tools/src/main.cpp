#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ulb/error.hpp"
#include "ulb_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace ulb::cli;

  CLI::App app{"Universal lower bounds for energy of spherical codes"};
  app.require_subcommand(1);
  // Subcommands inherit this, so --format and --tol may follow the subcommand.
  app.fallthrough();

  std::string format = "text";
  double tol = 0.0;
  app.add_option("--format", format, "Output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--tol", tol, "Zero/negativity threshold for Q_j (default: ULB_TOL or 1e-9)")
      ->check(CLI::PositiveNumber);

  BoundArgs bound;
  auto* sub_bound = app.add_subcommand("bound", "ULB, quadrature rule and certificate");
  sub_bound->add_option("--n", bound.n, "Dimension of the ambient space")->required();
  sub_bound->add_option("--N", bound.N, "Code cardinality (>= 2)")->required();
  sub_bound->add_option("--potential", bound.potential,
                        "newton, riesz:a, gauss, korevaar:r, log or ft:a");

  TableArgs table;
  std::string reference;
  auto* sub_table = app.add_subcommand("table", "ULB for a range of N");
  sub_table->add_option("--n", table.n)->required();
  sub_table->add_option("--N-min", table.N_min)->required();
  sub_table->add_option("--N-max", table.N_max)->required();
  sub_table->add_option("--potential", table.potential);
  sub_table->add_option("--reference", reference, "CSV of known energies: N,energy");

  CurveArgs curve;
  auto* sub_curve = app.add_subcommand("curve", "Levenshtein function L(n, s) on a grid");
  sub_curve->add_option("--n", curve.n)->required();
  sub_curve->add_option("--s-min", curve.s_min);
  sub_curve->add_option("--s-max", curve.s_max);
  sub_curve->add_option("--steps", curve.steps);

  TestfnArgs testfn;
  auto* sub_testfn = app.add_subcommand("testfn", "Test functions Q_j for j <= j-max");
  sub_testfn->add_option("--n", testfn.n)->required();
  sub_testfn->add_option("--N", testfn.N)->required();
  sub_testfn->add_option("--j-max", testfn.j_max);

  VerdictArgs verdict;
  auto* sub_verdict =
      app.add_subcommand("verdict", "j0 cutoff, Q_j scan and linear-programming verdict");
  sub_verdict->add_option("--n", verdict.n)->required();
  sub_verdict->add_option("--N", verdict.N)->required();
  sub_verdict->add_option("--j-extra", verdict.j_extra, "Degrees scanned beyond tau");

  EnergyArgs energy;
  auto* sub_energy = app.add_subcommand("energy", "Energy of a code compared with the ULB");
  sub_energy->add_option("--code", energy.code, "simplex:n, cross:n, d4 or file:PATH")
      ->required();
  sub_energy->add_option("--potential", energy.potential);

  ImproveArgs improve;
  auto* sub_improve =
      app.add_subcommand("improve", "Raise the ULB with a degree-j term when Q_j < 0");
  sub_improve->add_option("--n", improve.n)->required();
  sub_improve->add_option("--N", improve.N)->required();
  sub_improve->add_option("--potential", improve.potential);
  sub_improve->add_option("--j", improve.j)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Common common;
  try {
    common.format = parse_format(format);
    common.tol = tol > 0.0 ? tol : tolerance_from_env(1e-9);
  } catch (const ulb::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (!reference.empty()) table.reference = reference;

  if (*sub_bound) return cmd_bound(bound, common, std::cout, std::cerr);
  if (*sub_table) return cmd_table(table, common, std::cout, std::cerr);
  if (*sub_curve) return cmd_curve(curve, common, std::cout, std::cerr);
  if (*sub_testfn) return cmd_testfn(testfn, common, std::cout, std::cerr);
  if (*sub_verdict) return cmd_verdict(verdict, common, std::cout, std::cerr);
  if (*sub_energy) return cmd_energy(energy, common, std::cout, std::cerr);
  if (*sub_improve) return cmd_improve(improve, common, std::cout, std::cerr);
  return kUsage;
}
