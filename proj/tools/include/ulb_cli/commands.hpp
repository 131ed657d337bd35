#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace ulb::cli {

enum class Format { text, csv, json };

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCertificate = 2,
  kIo = 3,
};

/// Options common to every command.
struct Common {
  Format format = Format::text;
  /// Threshold below which Q_j counts as negative and |Q_j| as zero.
  double tol = 1e-9;
};

struct BoundArgs {
  int n = 0;
  double N = 0.0;
  std::string potential = "newton";
};

struct TableArgs {
  int n = 0;
  int N_min = 0;
  int N_max = 0;
  std::string potential = "newton";
  /// CSV with columns N, energy (header and '#' lines allowed).
  std::optional<std::filesystem::path> reference;
};

struct CurveArgs {
  int n = 0;
  double s_min = -1.0;
  double s_max = 0.9;
  int steps = 200;
};

struct TestfnArgs {
  int n = 0;
  double N = 0.0;
  int j_max = 20;
};

struct VerdictArgs {
  int n = 0;
  double N = 0.0;
  /// Degrees scanned beyond tau even when j0 is smaller.
  int j_extra = 2;
};

struct EnergyArgs {
  /// "simplex:n", "cross:n", "d4" or "file:path".
  std::string code;
  std::string potential = "newton";
};

struct ImproveArgs {
  int n = 0;
  double N = 0.0;
  std::string potential = "newton";
  int j = 0;
};

// Each command writes its result to `out`, diagnostics to `err`, and
// returns an ExitCode. Library exceptions are mapped to exit codes here.
int cmd_bound(const BoundArgs& args, const Common& common, std::ostream& out, std::ostream& err);
int cmd_table(const TableArgs& args, const Common& common, std::ostream& out, std::ostream& err);
int cmd_curve(const CurveArgs& args, const Common& common, std::ostream& out, std::ostream& err);
int cmd_testfn(const TestfnArgs& args, const Common& common, std::ostream& out,
               std::ostream& err);
int cmd_verdict(const VerdictArgs& args, const Common& common, std::ostream& out,
                std::ostream& err);
int cmd_energy(const EnergyArgs& args, const Common& common, std::ostream& out,
               std::ostream& err);
int cmd_improve(const ImproveArgs& args, const Common& common, std::ostream& out,
                std::ostream& err);

/// "text", "csv" or "json"; throws ulb::ParseError otherwise.
Format parse_format(const std::string& name);

/// Tolerance from the ULB_TOL environment variable, or `fallback`.
double tolerance_from_env(double fallback);

}  // namespace ulb::cli
