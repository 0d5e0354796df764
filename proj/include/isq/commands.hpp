#pragma once

// Table-producing commands behind the `isq` executable. Each returns a Table that
// serializes deterministically to CSV or JSON.

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isq/extended_complex.hpp"
#include "isq/run_config.hpp"
#include "isq/spectrum.hpp"

namespace isq::cli {

using Cell = std::variant<std::string, double, long long, bool>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> meta;  // emitted in JSON only
};

/// RFC-4180 with a header row; doubles at 17 significant digits.
void write_csv(std::ostream& os, const Table& t);
/// {"schema":1,"command":…,"meta":{…},"columns":[…],"rows":[[…]]}; non-finite doubles as strings.
void write_json(std::ostream& os, const Table& t);
void write_table(std::ostream& os, const Table& t, OutputFormat format);

enum class Family { Toy, Schrodinger, LogToy, LogSchrodinger };
Family parse_family(const std::string& name, bool log_uses_nu);

struct EigenvaluesRequest {
  Family family = Family::Toy;
  cplx m = 0.5;
  ExtendedComplex param;  // λ, κ, ρ or ν
  IndexWindow window;
};
Table cmd_eigenvalues(const EigenvaluesRequest& req);

Table cmd_count(cplx m, const ExtendedComplex& lambda);

enum class KernelKind { Resolvent, Projection };
struct KernelRequest {
  KernelKind kind = KernelKind::Resolvent;
  cplx m = 0.5;
  cplx k = 1.0;             // resolvent at z = −k²
  double a = 0.5, b = 2.0;  // projection onto [a, b]
  double x_min = 0.1, x_max = 10.0;
  int points = 16;          // log-spaced nodes per axis
};
/// Long format: one row (x, y, re, im) per node pair.
Table cmd_kernel(const KernelRequest& req);

struct FlowRequest {
  Family family = Family::Toy;
  cplx m = 0.5;
  ExtendedComplex param;
  double tau_min = -1.0, tau_max = 1.0;
  int steps = 10;  // intervals
};
Table cmd_flow(const FlowRequest& req);

/// steps intervals on [alpha_min, alpha_max], plus the critical points 0 and 1 when inside.
Table cmd_phase(double alpha_min, double alpha_max, int steps);
Table cmd_phase_at(const std::vector<double>& alphas);

/// Residual ‖Ω_numeric(t) f − Ω_analytic f‖/‖f‖ on the standard state f = F_k(bump).
Table cmd_moeller(cplx m, cplx k, const std::vector<double>& times, const RunConfig& cfg);

struct VerifyOutcome {
  bool passed = true;
  bool numerical_failure = false;  // some check failed by non-convergence
};
/// "all" runs every suite.
Table cmd_verify(const std::string& suite, const RunConfig& cfg, VerifyOutcome& outcome);

}  // namespace isq::cli
