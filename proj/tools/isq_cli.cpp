// isq: spectra, kernels, flows, phase tables and verification reports for the
// inverse-square and rank-one model families.
//
// Exit codes: 0 success, 2 usage or domain error, 3 verification failure,
// 4 numerical non-convergence (including a check that could not be computed).

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "isq/commands.hpp"
#include "isq/error.hpp"
#include "isq/verify.hpp"

namespace {

using isq::ErrorKind;

// The coupling that goes with the family: exactly one of the options may be given.
isq::ExtendedComplex coupling(isq::cli::Family family, const std::optional<std::string>& lambda,
                              const std::optional<std::string>& kappa, const std::optional<std::string>& rho,
                              const std::optional<std::string>& nu) {
  const int given = lambda.has_value() + kappa.has_value() + rho.has_value() + nu.has_value();
  if (given != 1) throw isq::Error(ErrorKind::Usage, "give exactly one of --lambda, --kappa, --rho, --nu");
  switch (family) {
    case isq::cli::Family::Toy:
      if (!lambda) throw isq::Error(ErrorKind::Usage, "family toy takes --lambda");
      return isq::parse_extended(*lambda);
    case isq::cli::Family::Schrodinger:
      if (!kappa) throw isq::Error(ErrorKind::Usage, "family schrodinger takes --kappa");
      return isq::parse_extended(*kappa);
    case isq::cli::Family::LogToy:
      return isq::parse_extended(*rho);
    case isq::cli::Family::LogSchrodinger:
      return isq::parse_extended(*nu);
  }
  throw isq::Error(ErrorKind::Usage, "unknown family");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral data for inverse-square and rank-one model operators"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.set_config("--config", "", "TOML-style key = value file mirroring the options below");

  isq::RunConfig cfg;
  std::string format = "json";
  std::vector<std::string> tols;
  auto* nodes_opt = app.add_option("--nodes", cfg.nodes, "grid node count (>= 16)");
  auto* xmin_opt = app.add_option("--x-min", cfg.x_min, "left end of the log grid");
  auto* xmax_opt = app.add_option("--x-max", cfg.x_max, "right end of the log grid");
  app.add_option("--tol", tols, "per-check tolerance override, name=value (repeatable)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output,-o", cfg.output, "output file (default stdout)");
  app.add_option("--threads", cfg.threads, "parallelism degree for sweeps");

  // eigenvalues
  auto* eig = app.add_subcommand("eigenvalues", "point spectrum of one family member");
  std::string family;
  std::string m_text = "0.5";
  std::optional<std::string> lambda, kappa, rho, nu;
  std::vector<long> window{-20, 20};
  eig->add_option("--family", family, "toy, schrodinger or log")->required();
  eig->add_option("--m", m_text, "order m as re[,im]");
  eig->add_option("--lambda", lambda, "toy coupling (re[,im] or inf)");
  eig->add_option("--kappa", kappa, "boundary parameter of H_{m,kappa}");
  eig->add_option("--rho", rho, "log toy coupling");
  eig->add_option("--nu", nu, "log boundary parameter of H_0^nu");
  eig->add_option("--window", window, "index window lo hi for infinite spectra")->expected(2);

  // count
  auto* cnt = app.add_subcommand("count", "eigenvalue count of H_{m,lambda} and its admissible range");
  std::string count_m = "0.5", count_lambda = "1";
  cnt->add_option("--m", count_m, "order m")->required();
  cnt->add_option("--lambda", count_lambda, "coupling")->required();

  // kernel
  auto* ker = app.add_subcommand("kernel", "resolvent or spectral projection kernel of H_m");
  std::string kernel_kind = "resolvent";
  isq::cli::KernelRequest kreq;
  std::string kernel_m = "0.5", kernel_k = "1";
  std::vector<double> kernel_range{0.1, 10.0};
  std::vector<double> band{0.5, 2.0};
  ker->add_option("kind", kernel_kind, "resolvent or projection")->check(CLI::IsMember({"resolvent", "projection"}));
  ker->add_option("--m", kernel_m, "order m");
  ker->add_option("--k", kernel_k, "resolvent at z = -k^2, Re k > 0");
  ker->add_option("--band", band, "projection interval a b")->expected(2);
  ker->add_option("--range", kernel_range, "x_min x_max of the sample nodes")->expected(2);
  ker->add_option("--points", kreq.points, "log-spaced nodes per axis");

  // flow
  auto* flw = app.add_subcommand("flow", "dilation (RG) orbit of a coupling");
  std::string flow_family;
  std::string flow_m = "0.5";
  std::optional<std::string> f_lambda, f_kappa, f_rho, f_nu;
  std::vector<double> tau{-1.0, 1.0};
  int flow_steps = 10;
  flw->add_option("--family", flow_family, "toy, schrodinger or log")->required();
  flw->add_option("--m", flow_m, "order m");
  flw->add_option("--lambda", f_lambda, "toy coupling");
  flw->add_option("--kappa", f_kappa, "boundary parameter");
  flw->add_option("--rho", f_rho, "log toy coupling");
  flw->add_option("--nu", f_nu, "log boundary parameter");
  flw->add_option("--tau", tau, "tau range lo hi")->expected(2);
  flw->add_option("--steps", flow_steps, "number of intervals");

  // phase
  auto* phs = app.add_subcommand("phase", "phase table of self-adjoint extensions against alpha = m^2");
  std::vector<double> alpha{-1.0, 2.0};
  int phase_steps = 6;
  phs->add_option("--alpha", alpha, "alpha range lo hi")->expected(2);
  phs->add_option("--steps", phase_steps, "number of intervals; 0 and 1 are always included");

  // moeller
  auto* mol = app.add_subcommand("moeller", "finite-time Moeller residuals against the multiplier formula");
  std::string mol_m = "0.5", mol_k = "1.5";
  std::vector<double> times{10.0, 30.0, 100.0};
  mol->add_option("--m", mol_m, "order of the interacting dynamics");
  mol->add_option("--k", mol_k, "order of the reference dynamics");
  mol->add_option("--t", times, "times");

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  bool list = false;
  ver->add_option("suite", suite, "suite name or all");
  ver->add_flag("--list", list, "print the suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& t : tols) isq::add_tolerance(cfg, t);
    cfg.format = format == "csv" ? isq::OutputFormat::Csv : isq::OutputFormat::Json;
    cfg.grid_overridden = nodes_opt->count() + xmin_opt->count() + xmax_opt->count() > 0;
    cfg.validate();

    isq::cli::Table table;
    int verify_code = 0;
    if (*eig) {
      isq::cli::EigenvaluesRequest req;
      req.family = isq::cli::parse_family(family, nu.has_value());
      req.m = isq::parse_complex(m_text);
      req.param = coupling(req.family, lambda, kappa, rho, nu);
      req.window = {window[0], window[1]};
      table = isq::cli::cmd_eigenvalues(req);
    } else if (*cnt) {
      table = isq::cli::cmd_count(isq::parse_complex(count_m), isq::parse_extended(count_lambda));
    } else if (*ker) {
      kreq.kind = kernel_kind == "projection" ? isq::cli::KernelKind::Projection : isq::cli::KernelKind::Resolvent;
      kreq.m = isq::parse_complex(kernel_m);
      kreq.k = isq::parse_complex(kernel_k);
      kreq.a = band[0];
      kreq.b = band[1];
      kreq.x_min = kernel_range[0];
      kreq.x_max = kernel_range[1];
      table = isq::cli::cmd_kernel(kreq);
    } else if (*flw) {
      isq::cli::FlowRequest req;
      req.family = isq::cli::parse_family(flow_family, f_nu.has_value());
      req.m = isq::parse_complex(flow_m);
      req.param = coupling(req.family, f_lambda, f_kappa, f_rho, f_nu);
      req.tau_min = tau[0];
      req.tau_max = tau[1];
      req.steps = flow_steps;
      table = isq::cli::cmd_flow(req);
    } else if (*phs) {
      table = isq::cli::cmd_phase(alpha[0], alpha[1], phase_steps);
    } else if (*mol) {
      table = isq::cli::cmd_moeller(isq::parse_complex(mol_m), isq::parse_complex(mol_k), times, cfg);
    } else if (*ver) {
      if (list) {
        for (const auto& n : isq::verify::suite_names()) std::cout << n << "\n";
        return 0;
      }
      isq::cli::VerifyOutcome outcome;
      table = isq::cli::cmd_verify(suite, cfg, outcome);
      if (!outcome.passed) verify_code = outcome.numerical_failure ? 4 : 3;
      // Per-check summary on stderr; the table itself goes to the chosen output.
      for (const auto& row : table.rows) {
        std::cerr << (std::get<bool>(row[4]) ? "PASS " : "FAIL ") << std::get<std::string>(row[1])
                  << " achieved " << isq::format_double(std::get<double>(row[2])) << " target "
                  << isq::format_double(std::get<double>(row[3])) << "\n";
      }
    }

    if (cfg.output.empty()) {
      isq::cli::write_table(std::cout, table, cfg.format);
    } else {
      std::ofstream out(cfg.output, std::ios::binary);
      if (!out) throw isq::Error(ErrorKind::Usage, "cannot open output file '" + cfg.output + "'");
      isq::cli::write_table(out, table, cfg.format);
    }
    return verify_code;
  } catch (const isq::Error& e) {
    std::cerr << "isq: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "isq: " << e.what() << "\n";
    return 4;
  }
}
