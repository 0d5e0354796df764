#include "isq/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isq/error.hpp"
#include "isq/grid.hpp"
#include "isq/homogeneous.hpp"
#include "isq/parallel.hpp"
#include "isq/scattering.hpp"
#include "isq/test_functions.hpp"
#include "isq/toy_model.hpp"
#include "isq/transforms.hpp"
#include "isq/verify.hpp"
#include "json.hpp"

namespace isq::cli {

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* n = std::get_if<long long>(&c)) return std::to_string(*n);
  return std::get<bool>(c) ? "true" : "false";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_cell(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return json_string(*s);
  if (const auto* d = std::get_if<double>(&c)) {
    return std::isfinite(*d) ? format_double(*d) : json_string(format_double(*d));
  }
  return cell_text(c);
}

// Re and Im of a coupling, or ("inf", 0).
std::pair<Cell, Cell> coupling_cells(const ExtendedComplex& v) {
  if (v.is_infinite()) return {std::string("inf"), 0.0};
  return {v.value().real(), v.value().imag()};
}

Cell count_cell(const SpectrumReport& rep) {
  if (rep.count_class == CountClass::Infinite) return std::string("inf");
  return static_cast<long long>(rep.size());
}

SpectrumReport spectrum(Family family, cplx m, const ExtendedComplex& param, IndexWindow window, std::string* route) {
  switch (family) {
    case Family::Toy:
      return toy::toy_eigenvalues({m, param}, window);
    case Family::LogToy:
      return toy::h0_eigenvalue(param);
    case Family::LogSchrodinger:
      return hom::h0nu_eigenvalue(param);
    case Family::Schrodinger:
      try {
        if (route) *route = "self-adjoint classification";
        return hom::hmk_eigenvalues({m, param}, window);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::OutsideClassifiedRegion) throw;
        if (route) *route = "general boundary condition";
        return hom::hmk_eigenvalues_general({m, param}, window);
      }
  }
  throw Error(ErrorKind::Usage, "unknown family");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Toy: return "toy";
    case Family::Schrodinger: return "schrodinger";
    case Family::LogToy: return "log-toy";
    case Family::LogSchrodinger: return "log-schrodinger";
  }
  return "unknown";
}

std::string join_fixed_points(const std::vector<hom::FixedPoint>& fps) {
  if (fps.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < fps.size(); ++i) out += (i ? "," : "") + std::string(hom::to_string(fps[i]));
  return out;
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
  os << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
    os << "\r\n";
  }
}

void write_json(std::ostream& os, const Table& t) {
  os << "{\"schema\":1,\"command\":" << json_string(t.command) << ",\"meta\":{";
  for (std::size_t i = 0; i < t.meta.size(); ++i) {
    os << (i ? "," : "") << json_string(t.meta[i].first) << ":" << json_string(t.meta[i].second);
  }
  os << "},\"columns\":[";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << json_string(t.columns[i]);
  os << "],\"rows\":[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << (r ? "," : "") << "[";
    for (std::size_t i = 0; i < t.rows[r].size(); ++i) os << (i ? "," : "") << json_cell(t.rows[r][i]);
    os << "]";
  }
  os << "]}\n";
}

void write_table(std::ostream& os, const Table& t, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    write_csv(os, t);
  } else {
    write_json(os, t);
  }
}

Family parse_family(const std::string& name, bool log_uses_nu) {
  if (name == "toy") return Family::Toy;
  if (name == "schrodinger") return Family::Schrodinger;
  if (name == "log") return log_uses_nu ? Family::LogSchrodinger : Family::LogToy;
  throw Error(ErrorKind::Usage, "family must be toy, schrodinger or log, got '" + name + "'");
}

Table cmd_eigenvalues(const EigenvaluesRequest& req) {
  if (req.window.lo > req.window.hi) throw Error(ErrorKind::Usage, "index window needs lo <= hi");
  std::string route;
  const SpectrumReport rep = spectrum(req.family, req.m, req.param, req.window, &route);
  Table t{"eigenvalues", {"index", "re", "im"}, {}, {}};
  t.meta = {{"family", family_name(req.family)}, {"count_class", to_string(rep.count_class)}};
  if (req.family == Family::Schrodinger) t.meta.emplace_back("route", route);
  if (rep.count_class == CountClass::Infinite) {
    t.meta.emplace_back("window", std::to_string(rep.window_lo) + ".." + std::to_string(rep.window_hi));
  }
  for (const auto& e : rep.eigenvalues) t.rows.push_back({static_cast<long long>(e.index), e.value.real(), e.value.imag()});
  return t;
}

Table cmd_count(cplx m, const ExtendedComplex& lambda) {
  const SpectrumReport rep = toy::toy_eigenvalues({m, lambda});
  const toy::CountBound bound = toy::toy_count_bounds(m, lambda);
  Table t{"count", {"count", "class", "bound", "admitted"}, {}, {}};
  std::string text;
  if (bound.degenerate) {
    text = "0";
  } else if (bound.dichotomy) {
    text = to_string(bound.imaginary_class);
  } else {
    text = std::to_string(bound.n) + ".." + std::to_string(bound.n + 1);
  }
  t.rows.push_back({count_cell(rep), std::string(to_string(rep.count_class)), text, bound.admits(rep)});
  return t;
}

Table cmd_kernel(const KernelRequest& req) {
  if (req.points < 1) throw Error(ErrorKind::Usage, "points must be positive");
  if (!(req.x_min > 0.0 && req.x_max >= req.x_min)) throw Error(ErrorKind::Usage, "kernel range needs 0 < x_min <= x_max");
  std::vector<double> xs(req.points);
  for (int i = 0; i < req.points; ++i) {
    const double s = req.points == 1 ? 0.0 : double(i) / (req.points - 1);
    xs[i] = req.x_min * std::pow(req.x_max / req.x_min, s);
  }
  Table t{"kernel", {"x", "y", "re", "im"}, {}, {}};
  if (req.kind == KernelKind::Resolvent) {
    t.meta = {{"kind", "resolvent"}, {"z", "-k^2"}};
  } else {
    t.meta = {{"kind", "projection"}};
  }
  for (double x : xs) {
    for (double y : xs) {
      const cplx v = req.kind == KernelKind::Resolvent ? hom::resolvent_kernel_hm(req.m, req.k, x, y)
                                                        : hom::projection_kernel(req.m, req.a, req.b, x, y).value;
      t.rows.push_back({x, y, v.real(), v.imag()});
    }
  }
  return t;
}

Table cmd_flow(const FlowRequest& req) {
  if (req.steps < 1) throw Error(ErrorKind::Usage, "steps must be positive");
  Table t{"flow", {"tau", "energy_scale", "param_re", "param_im", "eigenvalue_count"}, {}, {}};
  t.meta = {{"family", family_name(req.family)}};
  for (int i = 0; i <= req.steps; ++i) {
    const double tau = req.tau_min + (req.tau_max - req.tau_min) * i / req.steps;
    ExtendedComplex p;
    double scale = 1.0;
    if (req.family == Family::Toy || req.family == Family::LogToy) {
      const toy::Params in = req.family == Family::Toy ? toy::Params(toy::ToyParams{req.m, req.param})
                                                       : toy::Params(toy::LogParams{req.param});
      const toy::Params out = toy::rg_flow_toy(in, tau);
      p = req.family == Family::Toy ? std::get<toy::ToyParams>(out).lambda : std::get<toy::LogParams>(out).rho;
      scale = std::exp(tau);
    } else {
      const hom::Params in = req.family == Family::Schrodinger ? hom::Params(hom::BoundaryParams{req.m, req.param})
                                                               : hom::Params(hom::LogBoundaryParams{req.param});
      const hom::Params out = hom::rg_flow_schrodinger(in, tau);
      p = req.family == Family::Schrodinger ? std::get<hom::BoundaryParams>(out).kappa
                                            : std::get<hom::LogBoundaryParams>(out).nu;
      scale = std::exp(-2.0 * tau);
    }
    const auto [re, im] = coupling_cells(p);
    t.rows.push_back({tau, scale, re, im, count_cell(spectrum(req.family, req.m, p, {}, nullptr))});
  }
  return t;
}

Table cmd_phase_at(const std::vector<double>& alphas) {
  Table t{"phase", {"alpha", "phase", "extensions", "fixed_points", "fixed_point_operators", "bound_states", "flow"}, {}, {}};
  for (double a : alphas) {
    const hom::PhaseReport r = hom::classify_phase(a);
    t.rows.push_back({a, std::string(hom::to_string(r.phase)), std::string(hom::to_string(r.extensions)),
                      join_fixed_points(r.fixed_points), r.fixed_point_operators, r.bound_states, r.flow});
  }
  return t;
}

Table cmd_phase(double alpha_min, double alpha_max, int steps) {
  if (steps < 1) throw Error(ErrorKind::Usage, "steps must be positive");
  if (!(alpha_min <= alpha_max)) throw Error(ErrorKind::Usage, "alpha range needs min <= max");
  std::vector<double> alphas;
  for (int i = 0; i <= steps; ++i) alphas.push_back(alpha_min + (alpha_max - alpha_min) * i / steps);
  for (double critical : {0.0, 1.0}) {
    if (alpha_min <= critical && critical <= alpha_max) alphas.push_back(critical);
  }
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  return cmd_phase_at(alphas);
}

Table cmd_moeller(cplx m, cplx k, const std::vector<double>& times, const RunConfig& cfg) {
  if (times.empty()) throw Error(ErrorKind::Usage, "at least one time is needed");
  const LogGrid g = cfg.grid_overridden ? cfg.grid() : hankel_grid();
  tr::Options opt;
  opt.support_tol = cfg.tolerance("support", 1e-6);
  opt.edge_tol = cfg.tolerance("edge", 1e-2);
  const GridFunction f = tr::hankel(k, bump(g, 0.0, 0.25), opt);
  const GridFunction limit = scat::moeller_analytic(m, k, +1, f, opt);
  const auto residuals = parallel_map<double>(int(times.size()), cfg.threads, [&](int i) {
    return (scat::moeller_numeric(m, k, times[i], f, opt) - limit).norm() / f.norm();
  });
  Table t{"moeller", {"t", "residual"}, {}, {}};
  t.meta = {{"state", "F_k applied to a Gaussian bump in ln x, centre 0, width 0.25"},
            {"nodes", std::to_string(g.size())}};
  for (std::size_t i = 0; i < times.size(); ++i) t.rows.push_back({times[i], residuals[i]});
  return t;
}

Table cmd_verify(const std::string& suite, const RunConfig& cfg, VerifyOutcome& outcome) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = verify::suite_names();
  } else {
    names = {suite};
  }
  Table t{"verify", {"suite", "check", "achieved", "target", "pass", "detail"}, {}, {}};
  outcome = {};
  for (const auto& name : names) {
    const verify::SuiteResult r = verify::run_suite(name, cfg);
    outcome.passed = outcome.passed && r.passed();
    for (const auto& c : r.checks) {
      outcome.numerical_failure = outcome.numerical_failure || c.numerical_failure;
      t.rows.push_back({r.suite, c.name, c.achieved, c.target, c.pass, c.detail});
    }
  }
  t.meta = {{"result", outcome.passed ? "pass" : "fail"}};
  return t;
}

}  // namespace isq::cli
