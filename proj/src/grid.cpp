#include "isq/grid.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "isq/error.hpp"

namespace isq {

LogGrid::LogGrid(int n, double step, double center) : n_(n), h_(step), c_(center) {
  if (n < 2 || !(step > 0.0) || !std::isfinite(center)) {
    throw Error(ErrorKind::DomainViolation, "grid needs n >= 2 and a positive step");
  }
}

LogGrid LogGrid::spanning(int n, double x_min, double x_max) {
  if (!(x_min > 0.0) || !(x_max > x_min)) {
    throw Error(ErrorKind::DomainViolation, "grid needs 0 < x_min < x_max");
  }
  const double lo = std::log(x_min);
  const double hi = std::log(x_max);
  // Exact symmetry when x_min x_max == 1 so that inversion is a pure index flip.
  const double center = (x_min * x_max == 1.0) ? 0.0 : 0.5 * (lo + hi);
  return LogGrid(n, (hi - lo) / (n - 1), center);
}

double LogGrid::x(int j) const { return std::exp(u(j)); }

GridFunction::GridFunction(LogGrid grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.size()) {
    throw Error(ErrorKind::DomainViolation, "value count does not match grid");
  }
}

GridFunction GridFunction::from_log_picture(const LogGrid& grid, const std::vector<cplx>& g) {
  std::vector<cplx> v(grid.size());
  for (int j = 0; j < grid.size(); ++j) v[j] = g[j] * std::exp(-0.5 * grid.u(j));
  return GridFunction(grid, std::move(v));
}

std::vector<cplx> GridFunction::log_picture() const {
  std::vector<cplx> g(values_.size());
  for (int j = 0; j < size(); ++j) g[j] = values_[j] * std::exp(0.5 * grid_.u(j));
  return g;
}

double GridFunction::norm() const {
  double s = 0.0;
  for (int j = 0; j < size(); ++j) s += std::norm(values_[j]) * grid_.weight(j);
  return std::sqrt(s);
}

cplx inner(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid() == b.grid())) throw Error(ErrorKind::DomainViolation, "grids differ");
  cplx s = 0.0;
  for (int j = 0; j < a.size(); ++j) s += std::conj(a[j]) * b[j] * a.grid().weight(j);
  return s;
}

GridFunction GridFunction::operator+(const GridFunction& o) const {
  if (!(grid_ == o.grid_)) throw Error(ErrorKind::DomainViolation, "grids differ");
  std::vector<cplx> v(values_);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] += o.values_[j];
  return GridFunction(grid_, std::move(v));
}

GridFunction GridFunction::operator-(const GridFunction& o) const { return *this + o * cplx(-1.0); }

GridFunction GridFunction::operator*(cplx s) const {
  std::vector<cplx> v(values_);
  for (auto& x : v) x *= s;
  return GridFunction(grid_, std::move(v));
}

double relative_error(const GridFunction& a, const GridFunction& b) {
  return (a - b).norm() / b.norm();
}

double MellinFunction::norm() const {
  double s = 0.0;
  for (const auto& v : values) s += std::norm(v);
  return std::sqrt(s * dt());
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const GridFunction& f) {
  os << "node,re,im\n";
  for (int j = 0; j < f.size(); ++j) {
    os << format_double(f.grid().x(j)) << ',' << format_double(f[j].real()) << ','
       << format_double(f[j].imag()) << '\n';
  }
}

namespace {

// Recovers the log-uniform grid behind a list of nodes, or throws NonUniformGrid.
LogGrid fit_grid(const std::vector<double>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n < 2) throw Error(ErrorKind::NonUniformGrid, "need at least two nodes");
  for (double x : nodes) {
    if (!(x > 0.0)) throw Error(ErrorKind::NonUniformGrid, "nodes must be positive");
  }
  const LogGrid grid = LogGrid::spanning(n, nodes.front(), nodes.back());
  for (int j = 0; j < n; ++j) {
    if (std::abs(grid.x(j) - nodes[j]) > 1e-12 * nodes[j]) {
      throw Error(ErrorKind::NonUniformGrid, "node " + std::to_string(j) + " off the log-uniform grid");
    }
  }
  return grid;
}

double parse_field(const std::string& s, int line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw Error(ErrorKind::Usage, "bad number '" + s + "' on line " + std::to_string(line));
  }
  return v;
}

}  // namespace

GridFunction read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("node,re,im", 0) != 0) {
    throw Error(ErrorKind::Usage, "expected header node,re,im");
  }
  std::vector<double> nodes;
  std::vector<cplx> values;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c)) {
      throw Error(ErrorKind::Usage, "expected three columns on line " + std::to_string(lineno));
    }
    nodes.push_back(parse_field(a, lineno));
    values.emplace_back(parse_field(b, lineno), parse_field(c, lineno));
  }
  return GridFunction(fit_grid(nodes), std::move(values));
}

std::string to_json(const GridFunction& f) {
  nlohmann::json j;
  j["schema"] = 1;
  j["grid"] = {{"n", f.size()}, {"step", f.grid().step()}, {"center", f.grid().center()}};
  auto nodes = nlohmann::json::array();
  auto values = nlohmann::json::array();
  for (int k = 0; k < f.size(); ++k) {
    nodes.push_back(f.grid().x(k));
    values.push_back({f[k].real(), f[k].imag()});
  }
  j["nodes"] = std::move(nodes);
  j["values"] = std::move(values);
  return j.dump();
}

GridFunction from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Usage, std::string("invalid JSON: ") + e.what());
  }
  if (j.value("schema", 0) != 1) throw Error(ErrorKind::Usage, "unsupported schema");
  const auto& g = j.at("grid");
  const LogGrid grid(g.at("n").get<int>(), g.at("step").get<double>(), g.at("center").get<double>());
  const auto& vals = j.at("values");
  if (static_cast<int>(vals.size()) != grid.size()) {
    throw Error(ErrorKind::Usage, "value count does not match grid");
  }
  std::vector<cplx> v;
  v.reserve(vals.size());
  for (const auto& p : vals) v.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  return GridFunction(grid, std::move(v));
}

}  // namespace isq
