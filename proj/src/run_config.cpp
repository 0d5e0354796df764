#include "isq/run_config.hpp"

#include <cmath>
#include <cstdlib>

#include "isq/error.hpp"

namespace isq {

void RunConfig::validate() const {
  if (nodes < 16) throw Error(ErrorKind::Usage, "node count must be at least 16");
  if (!(x_min > 0.0) || !(x_max > x_min)) throw Error(ErrorKind::Usage, "grid needs 0 < x_min < x_max");
  if (threads < 1) throw Error(ErrorKind::Usage, "parallelism degree must be positive");
  for (const auto& [name, tol] : tolerances) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorKind::Usage, "tolerance '" + name + "' must be positive");
  }
}

double RunConfig::tolerance(const std::string& check, double fallback) const {
  auto it = tolerances.find(check);
  return it == tolerances.end() ? fallback : it->second;
}

void add_tolerance(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::Usage, "expected name=value, got '" + assignment + "'");
  const std::string value = assignment.substr(eq + 1);
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size()) {
    throw Error(ErrorKind::Usage, "bad tolerance value '" + value + "'");
  }
  cfg.tolerances[assignment.substr(0, eq)] = v;
}

}  // namespace isq
