#pragma once

#include <map>
#include <string>

#include "isq/grid.hpp"

namespace isq {

enum class OutputFormat { Json, Csv };

struct RunConfig {
  int nodes = 2048;
  double x_min = 1e-4;
  double x_max = 1e4;
  bool grid_overridden = false;  // set when the user chose the grid explicitly
  std::map<std::string, double> tolerances;  // per named check, overriding suite defaults
  OutputFormat format = OutputFormat::Json;
  std::string output;  // empty: stdout
  int threads = 1;

  /// Throws Usage when a field is out of range.
  void validate() const;
  LogGrid grid() const { return LogGrid::spanning(nodes, x_min, x_max); }
  double tolerance(const std::string& check, double fallback) const;
};

/// Parses "name=value" into the tolerance map (CLI --tol and config files).
void add_tolerance(RunConfig& cfg, const std::string& assignment);

}  // namespace isq
