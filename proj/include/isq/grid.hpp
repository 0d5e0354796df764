#pragma once

// Functions on (0, ∞) sampled on log-uniform grids u_j = c + (j − (n−1)/2) h, x_j = e^{u_j}.
// Values are f(x_j); the natural unitary picture is g(u) = e^{u/2} f(e^u), in which
// ‖f‖² = ∫|g|² du, dilations are translations and the inversion is g(u) ↦ g(−u).

#include <iosfwd>
#include <string>
#include <vector>

#include "isq/extended_complex.hpp"

namespace isq {

class LogGrid {
 public:
  LogGrid() = default;
  LogGrid(int n, double step, double center = 0.0);

  /// n nodes spanning [x_min, x_max], log-uniform.
  static LogGrid spanning(int n, double x_min, double x_max);

  int size() const { return n_; }
  double step() const { return h_; }
  double center() const { return c_; }
  double u(int j) const { return c_ + (j - 0.5 * (n_ - 1)) * h_; }
  double x(int j) const;
  double x_min() const { return x(0); }
  double x_max() const { return x(n_ - 1); }
  double weight(int j) const { return h_ * x(j); }  // trapezoid weight for ∫ · dx
  bool symmetric() const { return c_ == 0.0; }

  bool operator==(const LogGrid& o) const { return n_ == o.n_ && h_ == o.h_ && c_ == o.c_; }

 private:
  int n_ = 0;
  double h_ = 0.0;
  double c_ = 0.0;
};

class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(LogGrid grid, std::vector<cplx> values);

  template <class F>
  static GridFunction sample(const LogGrid& grid, F&& f) {
    std::vector<cplx> v(grid.size());
    for (int j = 0; j < grid.size(); ++j) v[j] = f(grid.x(j));
    return GridFunction(grid, std::move(v));
  }

  /// Builds f from its unitary picture g(u) = √x f(x).
  static GridFunction from_log_picture(const LogGrid& grid, const std::vector<cplx>& g);
  std::vector<cplx> log_picture() const;

  const LogGrid& grid() const { return grid_; }
  const std::vector<cplx>& values() const { return values_; }
  int size() const { return grid_.size(); }
  cplx operator[](int j) const { return values_[j]; }

  double norm() const;
  /// ⟨a, b⟩ = ∫ conj(a) b dx (trapezoid).
  friend cplx inner(const GridFunction& a, const GridFunction& b);

  GridFunction operator+(const GridFunction& o) const;
  GridFunction operator-(const GridFunction& o) const;
  GridFunction operator*(cplx s) const;

 private:
  LogGrid grid_;
  std::vector<cplx> values_;
};

/// ‖a − b‖ / ‖b‖.
double relative_error(const GridFunction& a, const GridFunction& b);

/// Samples of G(t) on t_k = 2πk/(n h), k = −n/2 … ⌈n/2⌉−1 (ascending).
struct MellinFunction {
  LogGrid source;  // grid the transform came from / returns to
  std::vector<double> t;
  std::vector<cplx> values;

  double dt() const { return t.size() > 1 ? t[1] - t[0] : 0.0; }
  double norm() const;
};

// Serialization. CSV: header "node,re,im", one row per node, %.17g. JSON: envelope
// {"schema":1,"grid":{"n","step","center"},"nodes":[...],"values":[[re,im],...]}.
void write_csv(std::ostream& os, const GridFunction& f);
GridFunction read_csv(std::istream& is);
std::string to_json(const GridFunction& f);
GridFunction from_json(const std::string& text);

/// %.17g formatting used by every text output.
std::string format_double(double v);

}  // namespace isq
