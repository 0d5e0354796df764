#pragma once

#include <functional>

#include "isq/extended_complex.hpp"

namespace isq::quad {

struct Options {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

struct Result {
  cplx value;
  double error = 0.0;  // Kronrod error estimate
  int evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<cplx(double)>;

/// Globally adaptive Gauss–Kronrod (7/15) on a finite interval.
Result integrate(const Integrand& f, double a, double b, const Options& opt = {});

/// Like integrate(), but throws QuadratureNotConverged (with the achieved estimate)
/// when the tolerance is not met.
Result integrate_or_throw(const Integrand& f, double a, double b, const Options& opt = {});

}  // namespace isq::quad
