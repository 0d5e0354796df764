#pragma once

// Brute-force verifiers that share no formulas with the closed forms they check:
// quadrature of the weighted resolvent, ODE shooting for bound states of
//   L_α = −∂² + (α − 1/4)/x²
// under a prescribed behaviour at 0, and a finite-difference eigenvalue solver.

#include <optional>
#include <variant>
#include <vector>

#include "isq/quadrature.hpp"
#include "isq/spectrum.hpp"

namespace isq::oracle {

/// ∫₀^∞ x^m/(z−x) dx by adaptive quadrature on x = e^u, split at |z|; −1 < Re m < 0.
quad::Result quad_weighted_resolvent(cplx m, cplx z, const quad::Options& opt = {});

}  // namespace isq::oracle

namespace isq::oracle {

/// ∫₀^∞ √(xy) J_m(px) J_m(py) p/(k² + p²) dp, x ≠ y, via Gaussian damping e^{−εp²}
/// and Richardson extrapolation ε → 0 (in powers of √ε). Independent of the
/// I·K closed form it is used to check.
quad::Result eigen_expansion_resolvent_kernel(cplx m, double k, double x, double y, int levels = 6);

}  // namespace isq::oracle

namespace isq::oracle {

/// Behaviour of the solution at 0.
struct Mixed {  // x^{1/2−m} + κ x^{1/2+m}; κ = ∞ is pure x^{1/2+m}
  cplx m;
  ExtendedComplex kappa;
};
struct Log {  // x^{1/2} ln x + ν x^{1/2}; ν = ∞ is pure x^{1/2}
  ExtendedComplex nu;
};
struct Pure {  // x^{1/2+m}
  cplx m;
};
using Boundary = std::variant<Mixed, Log, Pure>;

/// Seeds for the secant iteration: a rectangle in E, or a polar sector
/// (log-spaced |E| × arg E) for spectra spread over many scales.
struct EnergyWindow {
  enum class Kind { Rectangle, Polar } kind = Kind::Rectangle;
  double lo1 = -10.0, hi1 = -0.01;  // Re E, or |E|
  double lo2 = -1.0, hi2 = 1.0;     // Im E, or arg E
  int n1 = 16, n2 = 16;

  bool contains(cplx e) const;
  std::vector<cplx> seeds() const;
};

struct ShootingProblem {
  cplx alpha;  // m² (or the Log class with α = 0)
  Boundary boundary = Pure{0.5};
  EnergyWindow window;
  std::optional<double> x0;  // default min(1e−3, 0.1/|k|)
  std::optional<double> X;   // default 35/Re k
  double rtol = 1e-12;
  int max_iterations = 60;
};

/// Roots of the Wronskian W(E) = u′g − ug′ between the solution u with the given
/// behaviour at 0 and the decaying solution g = √x K_{√α}(kx), k = √(−E), Re k > 0.
/// Deduplicated, sorted by modulus then argument, restricted to the window.
/// Throws WindowExhausted if every seed fails numerically.
std::vector<cplx> shoot_eigenvalues(const ShootingProblem& problem);

/// W(E) for one energy (exposed for diagnostics and tests).
cplx shooting_wronskian(const ShootingProblem& problem, cplx energy);

/// Negative eigenvalues of the finite-difference discretisation of L_α on (0, L]
/// with the boundary behaviour imposed through the first row and Dirichlet at L.
/// Self-adjoint (real α and real boundary data) only.
std::vector<double> fd_matrix_eigenvalues(double alpha, const Boundary& boundary, int n, double L);

}  // namespace isq::oracle
