#pragma once

// Dilations, the inversion I, the Mellin transform (spectral representation of the
// dilation generator A), functions of A, and the Hankel transform F_m on log grids.
//
// Conventions (fixed once here):
//   (U_τ f)(x) = e^{τ/2} f(e^τ x) = e^{iτA} f
//   mellin(f)(t) = (2π)^{−1/2} ∫ f(x) x^{−1/2−it} dx, so A acts as multiplication by +t
//   F_m = Ξ_m(A)^{−1} I = I Ξ_m(A),  H_m = Ξ_m(A)^{−1} X^{−2} Ξ_m(A)

#include <functional>

#include "isq/grid.hpp"

namespace isq::tr {

struct Options {
  // Largest |g| at either grid end, relative to max |g|, accepted by mellin().
  double truncation_tol = 1e-8;
  // Fraction of ‖f‖ a dilation may push off the grid.
  double coverage_tol = 1e-8;
  // Bessel kernel samples per oscillation period required by hankel().
  double nodes_per_period = 16.0;
  // |g| below support_tol · max |g| counts as outside the support of the input.
  double support_tol = 1e-12;
  // Largest output allowed next to the resolution limit, relative to max output.
  double edge_tol = 1e-10;
};

GridFunction dilation(double tau, const GridFunction& f, const Options& opt = {});

/// (I f)(x) = x^{−1} f(1/x). Needs a grid symmetric under x ↦ 1/x.
GridFunction inversion(const GridFunction& f);

MellinFunction mellin(const GridFunction& f, const Options& opt = {});
GridFunction mellin_inverse(const MellinFunction& F);

using Multiplier = std::function<cplx(double)>;

/// φ(A) f = mellin_inverse(φ(t) · mellin(f)).
GridFunction apply_function_of_A(const Multiplier& phi, const GridFunction& f, const Options& opt = {});

/// (F_m f)(k) = ∫ J_m(kx) √(kx) f(x) dx, Re m > −1. The trapezoid sum on the log grid
/// depends only on u_k + u_x, so it is evaluated as one FFT correlation; kernel spectra
/// are cached per (m, grid). Outputs whose kernel products exceed the resolution limit
/// are zero; GridTooCoarse when the resolved output is not negligible at that limit.
GridFunction hankel(cplx m, const GridFunction& f, const Options& opt = {});

/// L_α f = −f'' + (α − 1/4) f / x², second-order differences in u = ln x.
GridFunction apply_L_alpha(cplx alpha, const GridFunction& f);

/// (z − H_m)^{−1} f = Ξ_m(A)^{−1} (z − X^{−2})^{−1} Ξ_m(A) f for any m off the Ξ poles.
GridFunction extended_hm_resolvent(cplx m, cplx z, const GridFunction& f, const Options& opt = {});

struct ProbeOptions {
  double step = 1e-3;
  // Negative control: replaces Ξ_m by its complex conjugate, which is not holomorphic in m.
  bool conjugate_multiplier = false;
  Options transform;
};

/// Cauchy–Riemann residual |∂_x F + i ∂_y F| / ((|∂_x F| + |∂_y F|)/2) of
/// F(m) = ⟨g, (z − H_m)^{−1} f⟩ at m0, central differences on a 4-point stencil.
double holomorphy_probe(cplx m0, cplx z, const GridFunction& f, const GridFunction& g,
                        const ProbeOptions& opt = {});

/// ∫ K(x, y) f(y) dy by the grid quadrature, skipping nodes where f is negligible.
cplx apply_kernel_at(const std::function<cplx(double, double)>& kernel, const GridFunction& f, double x,
                     double support_tol = 1e-15);

}  // namespace isq::tr
