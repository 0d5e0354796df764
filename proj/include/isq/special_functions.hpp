#pragma once

// Complex Gamma, Bessel functions of complex order, branch-aware powers and
// the Ξ_m multiplier. All functions are pure and reentrant.

#include <complex>

#include "isq/extended_complex.hpp"

namespace isq::sf {

struct BesselOptions {
  // |x| at or above which the large-argument expansions are used.
  double series_asymptotic_switch = 20.0;
};

/// Γ(z). Lanczos (g = 607/128, 15 terms) on Re z >= 1/2, reflection below.
/// Throws PoleAtNonPositiveInteger near 0, -1, -2, ...
cplx gamma(cplx z);

/// A branch of log Γ(z), valid for large |Im z| where Γ itself under/overflows.
/// Only exp(log_gamma) is meaningful; the imaginary part is not the principal branch.
cplx log_gamma(cplx z);

/// Log(−z) with Im in (−π, π); throws OnCut for z in [0, ∞).
cplx log_minus(cplx z);

/// exp(m · Log(−z)), the physical-sheet power (−z)^m.
cplx principal_power(cplx z, cplx m);

/// J_ν(x), x > 0.
cplx bessel_j(cplx nu, double x, const BesselOptions& opt = {});

/// I_ν(x) for Re x > 0 (real x is the public use).
cplx bessel_i(cplx nu, cplx x, const BesselOptions& opt = {});
/// e^{−x} I_ν(x).
cplx bessel_i_scaled(cplx nu, cplx x, const BesselOptions& opt = {});

/// K_ν(x) for Re x > 0. Integral representation ∫₀^∞ e^{−x cosh t} cosh(νt) dt
/// below the switch, Hankel expansion above.
cplx bessel_k(cplx nu, cplx x, const BesselOptions& opt = {});
/// e^{x} K_ν(x).
cplx bessel_k_scaled(cplx nu, cplx x, const BesselOptions& opt = {});

/// Ξ_m(t) = e^{i ln2 t} Γ((m+1+it)/2) / Γ((m+1−it)/2).
cplx xi_multiplier(cplx m, double t);

/// True when (m+1±it)/2 sits on a Gamma pole (then Ξ_m(t) is 0 or ∞).
bool xi_hits_pole(cplx m, double t);

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

}  // namespace isq::sf
