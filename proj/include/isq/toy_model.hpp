#pragma once

// Rank-one perturbations of multiplication by x on L²(0,∞):
//   H_{m,λ} = X + λ|x^{m/2}⟩⟨x^{m/2}|,  |Re m| < 1,
// and the logarithmic family H_0^ρ that replaces m = 0.

#include <functional>
#include <variant>
#include <vector>

#include "isq/quadrature.hpp"
#include "isq/spectrum.hpp"

namespace isq::toy {

struct ToyParams {
  cplx m;
  ExtendedComplex lambda;
};

struct LogParams {
  ExtendedComplex rho;
};

using Params = std::variant<ToyParams, LogParams>;

/// ∫₀^∞ x^m/(z−x) dx = (−z)^m π/sin(πm).
cplx weighted_resolvent(cplx m, cplx z);

/// Λ = λπ/sin(πm); the eigenvalue equation reads (−z)^{−m} = Λ.
cplx spiral_coefficient(cplx m, cplx lambda);

/// (z − H)^{-1} = (z − X)^{-1} + c(z) |φ_z⟩⟨φ_z| with φ_z(x) = x^{e}/(z − x), e = m/2
/// (e = 0 for the ρ-family). The pairing ⟨φ, f⟩ is bilinear: ∫ φ f dx.
struct RankOneResolvent {
  cplx z;
  cplx correction_coefficient;
  cplx factor_exponent;

  cplx diagonal(double x) const { return 1.0 / (z - x); }
  cplx correction_kernel(double x, double y) const;

  /// Applies the resolvent to f; the pairing integral is done once by quadrature
  /// on x = e^u, u ∈ [u_lo, u_hi].
  std::function<cplx(double)> apply(std::function<cplx(double)> f, double u_lo, double u_hi,
                                    const quad::Options& opt = {}) const;
};

RankOneResolvent toy_resolvent(const Params& params, cplx z);

/// One solution w_n of (−z)^{−m} = Λ written as −z = e^{w_n}; retained iff |Im w_n| < π.
struct SpiralPoint {
  long index;
  cplx w;
  bool retained;
};

/// The candidate w_n for n in [lo, hi], for inspection of the spiral geometry.
std::vector<SpiralPoint> toy_spiral(const ToyParams& params, long lo, long hi);

SpectrumReport toy_eigenvalues(const ToyParams& params, IndexWindow window = {});

/// Eigenvalue of H_0^ρ: −e^{−ρ} when |Im ρ| < π, none otherwise.
SpectrumReport h0_eigenvalue(const ExtendedComplex& rho);

/// Admissible eigenvalue counts. For Re m ≠ 0 the count lies in {n, n+1} with
/// n < |m|²/|Re m| ≤ n+1. For Re m = 0 it is 0 or infinite depending on ln|Λ|/Im m.
struct CountBound {
  bool dichotomy = false;        // Re m = 0 branch
  long n = 0;                    // lower member of {n, n+1}
  CountClass imaginary_class = CountClass::Empty;
  bool degenerate = false;       // λ ∈ {0, ∞}: exactly zero eigenvalues

  bool admits(const SpectrumReport& report) const;
};

CountBound toy_count_bounds(cplx m, const ExtendedComplex& lambda);

/// Dilation action: U_τ H_{m,λ} U_τ^{-1} = e^τ H_{m, e^{τm}λ} and ρ ↦ ρ + τ.
Params rg_flow_toy(const Params& params, double tau);

}  // namespace isq::toy
