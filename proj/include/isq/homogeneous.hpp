#pragma once

// Inverse-square operators L_α = −∂² + (α − 1/4)/x², α = m², on (0, ∞):
//   H_m        homogeneous, boundary behaviour x^{1/2+m}
//   H_{m,κ}    boundary behaviour x^{1/2−m} + κ x^{1/2+m}   (κ = ∞ gives H_m, κ = 0 gives H_{−m})
//   H_0^ν      boundary behaviour x^{1/2} ln x + ν x^{1/2}  (ν = ∞ gives H_0)

#include <string>
#include <variant>
#include <vector>

#include "isq/quadrature.hpp"
#include "isq/spectrum.hpp"

namespace isq::hom {

struct BoundaryParams {
  cplx m;
  ExtendedComplex kappa;
};

struct LogBoundaryParams {
  ExtendedComplex nu;
};

using Params = std::variant<BoundaryParams, LogBoundaryParams>;

/// R_m(−k²; x, y) = √(xy) I_m(k min(x,y)) K_m(k max(x,y)), the kernel of (k² + H_m)^{-1}.
cplx resolvent_kernel_hm(cplx m, cplx k, double x, double y);

/// ∫_{√a}^{√b} √(xy) J_m(kx) J_m(ky) k dk, the kernel of 1_{[a,b]}(H_m).
quad::Result projection_kernel(cplx m, double a, double b, double x, double y, const quad::Options& opt = {});

/// Point spectrum of H_{m,κ} in the self-adjoint classification:
/// real m ∈ (−1,1) with κ ∈ ℝ ∪ {∞}, or imaginary m with |κ| = 1.
/// Throws OutsideClassifiedRegion elsewhere and MzeroUseLogFamily at m = 0.
SpectrumReport hmk_eigenvalues(const BoundaryParams& p, IndexWindow window = {});

/// Point spectrum of H_{m,κ} for any |Re m| < 1, m ≠ 0. Bound states are √x K_m(kx),
/// Re k > 0, whose small-x expansion fixes (k/2)^{2m} = κ Γ(m)/Γ(−m); every branch
/// with Re k > 0 gives the eigenvalue −k².
SpectrumReport hmk_eigenvalues_general(const BoundaryParams& p, IndexWindow window = {});

/// Eigenvalue of H_0^ν: −4 e^{2(ν − γ)} (γ = Euler's constant) when |Im ν| < π/2.
SpectrumReport h0nu_eigenvalue(const ExtendedComplex& nu);

/// H_{m,κ} = H_{−m,1/κ}.
BoundaryParams duality(const BoundaryParams& p);

/// U_τ H_{m,κ} U_τ^{-1} = e^{−2τ} H_{m, e^{2τm}κ};  U_τ H_0^ν U_τ^{-1} = e^{−2τ} H_0^{ν+τ}.
Params rg_flow_schrodinger(const Params& p, double tau);

enum class Phase { Gas, Liquid, LiquidSolidTransition, Solid };
enum class ExtensionSet { Point, Circle };
enum class FixedPoint { FriedrichsEqualsKrein, Friedrichs, Krein };

const char* to_string(Phase p) noexcept;
const char* to_string(ExtensionSet e) noexcept;
const char* to_string(FixedPoint f) noexcept;

struct PhaseReport {
  double alpha = 0.0;
  Phase phase = Phase::Gas;
  ExtensionSet extensions = ExtensionSet::Point;
  std::vector<FixedPoint> fixed_points;
  std::string fixed_point_operators;  // e.g. "F=H_0.5,K=H_-0.5"
  std::string bound_states;           // profile over the non-fixed extensions
  std::string flow;                   // behaviour of the dilation flow on extensions
};

PhaseReport classify_phase(double alpha);

enum class BoundStates { Zero, One, Infinite };
const char* to_string(BoundStates b) noexcept;

/// Number of bound states of the extension labelled by `label`: κ with m = √α for
/// 0 < α < 1, ν for α = 0, κ with |κ| = 1 and m = i√(−α) for α < 0; ignored for α ≥ 1.
BoundStates bound_state_count(double alpha, const ExtendedComplex& label);

}  // namespace isq::hom
