#pragma once

// Time evolution and Møller operators of H_m, and the similarity between the toy
// model H_{m,λ} and the almost homogeneous operators H̃_{m,κ}.

#include <string>
#include <vector>

#include "isq/transforms.hpp"

namespace isq::scat {

/// e^{−itH_m} f = F_m e^{−itX²} F_m f.
GridFunction evolve(cplx m, double t, const GridFunction& f, const tr::Options& opt = {});

/// e^{itH_m} e^{−itH_k} f.
GridFunction moeller_numeric(cplx m, cplx k, double t, const GridFunction& f, const tr::Options& opt = {});

/// lim_{t→±∞} e^{itH_m} e^{−itH_k} = e^{±i(m−k)π/2} (Ξ_k/Ξ_m)(A).
GridFunction moeller_analytic(cplx m, cplx k, int sign, const GridFunction& f, const tr::Options& opt = {});

/// How κ is obtained from λ. With Λ = λπ/sin(πm):
///   Printed        Λ = κ Γ(m)/Γ(−m)
///   GammaSwapped   Λ = κ Γ(−m)/Γ(m)
///   KappaInverted  Λ = Γ(−m)/(κ Γ(m))
enum class Convention { Printed, GammaSwapped, KappaInverted };
const char* to_string(Convention c) noexcept;
inline constexpr Convention kAllConventions[] = {Convention::Printed, Convention::GammaSwapped,
                                                 Convention::KappaInverted};

/// For the logarithmic branch: Printed ν = −ρ/2, EulerShifted ν = γ − ρ/2.
enum class LogConvention { Printed, EulerShifted };
const char* to_string(LogConvention c) noexcept;

struct SimilarityMap {
  cplx m;
  ExtendedComplex lambda;
  ExtendedComplex kappa;
  Convention convention;
};

SimilarityMap similarity_map(cplx m, const ExtendedComplex& lambda, Convention c);

struct SimilarityReport {
  SimilarityMap map;
  std::vector<cplx> toy;     // eigenvalues of H_{m,λ}
  std::vector<cplx> scaled;  // (1/4) × eigenvalues of H̃_{m,κ}, matched to toy order
  std::vector<double> errors;
  bool same_count = false;
  bool shooting_confirmed = false;  // set when the shooting oracle was also run
  double max_error() const;
  bool matches(double tol) const { return same_count && max_error() <= tol; }
};

struct SimilarityOptions {
  // Also locate 4z for each toy eigenvalue z with the shooting oracle.
  bool confirm_with_shooting = false;
  double shooting_tol = 1e-6;
};

/// Compares the toy spectrum with the rescaled almost homogeneous spectrum; |Re m| < 1, m ≠ 0.
SimilarityReport similarity_spectrum_check(cplx m, const ExtendedComplex& lambda, Convention c,
                                           const SimilarityOptions& opt = {});

struct LogSimilarityReport {
  ExtendedComplex rho;
  ExtendedComplex nu;
  LogConvention convention;
  std::vector<cplx> toy;
  std::vector<cplx> scaled;
  double error = 0.0;
  bool same_count = false;
  bool matches(double tol) const { return same_count && error <= tol; }
};

LogSimilarityReport log_similarity_check(const ExtendedComplex& rho, LogConvention c);

}  // namespace isq::scat
