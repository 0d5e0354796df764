#include "isq/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "isq/error.hpp"
#include "isq/homogeneous.hpp"
#include "isq/oracle.hpp"
#include "isq/special_functions.hpp"
#include "isq/toy_model.hpp"

namespace isq::scat {

using sf::kPi;

GridFunction evolve(cplx m, double t, const GridFunction& f, const tr::Options& opt) {
  if (t == 0.0) return f;
  GridFunction p = tr::hankel(m, f, opt);
  std::vector<cplx> v(p.values());
  for (int j = 0; j < p.size(); ++j) {
    const double k = p.grid().x(j);
    v[j] *= std::polar(1.0, -t * k * k);
  }
  return tr::hankel(m, GridFunction(p.grid(), std::move(v)), opt);
}

GridFunction moeller_numeric(cplx m, cplx k, double t, const GridFunction& f, const tr::Options& opt) {
  return evolve(m, -t, evolve(k, t, f, opt), opt);
}

GridFunction moeller_analytic(cplx m, cplx k, int sign, const GridFunction& f, const tr::Options& opt) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::DomainViolation, "sign must be +1 or -1");
  const cplx phase = std::exp(cplx(0.0, sign * kPi / 2.0) * (m - k));
  return tr::apply_function_of_A(
      [&](double t) {
        const cplx den = sf::xi_multiplier(m, t);
        if (std::abs(den) < 1e-300) throw Error(ErrorKind::MultiplierPole, "Xi_m vanishes on the t-grid");
        return phase * sf::xi_multiplier(k, t) / den;
      },
      f, opt);
}

const char* to_string(Convention c) noexcept {
  switch (c) {
    case Convention::Printed: return "Printed";
    case Convention::GammaSwapped: return "GammaSwapped";
    case Convention::KappaInverted: return "KappaInverted";
  }
  return "?";
}

const char* to_string(LogConvention c) noexcept {
  return c == LogConvention::Printed ? "Printed" : "EulerShifted";
}

SimilarityMap similarity_map(cplx m, const ExtendedComplex& lambda, Convention c) {
  if (m == cplx(0.0)) throw Error(ErrorKind::MzeroUseLogFamily, "use the rho/nu branch at m = 0");
  if (!(std::abs(m.real()) < 1.0)) throw Error(ErrorKind::DomainViolation, "similarity needs |Re m| < 1");
  const cplx q = sf::gamma(m) / sf::gamma(-m);  // Γ(m)/Γ(−m)
  // Λ = λπ/sin(πm) on the extended plane.
  const ExtendedComplex Lambda = lambda.scaled(kPi / std::sin(kPi * m));
  ExtendedComplex kappa;
  switch (c) {
    case Convention::Printed: kappa = Lambda.scaled(1.0 / q); break;
    case Convention::GammaSwapped: kappa = Lambda.scaled(q); break;
    case Convention::KappaInverted: kappa = Lambda.reciprocal().scaled(1.0 / q); break;
  }
  return {m, lambda, kappa, c};
}

double SimilarityReport::max_error() const {
  double e = 0.0;
  for (double x : errors) e = std::max(e, x);
  return e;
}

namespace {

std::vector<cplx> values_of(const SpectrumReport& r) {
  std::vector<cplx> v;
  for (const auto& e : r.eigenvalues) v.push_back(e.value);
  return v;
}

// Greedy nearest matching of b onto a (both small); returns b reordered.
std::vector<cplx> match(const std::vector<cplx>& a, std::vector<cplx> b) {
  std::vector<cplx> out;
  for (cplx x : a) {
    if (b.empty()) break;
    auto best = std::min_element(b.begin(), b.end(),
                                 [x](cplx p, cplx q) { return std::abs(p - x) < std::abs(q - x); });
    out.push_back(*best);
    b.erase(best);
  }
  return out;
}

bool confirmed_by_shooting(const SimilarityMap& map, const std::vector<cplx>& toy, double tol) {
  for (cplx z : toy) {
    const cplx e = 4.0 * z;
    const double r = 0.05 * std::abs(e);
    oracle::ShootingProblem p;
    p.alpha = map.m * map.m;
    p.boundary = oracle::Mixed{map.m, map.kappa};
    p.window.lo1 = e.real() - r;
    p.window.hi1 = e.real() + r;
    p.window.lo2 = e.imag() - r;
    p.window.hi2 = e.imag() + r;
    p.window.n1 = p.window.n2 = 2;
    bool found = false;
    try {
      for (cplx root : oracle::shoot_eigenvalues(p)) found = found || std::abs(root - e) <= tol * std::abs(e);
    } catch (const Error&) {
      found = false;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

SimilarityReport similarity_spectrum_check(cplx m, const ExtendedComplex& lambda, Convention c,
                                           const SimilarityOptions& opt) {
  SimilarityReport rep;
  rep.map = similarity_map(m, lambda, c);
  rep.toy = values_of(toy::toy_eigenvalues({m, lambda}));
  std::vector<cplx> hom = values_of(hom::hmk_eigenvalues_general({m, rep.map.kappa}));
  for (auto& e : hom) e *= 0.25;
  rep.same_count = hom.size() == rep.toy.size();
  rep.scaled = match(rep.toy, hom);
  for (std::size_t j = 0; j < rep.scaled.size(); ++j) {
    rep.errors.push_back(std::abs(rep.scaled[j] - rep.toy[j]) / std::abs(rep.toy[j]));
  }
  if (opt.confirm_with_shooting && rep.same_count) {
    rep.shooting_confirmed = confirmed_by_shooting(rep.map, rep.toy, opt.shooting_tol);
  }
  return rep;
}

LogSimilarityReport log_similarity_check(const ExtendedComplex& rho, LogConvention c) {
  LogSimilarityReport rep;
  rep.rho = rho;
  rep.convention = c;
  const double shift = c == LogConvention::EulerShifted ? sf::kEulerGamma : 0.0;
  rep.nu = rho.scaled(-0.5).shifted(shift);
  rep.toy = values_of(toy::h0_eigenvalue(rho));
  rep.scaled = values_of(hom::h0nu_eigenvalue(rep.nu));
  for (auto& e : rep.scaled) e *= 0.25;
  rep.same_count = rep.toy.size() == rep.scaled.size();
  if (rep.same_count && !rep.toy.empty()) rep.error = std::abs(rep.scaled[0] - rep.toy[0]) / std::abs(rep.toy[0]);
  return rep;
}

}  // namespace isq::scat
