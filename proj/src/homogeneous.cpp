#include "isq/homogeneous.hpp"

#include <cmath>
#include <sstream>

#include "isq/error.hpp"
#include "isq/special_functions.hpp"

namespace isq::hom {

namespace {

using sf::kPi;

constexpr double kTieTol = 1e-12;

void check_order(cplx m) {
  if (m == cplx(0.0, 0.0)) throw Error(ErrorKind::MzeroUseLogFamily, "m = 0 belongs to the nu family");
  if (!(std::abs(m.real()) < 1.0)) throw Error(ErrorKind::DomainViolation, "needs |Re m| < 1");
}

// κ Γ(m)/Γ(−m): the value of (k/2)^{2m} for the bound state √x K_m(kx).
cplx boundary_quotient(cplx m, cplx kappa) { return kappa * sf::gamma(m) / sf::gamma(-m); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

const char* to_string(Phase p) noexcept {
  switch (p) {
    case Phase::Gas: return "gas";
    case Phase::Liquid: return "liquid";
    case Phase::LiquidSolidTransition: return "transition";
    case Phase::Solid: return "solid";
  }
  return "unknown";
}

const char* to_string(ExtensionSet e) noexcept { return e == ExtensionSet::Point ? "point" : "circle"; }

const char* to_string(FixedPoint f) noexcept {
  switch (f) {
    case FixedPoint::FriedrichsEqualsKrein: return "F=K";
    case FixedPoint::Friedrichs: return "F";
    case FixedPoint::Krein: return "K";
  }
  return "unknown";
}

const char* to_string(BoundStates b) noexcept {
  switch (b) {
    case BoundStates::Zero: return "0";
    case BoundStates::One: return "1";
    case BoundStates::Infinite: return "infinite";
  }
  return "unknown";
}

cplx resolvent_kernel_hm(cplx m, cplx k, double x, double y) {
  if (!(m.real() > -1.0)) throw Error(ErrorKind::DomainViolation, "resolvent kernel needs Re m > -1");
  if (!(k.real() > 0.0)) throw Error(ErrorKind::DomainViolation, "resolvent kernel needs Re k > 0");
  if (!(x > 0.0 && y > 0.0)) throw Error(ErrorKind::NonPositiveArgument, "kernel arguments must be positive");
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  // Scaled Bessel functions keep e^{k(lo − hi)} as the only exponential.
  return std::sqrt(x * y) * sf::bessel_i_scaled(m, k * lo) * sf::bessel_k_scaled(m, k * hi) *
         std::exp(k * (lo - hi));
}

quad::Result projection_kernel(cplx m, double a, double b, double x, double y, const quad::Options& opt) {
  if (!(0.0 < a && a < b)) throw Error(ErrorKind::DomainViolation, "projection kernel needs 0 < a < b");
  if (!(m.real() > -1.0)) throw Error(ErrorKind::DomainViolation, "projection kernel needs Re m > -1");
  if (!(x > 0.0 && y > 0.0)) throw Error(ErrorKind::NonPositiveArgument, "kernel arguments must be positive");
  const double ka = std::sqrt(a);
  const double kb = std::sqrt(b);
  // Panels of half a period of the faster Bessel oscillation.
  const double panel = kPi / (x + y);
  const int pieces = std::max(1, static_cast<int>(std::ceil((kb - ka) / panel)));
  const double sxy = std::sqrt(x * y);
  auto f = [&](double k) { return sxy * sf::bessel_j(m, k * x) * sf::bessel_j(m, k * y) * k; };
  quad::Options piece_opt = opt;
  piece_opt.abs_tol = opt.abs_tol / pieces;
  quad::Result total;
  total.value = 0.0;
  total.converged = true;
  for (int j = 0; j < pieces; ++j) {
    const double lo = ka + (kb - ka) * j / pieces;
    const double hi = ka + (kb - ka) * (j + 1) / pieces;
    const quad::Result r = quad::integrate(f, lo, hi, piece_opt);
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
  }
  total.converged = total.error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total.value));
  if (!total.converged) {
    std::ostringstream os;
    os << "projection kernel error estimate " << total.error;
    throw Error(ErrorKind::QuadratureNotConverged, os.str());
  }
  return total;
}

SpectrumReport hmk_eigenvalues_general(const BoundaryParams& p, IndexWindow window) {
  check_order(p.m);
  SpectrumReport rep;
  if (p.kappa.is_zero() || p.kappa.is_infinite()) return rep;  // homogeneous H_{∓m}
  const cplx m = p.m;
  const cplx logq = std::log(boundary_quotient(m, p.kappa.value()));
  // ln(k_n/2) = (log Q + 2πin)/(2m); retained iff |Im| < π/2, i.e. |a + b n| < π with
  // a + b n = Im((log Q + 2πin)/m).
  auto twice_log_half_k = [&](long n) { return (logq + cplx(0.0, 2.0 * kPi * double(n))) / m; };
  auto keep = [](cplx s) { return std::abs(s.imag()) < kPi * (1.0 - kTieTol); };
  const double a = twice_log_half_k(0).imag();
  const double b = 2.0 * kPi * m.real() / std::norm(m);
  long lo = 0;
  long hi = -1;
  if (m.real() == 0.0) {
    if (!keep(cplx(0.0, a))) return rep;
    rep.count_class = CountClass::Infinite;
    lo = rep.window_lo = window.lo;
    hi = rep.window_hi = window.hi;
  } else {
    const double e1 = (-kPi - a) / b;
    const double e2 = (kPi - a) / b;
    lo = static_cast<long>(std::floor(std::min(e1, e2))) - 1;
    hi = static_cast<long>(std::ceil(std::max(e1, e2))) + 1;
  }
  for (long n = lo; n <= hi; ++n) {
    const cplx s = twice_log_half_k(n);
    if (keep(s)) rep.eigenvalues.push_back({n, -4.0 * std::exp(s)});
  }
  if (rep.count_class != CountClass::Infinite) {
    rep.count_class = rep.eigenvalues.empty() ? CountClass::Empty : CountClass::Finite;
  }
  return rep;
}

SpectrumReport hmk_eigenvalues(const BoundaryParams& p, IndexWindow window) {
  check_order(p.m);
  const cplx m = p.m;
  SpectrumReport rep;
  if (m.imag() == 0.0) {
    if (p.kappa.is_infinite() || p.kappa.is_zero()) return rep;
    const cplx kappa = p.kappa.value();
    if (std::abs(kappa.imag()) > 1e-14 * std::abs(kappa)) {
      throw Error(ErrorKind::OutsideClassifiedRegion, "real m needs real kappa; use the similarity route");
    }
    const double q = boundary_quotient(m, kappa).real();
    if (q > 0.0) {
      rep.count_class = CountClass::Finite;
      rep.eigenvalues.push_back({0, cplx(-4.0 * std::pow(q, 1.0 / m.real()), 0.0)});
    }
    return rep;
  }
  if (m.real() == 0.0) {
    if (p.kappa.is_infinite() || std::abs(std::abs(p.kappa.value()) - 1.0) > 1e-12) {
      throw Error(ErrorKind::OutsideClassifiedRegion, "imaginary m needs |kappa| = 1; use the similarity route");
    }
    // e^{iα} = Γ(−m)/(κΓ(m)); eigenvalues −4 exp(−(α + 2πn)/m_I) for every n.
    const double alpha = std::arg(sf::gamma(-m) / (p.kappa.value() * sf::gamma(m)));
    rep.count_class = CountClass::Infinite;
    rep.window_lo = window.lo;
    rep.window_hi = window.hi;
    for (long n = window.lo; n <= window.hi; ++n) {
      rep.eigenvalues.push_back({n, cplx(-4.0 * std::exp(-(alpha + 2.0 * kPi * double(n)) / m.imag()), 0.0)});
    }
    return rep;
  }
  throw Error(ErrorKind::OutsideClassifiedRegion, "complex m is served by the similarity route");
}

SpectrumReport h0nu_eigenvalue(const ExtendedComplex& nu) {
  SpectrumReport rep;
  if (nu.is_infinite()) return rep;
  const cplx v = nu.value();
  if (!(std::abs(v.imag()) < 0.5 * kPi * (1.0 - kTieTol))) return rep;
  rep.count_class = CountClass::Finite;
  rep.eigenvalues.push_back({0, -4.0 * std::exp(2.0 * (v - sf::kEulerGamma))});
  return rep;
}

BoundaryParams duality(const BoundaryParams& p) { return {-p.m, p.kappa.reciprocal()}; }

Params rg_flow_schrodinger(const Params& p, double tau) {
  if (const auto* b = std::get_if<BoundaryParams>(&p)) {
    return BoundaryParams{b->m, b->kappa.scaled(std::exp(2.0 * tau * b->m))};
  }
  return LogBoundaryParams{std::get<LogBoundaryParams>(p).nu.shifted(tau)};
}

PhaseReport classify_phase(double alpha) {
  PhaseReport r;
  r.alpha = alpha;
  if (alpha >= 1.0) {
    r.phase = Phase::Gas;
    r.extensions = ExtensionSet::Point;
    r.fixed_points = {FixedPoint::FriedrichsEqualsKrein};
    r.fixed_point_operators = "F=K=H_" + fmt(std::sqrt(alpha));
    r.bound_states = "none";
    r.flow = "trivial";
  } else if (alpha > 0.0) {
    const double m = std::sqrt(alpha);
    r.phase = Phase::Liquid;
    r.extensions = ExtensionSet::Circle;
    r.fixed_points = {FixedPoint::Friedrichs, FixedPoint::Krein};
    r.fixed_point_operators = "F=H_" + fmt(m) + " (kappa=inf);K=H_" + fmt(-m) + " (kappa=0)";
    r.bound_states = "kappa<0: one;kappa>0: none";
    r.flow = "from Krein to Friedrichs";
  } else if (alpha == 0.0) {
    r.phase = Phase::LiquidSolidTransition;
    r.extensions = ExtensionSet::Circle;
    r.fixed_points = {FixedPoint::FriedrichsEqualsKrein};
    r.fixed_point_operators = "F=K=H_0 (nu=inf)";
    r.bound_states = "nu finite: one";
    r.flow = "nu -> nu+tau, towards F=K in both directions";
  } else {
    r.phase = Phase::Solid;
    r.extensions = ExtensionSet::Circle;
    r.fixed_points = {};
    r.fixed_point_operators = "none";
    r.bound_states = "all: infinitely many";
    r.flow = "periodic rotation of the circle";
  }
  return r;
}

BoundStates bound_state_count(double alpha, const ExtendedComplex& label) {
  if (alpha >= 1.0) return BoundStates::Zero;
  if (alpha > 0.0) {
    const auto rep = hmk_eigenvalues({std::sqrt(alpha), label});
    return rep.size() == 0 ? BoundStates::Zero : BoundStates::One;
  }
  if (alpha == 0.0) return h0nu_eigenvalue(label).size() == 0 ? BoundStates::Zero : BoundStates::One;
  const auto rep = hmk_eigenvalues({cplx(0.0, std::sqrt(-alpha)), label});
  return rep.count_class == CountClass::Infinite ? BoundStates::Infinite : BoundStates::Zero;
}

}  // namespace isq::hom
