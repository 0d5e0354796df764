#include "isq/toy_model.hpp"

#include <cmath>
#include <sstream>

#include "isq/error.hpp"
#include "isq/special_functions.hpp"

namespace isq {

const char* to_string(CountClass c) noexcept {
  switch (c) {
    case CountClass::Finite: return "finite";
    case CountClass::Empty: return "empty";
    case CountClass::Infinite: return "infinite";
  }
  return "unknown";
}

}  // namespace isq

namespace isq::toy {

namespace {

using sf::kPi;

// Retention uses a strict inequality; ties on |Im w| = π fall outside.
constexpr double kTieTol = 1e-12;

void check_order(cplx m) {
  if (m == cplx(0.0, 0.0)) {
    throw Error(ErrorKind::MzeroUseLogFamily, "m = 0 belongs to the rho family");
  }
  if (!(std::abs(m.real()) < 1.0)) {
    throw Error(ErrorKind::DomainViolation, "toy model needs |Re m| < 1");
  }
}

bool retained(cplx w) { return std::abs(w.imag()) < kPi * (1.0 - kTieTol); }

cplx spiral_w(cplx m, cplx log_lambda, long n) {
  return -(log_lambda + cplx(0.0, 2.0 * kPi * double(n))) / m;
}

}  // namespace

cplx weighted_resolvent(cplx m, cplx z) {
  check_order(m);
  return sf::principal_power(z, m) * kPi / std::sin(kPi * m);
}

cplx spiral_coefficient(cplx m, cplx lambda) {
  check_order(m);
  return lambda * kPi / std::sin(kPi * m);
}

cplx RankOneResolvent::correction_kernel(double x, double y) const {
  return correction_coefficient * std::pow(cplx(x), factor_exponent) * std::pow(cplx(y), factor_exponent) /
         ((z - x) * (z - y));
}

std::function<cplx(double)> RankOneResolvent::apply(std::function<cplx(double)> f, double u_lo,
                                                    double u_hi, const quad::Options& opt) const {
  cplx pairing = 0.0;
  if (correction_coefficient != cplx(0.0, 0.0)) {
    const cplx e = factor_exponent;
    const cplx zz = z;
    pairing = quad::integrate_or_throw(
                  [&](double u) {
                    const double x = std::exp(u);
                    return x * std::exp(e * u) * f(x) / (zz - x);
                  },
                  u_lo, u_hi, opt)
                  .value;
  }
  const RankOneResolvent self = *this;
  return [self, f, pairing](double x) {
    cplx out = f(x) / (self.z - x);
    if (pairing != cplx(0.0, 0.0)) {
      out += self.correction_coefficient * std::pow(cplx(x), self.factor_exponent) / (self.z - x) * pairing;
    }
    return out;
  };
}

RankOneResolvent toy_resolvent(const Params& params, cplx z) {
  RankOneResolvent r;
  r.z = z;
  if (const auto* p = std::get_if<ToyParams>(&params)) {
    check_order(p->m);
    r.factor_exponent = p->m / 2.0;
    if (p->lambda.is_zero()) {
      sf::log_minus(z);  // still reject z on the cut
      r.correction_coefficient = 0.0;
      return r;
    }
    const cplx inv = p->lambda.reciprocal().is_infinite() ? cplx(0.0) : p->lambda.reciprocal().value();
    const cplx w = weighted_resolvent(p->m, z);
    const cplx den = inv - w;
    if (std::abs(den) < 1e-10 * std::max(std::abs(inv), std::abs(w))) {
      throw Error(ErrorKind::AtEigenvalue, "z is an eigenvalue of H_{m,lambda}");
    }
    r.correction_coefficient = 1.0 / den;
    return r;
  }
  const auto& lp = std::get<LogParams>(params);
  r.factor_exponent = 0.0;
  const cplx log_mz = sf::log_minus(z);
  if (lp.rho.is_infinite()) {
    r.correction_coefficient = 0.0;
    return r;
  }
  const cplx den = lp.rho.value() + log_mz;
  if (std::abs(den) < 1e-10 * std::max({std::abs(lp.rho.value()), std::abs(log_mz), 1.0})) {
    throw Error(ErrorKind::AtEigenvalue, "z is an eigenvalue of H_0^rho");
  }
  r.correction_coefficient = -1.0 / den;
  return r;
}

std::vector<SpiralPoint> toy_spiral(const ToyParams& params, long lo, long hi) {
  check_order(params.m);
  std::vector<SpiralPoint> out;
  if (params.lambda.is_zero() || params.lambda.is_infinite()) return out;
  const cplx log_lambda = std::log(spiral_coefficient(params.m, params.lambda.value()));
  for (long n = lo; n <= hi; ++n) {
    const cplx w = spiral_w(params.m, log_lambda, n);
    out.push_back({n, w, retained(w)});
  }
  return out;
}

SpectrumReport toy_eigenvalues(const ToyParams& params, IndexWindow window) {
  check_order(params.m);
  SpectrumReport rep;
  if (params.lambda.is_zero() || params.lambda.is_infinite()) return rep;
  const cplx m = params.m;
  const cplx log_lambda = std::log(spiral_coefficient(m, params.lambda.value()));
  // Im w_n = a + b n with b = −2π Re m/|m|².
  const double a = spiral_w(m, log_lambda, 0).imag();
  const double b = -2.0 * kPi * m.real() / std::norm(m);

  long lo = 0;
  long hi = -1;
  if (m.real() == 0.0) {
    if (!retained(cplx(0.0, a))) return rep;
    rep.count_class = CountClass::Infinite;
    lo = window.lo;
    hi = window.hi;
    rep.window_lo = lo;
    rep.window_hi = hi;
  } else {
    // Contiguous block of n with −π < a + b n < π, widened by one on each side
    // and then filtered by the exact retention test.
    const double e1 = (-kPi - a) / b;
    const double e2 = (kPi - a) / b;
    lo = static_cast<long>(std::floor(std::min(e1, e2))) - 1;
    hi = static_cast<long>(std::ceil(std::max(e1, e2))) + 1;
  }
  for (long n = lo; n <= hi; ++n) {
    const cplx w = spiral_w(m, log_lambda, n);
    if (retained(w)) rep.eigenvalues.push_back({n, -std::exp(w)});
  }
  if (rep.count_class != CountClass::Infinite) {
    rep.count_class = rep.eigenvalues.empty() ? CountClass::Empty : CountClass::Finite;
  }
  return rep;
}

SpectrumReport h0_eigenvalue(const ExtendedComplex& rho) {
  SpectrumReport rep;
  if (rho.is_infinite()) return rep;
  const cplx r = rho.value();
  if (!retained(cplx(0.0, r.imag()))) return rep;
  rep.count_class = CountClass::Finite;
  rep.eigenvalues.push_back({0, -std::exp(-r)});
  return rep;
}

bool CountBound::admits(const SpectrumReport& report) const {
  if (degenerate) return report.count_class == CountClass::Empty;
  if (dichotomy) return report.count_class == imaginary_class;
  const long k = static_cast<long>(report.size());
  if (report.count_class == CountClass::Infinite) return false;
  return k == n || k == n + 1;
}

CountBound toy_count_bounds(cplx m, const ExtendedComplex& lambda) {
  check_order(m);
  CountBound b;
  if (lambda.is_zero() || lambda.is_infinite()) {
    b.degenerate = true;
    return b;
  }
  if (m.real() == 0.0) {
    b.dichotomy = true;
    const double ratio = std::log(std::abs(spiral_coefficient(m, lambda.value()))) / m.imag();
    b.imaginary_class = retained(cplx(0.0, ratio)) ? CountClass::Infinite : CountClass::Empty;
    return b;
  }
  const double width = std::norm(m) / std::abs(m.real());
  b.n = static_cast<long>(std::ceil(width)) - 1;
  return b;
}

Params rg_flow_toy(const Params& params, double tau) {
  if (const auto* p = std::get_if<ToyParams>(&params)) {
    return ToyParams{p->m, p->lambda.scaled(std::exp(tau * p->m))};
  }
  const auto& lp = std::get<LogParams>(params);
  return LogParams{lp.rho.shifted(tau)};
}

}  // namespace isq::toy
