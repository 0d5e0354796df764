#pragma once

// Frobenius solutions of u'' = ((α − 1/4)/x² − E) u at the singular endpoint 0.
// Private to the oracle sources.

#include <cmath>

#include "isq/oracle.hpp"

namespace isq::oracle::detail {

struct Frobenius {
  cplx u, du;
};

// x^{1/2+μ} Σ c_j x^{2j}, c_j = −E c_{j−1}/(4j(j+μ)), c_0 = 1.
inline Frobenius power_series(cplx mu, cplx energy, double x) {
  const double x2 = x * x;
  const cplx lead = std::exp((0.5 + mu) * std::log(x));
  cplx c = 1.0;
  cplx s = 1.0;
  cplx ds = 0.5 + mu;
  double xp = 1.0;
  for (int j = 1; j < 200; ++j) {
    c *= -energy / (4.0 * j * (double(j) + mu));
    xp *= x2;
    const cplx term = c * xp;
    s += term;
    ds += term * (0.5 + mu + 2.0 * j);
    if (std::abs(term) < 1e-18 * std::abs(s)) break;
  }
  return {lead * s, lead * ds / x};
}

// x^{1/2} ln x φ₀-series plus x^{1/2} Σ D_j x^{2j}, D_0 = ν,
// D_j = (−4j c_j − E D_{j−1})/(4j²).
inline Frobenius log_series(cplx nu, cplx energy, double x) {
  const double x2 = x * x;
  const double lx = std::log(x);
  const double sx = std::sqrt(x);
  cplx c = 1.0, d = nu;
  cplx phi = 1.0, dphi = 0.5;       // φ₀/√x and x φ₀'/√x
  cplx rest = nu, drest = 0.5 * nu;  // same for the D-series
  double xp = 1.0;
  for (int j = 1; j < 200; ++j) {
    c *= -energy / (4.0 * j * j);
    d = (-4.0 * j * c - energy * d) / (4.0 * j * j);
    xp *= x2;
    phi += c * xp;
    dphi += c * xp * (0.5 + 2.0 * j);
    rest += d * xp;
    drest += d * xp * (0.5 + 2.0 * j);
    if (std::abs(c * xp) + std::abs(d * xp) < 1e-18 * (std::abs(phi) + std::abs(rest))) break;
  }
  const cplx u = sx * (lx * phi + rest);
  const cplx du = (sx * phi + sx * (lx * dphi + drest)) / x;
  return {u, du};
}

inline Frobenius start(const Boundary& b, cplx energy, double x) {
  if (const auto* p = std::get_if<Pure>(&b)) return power_series(p->m, energy, x);
  if (const auto* mx = std::get_if<Mixed>(&b)) {
    if (mx->kappa.is_infinite()) return power_series(mx->m, energy, x);
    const cplx kappa = mx->kappa.value();
    const Frobenius lo = power_series(-mx->m, energy, x);
    const Frobenius hi = power_series(mx->m, energy, x);
    if (std::abs(kappa) <= 1.0) return {lo.u + kappa * hi.u, lo.du + kappa * hi.du};
    return {lo.u / kappa + hi.u, lo.du / kappa + hi.du};
  }
  const auto& lg = std::get<Log>(b);
  if (lg.nu.is_infinite()) return power_series(0.0, energy, x);
  return log_series(lg.nu.value(), energy, x);
}

}  // namespace isq::oracle::detail
