#include <cmath>
#include <lapacke.h>
#include <limits>
#include <vector>

#include "frobenius.hpp"
#include "isq/error.hpp"
#include "isq/oracle.hpp"

namespace isq::oracle {

namespace {

double real_of(cplx c, const char* what) {
  if (c.imag() != 0.0) throw Error(ErrorKind::DomainViolation, std::string(what) + " must be real");
  return c.real();
}

// A fundamental pair of zero-energy solutions and their Wronskian.
struct ZeroEnergyPair {
  double m = 0.5;
  bool log = false;
  double phi1(double x) const { return log ? std::sqrt(x) : std::pow(x, 0.5 - m); }
  double phi2(double x) const { return log ? std::sqrt(x) * std::log(x) : std::pow(x, 0.5 + m); }
  double wronskian() const { return log ? 1.0 : 2.0 * m; }
  double D(double a, double b) const { return phi1(a) * phi2(b) - phi1(b) * phi2(a); }
};

ZeroEnergyPair pair_for(double alpha, const Boundary& b) {
  ZeroEnergyPair p;
  if (std::holds_alternative<Log>(b)) {
    if (alpha != 0.0) throw Error(ErrorKind::DomainViolation, "log boundary needs alpha = 0");
    p.log = true;
    return p;
  }
  const double m = std::holds_alternative<Pure>(b) ? real_of(std::get<Pure>(b).m, "m")
                                                  : real_of(std::get<Mixed>(b).m, "m");
  if (std::abs(m * m - alpha) > 1e-12 * (1.0 + std::abs(alpha))) {
    throw Error(ErrorKind::DomainViolation, "boundary class does not match alpha");
  }
  if (m == 0.0) throw Error(ErrorKind::DomainViolation, "m = 0 needs the log boundary class");
  p.m = std::abs(m);
  return p;
}

void check_real_data(const Boundary& b) {
  if (const auto* mx = std::get_if<Mixed>(&b); mx && mx->kappa.is_finite()) real_of(mx->kappa.value(), "kappa");
  if (const auto* lg = std::get_if<Log>(&b); lg && lg->nu.is_finite()) real_of(lg->nu.value(), "nu");
}

}  // namespace

// Three-point scheme exact on zero-energy solutions: with D_{ab} = φ₁(x_a)φ₂(x_b) − φ₁(x_b)φ₂(x_a)
// every solution obeys u_{j−1}/D_{j−1,j} − u_j D_{j−1,j+1}/(D_{j−1,j}D_{j,j+1}) + u_{j+1}/D_{j,j+1} = 0.
// Scaling by −W/h gives a symmetric matrix consistent with L_α. The first row is
// closed by requiring the local solution with the prescribed boundary behaviour at
// the current energy to be reproduced exactly; the energy is found by fixed-point
// iteration on the lowest eigenvalue.
std::vector<double> fd_matrix_eigenvalues(double alpha, const Boundary& boundary, int n, double L) {
  if (n < 200) throw Error(ErrorKind::DomainViolation, "finite-difference oracle needs n >= 200");
  if (!(L > 0.0)) throw Error(ErrorKind::DomainViolation, "domain cutoff must be positive");
  check_real_data(boundary);
  const ZeroEnergyPair zp = pair_for(alpha, boundary);
  const double h = L / (n + 1);
  const double W = zp.wronskian();
  auto x = [&](int j) { return (j + 1) * h; };  // 0-based row j sits at x_{j+1}

  std::vector<double> diag(n), off(n - 1);
  for (int j = 0; j + 1 < n; ++j) off[j] = -W / (h * zp.D(x(j), x(j + 1)));
  for (int j = 1; j < n; ++j) {
    const double xm = x(j - 1), xc = x(j), xp = (j + 1 < n) ? x(j + 1) : L;
    diag[j] = W * zp.D(xm, xp) / (h * zp.D(xm, xc) * zp.D(xc, xp));
  }

  // Eigenvalues below zero by Sturm bisection (LAPACK dstebz).
  std::vector<double> negatives;
  auto solve = [&] {
    std::vector<double> w(n), work(4 * n);
    std::vector<lapack_int> iblock(n), isplit(n), iwork(3 * n);
    lapack_int found = 0, nsplit = 0;
    const double lower = -std::numeric_limits<double>::max() / 4;
    const lapack_int info =
        LAPACKE_dstebz_work('V', 'E', n, lower, 0.0, 0, 0, 0.0, diag.data(), off.data(), &found,
                            &nsplit, w.data(), iblock.data(), isplit.data(), work.data(), iwork.data());
    if (info != 0) throw Error(ErrorKind::NoConvergence, "tridiagonal bisection failed");
    negatives.assign(w.begin(), w.begin() + found);
  };
  double energy = 0.0;
  for (int it = 0; it < 60; ++it) {
    const detail::Frobenius f1 = detail::start(boundary, energy, x(0));
    const detail::Frobenius f2 = detail::start(boundary, energy, x(1));
    diag[0] = energy - off[0] * f2.u.real() / f1.u.real();
    solve();
    if (negatives.empty()) {
      if (energy == 0.0) break;
      energy = 0.0;  // lost the bound state; fall back to the zero-energy closure
      continue;
    }
    const double lowest = negatives.front();
    const bool done = std::abs(lowest - energy) <= 1e-13 * std::abs(lowest);
    energy = lowest;
    if (done) break;
  }
  return negatives;
}

}  // namespace isq::oracle
