#include <algorithm>
#include <array>
#include <cmath>
#include <boost/numeric/odeint.hpp>

#include "isq/error.hpp"
#include "isq/oracle.hpp"
#include "isq/special_functions.hpp"
#include "frobenius.hpp"

namespace isq::oracle {

namespace {

using State = std::array<cplx, 2>;
using detail::Frobenius;
using detail::start;

cplx boundary_alpha(const Boundary& b) {
  if (const auto* p = std::get_if<Pure>(&b)) return p->m * p->m;
  if (const auto* mx = std::get_if<Mixed>(&b)) return mx->m * mx->m;
  return 0.0;
}

void check_problem(const ShootingProblem& pr) {
  const cplx a = boundary_alpha(pr.boundary);
  if (std::abs(a - pr.alpha) > 1e-12 * (1.0 + std::abs(a))) {
    throw Error(ErrorKind::DomainViolation, "boundary class does not match alpha");
  }
}

struct Scales {
  double x0, X;
};

Scales scales_for(const ShootingProblem& pr, cplx energy) {
  const cplx k = std::sqrt(-energy);
  return {pr.x0.value_or(std::min(1e-3, 0.1 / std::abs(k))), pr.X.value_or(35.0 / k.real())};
}

cplx wronskian(const ShootingProblem& pr, cplx energy, Scales sc) {
  const cplx k = std::sqrt(-energy);
  if (!(k.real() > 0.0)) throw Error(ErrorKind::OnCut, "energy on [0, inf)");
  const cplx v = pr.alpha - 0.25;
  auto rhs = [&](const State& y, State& dy, double x) {
    dy[0] = y[1];
    dy[1] = (v / (x * x) - energy) * y[0];
  };
  const Frobenius f0 = start(pr.boundary, energy, sc.x0);
  State y = {f0.u, f0.du};
  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_controlled<ode::runge_kutta_dopri5<State>>(1e-300, pr.rtol);
  ode::integrate_adaptive(stepper, rhs, y, sc.x0, sc.X, sc.x0 * 1e-2);

  const cplx nu = std::sqrt(pr.alpha);
  const double sX = std::sqrt(sc.X);
  const cplx kX = k * sc.X;
  const cplx K = sf::bessel_k(nu, kX);
  const cplx dK = -0.5 * (sf::bessel_k(nu - 1.0, kX) + sf::bessel_k(nu + 1.0, kX));
  const cplx g = sX * K;
  const cplx dg = K / (2.0 * sX) + sX * k * dK;
  return y[1] * g - y[0] * dg;
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

bool EnergyWindow::contains(cplx e) const {
  const double slack = 1e-9;
  if (kind == Kind::Rectangle) {
    const double s1 = slack * std::max(std::abs(lo1), std::abs(hi1));
    const double s2 = slack * std::max({std::abs(lo2), std::abs(hi2), s1});
    return e.real() >= lo1 - s1 && e.real() <= hi1 + s1 && e.imag() >= lo2 - s2 && e.imag() <= hi2 + s2;
  }
  const double r = std::abs(e);
  const double th = std::arg(-e);
  return r >= lo1 * (1 - slack) && r <= hi1 * (1 + slack) && th >= lo2 - slack && th <= hi2 + slack;
}

std::vector<cplx> EnergyWindow::seeds() const {
  std::vector<cplx> out;
  auto at = [](double lo, double hi, int n, int i) { return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (n - 1); };
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      if (kind == Kind::Rectangle) {
        out.emplace_back(at(lo1, hi1, n1, i), at(lo2, hi2, n2, j));
      } else {
        const double r = std::exp(at(std::log(lo1), std::log(hi1), n1, i));
        out.push_back(-std::polar(r, at(lo2, hi2, n2, j)));
      }
    }
  }
  return out;
}

cplx shooting_wronskian(const ShootingProblem& problem, cplx energy) {
  check_problem(problem);
  return wronskian(problem, energy, scales_for(problem, energy));
}

std::vector<cplx> shoot_eigenvalues(const ShootingProblem& problem) {
  check_problem(problem);
  std::vector<cplx> roots;
  const auto seeds = problem.window.seeds();
  int numerical_failures = 0;
  for (const cplx seed : seeds) {
    if (!(std::sqrt(-seed).real() > 0.0)) {
      ++numerical_failures;
      continue;
    }
    const Scales sc = scales_for(problem, seed);
    try {
      cplx e0 = seed;
      cplx e1 = seed * (1.0 + 1e-3);
      cplx w0 = wronskian(problem, e0, sc);
      cplx w1 = wronskian(problem, e1, sc);
      bool converged = false;
      for (int it = 0; it < problem.max_iterations; ++it) {
        if (w1 == w0) break;
        const cplx e2 = e1 - w1 * (e1 - e0) / (w1 - w0);
        if (!finite(e2) || !(std::sqrt(-e2).real() > 0.0)) break;
        // Leaving the window's scale by a wide margin: give up on this seed.
        if (std::abs(e2) > 1e3 * std::abs(seed) + 1e3 || std::abs(e2) < 1e-3 * std::abs(seed)) break;
        if (std::abs(e2 - e1) < 1e-13 * std::abs(e2)) {
          e1 = e2;
          converged = true;
          break;
        }
        e0 = e1;
        w0 = w1;
        e1 = e2;
        w1 = wronskian(problem, e1, sc);
        if (!finite(w1)) break;
      }
      if (converged && problem.window.contains(e1)) roots.push_back(e1);
    } catch (const Error&) {
      ++numerical_failures;
    }
  }
  if (!seeds.empty() && numerical_failures == static_cast<int>(seeds.size())) {
    throw Error(ErrorKind::WindowExhausted, "every seed failed numerically");
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : std::arg(a) < std::arg(b);
  });
  std::vector<cplx> unique;
  for (const cplx r : roots) {
    const bool seen = std::any_of(unique.begin(), unique.end(),
                                  [&](cplx u) { return std::abs(u - r) <= 1e-6 * std::abs(r); });
    if (!seen) unique.push_back(r);
  }
  // Merging may have broken the modulus order only through ties; keep it stable.
  std::stable_sort(unique.begin(), unique.end(), [](cplx a, cplx b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : std::arg(a) < std::arg(b);
  });
  return unique;
}

}  // namespace isq::oracle
