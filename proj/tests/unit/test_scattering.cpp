#include <cmath>
#include <random>

#include "bumps.hpp"
#include "doctest.h"
#include "isq/error.hpp"
#include "isq/scattering.hpp"
#include "isq/special_functions.hpp"

using isq::cplx;
using isq::ExtendedComplex;
using isq::GridFunction;
using isq::LogGrid;
using isq::relative_error;
using namespace isq::scat;
using namespace isq::testing;

namespace {

// Long-time propagation: tail noise of earlier transforms must not count as support.
isq::tr::Options propagation() {
  isq::tr::Options o;
  o.support_tol = 1e-6;
  o.edge_tol = 1e-2;
  return o;
}

// Incoming state whose H_k momentum profile is a log-bump at p ≈ 1.
GridFunction standard_state(const LogGrid& g, cplx k) { return isq::tr::hankel(k, bump(g, 0.0, 0.25)); }

}  // namespace

TEST_CASE("evolution group") {
  const LogGrid g = hankel_grid();
  const GridFunction f = standard_state(g, 0.5);
  CHECK(relative_error(evolve(0.5, 0.0, f), f) == 0.0);
  const GridFunction a = evolve(0.5, 1.0, f);
  CHECK(std::abs(a.norm() - f.norm()) < 1e-6 * f.norm());
  CHECK(relative_error(evolve(0.5, 0.3, evolve(0.5, 0.7, f)), a) < 1e-6);
  CHECK(relative_error(evolve(0.5, -1.0, a), f) < 1e-6);
}

TEST_CASE("analytic Moeller operators") {
  // Ξ_{0.2} has zeros at distance 1.2 from the real t-axis: tails decay like e^{−1.2|u|}.
  const LogGrid g = LogGrid::spanning(1 << 14, 1e-9, 1e9);
  const GridFunction f = bump(g, 0.1, 0.3);
  CHECK(relative_error(moeller_analytic(0.7, 0.7, +1, f), f) < 1e-13);
  for (int s : {+1, -1}) {
    const GridFunction o = moeller_analytic(0.5, 1.5, s, f);
    CHECK(std::abs(o.norm() - f.norm()) < 1e-8 * f.norm());
    const GridFunction chain = moeller_analytic(0.5, 1.5, s, moeller_analytic(1.5, 0.2, s, f));
    CHECK(relative_error(chain, moeller_analytic(0.5, 0.2, s, f)) < 1e-8);
  }
  CHECK_THROWS_AS(moeller_analytic(0.5, 1.5, 0, f), isq::Error);
}

TEST_CASE("finite-time Moeller products approach the multiplier") {
  const LogGrid g = hankel_grid();
  const GridFunction f = standard_state(g, 1.5);
  const auto opt = propagation();
  CHECK(relative_error(moeller_numeric(1.5, 1.5, 10.0, f, opt), f) < 1e-6);
  CHECK(relative_error(moeller_numeric(0.5, 1.5, 0.0, f, opt), f) == 0.0);
  const GridFunction limit = moeller_analytic(0.5, 1.5, +1, f, opt);
  double previous = 1.0;
  for (double t : {10.0, 30.0, 100.0}) {
    const double r = (moeller_numeric(0.5, 1.5, t, f, opt) - limit).norm() / f.norm();
    CHECK(r < previous * 1.1);
    previous = r;
  }
  CHECK(previous < 0.1);
  // t → −∞ gives the other phase.
  const double back = (moeller_numeric(0.5, 1.5, -100.0, f, opt) - moeller_analytic(0.5, 1.5, -1, f, opt)).norm();
  CHECK(back / f.norm() < 0.1);
}

TEST_CASE("Moeller operators intertwine H_k and H_m") {
  const LogGrid g = hankel_grid();
  const GridFunction f = bump(g, 0.0, 0.3);
  const cplx m = 0.5;
  const cplx k = 1.5;
  const GridFunction lhs = isq::tr::apply_L_alpha(m * m, moeller_analytic(m, k, +1, f));
  const GridFunction rhs = moeller_analytic(m, k, +1, isq::tr::apply_L_alpha(k * k, f));
  // Compared where the state lives; far below, e^{−2u} amplifies round-off in the tails.
  double num = 0.0;
  double den = 0.0;
  for (int j = 0; j < g.size(); ++j) {
    if (std::abs(g.u(j)) > 6.0) continue;
    num += std::norm(lhs[j] - rhs[j]) * g.weight(j);
    den += std::norm(rhs[j]) * g.weight(j);
  }
  CHECK(std::sqrt(num / den) < 1e-3);
}

TEST_CASE("similarity map conventions") {
  // m = 1/2, κ = −1 under KappaInverted: Λ = Γ(−m)/(κΓ(m)) = 2, so λ = 2 sin(π/2)/π.
  const double lambda = 2.0 / isq::sf::kPi;
  const auto good = similarity_spectrum_check(0.5, ExtendedComplex(lambda), Convention::KappaInverted);
  REQUIRE(good.toy.size() == 1);
  CHECK(std::abs(good.toy[0] - (-0.25)) < 1e-14);
  CHECK(std::abs(good.map.kappa.value() - (-1.0)) < 1e-14);
  CHECK(good.matches(1e-8));
  CHECK_FALSE(similarity_spectrum_check(0.5, ExtendedComplex(lambda), Convention::Printed).matches(1e-8));
  // λ = 0 ↔ κ = 0 or ∞: both spectra empty.
  for (Convention c : kAllConventions) {
    const auto r = similarity_spectrum_check(0.4, ExtendedComplex(0.0), c);
    CHECK(r.toy.empty());
    CHECK(r.matches(1e-8));
  }
  CHECK_THROWS_AS(similarity_map(0.0, ExtendedComplex(1.0), Convention::Printed), isq::Error);
}

TEST_CASE("similarity: exactly one convention is globally consistent") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int agree[3] = {0, 0, 0};
  int nontrivial = 0;
  for (int s = 0; s < 50; ++s) {
    cplx m(0.9 * u(rng), 0.6 * u(rng));
    if (std::abs(m.real()) < 0.05) m += 0.1;
    const cplx lambda(2.0 * u(rng), 2.0 * u(rng));
    const auto kappa_inv = similarity_spectrum_check(m, ExtendedComplex(lambda), Convention::KappaInverted);
    if (!kappa_inv.toy.empty()) ++nontrivial;
    int j = 0;
    for (Convention c : kAllConventions) {
      if (similarity_spectrum_check(m, ExtendedComplex(lambda), c).matches(1e-8)) ++agree[j];
      ++j;
    }
  }
  CHECK(nontrivial > 25);
  CHECK(agree[2] == 50);
  CHECK(agree[0] < 50);
  CHECK(agree[1] < 50);
}

TEST_CASE("similarity confirmed by shooting") {
  // λ chosen so that z = −0.3 + 0.1i solves (−z)^{−m} = λπ/sin(πm).
  const cplx m(0.4, 0.2);
  const cplx z(-0.3, 0.1);
  const cplx lambda = std::exp(-m * std::log(-z)) * std::sin(isq::sf::kPi * m) / isq::sf::kPi;
  const auto r = similarity_spectrum_check(m, ExtendedComplex(lambda), Convention::KappaInverted, {true, 1e-6});
  REQUIRE_FALSE(r.toy.empty());
  CHECK(r.matches(1e-8));
  CHECK(r.shooting_confirmed);
}

TEST_CASE("logarithmic branch") {
  CHECK(log_similarity_check(ExtendedComplex(0.0), LogConvention::EulerShifted).matches(1e-12));
  CHECK_FALSE(log_similarity_check(ExtendedComplex(0.0), LogConvention::Printed).matches(1e-8));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int j = 0; j < 10; ++j) {
    const ExtendedComplex rho(cplx(3.0 * u(rng), 3.0 * u(rng)));
    CHECK(log_similarity_check(rho, LogConvention::EulerShifted).matches(1e-12));
  }
  // |Im ρ| ≥ π: no bound state on either side.
  const auto none = log_similarity_check(ExtendedComplex(cplx(0.0, 3.5)), LogConvention::EulerShifted);
  CHECK(none.toy.empty());
  CHECK(none.matches(1e-12));
}
