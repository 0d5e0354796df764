#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "isq/error.hpp"
#include "isq/homogeneous.hpp"
#include "isq/oracle.hpp"
#include "isq/special_functions.hpp"

using isq::cplx;
using isq::ExtendedComplex;
using namespace isq::hom;
using isq::sf::kPi;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<cplx> sorted_values(const isq::SpectrumReport& r) {
  std::vector<cplx> v;
  for (const auto& e : r.eigenvalues) v.push_back(e.value);
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
  return v;
}

}  // namespace

TEST_CASE("resolvent kernel closed form at m = 1/2") {
  // Green function of −∂² + 1 with Dirichlet condition at 0.
  const cplx v = resolvent_kernel_hm(0.5, 1.0, 1.0, 2.0);
  CHECK(rel(v, std::exp(-2.0) * std::sinh(1.0)) < 1e-13);
  CHECK(rel(resolvent_kernel_hm(0.5, 1.0, 2.0, 1.0), v) < 1e-15);
  CHECK_THROWS_AS(resolvent_kernel_hm(-1.2, 1.0, 1.0, 2.0), isq::Error);
  CHECK_THROWS_AS(resolvent_kernel_hm(0.5, cplx(-1.0, 0.2), 1.0, 2.0), isq::Error);
}

TEST_CASE("resolvent kernel against the eigenfunction expansion") {
  const cplx e = resolvent_kernel_hm(0.3, 1.0, 0.5, 1.5);
  CHECK(rel(isq::oracle::eigen_expansion_resolvent_kernel(0.3, 1.0, 0.5, 1.5).value, e) < 1e-6);
  CHECK(rel(isq::oracle::eigen_expansion_resolvent_kernel(cplx(0.2, 0.3), 0.7, 2.0, 0.4).value,
            resolvent_kernel_hm(cplx(0.2, 0.3), 0.7, 2.0, 0.4)) < 1e-6);
}

TEST_CASE("resolvent kernel symmetry and positivity") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double m = -0.95 + 2.9 * u(rng);
    const double k = 0.1 + 3.0 * u(rng);
    const double x = std::exp(4.0 * u(rng) - 2.0);
    const double y = std::exp(4.0 * u(rng) - 2.0);
    const cplx a = resolvent_kernel_hm(m, k, x, y);
    CHECK(a == resolvent_kernel_hm(m, k, y, x));
    CHECK(std::abs(a.imag()) < 1e-14 * std::abs(a));
    CHECK(a.real() > 0.0);
  }
}

TEST_CASE("resolvent kernel is a Green function") {
  for (cplx m : {cplx(0.3), cplx(0.5), cplx(0.2, 0.4)}) {
    const cplx k(1.0, 0.3);
    const double y = 1.3;
    const double h = 1e-3;
    auto g = [&](double x) { return resolvent_kernel_hm(m, k, x, y); };
    for (double x : {0.2, 0.7, 1.0, 2.0, 4.0}) {
      const cplx d2 = (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h);
      const cplx res = -d2 + (m * m - 0.25) / (x * x) * g(x) + k * k * g(x);
      CHECK(std::abs(res) < 1e-5 * std::max(1.0, std::abs(g(x))));
    }
    // Jump of −∂_x across the diagonal.
    const double s = 1e-6;
    const cplx right = (g(y + 2 * s) - g(y + s)) / s;
    const cplx left = (g(y - s) - g(y - 2 * s)) / s;
    CHECK(std::abs(-(right - left) - 1.0) < 1e-3);
  }
}

TEST_CASE("projection kernel") {
  const double expected = ((2.0 - std::sin(2.0) * std::cos(2.0)) - (1.0 - std::sin(1.0) * std::cos(1.0))) / kPi;
  CHECK(std::abs(projection_kernel(0.5, 1.0, 4.0, 1.0, 1.0).value - expected) < 1e-10);
  for (cplx m : {cplx(0.0), cplx(0.3, 0.2)}) {
    for (auto [x, y] : {std::pair{0.4, 1.7}, std::pair{2.0, 2.0}}) {
      const cplx ab = projection_kernel(m, 0.5, 2.0, x, y).value;
      const cplx bc = projection_kernel(m, 2.0, 9.0, x, y).value;
      const cplx ac = projection_kernel(m, 0.5, 9.0, x, y).value;
      CHECK(std::abs(ab + bc - ac) < 1e-10);
    }
  }
  CHECK_THROWS_AS(projection_kernel(0.5, 2.0, 1.0, 1.0, 1.0), isq::Error);
}

TEST_CASE("point spectra in the classified region") {
  auto r = hmk_eigenvalues({0.5, -1.0});
  REQUIRE(r.size() == 1);
  CHECK(rel(r.eigenvalues[0].value, -1.0) < 1e-14);
  // κ = −2: bound state e^{−2x} has boundary behaviour 1 − 2x.
  r = hmk_eigenvalues({0.5, -2.0});
  REQUIRE(r.size() == 1);
  CHECK(rel(r.eigenvalues[0].value, -4.0) < 1e-14);
  CHECK(hmk_eigenvalues({0.3, 1.0}).count_class == isq::CountClass::Empty);
  CHECK(hmk_eigenvalues({0.3, ExtendedComplex::infinity()}).count_class == isq::CountClass::Empty);
  CHECK(hmk_eigenvalues({-0.3, 0.0}).count_class == isq::CountClass::Empty);

  const cplx i(0.0, 1.0);
  const cplx kappa = isq::sf::gamma(-i) / isq::sf::gamma(i);
  r = hmk_eigenvalues({i, kappa}, {-3, 3});
  CHECK(r.count_class == isq::CountClass::Infinite);
  REQUIRE(r.size() == 7);
  for (const auto& e : r.eigenvalues) CHECK(rel(e.value, -4.0 * std::exp(-2.0 * kPi * e.index)) < 1e-12);
  CHECK_THROWS_AS(hmk_eigenvalues({i, 2.0}), isq::Error);
  CHECK_THROWS_AS(hmk_eigenvalues({cplx(0.3, 0.2), 1.0}), isq::Error);
  CHECK_THROWS_AS(hmk_eigenvalues({0.0, 1.0}), isq::Error);
}

TEST_CASE("geometric accumulation for imaginary m") {
  for (double mi : {0.5, 1.0, 2.5}) {
    const cplx m(0.0, mi);
    const auto r = hmk_eigenvalues({m, std::polar(1.0, 0.7)}, {-5, 5});
    for (std::size_t j = 1; j < r.size(); ++j) {
      CHECK(rel(r.eigenvalues[j].value, std::exp(-2.0 * kPi / mi) * r.eigenvalues[j - 1].value) < 1e-12);
    }
  }
}

TEST_CASE("general enumeration matches the classified formulas") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double m = 0.98 * u(rng);
    if (std::abs(m) < 0.01) continue;
    const double kappa = 5.0 * u(rng);
    const auto a = sorted_values(hmk_eigenvalues({m, kappa}));
    const auto b = sorted_values(hmk_eigenvalues_general({m, kappa}));
    REQUIRE(a.size() == b.size());
    CHECK(a.size() == (kappa < 0.0 ? 1u : 0u));
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(rel(a[j], b[j]) < 1e-12);
  }
  for (int i = 0; i < 30; ++i) {
    const cplx m(0.0, 2.0 * u(rng));
    if (std::abs(m) < 0.05) continue;
    const cplx kappa = std::polar(1.0, kPi * u(rng));
    // Both list the same geometric sequence; compare a window of the classified
    // enumeration against membership in the general one.
    const auto a = hmk_eigenvalues({m, kappa}, {-2, 2});
    const auto b = hmk_eigenvalues_general({m, kappa}, {-4, 4});
    for (const auto& e : a.eigenvalues) {
      const bool found = std::any_of(b.eigenvalues.begin(), b.eigenvalues.end(),
                                     [&](const isq::Eigenvalue& f) { return rel(f.value, e.value) < 1e-10; });
      CHECK(found);
    }
  }
}

TEST_CASE("duality") {
  const auto d = duality({0.5, -1.0});
  CHECK(d.m == cplx(-0.5));
  CHECK(d.kappa == ExtendedComplex(-1.0));
  CHECK(rel(hmk_eigenvalues(d).eigenvalues.at(0).value, -1.0) < 1e-14);
  const auto z = duality({0.4, 0.0});
  CHECK(z.kappa.is_infinite());
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const BoundaryParams p{cplx(0.9 * u(rng), u(rng)), cplx(3.0 * u(rng), 3.0 * u(rng))};
    const auto dd = duality(duality(p));
    CHECK(dd.m == p.m);
    CHECK(rel(dd.kappa.value(), p.kappa.value()) < 1e-15);
    const auto a = sorted_values(hmk_eigenvalues_general(p));
    const auto b = sorted_values(hmk_eigenvalues_general(duality(p)));
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(rel(a[j], b[j]) < 1e-10);
  }
}

TEST_CASE("dilation flow on boundary parameters") {
  CHECK(std::get<BoundaryParams>(rg_flow_schrodinger(BoundaryParams{0.5, -1.0}, 0.0)).kappa == ExtendedComplex(-1.0));
  for (double tau : {-1.5, -0.2, 0.4, 2.0}) {
    const auto q = std::get<BoundaryParams>(rg_flow_schrodinger(BoundaryParams{0.5, -1.0}, tau));
    CHECK(rel(q.kappa.value(), -std::exp(tau)) < 1e-14);
    CHECK(rel(hmk_eigenvalues({0.5, -1.0}).eigenvalues[0].value,
              std::exp(-2.0 * tau) * hmk_eigenvalues(q).eigenvalues[0].value) < 1e-12);
    const auto nq = std::get<LogBoundaryParams>(rg_flow_schrodinger(LogBoundaryParams{0.3}, tau));
    CHECK(rel(h0nu_eigenvalue(0.3).eigenvalues[0].value,
              std::exp(-2.0 * tau) * h0nu_eigenvalue(nq.nu).eigenvalues[0].value) < 1e-12);
  }
  // Imaginary m: |κ| = 1 is preserved.
  const auto rot = std::get<BoundaryParams>(rg_flow_schrodinger(BoundaryParams{cplx(0.0, 0.8), std::polar(1.0, 0.3)}, 1.7));
  CHECK(std::abs(std::abs(rot.kappa.value()) - 1.0) < 1e-14);
  // Fixed points 0 and ∞.
  CHECK(std::get<BoundaryParams>(rg_flow_schrodinger(BoundaryParams{0.5, 0.0}, 3.0)).kappa.is_zero());
  CHECK(std::get<BoundaryParams>(rg_flow_schrodinger(BoundaryParams{0.5, ExtendedComplex::infinity()}, 3.0)).kappa.is_infinite());
  // For 0 < m < 1 the flow drives κ to ∞ (Friedrichs, H_m) as τ → +∞ and to 0 (Krein) as τ → −∞.
  double prev = 1.0;
  for (double tau = 1.0; tau <= 10.0; tau += 1.0) {
    const double now = std::abs(std::get<BoundaryParams>(rg_flow_schrodinger(BoundaryParams{0.3, 1.0}, tau)).kappa.value());
    CHECK(now > prev);
    prev = now;
  }
}

TEST_CASE("log family eigenvalue") {
  const auto r = h0nu_eigenvalue(0.0);
  REQUIRE(r.size() == 1);
  CHECK(rel(r.eigenvalues[0].value, -4.0 * std::exp(-2.0 * isq::sf::kEulerGamma)) < 1e-15);
  CHECK(h0nu_eigenvalue(ExtendedComplex::infinity()).count_class == isq::CountClass::Empty);
  CHECK(h0nu_eigenvalue(cplx(0.0, kPi / 2)).count_class == isq::CountClass::Empty);
  CHECK(h0nu_eigenvalue(cplx(0.2, 1.5)).size() == 1);
}

TEST_CASE("phase table") {
  CHECK(classify_phase(1.5).phase == Phase::Gas);
  CHECK(classify_phase(1.0).phase == Phase::Gas);
  CHECK(classify_phase(1.5).extensions == ExtensionSet::Point);
  const auto liquid = classify_phase(0.25);
  CHECK(liquid.phase == Phase::Liquid);
  CHECK(liquid.fixed_points.size() == 2);
  CHECK(liquid.fixed_point_operators.find("H_0.5") != std::string::npos);
  CHECK(liquid.fixed_point_operators.find("H_-0.5") != std::string::npos);
  CHECK(classify_phase(0.0).phase == Phase::LiquidSolidTransition);
  CHECK(classify_phase(0.0).fixed_points.size() == 1);
  CHECK(classify_phase(-1.0).phase == Phase::Solid);
  CHECK(classify_phase(-1.0).fixed_points.empty());

  CHECK(bound_state_count(0.25, -2.0) == BoundStates::One);
  CHECK(bound_state_count(0.25, 3.0) == BoundStates::Zero);
  CHECK(bound_state_count(0.25, 0.0) == BoundStates::Zero);
  CHECK(bound_state_count(0.25, ExtendedComplex::infinity()) == BoundStates::Zero);
  CHECK(bound_state_count(0.0, 0.7) == BoundStates::One);
  CHECK(bound_state_count(0.0, ExtendedComplex::infinity()) == BoundStates::Zero);
  CHECK(bound_state_count(-1.0, std::polar(1.0, 2.0)) == BoundStates::Infinite);
  CHECK(bound_state_count(2.0, 5.0) == BoundStates::Zero);
}
