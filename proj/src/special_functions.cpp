#include "isq/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "isq/error.hpp"

namespace isq::sf {

namespace {

using lcplx = std::complex<long double>;

// Godfrey's coefficients for g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

const double kLogSqrt2Pi = 0.5 * std::log(2.0 * kPi);

bool near_nonpositive_integer(cplx z) {
  if (z.real() > 0.5) return false;
  const double n = std::round(z.real());
  const double tol = 1e-13 * std::max(1.0, std::abs(z));
  return n <= 0.0 && std::abs(z - cplx(n, 0.0)) < tol;
}

// log Γ(w + 1) for Re w >= -1/2.
cplx lanczos_log_gamma1(cplx w) {
  cplx series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) series += kLanczos[k] / (w + double(k));
  const cplx t = w + kLanczosG + 0.5;
  return kLogSqrt2Pi + (w + 0.5) * std::log(t) - t + std::log(series);
}

// log sin(πz), stable for large |Im z|.
cplx log_sin_pi(cplx z) {
  const cplx i(0.0, 1.0);
  if (z.imag() > 5.0) {
    return -i * kPi * z + std::log((std::exp(2.0 * i * kPi * z) - 1.0) / (2.0 * i));
  }
  if (z.imag() < -5.0) {
    return i * kPi * z + std::log((1.0 - std::exp(-2.0 * i * kPi * z)) / (2.0 * i));
  }
  return std::log(std::sin(kPi * z));
}

// Large-argument coefficients b_k = Π_{j≤k}(μ − (2j−1)²) / (k! (8x)^k).
template <class Fn>
void hankel_terms(cplx nu, cplx x, Fn&& accept) {
  const cplx mu = 4.0 * nu * nu;
  cplx term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  accept(0, term);
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (double(k) * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > last) break;  // asymptotic series: stop at the smallest term
    accept(k, term);
    if (mag < 1e-17) break;
    last = mag;
  }
}

// Σ_k (±x²/4)^k / (k! (ν+1)_k) in extended precision; sign = -1 for J, +1 for I.
lcplx ascending_sum(cplx nu, cplx x, int sign) {
  const lcplx q = lcplx(double(sign)) * lcplx(x) * lcplx(x) / 4.0L;
  const lcplx lnu(nu);
  lcplx sum = 1.0L;
  lcplx term = 1.0L;
  const long double ax = std::abs(x);
  for (int k = 1; k < 1000; ++k) {
    term *= q / (static_cast<long double>(k) * (lnu + static_cast<long double>(k)));
    sum += term;
    if (k > ax && std::abs(term) < 1e-19L * std::abs(sum)) break;
  }
  return sum;
}

bool negative_integer_order(cplx nu, int& n) {
  const double r = std::round(nu.real());
  if (r < 0.0 && std::abs(nu - cplx(r, 0.0)) < 1e-14) {
    n = static_cast<int>(-r);
    return true;
  }
  return false;
}

cplx series_prefactor(cplx nu, cplx x) {
  return std::exp(nu * std::log(x / 2.0) - log_gamma(nu + 1.0));
}

void require_right_half_plane(cplx x) {
  if (!(x.real() > 0.0)) {
    throw Error(ErrorKind::NonPositiveArgument, "Bessel argument must have positive real part");
  }
}

// e^{x} K_ν(x) = ∫₀^∞ e^{−x(cosh t − 1)} cosh(νt) dt by the trapezoidal rule,
// which converges geometrically for this entire, rapidly decaying integrand.
cplx k_scaled_integral(cplx nu, cplx x) {
  const double xr = x.real();
  const double a = std::abs(nu.real());
  auto log_bound = [&](double t) { return -xr * (std::cosh(t) - 1.0) + a * t; };
  const double t_peak = std::asinh(a / xr);
  const double peak = log_bound(t_peak);
  double t_max = t_peak + 0.5;
  while (log_bound(t_max) > peak - 42.0) t_max += 0.5;

  auto f = [&](double t) { return std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(nu * t); };

  double h = 0.25;
  int n = static_cast<int>(std::ceil(t_max / h));
  cplx sum = 0.5 * f(0.0);
  for (int j = 1; j <= n; ++j) sum += f(j * h);
  cplx estimate = h * sum;
  for (int level = 0; level < 12; ++level) {
    h *= 0.5;
    n *= 2;
    for (int j = 1; j <= n; j += 2) sum += f(j * h);
    const cplx refined = h * sum;
    const bool done = std::abs(refined - estimate) <= 1e-15 * std::abs(refined);
    estimate = refined;
    if (done && level >= 1) break;
  }
  return estimate;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (near_nonpositive_integer(z)) {
    throw Error(ErrorKind::PoleAtNonPositiveInteger, "Gamma pole");
  }
  if (z.real() >= 0.5) return lanczos_log_gamma1(z - 1.0);
  return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma1(-z);
}

cplx gamma(cplx z) {
  if (near_nonpositive_integer(z)) {
    throw Error(ErrorKind::PoleAtNonPositiveInteger, "Gamma pole");
  }
  if (z.real() >= 0.5) return std::exp(lanczos_log_gamma1(z - 1.0));
  return kPi / (std::sin(kPi * z) * std::exp(lanczos_log_gamma1(-z)));
}

cplx log_minus(cplx z) {
  // Relative test: the cut is a ray, so tiny |z| off the ray is still admissible.
  const double scale = std::abs(z);
  if (scale == 0.0 || (std::abs(z.imag()) <= 1e-14 * scale && z.real() > 0.0)) {
    throw Error(ErrorKind::OnCut, "spectral parameter on [0, inf)");
  }
  return std::log(-z);
}

cplx principal_power(cplx z, cplx m) { return std::exp(m * log_minus(z)); }

cplx bessel_j(cplx nu, double x, const BesselOptions& opt) {
  if (!(x > 0.0)) throw Error(ErrorKind::NonPositiveArgument, "bessel_j needs x > 0");
  int n = 0;
  if (negative_integer_order(nu, n)) {
    const cplx v = bessel_j(cplx(n, 0.0), x, opt);
    return (n % 2 == 0) ? v : -v;
  }
  if (x < opt.series_asymptotic_switch) {
    const lcplx s = ascending_sum(nu, x, -1);
    return series_prefactor(nu, x) * cplx(static_cast<double>(s.real()), static_cast<double>(s.imag()));
  }
  cplx p = 0.0;
  cplx q = 0.0;
  hankel_terms(nu, x, [&](int k, cplx b) {
    const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) p += sgn * b; else q += sgn * b;
  });
  const cplx chi = x - (nu / 2.0 + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

cplx bessel_i_scaled(cplx nu, cplx x, const BesselOptions& opt) {
  require_right_half_plane(x);
  int n = 0;
  if (negative_integer_order(nu, n)) nu = cplx(n, 0.0);
  if (std::abs(x) < opt.series_asymptotic_switch) {
    const lcplx s = ascending_sum(nu, x, +1);
    return std::exp(nu * std::log(x / 2.0) - log_gamma(nu + 1.0) - x) *
           cplx(static_cast<double>(s.real()), static_cast<double>(s.imag()));
  }
  cplx sum = 0.0;
  hankel_terms(nu, x, [&](int k, cplx b) { sum += (k % 2 == 0) ? b : -b; });
  return sum / std::sqrt(2.0 * kPi * x);
}

cplx bessel_i(cplx nu, cplx x, const BesselOptions& opt) {
  return bessel_i_scaled(nu, x, opt) * std::exp(x);
}

cplx bessel_k_scaled(cplx nu, cplx x, const BesselOptions& opt) {
  require_right_half_plane(x);
  if (std::abs(x) < opt.series_asymptotic_switch) return k_scaled_integral(nu, x);
  cplx sum = 0.0;
  hankel_terms(nu, x, [&](int, cplx b) { sum += b; });
  return std::sqrt(kPi / (2.0 * x)) * sum;
}

cplx bessel_k(cplx nu, cplx x, const BesselOptions& opt) {
  return bessel_k_scaled(nu, x, opt) * std::exp(-x);
}

bool xi_hits_pole(cplx m, double t) {
  const cplx i(0.0, 1.0);
  return near_nonpositive_integer((m + 1.0 + i * t) / 2.0) ||
         near_nonpositive_integer((m + 1.0 - i * t) / 2.0);
}

cplx xi_multiplier(cplx m, double t) {
  if (xi_hits_pole(m, t)) throw Error(ErrorKind::MultiplierPole, "Xi_m hits a Gamma pole");
  const cplx i(0.0, 1.0);
  return std::exp(i * std::log(2.0) * t + log_gamma((m + 1.0 + i * t) / 2.0) -
                  log_gamma((m + 1.0 - i * t) / 2.0));
}

}  // namespace isq::sf
