#include "isq/transforms.hpp"

#include <fftw3.h>

#include <limits>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "isq/error.hpp"
#include "isq/special_functions.hpp"

namespace isq::tr {

namespace {

using sf::kPi;
const double kSqrt2Pi = std::sqrt(2.0 * kPi);

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place DFT, sign −1 forward (Σ a_j e^{−2πijk/n}), +1 backward (unnormalized).
void fft(std::vector<cplx>& a, int sign) {
  auto* p = reinterpret_cast<fftw_complex*>(a.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(a.size()), p, p, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan);
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

// Signed frequency index of DFT slot k.
long signed_index(long k, long n) { return k < n - n / 2 ? k : k - n; }

// e^{−i t_k u_0} with t_k = 2πk/(nh), u_0 = c − (n−1)h/2; the large part of the
// phase is reduced with integer arithmetic.
cplx origin_phase(long k, const LogGrid& g) {
  const long n = g.size();
  long r = (k * (n - 1)) % (2 * n);
  if (r < 0) r += 2 * n;
  const double phase = -2.0 * kPi * k * g.center() / (n * g.step()) + kPi * static_cast<double>(r) / n;
  return std::polar(1.0, phase);
}

void check_truncation(const std::vector<cplx>& g, double tol) {
  const double peak = max_abs(g);
  if (peak == 0.0) return;
  const double end = std::max(std::abs(g.front()), std::abs(g.back())) / peak;
  if (end > tol) {
    std::ostringstream os;
    os << "relative end amplitude " << end << " exceeds " << tol;
    throw Error(ErrorKind::TruncationTooSevere, os.str());
  }
}

struct KernelKey {
  double mr, mi, h, c, p;
  int n;
  bool operator<(const KernelKey& o) const {
    return std::tie(mr, mi, h, c, p, n) < std::tie(o.mr, o.mi, o.h, o.c, o.p, o.n);
  }
};

struct KernelSpectrum {
  std::vector<cplx> spectrum;  // DFT of the masked kernel, length 2n
  double log_limit;            // kernel resolved for s = u + v ≤ log_limit
};

// Kernel K_l = h e^{s} J_m(e^{s}), s = 2c + (l − (n−1)) h, l = 0 … 2n−2, zeroed where
// the Bessel oscillation has fewer than the required nodes per period.
std::shared_ptr<const KernelSpectrum> kernel_spectrum(cplx m, const LogGrid& grid, double per_period) {
  static std::mutex mutex;
  static std::map<KernelKey, std::shared_ptr<const KernelSpectrum>> cache;
  const KernelKey key{m.real(), m.imag(), grid.step(), grid.center(), per_period, grid.size()};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int n = grid.size();
  const double h = grid.step();
  auto ks = std::make_shared<KernelSpectrum>();
  ks->log_limit = std::log(2.0 * kPi / (per_period * h));
  ks->spectrum.assign(2 * static_cast<std::size_t>(n), 0.0);
  for (int l = 0; l <= 2 * n - 2; ++l) {
    const double s = 2.0 * grid.center() + (l - (n - 1)) * h;
    if (s > ks->log_limit) break;
    if (s < -745.0) continue;
    const double x = std::exp(s);
    ks->spectrum[l] = h * x * sf::bessel_j(m, x);
  }
  fft(ks->spectrum, -1);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, ks);
  return ks;
}

// φ(A) with a multiplier and its t-grid, shared by the resolvent variants.
GridFunction resolvent_with(const Multiplier& xi, const Multiplier& xi_inv, cplx z, const GridFunction& f,
                            const Options& opt) {
  const LogGrid& grid = f.grid();
  double closest = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid.size(); ++j) {
    closest = std::min(closest, std::abs(z - 1.0 / (grid.x(j) * grid.x(j))));
  }
  if (closest < 1e-10 * std::max(1.0, std::abs(z))) {
    throw Error(ErrorKind::NearCut, "z - x^-2 vanishes on the grid");
  }
  GridFunction a = apply_function_of_A(xi, f, opt);
  std::vector<cplx> v(a.values());
  for (int j = 0; j < grid.size(); ++j) v[j] /= z - 1.0 / (grid.x(j) * grid.x(j));
  return apply_function_of_A(xi_inv, GridFunction(grid, std::move(v)), opt);
}

}  // namespace

GridFunction dilation(double tau, const GridFunction& f, const Options& opt) {
  const LogGrid& grid = f.grid();
  const int n = grid.size();
  const double shift = tau / grid.step();
  const long whole = std::lround(shift);
  const std::vector<cplx> g = f.log_picture();

  // Mass pushed off the grid by the (nearest whole-node) translation g(u) ↦ g(u + τ).
  double total = 0.0;
  double lost = 0.0;
  const long reach = static_cast<long>(std::ceil(std::abs(shift)));
  for (int j = 0; j < n; ++j) {
    const double w = std::norm(g[j]);
    total += w;
    if ((shift > 0 && j < reach) || (shift < 0 && j >= n - reach)) lost += w;
  }
  if (total > 0.0 && std::sqrt(lost / total) > opt.coverage_tol) {
    std::ostringstream os;
    os << "dilation by " << tau << " moves a fraction " << std::sqrt(lost / total) << " of the norm off the grid";
    throw Error(ErrorKind::GridCoverage, os.str());
  }

  if (tau == 0.0) return f;
  if (std::abs(shift - whole) <= 1e-9 * std::max(1.0, std::abs(shift))) {
    // Whole-node shift: (U_τ f)(x_j) = e^{τ/2} f(x_{j+s}).
    const double factor = std::exp(0.5 * tau);
    std::vector<cplx> out(n, 0.0);
    for (int j = 0; j < n; ++j) {
      const long src = j + whole;
      if (src >= 0 && src < n) out[j] = factor * f[src];
    }
    return GridFunction(grid, std::move(out));
  }
  // Off-grid shifts: band-limited interpolation, i.e. the multiplier e^{iτt}.
  return apply_function_of_A([tau](double t) { return std::polar(1.0, tau * t); }, f, opt);
}

GridFunction inversion(const GridFunction& f) {
  const LogGrid& grid = f.grid();
  if (!grid.symmetric()) throw Error(ErrorKind::AsymmetricGrid, "inversion needs x_min * x_max = 1");
  const int n = grid.size();
  std::vector<cplx> v(n);
  for (int j = 0; j < n; ++j) v[j] = f[n - 1 - j] / grid.x(j);
  return GridFunction(grid, std::move(v));
}

MellinFunction mellin(const GridFunction& f, const Options& opt) {
  const LogGrid& grid = f.grid();
  const long n = grid.size();
  std::vector<cplx> g = f.log_picture();
  check_truncation(g, opt.truncation_tol);
  fft(g, -1);
  MellinFunction F;
  F.source = grid;
  F.t.resize(n);
  F.values.resize(n);
  const double scale = grid.step() / kSqrt2Pi;
  for (long k = 0; k < n; ++k) {
    const long s = signed_index(k, n);
    const long slot = s + n / 2;  // ascending order
    F.t[slot] = 2.0 * kPi * s / (n * grid.step());
    F.values[slot] = scale * origin_phase(s, grid) * g[k];
  }
  return F;
}

GridFunction mellin_inverse(const MellinFunction& F) {
  const LogGrid& grid = F.source;
  const long n = grid.size();
  if (static_cast<long>(F.values.size()) != n) {
    throw Error(ErrorKind::DomainViolation, "Mellin samples do not match the source grid");
  }
  std::vector<cplx> g(n);
  const double scale = kSqrt2Pi / (grid.step() * n);
  for (long k = 0; k < n; ++k) {
    const long s = signed_index(k, n);
    g[k] = scale * std::conj(origin_phase(s, grid)) * F.values[s + n / 2];
  }
  fft(g, +1);
  return GridFunction::from_log_picture(grid, g);
}

GridFunction apply_function_of_A(const Multiplier& phi, const GridFunction& f, const Options& opt) {
  MellinFunction F = mellin(f, opt);
  for (std::size_t k = 0; k < F.t.size(); ++k) F.values[k] *= phi(F.t[k]);
  return mellin_inverse(F);
}

GridFunction hankel(cplx m, const GridFunction& f, const Options& opt) {
  if (!(m.real() > -1.0)) throw Error(ErrorKind::DomainViolation, "hankel needs Re m > -1");
  const LogGrid& grid = f.grid();
  const int n = grid.size();
  const std::vector<cplx> g = f.log_picture();
  const double peak = max_abs(g);
  if (peak == 0.0) return f;
  int top = n - 1;
  while (top > 0 && std::abs(g[top]) <= opt.support_tol * peak) --top;

  const auto ks = kernel_spectrum(m, grid, opt.nodes_per_period);
  // out_i = Σ_j K_{i+j} g_j is entry i + n − 1 of the convolution of K with reversed g.
  std::vector<cplx> work(2 * static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) work[j] = g[n - 1 - j];
  fft(work, -1);
  for (std::size_t k = 0; k < work.size(); ++k) work[k] *= ks->spectrum[k];
  fft(work, +1);
  const double norm = 1.0 / static_cast<double>(work.size());

  std::vector<cplx> out(n, 0.0);
  const double cut = ks->log_limit - grid.u(top);  // last output with a resolved kernel
  int last = -1;
  for (int i = 0; i < n; ++i) {
    if (grid.u(i) > cut) break;
    out[i] = work[i + n - 1] * norm;
    last = i;
  }
  if (last < n - 1) {
    const double out_peak = max_abs(out);
    double edge = 0.0;
    for (int i = last; i >= 0 && grid.u(i) > cut - 1.0; --i) edge = std::max(edge, std::abs(out[i]));
    if (last < 0 || edge > opt.edge_tol * out_peak) {
      std::ostringstream os;
      os << "output above k = " << std::exp(cut) << " needs more than " << opt.nodes_per_period
         << " nodes per Bessel period; relative edge amplitude " << (out_peak > 0 ? edge / out_peak : 1.0);
      throw Error(ErrorKind::GridTooCoarse, os.str());
    }
  }
  return GridFunction::from_log_picture(grid, out);
}

GridFunction apply_L_alpha(cplx alpha, const GridFunction& f) {
  // With g(u) = e^{u/2} f(e^u): (L_α f)~ = e^{−2u} (−g'' + 2g' + (α − 1) g).
  const LogGrid& grid = f.grid();
  const int n = grid.size();
  const double h = grid.step();
  const std::vector<cplx> g = f.log_picture();
  std::vector<cplx> out(n);
  for (int j = 0; j < n; ++j) {
    const cplx left = j > 0 ? g[j - 1] : 0.0;
    const cplx right = j + 1 < n ? g[j + 1] : 0.0;
    const cplx d2 = (right - 2.0 * g[j] + left) / (h * h);
    const cplx d1 = (right - left) / (2.0 * h);
    out[j] = std::exp(-2.0 * grid.u(j)) * (-d2 + 2.0 * d1 + (alpha - 1.0) * g[j]);
  }
  return GridFunction::from_log_picture(grid, out);
}

GridFunction extended_hm_resolvent(cplx m, cplx z, const GridFunction& f, const Options& opt) {
  return resolvent_with([m](double t) { return sf::xi_multiplier(m, t); },
                        [m](double t) { return 1.0 / sf::xi_multiplier(m, t); }, z, f, opt);
}

double holomorphy_probe(cplx m0, cplx z, const GridFunction& f, const GridFunction& g, const ProbeOptions& opt) {
  auto element = [&](cplx m) {
    GridFunction r;
    if (opt.conjugate_multiplier) {
      r = resolvent_with([m](double t) { return std::conj(sf::xi_multiplier(m, t)); },
                         [m](double t) { return 1.0 / std::conj(sf::xi_multiplier(m, t)); }, z, f, opt.transform);
    } else {
      r = extended_hm_resolvent(m, z, f, opt.transform);
    }
    return inner(g, r);
  };
  const double h = opt.step;
  const cplx dx = (element(m0 + h) - element(m0 - h)) / (2.0 * h);
  const cplx dy = (element(m0 + cplx(0.0, h)) - element(m0 - cplx(0.0, h))) / (2.0 * h);
  const double scale = 0.5 * (std::abs(dx) + std::abs(dy));
  return scale > 0.0 ? std::abs(dx + cplx(0.0, 1.0) * dy) / scale : 0.0;
}

cplx apply_kernel_at(const std::function<cplx(double, double)>& kernel, const GridFunction& f, double x,
                     double support_tol) {
  const double peak = max_abs(f.values());
  cplx s = 0.0;
  for (int j = 0; j < f.size(); ++j) {
    if (std::abs(f[j]) <= support_tol * peak) continue;
    s += kernel(x, f.grid().x(j)) * f[j] * f.grid().weight(j);
  }
  return s;
}

}  // namespace isq::tr
