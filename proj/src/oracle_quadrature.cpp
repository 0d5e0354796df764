#include <cmath>
#include <vector>

#include "isq/error.hpp"
#include "isq/oracle.hpp"
#include "isq/special_functions.hpp"

namespace isq::oracle {

quad::Result quad_weighted_resolvent(cplx m, cplx z, const quad::Options& opt) {
  if (!(m.real() > -1.0 && m.real() < 0.0)) {
    throw Error(ErrorKind::DomainViolation, "quadrature oracle needs -1 < Re m < 0");
  }
  sf::log_minus(z);  // rejects z on the cut
  const double centre = std::log(std::abs(z));
  // Tails decay like e^{(Re m + 1)u} below and e^{Re m u} above the split; go
  // out until the neglected mass is ~e^{-40} of the scale |z|^{Re m}.
  const double lo = centre - 40.0 / (m.real() + 1.0);
  const double hi = centre + 40.0 / (-m.real());
  auto f = [&](double u) {
    const double x = std::exp(u);
    return std::exp((m + 1.0) * u) / (z - x);
  };
  quad::Result left = quad::integrate_or_throw(f, lo, centre, opt);
  quad::Result right = quad::integrate_or_throw(f, centre, hi, opt);
  left.value += right.value;
  left.error += right.error;
  left.evaluations += right.evaluations;
  return left;
}

}  // namespace isq::oracle

namespace isq::oracle {

quad::Result eigen_expansion_resolvent_kernel(cplx m, double k, double x, double y, int levels) {
  if (!(x > 0.0 && y > 0.0) || x == y) {
    throw Error(ErrorKind::DomainViolation, "eigen-expansion oracle needs distinct positive x, y");
  }
  if (!(k > 0.0)) throw Error(ErrorKind::DomainViolation, "eigen-expansion oracle needs k > 0");
  const double gap = std::min(std::abs(x - y), x + y);
  // Corrections of size e^{−gap²/(4ε)} are invisible to Richardson; keep them below e^{−40}.
  const double eps0 = gap * gap / 160.0;
  const double panel = sf::kPi / (x + y);
  const double sxy = std::sqrt(x * y);

  std::vector<cplx> column;
  quad::Result out;
  for (int level = 0; level < levels; ++level) {
    const double eps = eps0 * std::pow(4.0, -level);
    const double p_max = std::sqrt(42.0 / eps);
    auto f = [&](double p) {
      if (p == 0.0) return cplx(0.0);
      return sxy * sf::bessel_j(m, p * x) * sf::bessel_j(m, p * y) * p / (k * k + p * p) * std::exp(-eps * p * p);
    };
    const int pieces = static_cast<int>(std::ceil(p_max / panel));
    cplx sum = 0.0;
    quad::Options opt;
    opt.abs_tol = 1e-15;
    for (int j = 0; j < pieces; ++j) {
      const quad::Result r = quad::integrate(f, j * panel, (j + 1) * panel, opt);
      sum += r.value;
      out.error += r.error;
      out.evaluations += r.evaluations;
    }
    column.push_back(sum);
  }
  // Richardson on h = √ε halving per level, error powers h, h², h³, ...
  std::vector<cplx> t = column;
  cplx previous_best = t.back();
  double last_change = 0.0;
  for (int order = 1; order < levels; ++order) {
    const double factor = std::pow(2.0, order);
    for (int j = levels - 1; j >= order; --j) t[j] = (factor * t[j] - t[j - 1]) / (factor - 1.0);
    last_change = std::abs(t[levels - 1] - previous_best);
    previous_best = t[levels - 1];
  }
  out.value = t[levels - 1];
  out.error += last_change;
  out.converged = true;
  return out;
}

}  // namespace isq::oracle
