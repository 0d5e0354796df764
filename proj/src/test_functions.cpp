#include "isq/test_functions.hpp"

#include <cmath>
#include <random>

namespace isq {

GridFunction bump(const LogGrid& grid, double c, double s) {
  return GridFunction::sample(grid, [&](double x) {
    const double u = std::log(x);
    return cplx(std::exp(-0.5 * (u - c) * (u - c) / (s * s)) / std::sqrt(x), 0.0);
  });
}

std::vector<GridFunction> bump_family(const LogGrid& grid, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> centre(-0.5, 0.5);
  std::uniform_real_distribution<double> width(0.2, 0.35);
  std::vector<GridFunction> out;
  for (int k = 0; k < count; ++k) {
    const double c = centre(rng);
    const double s = width(rng);
    out.push_back(bump(grid, c, s));
  }
  return out;
}

LogGrid hankel_grid() { return LogGrid::spanning(1 << 19, 1e-9, 1e9); }

LogGrid multiplier_grid() { return LogGrid::spanning(1 << 14, 1e-9, 1e9); }

}  // namespace isq
