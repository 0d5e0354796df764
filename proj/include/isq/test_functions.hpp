#pragma once

// Gaussian bumps in the log picture, the standard test family of the transform checks:
// f(x) = x^{−1/2} exp(−(ln x − c)² / (2 s²)).

#include <cstdint>
#include <vector>

#include "isq/grid.hpp"

namespace isq {

GridFunction bump(const LogGrid& grid, double c, double s);

/// `count` bumps with c ∈ [−0.5, 0.5], s ∈ [0.2, 0.35], reproducible from `seed`.
std::vector<GridFunction> bump_family(const LogGrid& grid, int count = 10, std::uint64_t seed = 20240611);

/// 2^19 nodes on [1e−9, 1e9]: resolves the Hankel kernel for the bump family.
LogGrid hankel_grid();

/// 2^14 nodes on [1e−9, 1e9]: enough for multiplier-only work on the bump family.
LogGrid multiplier_grid();

}  // namespace isq
