#pragma once

#include "isq/test_functions.hpp"

namespace isq::testing {

using isq::bump;
using isq::bump_family;
using isq::hankel_grid;

inline LogGrid default_grid() { return LogGrid::spanning(2048, 1e-4, 1e4); }

}  // namespace isq::testing
