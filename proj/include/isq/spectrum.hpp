#pragma once

#include <vector>

#include "isq/extended_complex.hpp"

namespace isq {

enum class CountClass { Finite, Empty, Infinite };

const char* to_string(CountClass c) noexcept;

struct Eigenvalue {
  long index = 0;  // spiral index n
  cplx value;
};

/// Point spectrum of one family member. The essential spectrum is always [0, ∞).
/// For an Infinite class only the indices in [window_lo, window_hi] are listed.
struct SpectrumReport {
  CountClass count_class = CountClass::Empty;
  std::vector<Eigenvalue> eigenvalues;
  long window_lo = 0;
  long window_hi = 0;

  std::size_t size() const { return eigenvalues.size(); }
};

struct IndexWindow {
  long lo = -20;
  long hi = 20;
};

}  // namespace isq
