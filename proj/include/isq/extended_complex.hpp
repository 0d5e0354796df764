#pragma once

#include <complex>
#include <optional>
#include <string>

namespace isq {

using cplx = std::complex<double>;

/// A point of the Riemann sphere C ∪ {∞}; carries the couplings λ, κ, ρ, ν.
class ExtendedComplex {
 public:
  ExtendedComplex() = default;
  ExtendedComplex(cplx v) : value_(v) {}  // NOLINT: implicit by intent
  ExtendedComplex(double v) : value_(cplx(v, 0.0)) {}  // NOLINT

  static ExtendedComplex infinity() {
    ExtendedComplex e;
    e.value_.reset();
    return e;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  bool is_zero() const { return value_ && *value_ == cplx(0.0, 0.0); }

  /// Finite value; throws std::logic_error at ∞.
  cplx value() const;

  /// 1/∞ = 0 and 1/0 = ∞.
  ExtendedComplex reciprocal() const;

  /// Multiplication by a finite nonzero scalar; ∞ is fixed.
  ExtendedComplex scaled(cplx factor) const;

  /// Translation by a finite scalar; ∞ is fixed.
  ExtendedComplex shifted(cplx offset) const;

  bool operator==(const ExtendedComplex& other) const = default;

  std::string to_string() const;

 private:
  std::optional<cplx> value_ = cplx(0.0, 0.0);
};

/// Parses "re", "re,im" or "inf" (the CLI spelling).
ExtendedComplex parse_extended(const std::string& text);
cplx parse_complex(const std::string& text);

}  // namespace isq
