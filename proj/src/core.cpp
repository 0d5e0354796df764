#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "isq/error.hpp"
#include "isq/extended_complex.hpp"

namespace isq {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::PoleAtNonPositiveInteger: return "PoleAtNonPositiveInteger";
    case ErrorKind::OnCut: return "OnCut";
    case ErrorKind::OrderAtNegativeIntegerSingularity: return "OrderAtNegativeIntegerSingularity";
    case ErrorKind::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorKind::MultiplierPole: return "MultiplierPole";
    case ErrorKind::MzeroUseLogFamily: return "MzeroUseLogFamily";
    case ErrorKind::AtEigenvalue: return "AtEigenvalue";
    case ErrorKind::LambdaPole: return "LambdaPole";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::OutsideClassifiedRegion: return "OutsideClassifiedRegion";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::GridCoverage: return "GridCoverage";
    case ErrorKind::AsymmetricGrid: return "AsymmetricGrid";
    case ErrorKind::NonUniformGrid: return "NonUniformGrid";
    case ErrorKind::TruncationTooSevere: return "TruncationTooSevere";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::NearCut: return "NearCut";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::WindowExhausted: return "WindowExhausted";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

int Error::exit_code() const noexcept {
  switch (kind_) {
    case ErrorKind::QuadratureNotConverged:
    case ErrorKind::NoConvergence:
    case ErrorKind::WindowExhausted:
    case ErrorKind::TruncationTooSevere:
    case ErrorKind::GridTooCoarse:
      return 4;
    default:
      return 2;
  }
}

cplx ExtendedComplex::value() const {
  if (!value_) throw std::logic_error("ExtendedComplex::value() at infinity");
  return *value_;
}

ExtendedComplex ExtendedComplex::reciprocal() const {
  if (!value_) return ExtendedComplex(cplx(0.0, 0.0));
  if (*value_ == cplx(0.0, 0.0)) return infinity();
  return ExtendedComplex(1.0 / *value_);
}

ExtendedComplex ExtendedComplex::scaled(cplx factor) const {
  if (!value_) return *this;
  return ExtendedComplex(*value_ * factor);
}

ExtendedComplex ExtendedComplex::shifted(cplx offset) const {
  if (!value_) return *this;
  return ExtendedComplex(*value_ + offset);
}

std::string ExtendedComplex::to_string() const {
  if (!value_) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << value_->real();
  if (value_->imag() != 0.0) os << "," << value_->imag();
  return os.str();
}

cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  auto parse_double = [&](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
      throw std::invalid_argument("cannot parse number '" + text + "'");
    }
    return v;
  };
  if (comma == std::string::npos) return {parse_double(text), 0.0};
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

ExtendedComplex parse_extended(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return ExtendedComplex::infinity();
  return ExtendedComplex(parse_complex(text));
}

}  // namespace isq
