#include "z4codes/gauss_int.hpp"

#include <limits>

namespace z4codes {

GaussInt narrow(const WideGaussInt& w) {
  constexpr Int128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr Int128 hi = std::numeric_limits<std::int64_t>::max();
  if (w.re < lo || w.re > hi || w.im < lo || w.im > hi)
    throw std::overflow_error("GaussInt: value exceeds 64 bits");
  return {static_cast<std::int64_t>(w.re), static_cast<std::int64_t>(w.im)};
}

WideGaussInt widen(const GaussInt& g) { return {g.re, g.im}; }

std::string to_string(const GaussInt& g) {
  if (g.im == 0) return std::to_string(g.re);
  std::string imag;
  if (g.im == 1) imag = "i";
  else if (g.im == -1) imag = "-i";
  else imag = std::to_string(g.im) + "i";
  if (g.re == 0) return imag;
  return std::to_string(g.re) + (g.im > 0 ? "+" : "") + imag;
}

}  // namespace z4codes
