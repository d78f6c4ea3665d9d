#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace z4codes {

namespace detail {

template <class T>
T checked_add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("GaussInt: addition overflow");
  return r;
}

template <class T>
T checked_sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("GaussInt: subtraction overflow");
  return r;
}

template <class T>
T checked_mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("GaussInt: multiplication overflow");
  return r;
}

}  // namespace detail

/// Exact Gaussian integer re + i*im. Every arithmetic operation is
/// overflow-checked and throws std::overflow_error instead of wrapping.
template <class T>
struct BasicGaussInt {
  T re = 0;
  T im = 0;

  constexpr BasicGaussInt() = default;
  constexpr BasicGaussInt(T r, T i = 0) : re(r), im(i) {}

  /// i^k for any integer k (period 4).
  static constexpr BasicGaussInt i_pow(long long k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  BasicGaussInt& operator+=(const BasicGaussInt& o) {
    re = detail::checked_add(re, o.re);
    im = detail::checked_add(im, o.im);
    return *this;
  }
  BasicGaussInt& operator-=(const BasicGaussInt& o) {
    re = detail::checked_sub(re, o.re);
    im = detail::checked_sub(im, o.im);
    return *this;
  }
  BasicGaussInt& operator*=(const BasicGaussInt& o) {
    const T r = detail::checked_sub(detail::checked_mul(re, o.re), detail::checked_mul(im, o.im));
    const T i = detail::checked_add(detail::checked_mul(re, o.im), detail::checked_mul(im, o.re));
    re = r;
    im = i;
    return *this;
  }

  friend BasicGaussInt operator+(BasicGaussInt a, const BasicGaussInt& b) { return a += b; }
  friend BasicGaussInt operator-(BasicGaussInt a, const BasicGaussInt& b) { return a -= b; }
  friend BasicGaussInt operator*(BasicGaussInt a, const BasicGaussInt& b) { return a *= b; }
  friend BasicGaussInt operator-(const BasicGaussInt& a) { return BasicGaussInt{} - a; }

  BasicGaussInt conj() const { return {re, detail::checked_sub(T{0}, im)}; }
  T norm() const { return detail::checked_add(detail::checked_mul(re, re), detail::checked_mul(im, im)); }
  bool is_real() const { return im == 0; }

  friend constexpr bool operator==(const BasicGaussInt&, const BasicGaussInt&) = default;
  // Lexicographic on (re, im).
  friend constexpr std::strong_ordering operator<=>(const BasicGaussInt& a, const BasicGaussInt& b) {
    if (auto c = a.re <=> b.re; c != 0) return c;
    return a.im <=> b.im;
  }
};

using GaussInt = BasicGaussInt<std::int64_t>;
__extension__ typedef __int128 Int128;
using WideGaussInt = BasicGaussInt<Int128>;

/// Narrows a 128-bit accumulator; throws std::overflow_error if it does not fit.
GaussInt narrow(const WideGaussInt& w);
WideGaussInt widen(const GaussInt& g);

/// "a+bi" style rendering with exact integers ("-4", "2i", "-2+2i").
std::string to_string(const GaussInt& g);

}  // namespace z4codes
