#pragma once

// Reference GR(4,m) as Z4[X]/(h) with h the basic irreducible obtained from
// the binary polynomial f by one Graeffe step: h(X^2) = +-f(X)f(-X) mod 4.
// Elements are coefficient vectors; nothing here touches the pair law.

#include <cstdint>
#include <vector>

namespace oracle {

using Poly = std::vector<int>;  // coefficients mod 4, index = degree

class HenselRing {
 public:
  HenselRing(int m, std::uint32_t f) : m_(m) {
    // f = e(X^2) + X o(X^2)  =>  h(Y) = (-1)^m (e(Y)^2 - Y o(Y)^2).
    Poly e(m / 2 + 1, 0), o(m / 2 + 1, 0);
    for (int i = 0; i <= m; ++i) {
      const int c = (f >> i) & 1;
      (i % 2 == 0 ? e : o)[i / 2] += c;
    }
    Poly e2 = raw_mul(e, e), o2 = raw_mul(o, o);
    h_.assign(m + 1, 0);
    for (std::size_t i = 0; i < e2.size() && i <= static_cast<std::size_t>(m); ++i) h_[i] += e2[i];
    for (std::size_t i = 0; i + 1 <= static_cast<std::size_t>(m) && i < o2.size(); ++i) h_[i + 1] -= o2[i];
    const int sign = (m % 2 == 0) ? 1 : -1;
    for (int& c : h_) c = ((sign * c) % 4 + 4) % 4;
  }

  int m() const { return m_; }
  const Poly& modulus() const { return h_; }

  Poly zero() const { return Poly(m_, 0); }

  Poly add(const Poly& a, const Poly& b) const {
    Poly r(m_);
    for (int i = 0; i < m_; ++i) r[i] = (a[i] + b[i]) % 4;
    return r;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    Poly prod = raw_mul(a, b);
    // Reduce with the monic h: X^m = -(h_0 + ... + h_{m-1} X^{m-1}).
    for (int d = static_cast<int>(prod.size()) - 1; d >= m_; --d) {
      const int c = prod[d] % 4;
      if (c == 0) continue;
      prod[d] = 0;
      for (int i = 0; i < m_; ++i) prod[d - m_ + i] = ((prod[d - m_ + i] - c * h_[i]) % 4 + 4) % 4;
    }
    Poly r(m_);
    for (int i = 0; i < m_ && i < static_cast<int>(prod.size()); ++i) r[i] = ((prod[i] % 4) + 4) % 4;
    return r;
  }

  Poly pow(Poly a, std::uint64_t e) const {
    Poly r = zero();
    r[0] = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Teichmuller representative of the field element with bit label `x`:
  /// any lift z of x satisfies z^(2^m) = teich(x).
  Poly teich(std::uint32_t x) const {
    Poly z = zero();
    for (int i = 0; i < m_; ++i) z[i] = (x >> i) & 1;
    return pow(z, std::uint64_t{1} << m_);
  }

  /// x + 2y for Teichmuller labels x, y.
  Poly element(std::uint32_t x, std::uint32_t y) const {
    Poly t = teich(y);
    for (int& c : t) c = (2 * c) % 4;
    return add(teich(x), t);
  }

  /// Frobenius fixes Z4 coefficients and sends the root of h to its square.
  Poly frobenius(const Poly& a) const {
    Poly r = zero();
    Poly xi = zero();
    if (m_ > 1) xi[1] = 1; else xi[0] = (4 - h_[0]) % 4;
    const Poly xi2 = mul(xi, xi);
    Poly power = zero();
    power[0] = 1;
    for (int i = 0; i < m_; ++i) {
      for (int k = 0; k < m_; ++k) r[k] = (r[k] + a[i] * power[k]) % 4;
      power = mul(power, xi2);
    }
    return r;
  }

  /// Trace as the sum of the Frobenius orbit; the result is a constant.
  int trace(const Poly& a) const {
    Poly sum = zero(), cur = a;
    for (int j = 0; j < m_; ++j) {
      sum = add(sum, cur);
      cur = frobenius(cur);
    }
    for (int i = 1; i < m_; ++i)
      if (sum[i] != 0) return -1;
    return sum[0];
  }

 private:
  static Poly raw_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % 4;
    return r;
  }

  int m_;
  Poly h_;
};

/// Carry-free schoolbook product of two GF(2)[X] bitmasks reduced modulo f.
inline std::uint32_t schoolbook_mul(std::uint32_t a, std::uint32_t b, std::uint32_t f, int m) {
  std::uint64_t prod = 0;
  for (int i = 0; i < m; ++i)
    if ((b >> i) & 1) prod ^= std::uint64_t{a} << i;
  for (int d = 2 * m - 2; d >= m; --d)
    if ((prod >> d) & 1) prod ^= std::uint64_t{f} << (d - m);
  return static_cast<std::uint32_t>(prod);
}

}  // namespace oracle
