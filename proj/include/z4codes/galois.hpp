#pragma once

// Arithmetic in GF(2^m), the Teichmuller set of GR(4,m), GR(4,m) itself and
// the binary / quaternary trace maps.
//
// A field element is an m-bit label (bit i = coefficient of alpha^i in the
// polynomial basis). The same label names the Teichmuller element lifting it,
// so the transported addition on the Teichmuller set is plain XOR. A ring
// element x + 2y (x, y Teichmuller) is stored as the pair of labels (x, y).

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace z4codes {

using FieldElem = std::uint32_t;

/// Element of Z/4Z.
class Z4 {
 public:
  constexpr Z4() = default;
  constexpr explicit Z4(int v) : v_(static_cast<std::uint8_t>(((v % 4) + 4) % 4)) {}

  constexpr int value() const { return v_; }

  friend constexpr Z4 operator+(Z4 a, Z4 b) { return Z4(a.v_ + b.v_); }
  friend constexpr Z4 operator-(Z4 a, Z4 b) { return Z4(a.v_ - b.v_); }
  friend constexpr Z4 operator*(Z4 a, Z4 b) { return Z4(a.v_ * b.v_); }
  friend constexpr Z4 operator-(Z4 a) { return Z4(-a.v_); }
  friend constexpr bool operator==(Z4, Z4) = default;

 private:
  std::uint8_t v_ = 0;
};

/// x + 2y in GR(4,m), x and y Teichmuller labels. The representation is unique.
struct GRElem {
  FieldElem x = 0;
  FieldElem y = 0;

  friend constexpr bool operator==(const GRElem&, const GRElem&) = default;
};

/// The embedding Z4 -> GR(4,m): 0,1,2,3 -> (0,0),(1,0),(0,1),(1,1).
constexpr GRElem from_z4(Z4 c) {
  return {static_cast<FieldElem>(c.value() & 1), static_cast<FieldElem>(c.value() >> 1)};
}

class InvalidPolynomial : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Built-in degree-m irreducible polynomial (bit i = coefficient of X^i).
std::uint32_t default_poly(int m);

/// True iff `poly` has degree exactly m and is irreducible over GF(2).
bool is_irreducible(std::uint32_t poly, int m);

/// Parses `m=<int> poly=0x<hex>` lines. Blank lines and lines starting with
/// '#' are skipped; anything else malformed throws InvalidPolynomial.
std::map<int, std::uint32_t> parse_poly_config(std::istream& in);

/// Override if present, else the built-in table.
std::uint32_t resolve_poly(int m, const std::map<int, std::uint32_t>& overrides);

/// Immutable GF(2^m) context plus the trace tables the sweeps read.
/// Safe to share across threads once constructed.
class FieldCtx {
 public:
  static constexpr int kMaxDegree = 15;

  explicit FieldCtx(int m);
  FieldCtx(int m, std::uint32_t poly);

  int m() const { return m_; }
  std::uint32_t poly() const { return poly_; }
  std::uint32_t size() const { return 1u << m_; }
  FieldElem generator() const { return generator_; }

  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  /// Tr(x) for Teichmuller x, tabulated from the 2-adic expansion tr + 2p.
  Z4 teich_trace(FieldElem x) const { return Z4(teich_trace_[x]); }
  /// tr(x) in GF(2).
  int bin_trace(FieldElem x) const { return teich_trace_[x] & 1; }
  /// Coordinates (tr(alpha^0 x), ..., tr(alpha^(m-1) x)) as a bitmask, so that
  /// tr(b x) = parity(b & dual_coords(x)) for every label b.
  std::uint32_t dual_coords(FieldElem x) const { return dual_[x]; }

 private:
  int m_;
  std::uint32_t poly_;
  FieldElem generator_ = 1;
  std::vector<FieldElem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> teich_trace_;
  std::vector<std::uint32_t> dual_;
};

/// Carry-free product reduced modulo the context polynomial (schoolbook).
FieldElem clmul_reduce(FieldElem a, FieldElem b, std::uint32_t poly, int m);

FieldElem field_mul(const FieldCtx& ctx, FieldElem a, FieldElem b);

/// Square root on the Teichmuller set, a^(2^(m-1)) by m-1 squarings.
FieldElem teich_sqrt(const FieldCtx& ctx, FieldElem a);

/// x (+) y = x + y + 2 sqrt(xy); XOR under the canonical labeling.
constexpr FieldElem oplus(FieldElem a, FieldElem b) { return a ^ b; }

/// (x1,y1)+(x2,y2) = (x1 (+) x2, sqrt(x1 x2) (+) y1 (+) y2).
GRElem gr_add(const FieldCtx& ctx, GRElem u, GRElem v);
/// (x1,y1)(x2,y2) = (x1 x2, x1 y2 (+) x2 y1).
GRElem gr_mul(const FieldCtx& ctx, GRElem u, GRElem v);
GRElem gr_neg(const FieldCtx& ctx, GRElem u);
/// u^(2) Frobenius: (x^2, y^2).
GRElem gr_frobenius(const FieldCtx& ctx, GRElem u);

/// Binary trace by summing the Frobenius orbit.
int tr_bin(const FieldCtx& ctx, FieldElem x);

/// p(x) in Tr(x) = tr(x) + 2p(x) for Teichmuller x; odd and even m.
int trace_two_adic_part(const FieldCtx& ctx, FieldElem x);

/// Tr(x + 2y) = Tr(x) + 2 tr(y), Tr(x) via the 2-adic expansion.
Z4 trace_z4(const FieldCtx& ctx, GRElem u);

/// Tr as the literal sum of the Frobenius orbit u, u^2, ..., u^(2^(m-1))
/// computed with gr_add. Independent of the 2-adic expansion.
Z4 trace_z4_direct(const FieldCtx& ctx, GRElem u);

/// Teichmuller roots of mu^3 (+) mu (+) 1 = 0, ascending.
std::vector<FieldElem> cubic_roots(const FieldCtx& ctx);

}  // namespace z4codes
