#include "z4codes/galois.hpp"

#include <bit>
#include <charconv>
#include <regex>
#include <string>

#include "z4codes/errors.hpp"

namespace z4codes {

namespace {

using Poly2 = std::uint64_t;  // GF(2)[X], bit i = coefficient of X^i

int degree(Poly2 p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

Poly2 poly_mod(Poly2 a, Poly2 f) {
  const int df = degree(f);
  for (int d = degree(a); d >= df; d = degree(a)) a ^= f << (d - df);
  return a;
}

Poly2 poly_mulmod(Poly2 a, Poly2 b, Poly2 f) {
  Poly2 r = 0;
  a = poly_mod(a, f);
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a = poly_mod(a << 1, f);
  }
  return r;
}

Poly2 poly_gcd(Poly2 a, Poly2 b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void check_degree(int m) {
  if (m < 1 || m > FieldCtx::kMaxDegree)
    throw std::invalid_argument("extension degree m=" + std::to_string(m) + " outside [1, " +
                                std::to_string(FieldCtx::kMaxDegree) + "]");
}

}  // namespace

std::uint32_t default_poly(int m) {
  check_degree(m);
  switch (m) {
    case 1: return 0x3;        // X + 1
    case 2: return 0x7;        // X^2 + X + 1
    case 3: return 0xB;        // X^3 + X + 1
    case 4: return 0x13;       // X^4 + X + 1
    case 5: return 0x25;       // X^5 + X^2 + 1
    case 6: return 0x43;       // X^6 + X + 1
    case 7: return 0x83;       // X^7 + X + 1
    case 8: return 0x11D;      // X^8 + X^4 + X^3 + X^2 + 1
    case 9: return 0x211;      // X^9 + X^4 + 1
    case 10: return 0x409;     // X^10 + X^3 + 1
    case 11: return 0x805;     // X^11 + X^2 + 1
    case 12: return 0x1053;    // X^12 + X^6 + X^4 + X + 1
    case 13: return 0x201B;    // X^13 + X^4 + X^3 + X + 1
    case 14: return 0x4443;    // X^14 + X^10 + X^6 + X + 1
    default: return 0x8003;    // X^15 + X + 1
  }
}

bool is_irreducible(std::uint32_t poly, int m) {
  if (m < 1 || degree(poly) != m) return false;
  const Poly2 f = poly;
  // X^(2^k) mod f
  auto frob_x = [&](int k) {
    Poly2 x = poly_mod(0x2, f);
    for (int i = 0; i < k; ++i) x = poly_mulmod(x, x, f);
    return x;
  };
  if (frob_x(m) != poly_mod(0x2, f)) return false;
  for (auto q : prime_factors(static_cast<std::uint64_t>(m))) {
    const Poly2 h = frob_x(m / static_cast<int>(q)) ^ poly_mod(0x2, f);
    if (degree(poly_gcd(f, h)) != 0) return false;
  }
  return true;
}

std::map<int, std::uint32_t> parse_poly_config(std::istream& in) {
  static const std::regex line_re(R"(^\s*m\s*=\s*(\d+)\s+poly\s*=\s*0[xX]([0-9a-fA-F]+)\s*$)");
  std::map<int, std::uint32_t> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::smatch match;
    if (!std::regex_match(line, match, line_re))
      throw InvalidPolynomial("poly config line " + std::to_string(lineno) + ": malformed: " + line);
    const int m = std::stoi(match[1].str());
    const unsigned long long poly = std::stoull(match[2].str(), nullptr, 16);
    if (m < 1 || m > FieldCtx::kMaxDegree || poly > 0xFFFFFFFFull ||
        !is_irreducible(static_cast<std::uint32_t>(poly), m))
      throw InvalidPolynomial("poly config line " + std::to_string(lineno) +
                              ": not an irreducible polynomial of degree " + match[1].str());
    out[m] = static_cast<std::uint32_t>(poly);
  }
  return out;
}

std::uint32_t resolve_poly(int m, const std::map<int, std::uint32_t>& overrides) {
  if (auto it = overrides.find(m); it != overrides.end()) return it->second;
  return default_poly(m);
}

FieldElem clmul_reduce(FieldElem a, FieldElem b, std::uint32_t poly, int m) {
  std::uint64_t r = 0;
  for (int i = 0; i < m; ++i)
    if (b >> i & 1) r ^= static_cast<std::uint64_t>(a) << i;
  for (int d = 2 * m - 2; d >= m; --d)
    if (r >> d & 1) r ^= static_cast<std::uint64_t>(poly) << (d - m);
  return static_cast<FieldElem>(r);
}

FieldCtx::FieldCtx(int m) : FieldCtx(m, default_poly(m)) {}

FieldCtx::FieldCtx(int m, std::uint32_t poly) : m_(m), poly_(poly) {
  check_degree(m);
  if (!is_irreducible(poly, m))
    throw InvalidPolynomial("polynomial 0x" + [&] {
      char buf[16];
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, poly, 16);
      return std::string(buf, p);
    }() + " is not irreducible of degree " + std::to_string(m));

  const std::uint32_t q = size();
  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](FieldElem a, std::uint64_t e) {
    FieldElem r = 1;
    while (e) {
      if (e & 1) r = clmul_reduce(r, a, poly_, m_);
      a = clmul_reduce(a, a, poly_, m_);
      e >>= 1;
    }
    return r;
  };
  if (q > 2) {
    for (FieldElem g = 2; g < q; ++g) {
      bool ok = true;
      for (auto f : factors)
        if (slow_pow(g, order / f) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        generator_ = g;
        break;
      }
    }
  }

  exp_.assign(2 * order + 1, 0);
  log_.assign(q, 0);
  FieldElem cur = 1;
  for (std::uint64_t k = 0; k < order; ++k) {
    exp_[k] = cur;
    log_[cur] = static_cast<std::uint32_t>(k);
    cur = clmul_reduce(cur, generator_, poly_, m_);
  }
  for (std::uint64_t k = order; k < exp_.size(); ++k) exp_[k] = exp_[k - order];

  // tr is GF(2)-linear: tr(x) = parity(x & mask), mask bit i = tr(alpha^i).
  std::uint32_t mask = 0;
  for (int i = 0; i < m_; ++i) mask |= static_cast<std::uint32_t>(tr_bin(*this, FieldElem{1} << i)) << i;

  dual_.assign(q, 0);
  for (int i = 0; i < m_; ++i) {
    const FieldElem basis = FieldElem{1} << i;
    std::uint32_t coords = 0;
    for (int k = 0; k < m_; ++k) {
      const FieldElem prod = mul(basis, FieldElem{1} << k);
      coords |= static_cast<std::uint32_t>(std::popcount(prod & mask) & 1) << k;
    }
    dual_[basis] = coords;
  }
  for (FieldElem x = 1; x < q; ++x)
    if (std::popcount(x) > 1) dual_[x] = dual_[x & (x - 1)] ^ dual_[x & (~x + 1)];

  teich_trace_.assign(q, 0);
  for (FieldElem x = 0; x < q; ++x) {
    const int t = std::popcount(x & mask) & 1;
    teich_trace_[x] = static_cast<std::uint8_t>(t + 2 * trace_two_adic_part(*this, x));
  }
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t order = size() - 1;
  return exp_[(order - log_[a]) % order];
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size() - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

FieldElem field_mul(const FieldCtx& ctx, FieldElem a, FieldElem b) { return ctx.mul(a, b); }

FieldElem teich_sqrt(const FieldCtx& ctx, FieldElem a) {
  for (int i = 1; i < ctx.m(); ++i) a = ctx.mul(a, a);
  return a;
}

GRElem gr_add(const FieldCtx& ctx, GRElem u, GRElem v) {
  return {oplus(u.x, v.x), oplus(oplus(teich_sqrt(ctx, ctx.mul(u.x, v.x)), u.y), v.y)};
}

GRElem gr_mul(const FieldCtx& ctx, GRElem u, GRElem v) {
  return {ctx.mul(u.x, v.x), oplus(ctx.mul(u.x, v.y), ctx.mul(v.x, u.y))};
}

GRElem gr_neg(const FieldCtx& ctx, GRElem u) {
  // -(x + 2y) = 3(x + 2y); 3 = (1,1).
  return gr_mul(ctx, {1, 1}, u);
}

GRElem gr_frobenius(const FieldCtx& ctx, GRElem u) { return {ctx.mul(u.x, u.x), ctx.mul(u.y, u.y)}; }

int tr_bin(const FieldCtx& ctx, FieldElem x) {
  FieldElem acc = 0;
  for (int j = 0; j < ctx.m(); ++j) {
    acc ^= x;
    x = ctx.mul(x, x);
  }
  if (acc > 1) throw InternalError("tr_bin: trace left the prime field");
  return static_cast<int>(acc);
}

int trace_two_adic_part(const FieldCtx& ctx, FieldElem x) {
  const int m = ctx.m();
  const int terms = (m % 2 == 1) ? (m - 1) / 2 : m / 2 - 1;
  int p = 0;
  FieldElem frob = x;  // x^(2^j)
  for (int j = 1; j <= terms; ++j) {
    frob = ctx.mul(frob, frob);
    p ^= tr_bin(ctx, ctx.mul(frob, x));
  }
  if (m % 2 == 0) {
    for (int j = terms + 1; j <= m / 2; ++j) frob = ctx.mul(frob, frob);
    // z = x^(2^(m/2)+1) lies in GF(2^(m/2)); take the subfield trace.
    FieldElem z = ctx.mul(frob, x);
    FieldElem acc = 0;
    for (int j = 0; j < m / 2; ++j) {
      acc ^= z;
      z = ctx.mul(z, z);
    }
    if (acc > 1) throw InternalError("subfield trace left the prime field");
    p ^= static_cast<int>(acc);
  }
  return p;
}

Z4 trace_z4(const FieldCtx& ctx, GRElem u) {
  return ctx.teich_trace(u.x) + Z4(2 * ctx.bin_trace(u.y));
}

Z4 trace_z4_direct(const FieldCtx& ctx, GRElem u) {
  GRElem acc{};
  for (int j = 0; j < ctx.m(); ++j) {
    acc = gr_add(ctx, acc, u);
    u = gr_frobenius(ctx, u);
  }
  if (acc.x > 1 || acc.y > 1) throw InternalError("trace_z4_direct: orbit sum is not in Z4");
  return Z4(static_cast<int>(acc.x + 2 * acc.y));
}

std::vector<FieldElem> cubic_roots(const FieldCtx& ctx) {
  std::vector<FieldElem> roots;
  for (FieldElem mu = 0; mu < ctx.size(); ++mu)
    if ((ctx.mul(ctx.mul(mu, mu), mu) ^ mu ^ 1) == 0) roots.push_back(mu);
  return roots;
}

}  // namespace z4codes
