#include "z4codes/codelab.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

#include "z4codes/errors.hpp"
#include "z4codes/expsum.hpp"
#include "z4codes/parallel.hpp"

namespace z4codes {

namespace {

int checked_t(int t) {
  if (t < 0 || t > 3) throw std::invalid_argument("trace class must be in 0..3, got " + std::to_string(t));
  return t;
}

int parse_t(std::string_view s) {
  int v = -1;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw std::invalid_argument("bad trace class '" + std::string(s) + "'");
  return checked_t(v);
}

}  // namespace

DefiningSetSpec DefiningSetSpec::single(int t) { return {Kind::single, Z4(checked_t(t)), Z4(checked_t(t))}; }

DefiningSetSpec DefiningSetSpec::pair(int t1, int t2) {
  checked_t(t1);
  checked_t(t2);
  if (t1 == t2) throw std::invalid_argument("pair defining set needs two distinct trace classes");
  if (t1 > t2) std::swap(t1, t2);
  return {Kind::pair, Z4(t1), Z4(t2)};
}

DefiningSetSpec DefiningSetSpec::complement(int t) { return {Kind::complement, Z4(checked_t(t)), Z4(checked_t(t))}; }

DefiningSetSpec DefiningSetSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("defining set must look like single:t, pair:t1,t2 or complement:t");
  const auto kind = text.substr(0, colon);
  const auto args = text.substr(colon + 1);
  if (kind == "single") return single(parse_t(args));
  if (kind == "complement") return complement(parse_t(args));
  if (kind == "pair") {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("pair needs two trace classes: pair:t1,t2");
    return pair(parse_t(args.substr(0, comma)), parse_t(args.substr(comma + 1)));
  }
  throw std::invalid_argument("unknown defining set kind '" + std::string(kind) + "'");
}

bool DefiningSetSpec::selects(Z4 trace) const {
  switch (kind_) {
    case Kind::single: return trace == t1_;
    case Kind::pair: return trace == t1_ || trace == t2_;
    default: return !(trace == t1_);
  }
}

std::string DefiningSetSpec::to_string() const {
  switch (kind_) {
    case Kind::single: return "single:" + std::to_string(t1_.value());
    case Kind::pair: return "pair:" + std::to_string(t1_.value()) + "," + std::to_string(t2_.value());
    default: return "complement:" + std::to_string(t1_.value());
  }
}

void WeightDistribution::add(std::uint64_t weight, std::uint64_t frequency) {
  if (frequency == 0) return;
  entries[weight] += frequency;
  total_codewords += frequency;
}

Code build_defining_set(const FieldCtx& ctx, const DefiningSetSpec& spec) {
  Code code{spec, {}};
  for (FieldElem x = 0; x < ctx.size(); ++x)
    if (spec.selects(ctx.teich_trace(x))) code.coords.push_back(x);
  if (code.coords.empty())
    throw EmptyDefiningSet("defining set " + spec.to_string() + " is empty for m=" + std::to_string(ctx.m()));
  return code;
}

Codeword codeword(const FieldCtx& ctx, const Code& code, GRElem u) {
  Codeword cw;
  cw.symbols.reserve(code.n());
  for (FieldElem d : code.coords) cw.symbols.push_back(trace_z4(ctx, gr_mul(ctx, u, {d, 0})));
  return cw;
}

std::uint64_t lee_weight(const Codeword& cw) {
  static constexpr std::uint64_t kLee[4] = {0, 1, 2, 1};
  std::uint64_t w = 0;
  GaussInt phase_sum;
  for (Z4 c : cw.symbols) {
    w += kLee[c.value()];
    phase_sum += GaussInt::i_pow(c.value());
  }
  if (static_cast<std::int64_t>(cw.symbols.size()) - phase_sum.re != static_cast<std::int64_t>(w))
    throw InternalError("Lee weight disagrees with n - Re(sum i^c)");
  return w;
}

namespace {

using Plane = std::vector<std::uint64_t>;

// Symbol j of c(a + 2b) is Tr(a d_j) + 2 tr(b d_j). Bit j of `low` is the
// low bit, bit j of `high` the high bit. tr(b d_j) is linear in the bits of
// b, so moving b along a Gray code flips `high` by one basis plane per step.
class PlaneSweep {
 public:
  PlaneSweep(const FieldCtx& ctx, const Code& code) : ctx_(ctx), code_(code), words_((code.n() + 63) / 64) {
    basis_.assign(ctx.m(), Plane(words_, 0));
    for (std::size_t j = 0; j < code.n(); ++j) {
      const std::uint32_t coords = ctx.dual_coords(code.coords[j]);
      for (int i = 0; i < ctx.m(); ++i)
        if (coords >> i & 1) basis_[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }

  std::size_t words() const { return words_; }

  // Calls fn(b, low, high) for every b, with the planes of c(a + 2b).
  template <class Fn>
  void for_each_b(FieldElem a, Plane& low, Plane& high, Fn fn) const {
    std::fill(low.begin(), low.end(), 0);
    std::fill(high.begin(), high.end(), 0);
    for (std::size_t j = 0; j < code_.n(); ++j) {
      const int t = ctx_.teich_trace(ctx_.mul(a, code_.coords[j])).value();
      const std::uint64_t bit = std::uint64_t{1} << (j % 64);
      if (t & 1) low[j / 64] |= bit;
      if (t & 2) high[j / 64] |= bit;
    }
    FieldElem b = 0;
    fn(b, low, high);
    for (std::uint32_t k = 1; k < ctx_.size(); ++k) {
      const int i = std::countr_zero(k);
      b ^= FieldElem{1} << i;
      const Plane& flip = basis_[i];
      for (std::size_t w = 0; w < words_; ++w) high[w] ^= flip[w];
      fn(b, low, high);
    }
  }

  static std::uint64_t weight(const Plane& low, const Plane& high) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < low.size(); ++i)
      w += static_cast<std::uint64_t>(std::popcount(low[i])) + 2u * std::popcount(high[i] & ~low[i]);
    return w;
  }

 private:
  const FieldCtx& ctx_;
  const Code& code_;
  std::size_t words_;
  std::vector<Plane> basis_;
};

struct PlaneHash {
  std::size_t operator()(const Plane& p) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (auto w : p) {
      h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

constexpr std::uint64_t kHashDedupBudgetBytes = std::uint64_t{1} << 30;

}  // namespace

WeightDistribution weight_distribution(const FieldCtx& ctx, const Code& code, Dedup dedup, unsigned workers) {
  const PlaneSweep sweep(ctx, code);
  WeightDistribution out;

  if (dedup == Dedup::hash) {
    const std::uint64_t bytes = (std::uint64_t{1} << (2 * ctx.m())) * sweep.words() * 16;
    if (bytes > kHashDedupBudgetBytes)
      throw std::length_error("hash deduplication would need " + std::to_string(bytes >> 20) + " MiB; use cosets");
    std::unordered_set<Plane, PlaneHash> seen;
    Plane low(sweep.words()), high(sweep.words()), joined(2 * sweep.words());
    for (FieldElem a = 0; a < ctx.size(); ++a) {
      sweep.for_each_b(a, low, high, [&](FieldElem, const Plane& lo, const Plane& hi) {
        std::copy(lo.begin(), lo.end(), joined.begin());
        std::copy(hi.begin(), hi.end(), joined.begin() + static_cast<std::ptrdiff_t>(lo.size()));
        if (seen.insert(joined).second) out.add(PlaneSweep::weight(lo, hi));
      });
    }
    return out;
  }

  struct Tally {
    std::vector<std::uint64_t> counts;
    Plane low, high;
  };
  const std::size_t max_weight = 2 * code.n();
  auto tallies = parallel_sweep<Tally>(
      ctx.size(), workers,
      [&] { return Tally{std::vector<std::uint64_t>(max_weight + 1, 0), Plane(sweep.words()), Plane(sweep.words())}; },
      [&](Tally& t, std::uint64_t a) {
        sweep.for_each_b(static_cast<FieldElem>(a), t.low, t.high,
                         [&](FieldElem, const Plane& lo, const Plane& hi) { ++t.counts[PlaneSweep::weight(lo, hi)]; });
      });
  std::vector<std::uint64_t> counts(max_weight + 1, 0);
  for (const auto& t : tallies)
    for (std::size_t w = 0; w <= max_weight; ++w) counts[w] += t.counts[w];

  std::uint64_t divisor = 1;
  if (dedup == Dedup::cosets) {
    // Weight 0 means the zero word, so counts[0] is the kernel size.
    divisor = counts[0];
    if (divisor == 0) throw InternalError("zero codeword missing from the sweep");
  }
  for (std::size_t w = 0; w <= max_weight; ++w) {
    if (counts[w] % divisor != 0)
      throw InternalError("weight " + std::to_string(w) + " frequency not divisible by kernel size");
    out.add(w, counts[w] / divisor);
  }
  return out;
}

std::uint64_t min_lee_distance(const WeightDistribution& dist) {
  for (const auto& [w, f] : dist.entries)
    if (w > 0 && f > 0) return w;
  throw ZeroCode("code has no nonzero codeword");
}

TypeResult standard_form(const FieldCtx& ctx, const Code& code) {
  const std::size_t n = code.n();
  std::vector<std::vector<std::uint8_t>> rows;
  for (int i = 0; i < ctx.m(); ++i) {
    for (FieldElem two : {0u, 1u}) {
      const GRElem u = two ? GRElem{0, FieldElem{1} << i} : GRElem{FieldElem{1} << i, 0};
      const Codeword cw = codeword(ctx, code, u);
      std::vector<std::uint8_t> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<std::uint8_t>(cw.symbols[j].value());
      rows.push_back(std::move(row));
    }
  }

  TypeResult r;
  r.column_order.resize(n);
  for (std::size_t j = 0; j < n; ++j) r.column_order[j] = j;

  auto swap_columns = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : rows) std::swap(row[a], row[b]);
    std::swap(r.column_order[a], r.column_order[b]);
  };
  // row_t -= f * row_p (mod 4)
  auto axpy = [&](std::size_t t, std::size_t p, int f) {
    for (std::size_t j = 0; j < n; ++j) rows[t][j] = static_cast<std::uint8_t>((rows[t][j] + 4 * 4 - f * rows[p][j]) & 3);
  };
  auto find_pivot = [&](std::size_t from, auto pred) -> std::pair<std::size_t, std::size_t> {
    for (std::size_t j = from; j < n; ++j)
      for (std::size_t i = from; i < rows.size(); ++i)
        if (pred(rows[i][j])) return {i, j};
    return {rows.size(), n};
  };

  std::size_t p = 0;
  // Unit pivots first.
  for (;;) {
    auto [i, j] = find_pivot(p, [](std::uint8_t v) { return (v & 1) != 0; });
    if (i == rows.size()) break;
    std::swap(rows[p], rows[i]);
    swap_columns(p, j);
    if (rows[p][p] == 3)
      for (auto& v : rows[p]) v = static_cast<std::uint8_t>((3 * v) & 3);
    for (std::size_t t = 0; t < rows.size(); ++t)
      if (t != p && rows[t][p] != 0) axpy(t, p, rows[t][p]);
    ++p;
  }
  r.k1 = static_cast<int>(p);
  // Remaining rows are even from column p on; pivot on 2s.
  for (;;) {
    auto [i, j] = find_pivot(p, [](std::uint8_t v) { return v == 2; });
    if (i == rows.size()) break;
    std::swap(rows[p], rows[i]);
    swap_columns(p, j);
    for (std::size_t t = 0; t < rows.size(); ++t)
      if (t != p && rows[t][p] >= 2) axpy(t, p, 1);
    ++p;
  }
  r.k2 = static_cast<int>(p) - r.k1;
  for (std::size_t t = p; t < rows.size(); ++t)
    if (std::any_of(rows[t].begin(), rows[t].end(), [](std::uint8_t v) { return v != 0; }))
      throw InternalError("row reduction left a nonzero row below the pivots");
  rows.resize(p);
  r.matrix = std::move(rows);
  return r;
}

bool has_standard_shape(const TypeResult& r) {
  const std::size_t k1 = static_cast<std::size_t>(r.k1), k2 = static_cast<std::size_t>(r.k2);
  if (r.matrix.size() != k1 + k2) return false;
  for (std::size_t i = 0; i < r.matrix.size(); ++i) {
    const auto& row = r.matrix[i];
    if (row.size() < k1 + k2) return false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const int v = row[j];
      if (v > 3) return false;
      if (i < k1) {
        if (j < k1 && v != (i == j ? 1 : 0)) return false;
        if (j >= k1 && j < k1 + k2 && v > 1) return false;
      } else {
        if (j < k1 && v != 0) return false;
        if (j >= k1 && j < k1 + k2 && v != (i == j ? 2 : 0)) return false;
        if (v % 2 != 0) return false;
      }
    }
  }
  return true;
}

NIdentityCheck count_n_identity(const FieldCtx& ctx, const DefiningSetSpec& spec, GRElem u) {
  NIdentityCheck out;
  const Code code = build_defining_set(ctx, spec);
  for (Z4 c : codeword(ctx, code, u).symbols) {
    if (c.value() == 0) ++out.n0;
    if (c.value() == 2) ++out.n2;
  }
  GaussInt s[4];
  for (int c = 0; c < 4; ++c) s[c] = s_plus(ctx, gr_add(ctx, u, from_z4(Z4(c))));

  if (spec == DefiningSetSpec::single(0)) {
    out.scale = 8;
    out.sum_side = s[0] + s[1] + s[2] + s[3];
  } else if (spec == DefiningSetSpec::pair(0, 2)) {
    out.scale = 4;
    out.sum_side = s[0] + s[2];
  } else if (spec == DefiningSetSpec::complement(0)) {
    out.scale = 8;
    out.sum_side = GaussInt{3} * s[0] - s[1] - s[2] - s[3];
  } else {
    throw OutOfTheoremScope("no N0-N2 identity for " + spec.to_string());
  }
  out.scaled_count = GaussInt{out.scale * (out.n0 - out.n2)};
  if (!(out.scaled_count == out.sum_side))
    throw IdentityViolation("N0-N2 identity fails for " + spec.to_string() + " at u=(" + std::to_string(u.x) + "," +
                            std::to_string(u.y) + ")");
  return out;
}

}  // namespace z4codes
