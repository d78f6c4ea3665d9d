#include "z4codes/expsum.hpp"

#include <array>

#include "z4codes/errors.hpp"
#include "z4codes/parallel.hpp"

namespace z4codes {

GaussInt chi(const FieldCtx& ctx, FieldElem a, FieldElem b) {
  std::array<std::int64_t, 4> counts{};
  const GRElem u{a, b};
  for (FieldElem x = 0; x < ctx.size(); ++x) ++counts[trace_z4(ctx, gr_mul(ctx, u, {x, 0})).value()];
  return {counts[0] - counts[2], counts[1] - counts[3]};
}

std::vector<GaussInt> chi_row(const FieldCtx& ctx, FieldElem a) {
  const std::uint32_t q = ctx.size();
  std::vector<std::int64_t> re(q, 0), im(q, 0);
  for (FieldElem x = 0; x < q; ++x) {
    const std::uint32_t y = ctx.dual_coords(x);
    switch (ctx.teich_trace(ctx.mul(a, x)).value()) {
      case 0: re[y] += 1; break;
      case 1: im[y] += 1; break;
      case 2: re[y] -= 1; break;
      default: im[y] -= 1; break;
    }
  }
  for (std::uint32_t len = 1; len < q; len <<= 1) {
    for (std::uint32_t base = 0; base < q; base += len << 1) {
      for (std::uint32_t j = base; j < base + len; ++j) {
        const std::int64_t r0 = re[j], r1 = re[j + len];
        const std::int64_t i0 = im[j], i1 = im[j + len];
        re[j] = r0 + r1;
        re[j + len] = r0 - r1;
        im[j] = i0 + i1;
        im[j + len] = i0 - i1;
      }
    }
  }
  std::vector<GaussInt> row(q);
  for (std::uint32_t b = 0; b < q; ++b) row[b] = {re[b], im[b]};
  return row;
}

GaussInt s_from_chi(const GaussInt& chi_value, SumSign sign) {
  if (sign == SumSign::plus) return {2 * chi_value.re, 0};
  return {0, 2 * chi_value.im};
}

GaussInt s_plus(const FieldCtx& ctx, GRElem u) {
  // sum i^Tr(ux) + sum i^(3 Tr(ux)), evaluated term by term.
  GaussInt acc;
  for (FieldElem x = 0; x < ctx.size(); ++x) {
    const int t = trace_z4(ctx, gr_mul(ctx, u, {x, 0})).value();
    acc += GaussInt::i_pow(t) + GaussInt::i_pow(3 * t);
  }
  if (acc.im != 0) throw InternalError("S+ has a nonzero imaginary part");
  return acc;
}

GaussInt s_minus(const FieldCtx& ctx, GRElem u) {
  GaussInt acc;
  for (FieldElem x = 0; x < ctx.size(); ++x) {
    const int t = trace_z4(ctx, gr_mul(ctx, u, {x, 0})).value();
    acc += GaussInt::i_pow(t) - GaussInt::i_pow(3 * t);
  }
  if (acc.re != 0) throw InternalError("S- has a nonzero real part");
  return acc;
}

void ValueDistribution::add(const Key& key, std::uint64_t frequency) {
  if (key.size() != arity_) throw ShapeMismatch("value distribution: key arity mismatch");
  if (frequency == 0) return;
  entries_[key] += frequency;
  total_ += frequency;
}

void ValueDistribution::merge(const ValueDistribution& other) {
  for (const auto& [key, f] : other.entries_) add(key, f);
}

std::uint64_t ValueDistribution::frequency(const Key& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second;
}

namespace {

// chi rows for a and a (+) 1: every u + c with u = a + 2b has Teichmuller
// part a or a (+) 1.
struct RowPair {
  FieldElem a;
  std::vector<GaussInt> row_a;
  std::vector<GaussInt> row_a1;

  RowPair(const FieldCtx& ctx, FieldElem a_) : a(a_), row_a(chi_row(ctx, a_)), row_a1(chi_row(ctx, a_ ^ 1)) {}

  const GaussInt& at(GRElem v) const {
    if (v.x == a) return row_a[v.y];
    if (v.x == (a ^ 1)) return row_a1[v.y];
    throw InternalError("shifted argument left the row pair");
  }
};

template <class Fn>
void for_each_shifted(const FieldCtx& ctx, FieldElem a, std::span<const Z4> shifts, Fn fn) {
  const RowPair rows(ctx, a);
  std::vector<GRElem> shifted(shifts.size());
  for (FieldElem b = 0; b < ctx.size(); ++b) {
    const GRElem u{a, b};
    for (std::size_t j = 0; j < shifts.size(); ++j) shifted[j] = gr_add(ctx, u, from_z4(shifts[j]));
    fn(rows, shifted);
  }
}

}  // namespace

ValueDistribution sweep_s_distribution(const FieldCtx& ctx, SumSign which, unsigned workers) {
  auto states = parallel_sweep<ValueDistribution>(
      ctx.size(), workers, [] { return ValueDistribution(1); },
      [&](ValueDistribution& dist, std::uint64_t a) {
        for (const auto& c : chi_row(ctx, static_cast<FieldElem>(a))) dist.add(s_from_chi(c, which));
      });
  ValueDistribution out(1);
  for (const auto& s : states) out.merge(s);
  return out;
}

ValueDistribution chi_distribution(const FieldCtx& ctx, FieldElem a) {
  ValueDistribution out(1);
  for (const auto& c : chi_row(ctx, a)) out.add(c);
  return out;
}

GaussInt moment(const FieldCtx& ctx, const MomentSpec& spec, unsigned workers) {
  if (ctx.size() <= 2) return {};
  std::vector<Z4> shifts;
  for (const auto& f : spec) shifts.push_back(f.shift);
  auto states = parallel_sweep<WideGaussInt>(
      ctx.size() - 2, workers, [] { return WideGaussInt{}; },
      [&](WideGaussInt& acc, std::uint64_t index) {
        const auto a = static_cast<FieldElem>(index + 2);
        for_each_shifted(ctx, a, shifts, [&](const RowPair& rows, const std::vector<GRElem>& args) {
          WideGaussInt prod{1, 0};
          for (std::size_t j = 0; j < spec.size(); ++j) prod *= widen(s_from_chi(rows.at(args[j]), spec[j].sign));
          acc += prod;
        });
      });
  WideGaussInt total;
  for (const auto& s : states) total += s;
  return narrow(total);
}

ValueDistribution joint_distribution(const FieldCtx& ctx, std::span<const Z4> shifts, unsigned workers) {
  const std::size_t arity = shifts.size();
  if (ctx.size() <= 2) return ValueDistribution(arity);
  auto states = parallel_sweep<ValueDistribution>(
      ctx.size() - 2, workers, [&] { return ValueDistribution(arity); },
      [&](ValueDistribution& dist, std::uint64_t index) {
        const auto a = static_cast<FieldElem>(index + 2);
        ValueDistribution::Key key(arity);
        for_each_shifted(ctx, a, shifts, [&](const RowPair& rows, const std::vector<GRElem>& args) {
          for (std::size_t j = 0; j < arity; ++j) key[j] = s_from_chi(rows.at(args[j]), SumSign::plus);
          dist.add(key);
        });
      });
  ValueDistribution out(arity);
  for (const auto& s : states) out.merge(s);
  return out;
}

const std::vector<NamedMoment>& moment_identity_specs() {
  constexpr auto P = SumSign::plus;
  constexpr auto M = SumSign::minus;
  static const std::vector<NamedMoment> specs = {
      {0, {{Z4(0), P}}},
      {1, {{Z4(0), M}}},
      {2, {{Z4(0), P}, {Z4(2), P}}},
      {2, {{Z4(0), M}, {Z4(2), M}}},
      {3, {{Z4(0), P}, {Z4(1), P}}},
      {4, {{Z4(0), P}, {Z4(1), M}}},
      {4, {{Z4(1), P}, {Z4(0), M}}},
      {5, {{Z4(0), P}, {Z4(2), P}, {Z4(1), P}}},
      {6, {{Z4(0), P}, {Z4(2), P}, {Z4(1), M}}},
      {6, {{Z4(0), P}, {Z4(1), M}, {Z4(3), M}}},
      {7, {{Z4(0), P}, {Z4(2), P}, {Z4(1), P}, {Z4(3), P}}},
      {8, {{Z4(0), P}, {Z4(2), P}, {Z4(1), M}, {Z4(3), M}}},
  };
  return specs;
}

std::string describe(const MomentSpec& spec) {
  std::string out;
  for (const auto& f : spec) {
    out += f.sign == SumSign::plus ? "S+(u" : "S-(u";
    if (f.shift.value() != 0) out += "+" + std::to_string(f.shift.value());
    out += ")";
  }
  return out;
}

}  // namespace z4codes
