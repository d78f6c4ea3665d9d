#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "z4codes/codelab.hpp"
#include "z4codes/errors.hpp"
#include "z4codes/expsum.hpp"

using namespace z4codes;

namespace {

// Independent distribution: collect every codeword in a std::set.
std::map<std::uint64_t, std::uint64_t> brute_distribution(const FieldCtx& ctx, const Code& code) {
  std::set<std::vector<int>> seen;
  std::map<std::uint64_t, std::uint64_t> dist;
  for (FieldElem a = 0; a < ctx.size(); ++a)
    for (FieldElem b = 0; b < ctx.size(); ++b) {
      std::vector<int> word;
      std::uint64_t w = 0;
      for (FieldElem d : code.coords) {
        const int c = (ctx.teich_trace(ctx.mul(a, d)).value() + 2 * ctx.bin_trace(ctx.mul(b, d))) % 4;
        word.push_back(c);
        w += (c == 2) ? 2 : (c & 1);
      }
      if (seen.insert(word).second) ++dist[w];
    }
  return dist;
}

std::vector<DefiningSetSpec> all_specs() {
  std::vector<DefiningSetSpec> out;
  for (int t = 0; t < 4; ++t) {
    out.push_back(DefiningSetSpec::single(t));
    out.push_back(DefiningSetSpec::complement(t));
    for (int s = t + 1; s < 4; ++s) out.push_back(DefiningSetSpec::pair(t, s));
  }
  return out;
}

std::optional<Code> try_build(const FieldCtx& ctx, const DefiningSetSpec& spec) {
  try {
    return build_defining_set(ctx, spec);
  } catch (const EmptyDefiningSet&) {
    return std::nullopt;
  }
}

Codeword word(std::initializer_list<int> v) {
  Codeword c;
  for (int x : v) c.symbols.push_back(Z4(x));
  return c;
}

}  // namespace

TEST_SUITE("codelab") {
  TEST_CASE("defining set syntax") {
    CHECK(DefiningSetSpec::parse("single:2") == DefiningSetSpec::single(2));
    CHECK(DefiningSetSpec::parse("pair:3,1") == DefiningSetSpec::pair(1, 3));
    CHECK(DefiningSetSpec::parse("complement:0").to_string() == "complement:0");
    CHECK(DefiningSetSpec::pair(0, 2).same_parity());
    CHECK_FALSE(DefiningSetSpec::pair(0, 1).same_parity());
    for (const char* bad : {"single", "single:4", "pair:1,1", "pair:1", "triple:1", "single:x", "complement:-1"})
      CHECK_THROWS_AS(DefiningSetSpec::parse(bad), std::invalid_argument);
  }

  TEST_CASE("build_defining_set") {
    const FieldCtx c3(3);
    const Code d0 = build_defining_set(c3, DefiningSetSpec::single(0));
    CHECK(d0.coords == std::vector<FieldElem>{0});
    const Code d02 = build_defining_set(c3, DefiningSetSpec::pair(0, 2));
    CHECK(d02.coords == std::vector<FieldElem>{0, 0b010, 0b100, 0b110});
    CHECK(build_defining_set(FieldCtx(5), DefiningSetSpec::complement(0)).n() == 26);
    CHECK_THROWS_AS(build_defining_set(FieldCtx(1), DefiningSetSpec::single(2)), EmptyDefiningSet);
    for (int m = 3; m <= 9; m += 2) {
      const FieldCtx ctx(m);
      for (const auto& spec : all_specs()) {
        const Code code = build_defining_set(ctx, spec);
        REQUIRE(std::is_sorted(code.coords.begin(), code.coords.end()));
        for (FieldElem d : code.coords) REQUIRE(spec.selects(ctx.teich_trace(d)));
      }
    }
  }

  TEST_CASE("codewords at m = 3") {
    const FieldCtx c3(3);
    const Code d02 = build_defining_set(c3, DefiningSetSpec::pair(0, 2));
    CHECK(codeword(c3, d02, {0, 0}) == word({0, 0, 0, 0}));
    CHECK(codeword(c3, d02, {1, 0}) == word({0, 2, 2, 2}));
    CHECK(codeword(c3, d02, {0, 1}) == word({0, 0, 0, 0}));
  }

  TEST_CASE("lee_weight") {
    CHECK(lee_weight(word({0, 0, 0, 0})) == 0);
    CHECK(lee_weight(word({1, 3})) == 2);
    CHECK(lee_weight(word({0, 2, 2, 2})) == 6);
    CHECK(lee_weight(word({})) == 0);
  }

  TEST_CASE("weight_distribution at m = 3 for the pair family") {
    const FieldCtx c3(3);
    const Code code = build_defining_set(c3, DefiningSetSpec::pair(0, 2));
    WeightDistribution expected;
    expected.add(0, 1);
    expected.add(2, 15);
    expected.add(4, 15);
    expected.add(6, 1);
    CHECK(weight_distribution(c3, code, Dedup::cosets) == expected);
    CHECK(weight_distribution(c3, code, Dedup::hash) == expected);
    CHECK(weight_distribution(c3, code, Dedup::none).total_codewords == 64);
    CHECK(min_lee_distance(expected) == 2);
  }

  TEST_CASE("codeword counts") {
    const FieldCtx c5(5);
    CHECK(weight_distribution(c5, build_defining_set(c5, DefiningSetSpec::single(2)), Dedup::cosets).total_codewords ==
          512);
    for (int m = 1; m <= 8; ++m) {
      const FieldCtx ctx(m);
      CHECK(weight_distribution(ctx, build_defining_set(ctx, DefiningSetSpec::complement(0)), Dedup::none)
                .total_codewords == (1u << (2 * m)));
    }
  }

  TEST_CASE("three deduplication paths agree with a set of codewords") {
    for (int m : {2, 3, 4, 5, 6}) {
      const FieldCtx ctx(m);
      for (const auto& spec : all_specs()) {
        const auto built = try_build(ctx, spec);
        if (!built) continue;
        const Code& code = *built;
        const auto brute = brute_distribution(ctx, code);
        const auto cosets = weight_distribution(ctx, code, Dedup::cosets);
        const auto hashed = weight_distribution(ctx, code, Dedup::hash);
        CAPTURE(m);
        CAPTURE(spec.to_string());
        REQUIRE(cosets.entries == brute);
        REQUIRE(hashed == cosets);
      }
    }
  }

  TEST_CASE("weight_distribution does not depend on the worker count") {
    const FieldCtx ctx(7);
    for (const auto& spec : {DefiningSetSpec::single(1), DefiningSetSpec::pair(0, 2), DefiningSetSpec::complement(3)}) {
      const Code code = build_defining_set(ctx, spec);
      const auto one = weight_distribution(ctx, code, Dedup::cosets, 1);
      CHECK(weight_distribution(ctx, code, Dedup::cosets, 3) == one);
      CHECK(weight_distribution(ctx, code, Dedup::cosets, 8) == one);
    }
  }

  TEST_CASE("hash deduplication refuses large sweeps") {
    const FieldCtx ctx(13);
    const Code code = build_defining_set(ctx, DefiningSetSpec::pair(0, 2));
    CHECK_THROWS_AS(weight_distribution(ctx, code, Dedup::hash), std::length_error);
  }

  TEST_CASE("min_lee_distance") {
    WeightDistribution only_zero;
    only_zero.add(0, 1);
    CHECK_THROWS_AS(min_lee_distance(only_zero), ZeroCode);
    const FieldCtx c5(5);
    CHECK(min_lee_distance(weight_distribution(c5, build_defining_set(c5, DefiningSetSpec::single(1)), Dedup::cosets)) ==
          2);
    const FieldCtx c7(7);
    CHECK(min_lee_distance(
              weight_distribution(c7, build_defining_set(c7, DefiningSetSpec::complement(2)), Dedup::cosets)) == 64);
  }

  TEST_CASE("standard_form type and shape") {
    const FieldCtx c3(3);
    const TypeResult zero = standard_form(c3, build_defining_set(c3, DefiningSetSpec::single(0)));
    CHECK(zero.k1 == 0);
    CHECK(zero.k2 == 0);
    const TypeResult pair = standard_form(c3, build_defining_set(c3, DefiningSetSpec::pair(0, 2)));
    CHECK(pair.k1 == 2);
    CHECK(pair.k2 == 1);
    CHECK(has_standard_shape(pair));
    const FieldCtx c5(5);
    const TypeResult s2 = standard_form(c5, build_defining_set(c5, DefiningSetSpec::single(2)));
    CHECK(s2.k1 == 4);
    CHECK(s2.k2 == 1);

    for (int m : {2, 3, 4, 5, 6, 7}) {
      const FieldCtx ctx(m);
      for (const auto& spec : all_specs()) {
        const auto built = try_build(ctx, spec);
        if (!built) continue;
        const Code& code = *built;
        const TypeResult t = standard_form(ctx, code);
        const auto dist = weight_distribution(ctx, code, Dedup::cosets);
        CAPTURE(m);
        CAPTURE(spec.to_string());
        REQUIRE(has_standard_shape(t));
        REQUIRE((std::uint64_t{1} << (2 * t.k1 + t.k2)) == dist.total_codewords);
        std::vector<std::size_t> sorted = t.column_order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j < sorted.size(); ++j) REQUIRE(sorted[j] == j);
      }
    }
  }

  TEST_CASE("has_standard_shape rejects malformed matrices") {
    TypeResult r;
    r.k1 = 1;
    r.k2 = 1;
    r.matrix = {{1, 0, 3}, {0, 2, 2}};
    CHECK(has_standard_shape(r));
    r.matrix = {{1, 2, 3}, {0, 2, 2}};  // A1 entry must be 0 or 1
    CHECK_FALSE(has_standard_shape(r));
    r.matrix = {{1, 0, 3}, {0, 2, 1}};  // odd entry in a 2-row
    CHECK_FALSE(has_standard_shape(r));
  }

  TEST_CASE("N0-N2 identities") {
    for (int m : {3, 5, 7}) {
      const FieldCtx ctx(m);
      const int half = (m - 3) / 2;
      const std::int64_t tau = (m == 3 || m == 5) ? -1 : 1;
      const NIdentityCheck zero = count_n_identity(ctx, DefiningSetSpec::single(0), {0, 0});
      CHECK(zero.n0 - zero.n2 == (std::int64_t{1} << (m - 2)) + (std::int64_t{1} << half) * tau);
      std::mt19937_64 rng(m);
      std::uniform_int_distribution<FieldElem> pick(0, ctx.size() - 1);
      for (const auto& spec : {DefiningSetSpec::single(0), DefiningSetSpec::pair(0, 2), DefiningSetSpec::complement(0)})
        for (int k = 0; k < 200; ++k) {
          const NIdentityCheck c = count_n_identity(ctx, spec, {pick(rng), pick(rng)});
          REQUIRE(c.scaled_count == c.sum_side);
        }
    }
    const NIdentityCheck pair = count_n_identity(FieldCtx(3), DefiningSetSpec::pair(0, 2), {0, 1});
    CHECK(pair.n0 - pair.n2 == 4);
    CHECK(pair.sum_side == GaussInt{16});
    CHECK_THROWS_AS(count_n_identity(FieldCtx(3), DefiningSetSpec::single(1), {0, 0}), OutOfTheoremScope);
  }

  TEST_CASE("codeword periodicity") {
    const FieldCtx ctx(5);
    const Code s0 = build_defining_set(ctx, DefiningSetSpec::single(0));
    const Code p02 = build_defining_set(ctx, DefiningSetSpec::pair(0, 2));
    for (FieldElem a = 0; a < ctx.size(); ++a)
      for (FieldElem b = 0; b < ctx.size(); ++b) {
        const GRElem u{a, b};
        REQUIRE(codeword(ctx, s0, u) == codeword(ctx, s0, gr_add(ctx, u, {1, 0})));
        REQUIRE(codeword(ctx, p02, u) == codeword(ctx, p02, gr_add(ctx, u, {0, 1})));
      }
    for (int t = 0; t < 4; ++t) {
      const Code c = build_defining_set(ctx, DefiningSetSpec::complement(t));
      CHECK(weight_distribution(ctx, c, Dedup::hash).total_codewords == 1024);
    }
  }
}
