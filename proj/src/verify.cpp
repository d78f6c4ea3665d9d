#include "z4codes/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>

#include "z4codes/errors.hpp"
#include "z4codes/expsum.hpp"

namespace z4codes {

namespace {

constexpr std::array<std::pair<Subject, const char*>, 10> kSubjects = {{
    {Subject::lemma2, "lemma2"},
    {Subject::lemma4, "lemma4"},
    {Subject::lemma9, "lemma9"},
    {Subject::lemma10, "lemma10"},
    {Subject::moments, "moments"},
    {Subject::theorem1, "theorem1"},
    {Subject::theorem2, "theorem2"},
    {Subject::theorem3, "theorem3"},
    {Subject::identities, "identities"},
    {Subject::table2, "table2"},
}};

VerificationReport named(VerificationReport r, int m, std::string subject) {
  r.m = m;
  r.subject = std::move(subject);
  r.pass = r.diffs.empty();
  return r;
}

void add_diff(VerificationReport& r, std::string key, std::string predicted, std::string enumerated) {
  r.diffs.push_back({std::move(key), std::move(predicted), std::move(enumerated)});
}

void prefix_diffs(VerificationReport& into, const VerificationReport& from, const std::string& prefix) {
  for (const auto& d : from.diffs) add_diff(into, prefix + d.key, d.predicted, d.enumerated);
}

int theorem_of(Subject s) {
  switch (s) {
    case Subject::theorem1: return 1;
    case Subject::theorem2: return 2;
    default: return 3;
  }
}

GRElem random_u(std::mt19937_64& rng, const FieldCtx& ctx) {
  std::uniform_int_distribution<FieldElem> pick(0, ctx.size() - 1);
  const FieldElem x = pick(rng);
  return {x, pick(rng)};
}

std::vector<VerificationReport> lemma2(const FieldCtx& ctx) {
  const int m = ctx.m();
  const ValueDistribution predicted = predict_lemma(m, LemmaDistribution::chi_nonzero_a);
  VerificationReport r;
  for (FieldElem a = 1; a < ctx.size(); ++a) {
    const ValueDistribution got = chi_distribution(ctx, a);
    prefix_diffs(r, compare(predicted, got), "a=" + std::to_string(a) + " ");
  }
  return {named(r, m, "lemma2 chi over b, every a != 0")};
}

std::vector<VerificationReport> lemma4(const FieldCtx& ctx, unsigned workers) {
  const int m = ctx.m();
  return {named(compare(predict_lemma(m, LemmaDistribution::s_plus), sweep_s_distribution(ctx, SumSign::plus, workers)),
                m, "lemma4 S+"),
          named(compare(predict_lemma(m, LemmaDistribution::s_minus), sweep_s_distribution(ctx, SumSign::minus, workers)),
                m, "lemma4 S-")};
}

std::vector<VerificationReport> lemma9(const FieldCtx& ctx, unsigned workers) {
  const std::array<Z4, 2> shifts{Z4(0), Z4(2)};
  return {named(compare(predict_lemma(ctx.m(), LemmaDistribution::s_pair), joint_distribution(ctx, shifts, workers)),
                ctx.m(), "lemma9 (S+(u),S+(u+2))")};
}

std::vector<VerificationReport> lemma10(const FieldCtx& ctx, unsigned workers) {
  const int m = ctx.m();
  const std::array<Z4, 4> shifts{Z4(0), Z4(1), Z4(2), Z4(3)};
  VerificationReport r =
      compare(predict_lemma(m, LemmaDistribution::s_quadruple), joint_distribution(ctx, shifts, workers));
  std::int64_t sum = 0;
  for (auto x : quadruple_frequencies(m)) sum += x;
  const std::int64_t expected = (std::int64_t{1} << m) * ((std::int64_t{1} << m) - 2);
  if (sum != expected) add_diff(r, "sum of x_l", std::to_string(expected), std::to_string(sum));
  return {named(r, m, "lemma10 (S+(u),S+(u+1),S+(u+2),S+(u+3))")};
}

std::vector<VerificationReport> moments(const FieldCtx& ctx, unsigned workers) {
  const int m = ctx.m();
  std::vector<VerificationReport> out(kMomentGroups);
  std::vector<std::string> names(kMomentGroups);
  for (const auto& nm : moment_identity_specs()) {
    auto& r = out[static_cast<std::size_t>(nm.group)];
    auto& name = names[static_cast<std::size_t>(nm.group)];
    const std::string label = describe(nm.spec);
    name += name.empty() ? label : " & " + label;
    const VerificationReport c = compare(predict_moment(m, nm.spec), moment(ctx, nm.spec, workers));
    prefix_diffs(r, c, "sum " + label + " ");
  }
  for (std::size_t g = 0; g < out.size(); ++g) out[g] = named(out[g], m, "moment " + names[g]);
  return out;
}

std::vector<VerificationReport> theorem(const FieldCtx& ctx, int which, unsigned workers) {
  std::vector<VerificationReport> out;
  for (const auto& spec : family_members(which)) {
    const CodeReport code = analyse_code(ctx, spec, workers);
    out.push_back(named(check_code(code, predict(ctx.m(), spec)), ctx.m(), "theorem" + std::to_string(which) + " " + spec.to_string()));
  }
  return out;
}

std::vector<VerificationReport> reference_rows(const FieldCtx& ctx, const VerifyOptions& opts) {
  const int m = ctx.m();
  std::vector<VerificationReport> out;
  std::map<std::string, CodeReport> cache;
  for (const auto& row : load_reference_table(opts.reference_path)) {
    if (row.m != m) continue;
    VerificationReport r;
    std::string seen;
    bool found = false;
    for (const auto& spec : family_members(row.theorem)) {
      auto it = cache.find(spec.to_string());
      if (it == cache.end()) it = cache.emplace(spec.to_string(), analyse_code(ctx, spec, opts.workers)).first;
      const CodeReport& c = it->second;
      const std::string got = "[" + std::to_string(c.n) + "," + std::to_string(c.k1) + "," + std::to_string(c.k2) +
                              "] d_L=" + (c.d_lee ? std::to_string(*c.d_lee) : "-");
      seen += (seen.empty() ? "" : " ") + spec.to_string() + "=" + got;
      found = found || (static_cast<int>(c.n) == row.n && c.k1 == row.k1 && c.k2 == row.k2 && c.d_lee &&
                        static_cast<int>(*c.d_lee) == row.our_dl);
    }
    const std::string want = "[" + std::to_string(row.n) + "," + std::to_string(row.k1) + "," +
                             std::to_string(row.k2) + "] d_L=" + std::to_string(row.our_dl);
    if (!found) add_diff(r, "row " + want, want, seen);
    out.push_back(named(r, m, "table2 family " + std::to_string(row.theorem) + " " + want));
  }
  return out;
}

std::vector<VerificationReport> identities(const FieldCtx& ctx, const VerifyOptions& opts) {
  return {check_trace_paths(ctx),
          check_chi_rotation(ctx),
          check_chi_fast_path(ctx),
          check_product_identity(ctx),
          check_cubic_roots(ctx),
          check_n_identities(ctx, opts.samples, opts.seed),
          check_multiplicity(ctx, opts.samples, opts.seed, opts.workers)};
}

}  // namespace

std::optional<Subject> parse_subject(std::string_view name) {
  for (const auto& [s, n] : kSubjects)
    if (name == n) return s;
  return std::nullopt;
}

std::string subject_name(Subject s) {
  for (const auto& [k, n] : kSubjects)
    if (k == s) return n;
  throw std::invalid_argument("unknown subject");
}

const std::vector<Subject>& all_subjects() {
  static const std::vector<Subject> all = [] {
    std::vector<Subject> v;
    for (const auto& [s, n] : kSubjects) v.push_back(s);
    return v;
  }();
  return all;
}

void check_scope(Subject s, int m, const VerifyOptions& opts) {
  const std::string name = subject_name(s);
  if (m < 1 || m > FieldCtx::kMaxDegree) throw OutOfTheoremScope(name + ": m must be in 1..15");
  if (m % 2 == 0) throw EvenM(name + ": no oracle (even m)");
  switch (s) {
    case Subject::theorem1:
    case Subject::theorem3:
      if (m <= 3) throw OutOfTheoremScope(name + " requires m>3");
      break;
    case Subject::table2: {
      const auto rows = load_reference_table(opts.reference_path);
      if (std::none_of(rows.begin(), rows.end(), [m](const ReferenceRow& r) { return r.m == m; }))
        throw OutOfTheoremScope("table2 has no rows for m=" + std::to_string(m));
      break;
    }
    default:
      if (m < 3) throw OutOfTheoremScope(name + " requires m>=3");
      break;
  }
}

std::vector<DefiningSetSpec> family_members(int theorem) {
  switch (theorem) {
    case 1: return {DefiningSetSpec::single(0), DefiningSetSpec::single(1), DefiningSetSpec::single(2), DefiningSetSpec::single(3)};
    case 2: return {DefiningSetSpec::pair(0, 2), DefiningSetSpec::pair(1, 3)};
    case 3:
      return {DefiningSetSpec::complement(0), DefiningSetSpec::complement(1), DefiningSetSpec::complement(2),
              DefiningSetSpec::complement(3)};
    default: throw std::invalid_argument("family index must be 1, 2 or 3");
  }
}

std::vector<VerificationReport> run_subject(const FieldCtx& ctx, Subject s, const VerifyOptions& opts) {
  check_scope(s, ctx.m(), opts);
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationReport> out;
  switch (s) {
    case Subject::lemma2: out = lemma2(ctx); break;
    case Subject::lemma4: out = lemma4(ctx, opts.workers); break;
    case Subject::lemma9: out = lemma9(ctx, opts.workers); break;
    case Subject::lemma10: out = lemma10(ctx, opts.workers); break;
    case Subject::moments: out = moments(ctx, opts.workers); break;
    case Subject::theorem1:
    case Subject::theorem2:
    case Subject::theorem3: out = theorem(ctx, theorem_of(s), opts.workers); break;
    case Subject::identities: out = identities(ctx, opts); break;
    case Subject::table2: out = reference_rows(ctx, opts); break;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : out) r.runtime_ms = ms / static_cast<double>(out.size());
  return out;
}

CodeReport analyse_code(const FieldCtx& ctx, const DefiningSetSpec& spec, unsigned workers) {
  const Code code = build_defining_set(ctx, spec);
  CodeReport r;
  r.m = ctx.m();
  r.poly = ctx.poly();
  r.spec = spec;
  r.n = code.n();
  r.distribution = weight_distribution(ctx, code, Dedup::cosets, workers);
  r.codewords = r.distribution.total_codewords;
  const TypeResult type = standard_form(ctx, code);
  r.k1 = type.k1;
  r.k2 = type.k2;
  if (r.distribution.entries.size() > 1) r.d_lee = min_lee_distance(r.distribution);
  return r;
}

VerificationReport check_code(const CodeReport& code, const ClosedFormPrediction& predicted) {
  VerificationReport r = compare(predicted, static_cast<std::int64_t>(code.n), code.distribution);
  const int bits = 2 * code.k1 + code.k2;
  const std::uint64_t type_size = bits < 64 ? std::uint64_t{1} << bits : 0;
  if (type_size != code.codewords)
    add_diff(r, "4^k1 2^k2", "4^" + std::to_string(code.k1) + " 2^" + std::to_string(code.k2),
             std::to_string(code.codewords) + " codewords");
  r.m = code.m;
  r.pass = r.diffs.empty();
  return r;
}

VerificationReport check_trace_paths(const FieldCtx& ctx) {
  VerificationReport r;
  for (FieldElem x = 0; x < ctx.size(); ++x)
    for (FieldElem y = 0; y < ctx.size(); ++y) {
      const Z4 fast = trace_z4(ctx, {x, y}), direct = trace_z4_direct(ctx, {x, y});
      if (!(fast == direct) && r.diffs.size() < 16)
        add_diff(r, "Tr(" + std::to_string(x) + "+2*" + std::to_string(y) + ")", std::to_string(fast.value()),
                 std::to_string(direct.value()));
    }
  return named(r, ctx.m(), "trace: 2-adic expansion equals Frobenius orbit sum");
}

VerificationReport check_chi_rotation(const FieldCtx& ctx) {
  VerificationReport r;
  const int m = ctx.m();
  const TauSigma ts = tau_sigma(m);
  GaussInt base = ts.tau * (GaussInt{1} + GaussInt::i_pow(m));
  base *= GaussInt{std::int64_t{1} << ((m - 1) / 2)};
  const GaussInt chi10 = chi(ctx, 1, 0);
  if (!(chi10 == base)) add_diff(r, "chi(1,0)", to_string(base), to_string(chi10));
  for (FieldElem a = 1; a < ctx.size(); ++a) {
    const auto row = chi_row(ctx, a);
    const FieldElem inv_a = ctx.inv(a);
    for (FieldElem b = 0; b < ctx.size(); ++b) {
      const GaussInt want = GaussInt::i_pow(-ctx.teich_trace(ctx.mul(b, inv_a)).value()) * chi10;
      if (!(want == row[b]) && r.diffs.size() < 16)
        add_diff(r, "chi(" + std::to_string(a) + "," + std::to_string(b) + ")", to_string(want), to_string(row[b]));
    }
  }
  return named(r, m, "chi(a,b) = i^(-Tr(b/a)) chi(1,0)");
}

VerificationReport check_chi_fast_path(const FieldCtx& ctx) {
  VerificationReport r;
  // The direct sum is quadratic in the field size; sample rows beyond m = 9.
  const FieldElem step = ctx.m() <= 9 ? 1 : (ctx.size() >> 9);
  for (FieldElem a = 0; a < ctx.size(); a += step) {
    const auto row = chi_row(ctx, a);
    for (FieldElem b = 0; b < ctx.size(); ++b) {
      const GaussInt direct = chi(ctx, a, b);
      if (!(direct == row[b]) && r.diffs.size() < 16)
        add_diff(r, "chi(" + std::to_string(a) + "," + std::to_string(b) + ")", to_string(direct), to_string(row[b]));
    }
  }
  return named(r, ctx.m(), "chi: transform rows equal the defining sum");
}

VerificationReport check_product_identity(const FieldCtx& ctx) {
  VerificationReport r;
  const bool odd = ctx.m() % 2 == 1;
  auto one = [&](FieldElem x, FieldElem y) {
    const FieldElem sx = teich_sqrt(ctx, x), sy = teich_sqrt(ctx, y);
    const FieldElem inner = oplus(oplus(x, y), teich_sqrt(ctx, ctx.mul(x, y)));
    const FieldElem lhs = ctx.mul(oplus(sx, sy), inner);
    const FieldElem rhs = oplus(ctx.pow(sx, 3), ctx.pow(sy, 3));
    const std::string key = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    if (lhs != rhs && r.diffs.size() < 16) add_diff(r, "product " + key, std::to_string(rhs), std::to_string(lhs));
    if (odd && inner == 0 && (x != 0 || y != 0) && r.diffs.size() < 16)
      add_diff(r, "zero " + key, "nonzero", "0");
  };
  if (ctx.m() <= 11) {
    for (FieldElem x = 0; x < ctx.size(); ++x)
      for (FieldElem y = 0; y < ctx.size(); ++y) one(x, y);
  } else {
    std::mt19937_64 rng(ctx.m());
    std::uniform_int_distribution<FieldElem> pick(0, ctx.size() - 1);
    for (int k = 0; k < (1 << 22); ++k) one(pick(rng), pick(rng));
  }
  return named(r, ctx.m(), "(sx+sy)(x+y+s(xy)) = sx^3+sy^3 over the Teichmuller sum");
}

VerificationReport check_cubic_roots(const FieldCtx& ctx) {
  VerificationReport r;
  const auto roots = cubic_roots(ctx);
  const bool divisible = ctx.m() % 3 == 0;
  if (roots.size() != (divisible ? 3u : 0u))
    add_diff(r, "root count", divisible ? "3" : "0", std::to_string(roots.size()));
  for (FieldElem mu : roots) {
    if (ctx.bin_trace(mu) != 0) add_diff(r, "tr(" + std::to_string(mu) + ")", "0", "1");
    const Z4 t = trace_z4(ctx, {mu, 0});
    if (t.value() != 2) add_diff(r, "Tr(" + std::to_string(mu) + ")", "2", std::to_string(t.value()));
  }
  return named(r, ctx.m(), "roots of mu^3+mu+1");
}

VerificationReport check_n_identities(const FieldCtx& ctx, int samples, std::uint64_t seed) {
  VerificationReport r;
  std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(ctx.m()));
  const std::array<DefiningSetSpec, 3> specs = {DefiningSetSpec::single(0), DefiningSetSpec::pair(0, 2),
                                                DefiningSetSpec::complement(0)};
  for (const auto& spec : specs) {
    for (int k = 0; k < samples; ++k) {
      const GRElem u = k == 0 ? GRElem{0, 0} : random_u(rng, ctx);
      try {
        count_n_identity(ctx, spec, u);
      } catch (const IdentityViolation& e) {
        if (r.diffs.size() < 16) add_diff(r, spec.to_string(), "identity", e.what());
      }
    }
  }
  return named(r, ctx.m(), "N0-N2 against S+ combinations");
}

VerificationReport check_multiplicity(const FieldCtx& ctx, int samples, std::uint64_t seed, unsigned workers) {
  VerificationReport r;
  std::mt19937_64 rng(seed + 17 * static_cast<std::uint64_t>(ctx.m()));
  for (int theorem = 1; theorem <= 3; ++theorem) {
    for (const auto& spec : family_members(theorem)) {
      // Repetition period of u -> c(u) and the resulting kernel size.
      const int t = spec.t().value();
      int period = 0;
      std::uint64_t fold = 1;
      if (theorem == 1 && t == 0) period = 1, fold = 4;
      if (theorem == 1 && t == 2) period = 2, fold = 2;
      if (theorem == 2 && t == 0) period = 2, fold = 2;
      const Code code = build_defining_set(ctx, spec);
      if (period != 0) {
        for (int k = 0; k < samples; ++k) {
          const GRElem u = random_u(rng, ctx);
          if (!(codeword(ctx, code, u) == codeword(ctx, code, gr_add(ctx, u, from_z4(Z4(period))))) &&
              r.diffs.size() < 16)
            add_diff(r, spec.to_string() + " u=(" + std::to_string(u.x) + "," + std::to_string(u.y) + ")",
                     "c(u)=c(u+" + std::to_string(period) + ")", "differ");
        }
      }
      // Kernel sizes follow the closed forms only where those apply (m > 3 for
      // the single and complement families; D_0 = {0} at m = 3).
      if (theorem != 2 && ctx.m() <= 3) continue;
      const WeightDistribution raw = weight_distribution(ctx, code, Dedup::none, workers);
      const std::uint64_t kernel = raw.entries.count(0) ? raw.entries.at(0) : 0;
      if (kernel != fold) add_diff(r, spec.to_string() + " multiplicity", std::to_string(fold), std::to_string(kernel));
    }
  }
  return named(r, ctx.m(), "codeword multiplicity per family");
}

}  // namespace z4codes
