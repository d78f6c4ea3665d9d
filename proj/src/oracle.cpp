#include "z4codes/oracle.hpp"

#include <fstream>
#include <sstream>

#include "z4codes/errors.hpp"

namespace z4codes {

namespace {

// Exact dyadic Gaussian rational num / 2^shift. The tables use powers such
// as 2^((m-7)/2) that are fractional at the smallest m, while every row
// still evaluates to an integer.
class Dyadic {
 public:
  Dyadic(std::int64_t v = 0) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Dyadic(GaussInt v) : num_(v) {}          // NOLINT(google-explicit-constructor)

  static Dyadic pow2(int e) {
    Dyadic d;
    if (e >= 0) {
      if (e > 62) throw std::overflow_error("2^e out of range");
      d.num_ = GaussInt{std::int64_t{1} << e};
    } else {
      d.num_ = GaussInt{1};
      d.shift_ = -e;
    }
    return d;
  }
  static Dyadic i_pow(int k) { return Dyadic(GaussInt::i_pow(k)); }

  friend Dyadic operator+(Dyadic a, Dyadic b) {
    align(a, b);
    Dyadic r;
    r.num_ = a.num_ + b.num_;
    r.shift_ = a.shift_;
    return r.normalized();
  }
  friend Dyadic operator-(Dyadic a, Dyadic b) { return a + (-b); }
  friend Dyadic operator-(Dyadic a) {
    a.num_ = -a.num_;
    return a;
  }
  friend Dyadic operator*(Dyadic a, Dyadic b) {
    Dyadic r;
    r.num_ = a.num_ * b.num_;
    r.shift_ = a.shift_ + b.shift_;
    return r.normalized();
  }

  /// The value as a rational integer; InternalError if it is not one.
  std::int64_t integer(const char* what) const {
    if (shift_ != 0 || num_.im != 0)
      throw InternalError(std::string("closed form does not evaluate to an integer: ") + what);
    return num_.re;
  }
  GaussInt gaussian(const char* what) const {
    if (shift_ != 0) throw InternalError(std::string("closed form is not a Gaussian integer: ") + what);
    return num_;
  }

 private:
  static void align(Dyadic& a, Dyadic& b) {
    while (a.shift_ < b.shift_) {
      a.num_ *= GaussInt{2};
      ++a.shift_;
    }
    while (b.shift_ < a.shift_) {
      b.num_ *= GaussInt{2};
      ++b.shift_;
    }
  }
  Dyadic normalized() const {
    Dyadic r = *this;
    while (r.shift_ > 0 && r.num_.re % 2 == 0 && r.num_.im % 2 == 0) {
      r.num_ = {r.num_.re / 2, r.num_.im / 2};
      --r.shift_;
    }
    return r;
  }

  GaussInt num_;
  int shift_ = 0;
};

Dyadic p2(int e) { return Dyadic::pow2(e); }
Dyadic ip(int k) { return Dyadic::i_pow(k); }

void require_odd(int m, int lower_exclusive, const std::string& what) {
  if (m > FieldCtx::kMaxDegree) throw OutOfTheoremScope(what + ": m must be at most 15");
  if (m % 2 == 0) throw EvenM(what + ": closed forms need odd m (even m is exploratory only)");
  if (m <= lower_exclusive)
    throw OutOfTheoremScope(what + " requires m>" + std::to_string(lower_exclusive));
}

using Rows = std::vector<std::pair<Dyadic, Dyadic>>;

Rows theorem1_rows(int m, int t, const Dyadic& tau, const Dyadic& sg) {
  const Dyadic q2 = p2(m - 2);
  Rows rows{{0, 1}};
  if (t == 0) {
    rows.push_back({q2, q2 + p2((m - 3) / 2) * tau - 1});
    rows.push_back({q2 + p2((m - 1) / 2) * tau, q2 - p2((m - 3) / 2) * tau});
    rows.push_back({q2 + p2((m - 3) / 2) * tau,
                    p2(m - 4) * (Dyadic(3) * p2(m - 1) - 5 + Dyadic(3) * sg) - p2((m - 3) / 2) * (q2 - 1) * tau});
    for (int s : {1, -1}) {
      const Dyadic sd(s);
      rows.push_back({q2 + p2((m - 3) / 2) * (tau + sd),
                      p2(m - 3) * (p2(m - 1) - sd * p2((m + 1) / 2) - 1 - sg + sd * 2 * tau)});
      rows.push_back({q2 + p2((m - 3) / 2) * (tau + sd * 2),
                      p2(m - 5) * (p2(m - 1) + 1 + sg - sd * 4 * tau) + p2((m - 5) / 2) * (q2 - 1) * (tau - sd * 2)});
    }
  } else if (t == 2) {
    rows.push_back({q2, p2(m - 1) - 1});
    rows.push_back({p2(m - 1) - p2((m - 1) / 2) * tau, 1});
    rows.push_back({q2 - p2((m - 1) / 2) * tau, p2(m - 1) - 1});
    rows.push_back({q2 - p2((m - 3) / 2) * tau,
                    p2(m - 3) * (Dyadic(3) * p2(m - 1) - 1 + Dyadic(3) * sg) + p2((m - 1) / 2) * (q2 - 1) * tau});
    for (int s : {1, -1}) {
      const Dyadic sd(s);
      rows.push_back({q2 - p2((m - 3) / 2) * (tau + sd), q2 * (p2(m - 1) - 1 - sg)});
      rows.push_back({q2 - p2((m - 3) / 2) * (tau + sd * 2),
                      p2(m - 4) * (p2(m - 1) - 3 + sg) - p2((m - 7) / 2) * (p2(m) - 4) * tau});
    }
  } else {
    const Dyadic phase = ip(m + t) * tau;
    const Dyadic rot = ip(t - 1);
    rows.push_back({p2(m - 1) - p2((m - 1) / 2) * phase, 1});
    rows.push_back({q2, p2(m - 1) - 1});
    rows.push_back({q2 - p2((m - 1) / 2) * phase, p2(m - 1) - 1});
    rows.push_back({q2 - p2((m - 3) / 2) * phase,
                    (p2(m) - 2) * (Dyadic(3) * p2(m - 3) + p2((m - 3) / 2) * phase) + p2(m)});
    for (int s : {1, -1}) {
      const Dyadic sd(s);
      rows.push_back({q2 + p2((m - 3) / 2) * rot * (ip(m - 1) * tau + sd), q2 * (p2(m) - 2)});
      rows.push_back({q2 + p2((m - 3) / 2) * rot * (ip(m - 1) * tau + sd * 2),
                      (p2(m) - 2) * (p2(m - 4) - p2((m - 5) / 2) * phase)});
    }
  }
  return rows;
}

Rows theorem2_rows(int m, int t1, const Dyadic&) {
  Rows rows{{0, 1}};
  if (t1 == 0) {
    rows.push_back({p2(m - 1), p2(2 * m - 2) - 1});
    for (int s : {1, -1}) {
      const Dyadic sd(s);
      rows.push_back({p2(m - 1) + sd * p2((m - 1) / 2), p2(2 * m - 3) - sd * p2((m - 3) / 2) * (p2(m) - 1)});
    }
  } else {
    rows.push_back({p2(m), 1});
    rows.push_back({p2(m - 1), p2(m - 1) * (p2(m) + 2) - 2});
    for (int s : {1, -1}) rows.push_back({p2(m - 1) + Dyadic(s) * p2((m - 1) / 2), p2(2 * m - 2) - p2(m - 1)});
  }
  return rows;
}

Rows theorem3_rows(int m, int t, const Dyadic& tau, const Dyadic& sg) {
  const Dyadic base = Dyadic(3) * p2(m - 2);
  const Dyadic h = p2((m - 3) / 2);
  Rows rows{{0, 1}};
  if (t == 0) {
    rows.push_back({p2(m), 1});
    rows.push_back({p2(m) - p2((m - 1) / 2) * tau, 2});
    rows.push_back({base, p2(m) - 2});
    rows.push_back({base - p2((m - 1) / 2) * tau, p2(m) - 2});
    rows.push_back({base - h * tau, p2(m - 2) * (p2(m - 1) + 1 + sg) + h * (p2(m) - 4) * tau});
    for (int s : {1, -1}) {
      const Dyadic sd(s);
      rows.push_back({base - h * (tau + sd),
                      Dyadic(3) * p2(m - 3) * (p2(m - 1) + sd * p2((m + 1) / 2) - 1 - sg - sd * 2 * tau)});
      rows.push_back({base - h * (tau + sd * 2),
                      p2(m - 3) * (Dyadic(3) * p2(m - 1) - 5 + Dyadic(3) * sg) - p2((m - 5) / 2) * (p2(m) - 4) * tau});
      rows.push_back({base - h * (tau + sd * 3), p2(m - 3) * (p2(m - 1) - sd * p2((m + 1) / 2) - 1 - sg + sd * 2 * tau)});
    }
  } else if (t == 2) {
    rows.push_back({p2(m), 1});
    rows.push_back({p2(m - 1), 2});
    rows.push_back({base, p2(m) + p2((m + 1) / 2) * tau - 4});
    rows.push_back({base + p2((m - 1) / 2) * tau, p2(m) - p2((m + 1) / 2) * tau});
    rows.push_back({base + h * tau, p2(m - 2) * (p2(m - 1) - 3 + sg) - h * (p2(m) - 4) * tau});
    for (int s : {1, -1}) {
      const Dyadic sd(s);
      rows.push_back({base + h * (tau + sd),
                      Dyadic(3) * p2(m - 3) * (p2(m - 1) - 1 - sg) - sd * p2(m - 2) * (p2((m - 1) / 2) - tau)});
      rows.push_back({base + h * (tau + sd * 2), p2(m - 3) * (Dyadic(3) * p2(m - 1) - 1 + Dyadic(3) * sg - sd * 4 * tau) +
                                                     p2((m - 5) / 2) * (p2(m) - 4) * (tau - sd * 2)});
      rows.push_back({base + h * (tau + sd * 3), p2(m - 3) * (p2(m - 1) - sd * p2((m + 1) / 2) - 1 - sg + sd * 2 * tau)});
    }
  } else {
    const Dyadic phase = ip(m + t) * tau;
    const Dyadic rot = ip(t - 1);
    const Dyadic inner = ip(m - 1) * tau;
    rows.push_back({p2(m - 1) + p2((m - 1) / 2) * phase, 1});
    rows.push_back({base, p2(m - 1) - 1});
    rows.push_back({base + p2((m - 1) / 2) * phase, p2(m - 1) - 1});
    rows.push_back({base - h * phase, p2(m - 1) + p2((m - 1) / 2) * phase});
    rows.push_back({Dyadic(3) * (p2(m - 2) + h * phase), p2(m - 1) - p2((m - 1) / 2) * phase});
    rows.push_back({base + h * phase, (p2(m) - 2) * (p2(m - 3) - h * phase)});
    for (int s : {1, -1}) {
      const Dyadic sd(s);
      rows.push_back({base - h * rot * (inner + sd), (p2(m) - 2) * (Dyadic(3) * p2(m - 4) + sd * p2((m - 5) / 2) * rot)});
      rows.push_back({base - h * rot * (inner + sd * 2),
                      (p2(m) - 2) * (Dyadic(3) * p2(m - 4) - p2((m - 5) / 2) * rot * (inner - sd * 2))});
      rows.push_back({base - h * rot * (inner + sd * 3), (p2(m) - 2) * (p2(m - 4) + sd * p2((m - 5) / 2) * rot)});
    }
  }
  return rows;
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

}  // namespace

TauSigma tau_sigma(int m) {
  if (m % 2 == 0) throw EvenM("tau/sigma are defined for odd m only");
  if (m < 3) throw OutOfTheoremScope("tau/sigma require m >= 3");
  TauSigma ts;
  ts.m = m;
  ts.tau = (m % 4 == 1) ? GaussInt::i_pow((m - 1) / 2) : GaussInt::i_pow((m + 1) / 2);
  ts.sigma = (m % 3 == 0) ? -3 : 0;
  if (ts.tau.im != 0 || (ts.tau.re != 1 && ts.tau.re != -1)) throw InternalError("tau is not +-1");
  return ts;
}

int theorem_for(const DefiningSetSpec& spec) {
  switch (spec.kind()) {
    case DefiningSetSpec::Kind::single: return 1;
    case DefiningSetSpec::Kind::pair: return 2;
    default: return 3;
  }
}

WeightDistribution ClosedFormPrediction::distribution() const {
  WeightDistribution d;
  for (const auto& [w, f] : table) {
    if (w < 0 || f < 0) throw InternalError("negative weight or frequency in closed form");
    d.add(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(f));
  }
  return d;
}

ClosedFormPrediction predict(int m, const DefiningSetSpec& spec) {
  const int theorem = theorem_for(spec);
  require_odd(m, theorem == 2 ? 1 : 3, spec.to_string());
  if (!spec.same_parity()) throw OutOfTheoremScope("mixed-parity pair " + spec.to_string() + " has no closed form");

  const TauSigma ts = tau_sigma(m);
  const Dyadic tau(ts.tau), sg(ts.sigma);
  const int t = spec.t().value();

  ClosedFormPrediction p;
  p.m = m;
  p.spec = spec;
  Dyadic n;
  Rows rows;
  std::uint64_t count = 0;
  const std::uint64_t all = std::uint64_t{1} << (2 * m);
  switch (theorem) {
    case 1: {
      const Dyadic h = p2((m - 3) / 2);
      const Dyadic phase = (t == 0 || t == 2) ? tau : ip(m - 1) * tau;
      const Dyadic sign = (t < 2) ? Dyadic(1) : Dyadic(-1);
      n = p2(m - 2) + sign * h * phase;
      count = t == 0 ? all / 4 : t == 2 ? all / 2 : all;
      rows = theorem1_rows(m, t, tau, sg);
      break;
    }
    case 2:
      n = p2(m - 1);
      count = t == 0 ? all / 2 : all;
      rows = theorem2_rows(m, t, tau);
      break;
    default: {
      const Dyadic base = Dyadic(3) * p2(m - 2);
      const Dyadic h = p2((m - 3) / 2);
      const Dyadic inner = ip(m - 1) * tau;
      switch (t) {
        case 0: n = base - h * tau; break;
        case 1: n = base - h * inner; break;
        case 2: n = base + h * tau; break;
        default: n = base + h * inner; break;
      }
      count = all;
      rows = theorem3_rows(m, t, tau, sg);
      break;
    }
  }
  p.n = n.integer("length");
  p.codeword_count = count;
  std::uint64_t sum = 0;
  for (const auto& [w, f] : rows) {
    const std::int64_t wi = w.integer("weight"), fi = f.integer("frequency");
    if (wi < 0 || fi < 0) throw InternalError("closed form gives a negative weight or frequency");
    p.table.emplace_back(wi, fi);
    sum += static_cast<std::uint64_t>(fi);
  }
  if (sum != count) throw InternalError("closed-form frequencies do not sum to the codeword count");
  p.d_lee = static_cast<std::int64_t>(min_lee_distance(p.distribution()));
  return p;
}

std::array<std::int64_t, 16> quadruple_frequencies(int m) {
  require_odd(m, 1, "quadruple distribution");
  const TauSigma ts = tau_sigma(m);
  const Dyadic tau(ts.tau), sg(ts.sigma);
  const Dyadic big = p2((m + 1) / 2), mid = p2((m - 1) / 2);
  const Dyadic x1 = p2(m - 3) * (p2(m - 1) + 1 + sg + 4 * tau) + mid * (p2(m - 2) - 1) * (2 + tau);
  const Dyadic x2 = p2(m - 3) * (p2(m - 1) + big - 1 - sg - 2 * tau);
  const Dyadic x4 = p2(m - 3) * (p2(m - 1) - 1 + sg);
  const Dyadic x6 = p2(m - 3) * (p2(m - 1) - 3 + sg - big * tau) + mid * tau;
  const Dyadic x8 = p2(m - 3) * (p2(m - 1) - big - 1 - sg + 2 * tau);
  const Dyadic x16 = p2(m - 3) * (p2(m - 1) + 1 + sg - 4 * tau) - mid * (p2(m - 2) - 1) * (2 - tau);
  const std::array<const Dyadic*, 16> by_row = {&x1, &x2, &x2, &x4, &x2, &x6, &x4, &x8,
                                                &x2, &x4, &x6, &x8, &x4, &x8, &x8, &x16};
  std::array<std::int64_t, 16> out{};
  for (std::size_t l = 0; l < 16; ++l) out[l] = by_row[l]->integer("quadruple frequency");
  return out;
}

ValueDistribution predict_lemma(int m, LemmaDistribution which) {
  require_odd(m, 1, "value distribution");
  tau_sigma(m);  // scope check only
  auto integer = [](const Dyadic& d) { return d.integer("lemma frequency"); };
  auto freq = [](std::int64_t f) {
    if (f < 0) throw InternalError("negative predicted frequency");
    return static_cast<std::uint64_t>(f);
  };
  const std::int64_t big = std::int64_t{1} << ((m + 1) / 2);
  switch (which) {
    case LemmaDistribution::chi_nonzero_a: {
      ValueDistribution d(1);
      const std::int64_t r = std::int64_t{1} << ((m - 1) / 2);
      for (int s : {1, -1}) {
        const std::uint64_t f = freq(integer(p2(m - 2) + Dyadic(s) * p2((m - 3) / 2)));
        d.add(GaussInt{s * r, s * r}, f);
        d.add(GaussInt{s * r, -s * r}, f);
      }
      return d;
    }
    case LemmaDistribution::s_plus: {
      ValueDistribution d(1);
      d.add(GaussInt{std::int64_t{1} << (m + 1)}, 1);
      d.add(GaussInt{0}, freq(integer(p2(m) - 1)));
      for (int s : {1, -1})
        d.add(GaussInt{s * big}, freq(integer((p2(m) - 1) * (p2(m - 1) + Dyadic(s) * p2((m - 1) / 2)))));
      return d;
    }
    case LemmaDistribution::s_minus: {
      ValueDistribution d(1);
      d.add(GaussInt{0}, freq(integer(p2(m))));
      for (int s : {1, -1}) d.add(GaussInt{0, s * big}, freq(integer(p2(m - 1) * (p2(m) - 1))));
      return d;
    }
    case LemmaDistribution::s_pair: {
      ValueDistribution d(2);
      const GaussInt hi{big}, lo{-big};
      d.add({hi, hi}, freq(integer((p2(m) - 2) * (p2(m - 2) + p2((m - 1) / 2)))));
      d.add({hi, lo}, freq(integer(p2(2 * m - 2) - p2(m - 1))));
      d.add({lo, hi}, freq(integer(p2(2 * m - 2) - p2(m - 1))));
      d.add({lo, lo}, freq(integer((p2(m) - 2) * (p2(m - 2) - p2((m - 1) / 2)))));
      return d;
    }
    case LemmaDistribution::s_quadruple: {
      ValueDistribution d(4);
      const auto x = quadruple_frequencies(m);
      for (int l = 0; l < 16; ++l) {
        ValueDistribution::Key key(4);
        for (int k = 0; k < 4; ++k) key[k] = GaussInt{((l >> (3 - k)) & 1) ? -big : big};
        d.add(key, freq(x[l]));
      }
      return d;
    }
  }
  throw std::invalid_argument("unknown lemma distribution");
}

GaussInt predict_moment(int m, const MomentSpec& spec) {
  require_odd(m, 1, "moment");
  const TauSigma ts = tau_sigma(m);
  const Dyadic tau(ts.tau);
  const auto& known = moment_identity_specs();
  std::size_t index = known.size();
  for (std::size_t k = 0; k < known.size(); ++k) {
    const auto& ks = known[k].spec;
    bool same = ks.size() == spec.size();
    for (std::size_t j = 0; same && j < spec.size(); ++j)
      same = ks[j].shift == spec[j].shift && ks[j].sign == spec[j].sign;
    if (same) index = k;
  }
  const Dyadic cubic_term = p2((3 * m + 1) / 2) * (p2(m) - 2) * ip(m) * tau;
  Dyadic v;
  switch (index) {
    case 0: v = p2(m + 1) * (p2(m) - 2); break;
    case 4: v = p2(m + 1) * (p2(m) + (p2(m) - 4) * p2((m - 1) / 2) * tau); break;
    case 5: v = cubic_term; break;
    case 6: v = -cubic_term; break;
    case 7: v = p2(2 * m + 3) * (p2((m - 1) / 2) * tau - 1); break;
    case 10: v = p2(3 * m + 3) * ts.sigma; break;
    case 1: case 2: case 3: case 8: case 9: case 11: v = 0; break;
    default: throw OutOfTheoremScope("no closed form for moment " + describe(spec));
  }
  return v.gaussian("moment");
}

std::vector<ReferenceRow> parse_reference_table(std::istream& in) {
  std::vector<ReferenceRow> rows;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("reference table: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "m,n,k1,k2,best_known_dL,our_dL,theorem") throw std::runtime_error("reference table: unexpected header: " + line);
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (line.back() == ',') fields.emplace_back();
    if (fields.size() != 7) throw std::runtime_error("reference table line " + std::to_string(lineno) + ": expected 7 fields");
    try {
      ReferenceRow r;
      r.m = std::stoi(fields[0]);
      r.n = std::stoi(fields[1]);
      r.k1 = std::stoi(fields[2]);
      r.k2 = std::stoi(fields[3]);
      if (!fields[4].empty() && fields[4] != "-") r.best_known_dl = std::stoi(fields[4]);
      r.our_dl = std::stoi(fields[5]);
      r.theorem = std::stoi(fields[6]);
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw std::runtime_error("reference table line " + std::to_string(lineno) + ": bad integer field");
    }
  }
  return rows;
}

std::vector<ReferenceRow> load_reference_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_reference_table(in);
}

std::string default_reference_table_path() {
#ifdef Z4CODES_REFERENCE_CSV
  return Z4CODES_REFERENCE_CSV;
#else
  return "data/reference_codes.csv";
#endif
}

std::string key_to_string(const ValueDistribution::Key& key) {
  if (key.size() == 1) return to_string(key[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) out += (i ? "," : "") + to_string(key[i]);
  return out + ")";
}

VerificationReport compare(const ClosedFormPrediction& predicted, std::int64_t n, const WeightDistribution& enumerated) {
  VerificationReport r;
  r.m = predicted.m;
  auto check = [&](const std::string& key, const std::string& p, const std::string& e) {
    if (p != e) r.diffs.push_back({key, p, e});
  };
  check("n", std::to_string(predicted.n), std::to_string(n));
  check("codewords", u64(predicted.codeword_count), u64(enumerated.total_codewords));
  std::string d_enum = "none";
  for (const auto& [w, f] : enumerated.entries)
    if (w > 0) {
      d_enum = u64(w);
      break;
    }
  check("d_L", std::to_string(predicted.d_lee), d_enum);
  const WeightDistribution pd = predicted.distribution();
  std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> joined;
  for (const auto& [w, f] : pd.entries) joined[w].first = f;
  for (const auto& [w, f] : enumerated.entries) joined[w].second = f;
  for (const auto& [w, fs] : joined) check("weight " + u64(w), u64(fs.first), u64(fs.second));
  r.pass = r.diffs.empty();
  return r;
}

VerificationReport compare(const ValueDistribution& predicted, const ValueDistribution& enumerated) {
  if (predicted.arity() != enumerated.arity()) throw ShapeMismatch("distributions of different arity");
  VerificationReport r;
  std::map<ValueDistribution::Key, std::pair<std::uint64_t, std::uint64_t>> joined;
  for (const auto& [k, f] : predicted.entries()) joined[k].first = f;
  for (const auto& [k, f] : enumerated.entries()) joined[k].second = f;
  for (const auto& [k, fs] : joined)
    if (fs.first != fs.second) r.diffs.push_back({key_to_string(k), u64(fs.first), u64(fs.second)});
  r.pass = r.diffs.empty();
  return r;
}

VerificationReport compare(const GaussInt& predicted, const GaussInt& enumerated) {
  VerificationReport r;
  if (!(predicted == enumerated)) r.diffs.push_back({"value", to_string(predicted), to_string(enumerated)});
  r.pass = r.diffs.empty();
  return r;
}

}  // namespace z4codes
