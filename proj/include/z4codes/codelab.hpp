#pragma once

// Z4-linear codes C_D = { (Tr(u d))_{d in D} : u in GR(4,m) } for defining
// sets D built from the trace classes D_t = { x in T : Tr(x) = t }.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "z4codes/galois.hpp"
#include "z4codes/gauss_int.hpp"

namespace z4codes {

/// single:t (D = D_t), pair:t1,t2 (D = D_t1 u D_t2, t1 != t2) or
/// complement:t (D = T \ D_t).
class DefiningSetSpec {
 public:
  enum class Kind { single, pair, complement };

  static DefiningSetSpec single(int t);
  static DefiningSetSpec pair(int t1, int t2);
  static DefiningSetSpec complement(int t);
  /// Parses the CLI syntax; throws std::invalid_argument.
  static DefiningSetSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  Z4 t() const { return t1_; }
  Z4 t2() const { return t2_; }
  bool selects(Z4 trace) const;
  /// Pair with both indices of the same parity (the families with closed forms).
  bool same_parity() const { return kind_ != Kind::pair || (t1_.value() - t2_.value()) % 2 == 0; }
  std::string to_string() const;

  friend bool operator==(const DefiningSetSpec&, const DefiningSetSpec&) = default;

 private:
  DefiningSetSpec(Kind k, Z4 a, Z4 b) : kind_(k), t1_(a), t2_(b) {}
  Kind kind_;
  Z4 t1_;
  Z4 t2_;
};

struct Code {
  DefiningSetSpec spec;
  std::vector<FieldElem> coords;  // strictly ascending labels

  std::size_t n() const { return coords.size(); }
};

struct Codeword {
  std::vector<Z4> symbols;

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

struct WeightDistribution {
  std::map<std::uint64_t, std::uint64_t> entries;  // Lee weight -> frequency
  std::uint64_t total_codewords = 0;

  void add(std::uint64_t weight, std::uint64_t frequency = 1);
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

enum class Dedup {
  none,    // one entry per u in GR(4,m): 4^m in total
  cosets,  // divide by the kernel size (all fibres of u -> c(u) are kernel cosets)
  hash,    // store every distinct symbol vector; small m only
};

/// Generator matrix in the (k1, k2) block shape
///   [ I_k1  A1     B1 + 2B2 ]
///   [ 0     2I_k2  2A2      ]
/// after the column permutation `column_order` (position -> original column).
struct TypeResult {
  int k1 = 0;
  int k2 = 0;
  std::vector<std::vector<std::uint8_t>> matrix;
  std::vector<std::size_t> column_order;
};

Code build_defining_set(const FieldCtx& ctx, const DefiningSetSpec& spec);

Codeword codeword(const FieldCtx& ctx, const Code& code, GRElem u);

std::uint64_t lee_weight(const Codeword& cw);

/// Enumerates all 4^m codewords with bit-sliced symbol planes.
WeightDistribution weight_distribution(const FieldCtx& ctx, const Code& code, Dedup dedup, unsigned workers = 0);

/// Smallest nonzero weight; throws ZeroCode when only weight 0 is present.
std::uint64_t min_lee_distance(const WeightDistribution& dist);

TypeResult standard_form(const FieldCtx& ctx, const Code& code);

/// True iff `r` has the block shape above (used by tests and reports).
bool has_standard_shape(const TypeResult& r);

/// N_0 - N_2 counted directly on D against its exponential-sum expression.
/// `scaled_count` is scale * (N_0 - N_2) and `sum_side` the S+ combination,
/// so the identity reads scaled_count == sum_side.
struct NIdentityCheck {
  std::int64_t n0 = 0;
  std::int64_t n2 = 0;
  std::int64_t scale = 1;
  GaussInt scaled_count;
  GaussInt sum_side;
};

/// Supported specs: single:0 (scale 8), pair:0,2 (scale 4), complement:0
/// (scale 8). Throws IdentityViolation when the two sides differ.
NIdentityCheck count_n_identity(const FieldCtx& ctx, const DefiningSetSpec& spec, GRElem u);

}  // namespace z4codes
