#pragma once

// Exponential sums over the Teichmuller set:
//   chi(a, b) = sum_x i^Tr((a + 2b) x)
//   S+(u) = 2 Re chi,  S-(u) = 2i Im chi   for u = a + 2b,
// with their value distributions, joint distributions over shifted arguments
// u + c (c in Z4), and moment sums over a in T \ {0,1}, b in T.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "z4codes/galois.hpp"
#include "z4codes/gauss_int.hpp"

namespace z4codes {

enum class SumSign { plus, minus };

/// Direct 2^m-term evaluation of chi(a, b).
GaussInt chi(const FieldCtx& ctx, FieldElem a, FieldElem b);

/// chi(a, b) for every b (indexed by label), via a Walsh-Hadamard transform
/// of x -> i^Tr(ax) re-indexed by dual coordinates.
std::vector<GaussInt> chi_row(const FieldCtx& ctx, FieldElem a);

/// S+ from chi (2 Re chi) or S- (2i Im chi).
GaussInt s_from_chi(const GaussInt& chi_value, SumSign sign);

GaussInt s_plus(const FieldCtx& ctx, GRElem u);
GaussInt s_minus(const FieldCtx& ctx, GRElem u);

/// Exact multiset of (tuples of) Gaussian integers. Keys are ordered
/// lexicographically by (re, im) per coordinate; zero frequencies are never
/// stored.
class ValueDistribution {
 public:
  using Key = std::vector<GaussInt>;

  explicit ValueDistribution(std::size_t arity = 1) : arity_(arity) {}

  void add(const Key& key, std::uint64_t frequency = 1);
  void add(const GaussInt& value, std::uint64_t frequency = 1) { add(Key{value}, frequency); }
  void merge(const ValueDistribution& other);

  std::size_t arity() const { return arity_; }
  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t frequency(const Key& key) const;
  std::uint64_t frequency(const GaussInt& value) const { return frequency(Key{value}); }

  friend bool operator==(const ValueDistribution&, const ValueDistribution&) = default;

 private:
  std::size_t arity_;
  std::map<Key, std::uint64_t> entries_;
  std::uint64_t total_ = 0;
};

/// Distribution of S+ or S- over all 4^m pairs (a, b).
ValueDistribution sweep_s_distribution(const FieldCtx& ctx, SumSign which, unsigned workers = 0);

/// Distribution of chi(a, b) over b in T for a fixed a.
ValueDistribution chi_distribution(const FieldCtx& ctx, FieldElem a);

struct MomentFactor {
  Z4 shift;
  SumSign sign;
};
using MomentSpec = std::vector<MomentFactor>;

/// sum_{a in T\{0,1}} sum_{b in T} prod_j S_{sign_j}(u + shift_j), u = a + 2b.
/// Accumulated in 128 bits; throws std::overflow_error if the result does not
/// fit 64 bits.
GaussInt moment(const FieldCtx& ctx, const MomentSpec& spec, unsigned workers = 0);

/// Joint distribution of (S+(u + c_1), ..., S+(u + c_k)) over a in T\{0,1}, b in T.
ValueDistribution joint_distribution(const FieldCtx& ctx, std::span<const Z4> shifts, unsigned workers = 0);

struct NamedMoment {
  int group;  // sums sharing a group form one identity (e.g. both sides of an antisymmetry)
  MomentSpec spec;
};

/// The twelve moment sums with closed forms, in nine groups.
const std::vector<NamedMoment>& moment_identity_specs();
inline constexpr int kMomentGroups = 9;

/// "S+(u)S-(u+1)" style rendering.
std::string describe(const MomentSpec& spec);

}  // namespace z4codes
