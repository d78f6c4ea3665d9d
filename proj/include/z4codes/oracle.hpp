#pragma once

// Closed-form predictions for odd m: the sign constants tau and sigma, the
// weight tables of the three code families, the value distributions of the
// exponential sums and their moments, plus the exact comparison engine.

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z4codes/codelab.hpp"
#include "z4codes/expsum.hpp"
#include "z4codes/gauss_int.hpp"

namespace z4codes {

struct TauSigma {
  int m = 0;
  GaussInt tau;   // always +1 or -1
  int sigma = 0;  // 0 if 3 does not divide m, else -3
};

/// Throws EvenM for even m and OutOfTheoremScope for m < 3.
TauSigma tau_sigma(int m);

struct ClosedFormPrediction {
  int m = 0;
  DefiningSetSpec spec = DefiningSetSpec::single(0);
  std::int64_t n = 0;
  std::uint64_t codeword_count = 0;
  std::int64_t d_lee = 0;
  /// Table rows after expanding the +/- rows, in table order. Rows whose
  /// weights coincide at a particular m stay separate here.
  std::vector<std::pair<std::int64_t, std::int64_t>> table;

  /// Rows merged by weight, zero frequencies dropped.
  WeightDistribution distribution() const;
};

/// Family index used by the reference table: 1 single, 2 pair, 3 complement.
int theorem_for(const DefiningSetSpec& spec);

/// Throws OutOfTheoremScope for even m, m below the theorem's bound, m > 15
/// or mixed-parity pairs.
ClosedFormPrediction predict(int m, const DefiningSetSpec& spec);

enum class LemmaDistribution {
  chi_nonzero_a,  // chi(a, b) over b for a fixed a != 0
  s_plus,         // S+ over all (a, b)
  s_minus,        // S- over all (a, b)
  s_pair,         // (S+(u), S+(u+2)), a in T\{0,1}
  s_quadruple,    // (S+(u), S+(u+1), S+(u+2), S+(u+3)), a in T\{0,1}
};

ValueDistribution predict_lemma(int m, LemmaDistribution which);

/// x_1 ... x_16 of the quadruple table (index 0 holds x_1).
std::array<std::int64_t, 16> quadruple_frequencies(int m);

/// Right-hand side for one of moment_identity_specs(); OutOfTheoremScope for
/// any other factor list.
GaussInt predict_moment(int m, const MomentSpec& spec);

struct ReferenceRow {
  int m = 0;
  int n = 0;
  int k1 = 0;
  int k2 = 0;
  std::optional<int> best_known_dl;
  int our_dl = 0;
  int theorem = 0;
};

/// CSV with header `m,n,k1,k2,best_known_dL,our_dL,theorem`; an empty
/// best_known_dL field means no code of that length and type was listed.
std::vector<ReferenceRow> parse_reference_table(std::istream& in);
std::vector<ReferenceRow> load_reference_table(const std::string& path);
/// Path of the bundled snapshot.
std::string default_reference_table_path();

struct Diff {
  std::string key;
  std::string predicted;
  std::string enumerated;
};

struct VerificationReport {
  bool pass = true;
  int m = 0;
  std::string subject;
  std::vector<Diff> diffs;
  double runtime_ms = 0;
};

/// Exact comparisons; no tolerance anywhere.
VerificationReport compare(const ClosedFormPrediction& predicted, std::int64_t n, const WeightDistribution& enumerated);
VerificationReport compare(const ValueDistribution& predicted, const ValueDistribution& enumerated);
VerificationReport compare(const GaussInt& predicted, const GaussInt& enumerated);

/// "(8,-8)" / "-2+2i" rendering of a distribution key.
std::string key_to_string(const ValueDistribution::Key& key);

}  // namespace z4codes
