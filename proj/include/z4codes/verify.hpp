#pragma once

// Enumeration-versus-prediction runs, one VerificationReport per sub-case.
// Shared by the command-line tool and the acceptance suite.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "z4codes/codelab.hpp"
#include "z4codes/io.hpp"
#include "z4codes/oracle.hpp"

namespace z4codes {

enum class Subject { lemma2, lemma4, lemma9, lemma10, moments, theorem1, theorem2, theorem3, identities, table2 };

std::optional<Subject> parse_subject(std::string_view name);
std::string subject_name(Subject s);
const std::vector<Subject>& all_subjects();

struct VerifyOptions {
  unsigned workers = 0;
  std::uint64_t seed = 0x5eed2024;
  int samples = 1000;  // random u per spec for the N0-N2 identities
  std::string reference_path = default_reference_table_path();
};

/// Throws OutOfTheoremScope (EvenM for even m) when m is outside the subject.
void check_scope(Subject s, int m, const VerifyOptions& opts = {});

std::vector<VerificationReport> run_subject(const FieldCtx& ctx, Subject s, const VerifyOptions& opts = {});

/// Enumerate one code: length, distinct codewords, type and distribution.
CodeReport analyse_code(const FieldCtx& ctx, const DefiningSetSpec& spec, unsigned workers = 0);

/// Compares a code against its closed form and checks 4^k1 2^k2 against the
/// codeword count.
VerificationReport check_code(const CodeReport& code, const ClosedFormPrediction& predicted);

/// Every family member the closed forms cover for theorem index 1..3.
std::vector<DefiningSetSpec> family_members(int theorem);

// Individual identity checks; each returns one report.
VerificationReport check_trace_paths(const FieldCtx& ctx);
VerificationReport check_chi_rotation(const FieldCtx& ctx);
VerificationReport check_chi_fast_path(const FieldCtx& ctx);
VerificationReport check_product_identity(const FieldCtx& ctx);
VerificationReport check_cubic_roots(const FieldCtx& ctx);
VerificationReport check_n_identities(const FieldCtx& ctx, int samples, std::uint64_t seed);
VerificationReport check_multiplicity(const FieldCtx& ctx, int samples, std::uint64_t seed, unsigned workers = 0);

}  // namespace z4codes
