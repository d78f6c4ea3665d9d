#pragma once

// Text, CSV and JSON renderings. Every integer is written exactly and no
// timing data goes into code reports, so output is byte-reproducible.

#include <cstdint>
#include <optional>
#include <ostream>

#include <json.hpp>

#include "z4codes/codelab.hpp"
#include "z4codes/expsum.hpp"
#include "z4codes/oracle.hpp"

namespace z4codes {

struct CodeReport {
  int m = 0;
  std::uint32_t poly = 0;
  DefiningSetSpec spec = DefiningSetSpec::single(0);
  std::size_t n = 0;
  std::uint64_t codewords = 0;
  int k1 = 0;
  int k2 = 0;
  std::optional<std::uint64_t> d_lee;  // empty for the zero code
  WeightDistribution distribution;
};

std::string hex_poly(std::uint32_t poly);

void write_weight_csv(std::ostream& out, const WeightDistribution& dist);
nlohmann::ordered_json to_json(const CodeReport& report);
void write_code_table(std::ostream& out, const CodeReport& report);

void write_distribution_csv(std::ostream& out, const ValueDistribution& dist);
nlohmann::ordered_json to_json(const ValueDistribution& dist);

nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace z4codes
