#include "z4codes/io.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <string>
#include <vector>

namespace z4codes {

std::string hex_poly(std::uint32_t poly) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%X", poly);
  return buf;
}

void write_weight_csv(std::ostream& out, const WeightDistribution& dist) {
  out << "lee_weight,frequency\n";
  for (const auto& [w, f] : dist.entries) out << w << ',' << f << '\n';
}

nlohmann::ordered_json to_json(const CodeReport& r) {
  nlohmann::ordered_json j;
  j["m"] = r.m;
  j["poly"] = hex_poly(r.poly);
  j["spec"] = r.spec.to_string();
  j["n"] = r.n;
  j["codewords"] = r.codewords;
  j["k1"] = r.k1;
  j["k2"] = r.k2;
  j["d_lee"] = r.d_lee ? nlohmann::ordered_json(*r.d_lee) : nlohmann::ordered_json(nullptr);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [w, f] : r.distribution.entries) rows.push_back({w, f});
  j["distribution"] = std::move(rows);
  return j;
}

void write_code_table(std::ostream& out, const CodeReport& r) {
  out << "m          " << r.m << '\n'
      << "poly       " << hex_poly(r.poly) << '\n'
      << "spec       " << r.spec.to_string() << '\n'
      << "n          " << r.n << '\n'
      << "codewords  " << r.codewords << '\n'
      << "type       4^" << r.k1 << " 2^" << r.k2 << '\n'
      << "d_L        " << (r.d_lee ? std::to_string(*r.d_lee) : std::string("-")) << '\n';
  std::size_t ww = std::string("weight").size(), fw = std::string("frequency").size();
  for (const auto& [w, f] : r.distribution.entries) {
    ww = std::max(ww, std::to_string(w).size());
    fw = std::max(fw, std::to_string(f).size());
  }
  out << '\n' << std::setw(static_cast<int>(ww)) << "weight" << "  " << std::setw(static_cast<int>(fw)) << "frequency"
      << '\n';
  for (const auto& [w, f] : r.distribution.entries)
    out << std::setw(static_cast<int>(ww)) << w << "  " << std::setw(static_cast<int>(fw)) << f << '\n';
}

void write_distribution_csv(std::ostream& out, const ValueDistribution& dist) {
  if (dist.arity() == 1) {
    out << "value_re,value_im,frequency\n";
  } else {
    for (std::size_t k = 1; k <= dist.arity(); ++k) out << 'v' << k << "_re,v" << k << "_im,";
    out << "frequency\n";
  }
  for (const auto& [key, f] : dist.entries()) {
    for (const auto& v : key) out << v.re << ',' << v.im << ',';
    out << f << '\n';
  }
}

nlohmann::ordered_json to_json(const ValueDistribution& dist) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [key, f] : dist.entries()) {
    nlohmann::ordered_json row;
    if (dist.arity() == 1) {
      row["value_re"] = key[0].re;
      row["value_im"] = key[0].im;
    } else {
      for (std::size_t k = 0; k < key.size(); ++k) {
        row["v" + std::to_string(k + 1) + "_re"] = key[k].re;
        row["v" + std::to_string(k + 1) + "_im"] = key[k].im;
      }
    }
    row["frequency"] = f;
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["status"] = r.pass ? "PASS" : "FAIL";
  j["m"] = r.m;
  j["subject"] = r.subject;
  auto diffs = nlohmann::ordered_json::array();
  for (const auto& d : r.diffs) diffs.push_back({{"key", d.key}, {"predicted", d.predicted}, {"enumerated", d.enumerated}});
  j["diffs"] = std::move(diffs);
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

}  // namespace z4codes
