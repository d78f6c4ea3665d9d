// z4codes: construct trace codes over GR(4,m), enumerate their Lee weight
// distributions and check them against the closed forms.
//
// Exit codes: 0 pass or exploratory, 2 usage or scope, 3 verification
// failure, 4 internal error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "z4codes/errors.hpp"
#include "z4codes/expsum.hpp"
#include "z4codes/io.hpp"
#include "z4codes/verify.hpp"

using namespace z4codes;

namespace {

constexpr int kPass = 0;
constexpr int kUsage = 2;
constexpr int kFail = 3;
constexpr int kInternal = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string poly_hex;
  std::string poly_file;
  std::string format = "table";
  std::string out_path;
  unsigned workers = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--poly", c.poly_hex, "defining polynomial as a hex bitmask, e.g. 0x25");
  cmd->add_option("--poly-file", c.poly_file, "config file with lines m=<int> poly=0x<hex>");
  cmd->add_option("--format", c.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--out", c.out_path, "write the report to this file instead of stdout");
  cmd->add_option("--workers", c.workers, "worker threads (0 = all cores)");
}

void check_m(int m) {
  if (m < 1 || m > FieldCtx::kMaxDegree) throw UsageError("--m must be in 1..15, got " + std::to_string(m));
}

FieldCtx make_ctx(int m, const Common& c) {
  check_m(m);
  std::map<int, std::uint32_t> overrides;
  if (!c.poly_file.empty()) {
    std::ifstream in(c.poly_file);
    if (!in) throw UsageError("cannot open " + c.poly_file);
    overrides = parse_poly_config(in);
  }
  if (!c.poly_hex.empty()) {
    std::uint32_t poly = 0;
    try {
      std::size_t used = 0;
      poly = static_cast<std::uint32_t>(std::stoul(c.poly_hex, &used, 16));
      if (used != c.poly_hex.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::logic_error&) {
      throw UsageError("--poly must be a hex bitmask such as 0x25");
    }
    overrides[m] = poly;
  }
  return FieldCtx(m, resolve_poly(m, overrides));
}

// Runs `emit` against stdout or the --out file.
template <class Emit>
void with_output(const Common& c, Emit emit) {
  if (c.out_path.empty()) {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + c.out_path);
  emit(out);
}

void print_report_line(std::ostream& out, const VerificationReport& r) {
  out << (r.pass ? "PASS" : "FAIL") << "  m=" << r.m << "  " << r.subject << "  (" << std::fixed << std::setprecision(1)
      << r.runtime_ms << " ms)\n";
  for (const auto& d : r.diffs) out << "    " << d.key << ": predicted " << d.predicted << ", enumerated " << d.enumerated << '\n';
}

void write_reports_csv(std::ostream& out, const std::vector<VerificationReport>& reports) {
  out << "status,m,subject,diffs,runtime_ms\n";
  for (const auto& r : reports)
    out << (r.pass ? "PASS" : "FAIL") << ',' << r.m << ",\"" << r.subject << "\"," << r.diffs.size() << ',' << std::fixed
        << std::setprecision(3) << r.runtime_ms << '\n';
}

int cmd_construct(int m, const std::string& set, const Common& c) {
  DefiningSetSpec spec = DefiningSetSpec::single(0);
  try {
    spec = DefiningSetSpec::parse(set);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--set: ") + e.what());
  }
  const FieldCtx ctx = make_ctx(m, c);
  CodeReport report;
  try {
    report = analyse_code(ctx, spec, c.workers);
  } catch (const EmptyDefiningSet& e) {
    throw UsageError(e.what());
  }

  std::string oracle_status;
  std::optional<VerificationReport> check;
  try {
    check = check_code(report, predict(m, spec));
    oracle_status = check->pass ? "PASS" : "FAIL";
  } catch (const EvenM&) {
    oracle_status = "no oracle (even m)";
  } catch (const OutOfTheoremScope& e) {
    oracle_status = std::string("no oracle (") + e.what() + ")";
  }

  with_output(c, [&](std::ostream& out) {
    if (c.format == "json") {
      auto j = to_json(report);
      j["oracle"] = oracle_status;
      out << j.dump(2) << '\n';
    } else if (c.format == "csv") {
      write_weight_csv(out, report.distribution);
    } else {
      write_code_table(out, report);
      out << "\noracle     " << oracle_status << '\n';
      if (check)
        for (const auto& d : check->diffs)
          out << "    " << d.key << ": predicted " << d.predicted << ", enumerated " << d.enumerated << '\n';
    }
  });
  if (c.format != "table") {
    std::cerr << "oracle: " << oracle_status << '\n';
    if (check)
      for (const auto& d : check->diffs)
        std::cerr << "  " << d.key << ": predicted " << d.predicted << ", enumerated " << d.enumerated << '\n';
  }
  return check && !check->pass ? kFail : kPass;
}

std::vector<Subject> parse_subjects(const std::vector<std::string>& names) {
  std::vector<Subject> out;
  for (const auto& n : names) {
    if (n.empty()) continue;
    const auto s = parse_subject(n);
    if (!s) throw UsageError("unknown subject '" + n + "'");
    out.push_back(*s);
  }
  if (out.empty()) throw UsageError("no subjects given");
  return out;
}

int cmd_verify(int m, const std::vector<std::string>& names, const Common& c) {
  const auto subjects = parse_subjects(names);
  const FieldCtx ctx = make_ctx(m, c);
  VerifyOptions opts;
  opts.workers = c.workers;
  for (Subject s : subjects) check_scope(s, m, opts);
  std::vector<VerificationReport> reports;
  for (Subject s : subjects)
    for (auto& r : run_subject(ctx, s, opts)) reports.push_back(std::move(r));
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  with_output(c, [&](std::ostream& out) {
    if (c.format == "json") {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
    } else if (c.format == "csv") {
      write_reports_csv(out, reports);
    } else {
      for (const auto& r : reports) print_report_line(out, r);
      out << (pass ? "all PASS" : "FAIL") << '\n';
    }
  });
  return pass ? kPass : kFail;
}

int cmd_batch(const std::vector<int>& ms, const std::vector<std::string>& names, const Common& c) {
  if (ms.empty()) throw UsageError("no m values given");
  const auto subjects = parse_subjects(names);
  VerifyOptions opts;
  opts.workers = c.workers;
  for (int m : ms) {
    check_m(m);
    for (Subject s : subjects) check_scope(s, m, opts);
  }

  struct Cell {
    int m;
    Subject subject;
    bool pass;
    double ms;
    std::vector<VerificationReport> reports;
  };
  std::vector<Cell> cells;
  for (int m : ms) {
    const FieldCtx ctx = make_ctx(m, c);
    for (Subject s : subjects) {
      const auto start = std::chrono::steady_clock::now();
      auto reports = run_subject(ctx, s, opts);
      const double ms_taken = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.pass;
      cells.push_back({m, s, ok, ms_taken, std::move(reports)});
    }
  }
  bool pass = true;
  for (const auto& cell : cells) pass = pass && cell.pass;

  with_output(c, [&](std::ostream& out) {
    if (c.format == "json") {
      nlohmann::ordered_json j;
      j["status"] = pass ? "PASS" : "FAIL";
      auto arr = nlohmann::ordered_json::array();
      for (const auto& cell : cells) {
        nlohmann::ordered_json e;
        e["m"] = cell.m;
        e["subject"] = subject_name(cell.subject);
        e["status"] = cell.pass ? "PASS" : "FAIL";
        e["runtime_ms"] = cell.ms;
        auto reps = nlohmann::ordered_json::array();
        for (const auto& r : cell.reports) reps.push_back(to_json(r));
        e["cases"] = std::move(reps);
        arr.push_back(std::move(e));
      }
      j["cells"] = std::move(arr);
      out << j.dump(2) << '\n';
    } else if (c.format == "csv") {
      out << "m,subject,status,runtime_ms\n";
      for (const auto& cell : cells)
        out << cell.m << ',' << subject_name(cell.subject) << ',' << (cell.pass ? "PASS" : "FAIL") << ',' << std::fixed
            << std::setprecision(3) << cell.ms << '\n';
    } else {
      for (const auto& cell : cells) {
        out << std::left << std::setw(4) << ("m=" + std::to_string(cell.m)) << "  " << std::setw(10)
            << subject_name(cell.subject) << "  " << (cell.pass ? "PASS" : "FAIL") << "  " << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << cell.ms << " ms\n";
        if (!cell.pass)
          for (const auto& r : cell.reports)
            if (!r.pass) print_report_line(out, r);
      }
      out << cells.size() << " cells, " << (pass ? "all PASS" : "some FAIL") << '\n';
    }
  });
  return pass ? kPass : kFail;
}

int cmd_sweep(int m, const std::string& kind, const Common& c) {
  const FieldCtx ctx = make_ctx(m, c);
  ValueDistribution dist(1);
  if (kind == "plus" || kind == "minus") {
    dist = sweep_s_distribution(ctx, kind == "plus" ? SumSign::plus : SumSign::minus, c.workers);
  } else if (kind == "pair") {
    const std::array<Z4, 2> shifts{Z4(0), Z4(2)};
    dist = joint_distribution(ctx, shifts, c.workers);
  } else {
    const std::array<Z4, 4> shifts{Z4(0), Z4(1), Z4(2), Z4(3)};
    dist = joint_distribution(ctx, shifts, c.workers);
  }
  with_output(c, [&](std::ostream& out) {
    if (c.format == "json") {
      out << to_json(dist).dump(2) << '\n';
    } else if (c.format == "csv") {
      write_distribution_csv(out, dist);
    } else {
      for (const auto& [key, f] : dist.entries()) out << std::setw(24) << key_to_string(key) << "  " << f << '\n';
      out << "total " << dist.total() << '\n';
    }
  });
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace codes over GR(4,m): construction, Lee weight enumeration, closed-form checks"};
  app.require_subcommand(1);

  Common common;
  int m = 0;
  std::string set;
  auto* construct = app.add_subcommand("construct", "build one code and print its parameters and weight distribution");
  construct->add_option("--m", m, "extension degree (1..15)")->required();
  construct->add_option("--set", set, "single:t | pair:t1,t2 | complement:t")->required();
  add_common(construct, common);

  std::vector<std::string> verify_subjects;
  auto* verify = app.add_subcommand("verify", "enumerate and compare against the closed forms");
  verify->add_option("--m", m, "odd extension degree")->required();
  verify->add_option("subjects", verify_subjects, "lemma2 lemma4 lemma9 lemma10 moments theorem1 theorem2 theorem3 identities table2")
      ->required();
  add_common(verify, common);

  std::vector<int> batch_ms;
  std::vector<std::string> batch_subjects;
  auto* batch = app.add_subcommand("batch", "verify a grid of (m, subject) cells");
  batch->add_option("--m", batch_ms, "comma-separated odd m values")->delimiter(',')->required();
  batch->add_option("--subjects", batch_subjects, "comma-separated subjects")->delimiter(',')->required();
  add_common(batch, common);

  std::string kind = "plus";
  auto* sweep = app.add_subcommand("sweep", "export a value distribution of S+/S- (no comparison)");
  sweep->add_option("--m", m, "extension degree (1..15)")->required();
  sweep->add_option("--kind", kind, "plus, minus, pair or quadruple")
      ->check(CLI::IsMember({"plus", "minus", "pair", "quadruple"}));
  add_common(sweep, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*construct) return cmd_construct(m, set, common);
    if (*verify) return cmd_verify(m, verify_subjects, common);
    if (*batch) return cmd_batch(batch_ms, batch_subjects, common);
    return cmd_sweep(m, kind, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OutOfTheoremScope& e) {
    std::cerr << "out of scope: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidPolynomial& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
