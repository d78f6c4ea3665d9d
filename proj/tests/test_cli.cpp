#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with `args`, capturing stdout (stderr is discarded).
Run run(const std::string& args) {
  const std::string cmd = std::string(Z4CODES_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("construct prints parameters") {
    const Run r = run("construct --m 5 --set single:2");
    CHECK(r.code == 0);
    CHECK(r.out.find("n          10\n") != std::string::npos);
    CHECK(r.out.find("codewords  512\n") != std::string::npos);
    CHECK(r.out.find("d_L        6\n") != std::string::npos);
    CHECK(r.out.find("oracle     PASS") != std::string::npos);
  }

  TEST_CASE("construct json") {
    const Run r = run("construct --m 3 --set pair:0,2 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"codewords\": 32") != std::string::npos);
    CHECK(r.out.find("\"oracle\": \"PASS\"") != std::string::npos);
  }

  TEST_CASE("construct csv") {
    const Run r = run("construct --m 3 --set pair:0,2 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "lee_weight,frequency\n0,1\n2,15\n4,15\n6,1\n");
  }

  TEST_CASE("even m is exploratory") {
    const Run r = run("construct --m 4 --set single:0");
    CHECK(r.code == 0);
    CHECK(r.out.find("no oracle (even m)") != std::string::npos);
    CHECK(run("construct --m 6 --set pair:0,1 --format csv").code == 0);
  }

  TEST_CASE("output is identical across worker counts and runs") {
    const Run a = run("construct --m 7 --set complement:1 --format json --workers 1");
    const Run b = run("construct --m 7 --set complement:1 --format json --workers 6");
    const Run c = run("construct --m 7 --set complement:1 --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }

  TEST_CASE("--out writes the report to a file") {
    const std::string path = "cli_out_test.csv";
    std::remove(path.c_str());
    const Run r = run("construct --m 3 --set pair:0,2 --format csv --out " + path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "lee_weight,frequency");
    std::remove(path.c_str());
  }

  TEST_CASE("polynomial overrides") {
    CHECK(run("construct --m 5 --set single:2 --poly 0x2F").code == 0);
    CHECK(run("construct --m 5 --set single:2 --poly 0x21").code == 2);
    CHECK(run("construct --m 5 --set single:2 --poly zz").code == 2);
    const std::string path = "cli_poly_test.cfg";
    {
      std::ofstream cfg(path);
      cfg << "m=5 poly=0x2F\n";
    }
    const Run r = run("construct --m 5 --set single:2 --poly-file " + path);
    CHECK(r.code == 0);
    CHECK(r.out.find("poly       0x2F") != std::string::npos);
    {
      std::ofstream cfg(path);
      cfg << "m=5 poly=2F\n";
    }
    CHECK(run("construct --m 5 --set single:2 --poly-file " + path).code == 2);
    std::remove(path.c_str());
  }

  TEST_CASE("verify") {
    const Run t1 = run("verify --m 5 theorem1");
    CHECK(t1.code == 0);
    CHECK(count(t1.out, "PASS  m=5  theorem1") == 4);
    const Run mom = run("verify --m 7 moments");
    CHECK(mom.code == 0);
    CHECK(count(mom.out, "PASS  m=7  moment") == 9);
    CHECK(run("verify --m 3 theorem1").code == 2);
    CHECK(run("verify --m 4 lemma4").code == 2);
    CHECK(run("verify --m 5 nonsense").code == 2);
    const Run js = run("verify --m 3 lemma9 --format json");
    CHECK(js.code == 0);
    CHECK(js.out.find("\"status\": \"PASS\"") != std::string::npos);
  }

  TEST_CASE("batch") {
    const Run a = run("batch --m 3,5,7 --subjects lemma4,theorem2");
    CHECK(a.code == 0);
    CHECK(count(a.out, "    PASS ") == 6);
    CHECK(a.out.find("6 cells, all PASS") != std::string::npos);
    const Run b = run("batch --m 5,7,9 --subjects theorem1,theorem3 --format json");
    CHECK(b.code == 0);
    CHECK(count(b.out, "\"subject\": \"theorem1\"") == 3);
    CHECK(count(b.out, "\"subject\": \"theorem3\"") == 3);
    CHECK(run("batch --m 3,5 --subjects \"\"").code == 2);
    CHECK(run("batch --m 3,4 --subjects lemma4").code == 2);
  }

  TEST_CASE("usage errors") {
    CHECK(run("").code == 2);
    CHECK(run("construct --m 5").code == 2);
    CHECK(run("construct --m 16 --set single:0").code == 2);
    CHECK(run("construct --m 5 --set pair:1,1").code == 2);
    CHECK(run("construct --m 1 --set single:2").code == 2);
    CHECK(run("construct --m 5 --set single:0 --format xml").code == 2);
    CHECK(run("--help").code == 0);
  }

  TEST_CASE("sweep exports distributions") {
    const Run r = run("sweep --m 3 --kind plus --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "value_re,value_im,frequency\n-4,0,14\n0,0,7\n4,0,42\n16,0,1\n");
  }
}
