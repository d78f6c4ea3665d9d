#include <doctest.h>

#include <sstream>

#include "z4codes/io.hpp"
#include "z4codes/verify.hpp"

using namespace z4codes;

TEST_SUITE("io") {
  TEST_CASE("weight csv") {
    WeightDistribution d;
    d.add(6, 1);
    d.add(0, 1);
    d.add(2, 15);
    std::ostringstream out;
    write_weight_csv(out, d);
    CHECK(out.str() == "lee_weight,frequency\n0,1\n2,15\n6,1\n");
  }

  TEST_CASE("code report json has the fixed key order") {
    const CodeReport r = analyse_code(FieldCtx(3), DefiningSetSpec::pair(0, 2), 1);
    CHECK(to_json(r).dump() ==
          R"({"m":3,"poly":"0xB","spec":"pair:0,2","n":4,"codewords":32,"k1":2,"k2":1,"d_lee":2,)"
          R"("distribution":[[0,1],[2,15],[4,15],[6,1]]})");
  }

  TEST_CASE("code table right-aligns") {
    const CodeReport r = analyse_code(FieldCtx(3), DefiningSetSpec::pair(0, 2), 1);
    std::ostringstream out;
    write_code_table(out, r);
    const std::string s = out.str();
    CHECK(s.find("type       4^2 2^1\n") != std::string::npos);
    CHECK(s.find("weight  frequency\n     0          1\n     2         15\n") != std::string::npos);
  }

  TEST_CASE("zero code reports no distance") {
    const CodeReport r = analyse_code(FieldCtx(3), DefiningSetSpec::single(0), 1);
    CHECK_FALSE(r.d_lee.has_value());
    CHECK(to_json(r)["d_lee"].is_null());
  }

  TEST_CASE("distribution csv and json") {
    ValueDistribution one(1);
    one.add(GaussInt{-4}, 14);
    one.add(GaussInt{0, 4}, 28);
    std::ostringstream a;
    write_distribution_csv(a, one);
    CHECK(a.str() == "value_re,value_im,frequency\n-4,0,14\n0,4,28\n");
    CHECK(to_json(one).dump() ==
          R"([{"value_re":-4,"value_im":0,"frequency":14},{"value_re":0,"value_im":4,"frequency":28}])");

    ValueDistribution two(2);
    two.add({GaussInt{8}, GaussInt{-8}}, 240);
    std::ostringstream b;
    write_distribution_csv(b, two);
    CHECK(b.str() == "v1_re,v1_im,v2_re,v2_im,frequency\n8,0,-8,0,240\n");
    CHECK(to_json(two).dump() == R"([{"v1_re":8,"v1_im":0,"v2_re":-8,"v2_im":0,"frequency":240}])");
  }

  TEST_CASE("verification report json") {
    VerificationReport r;
    r.pass = false;
    r.m = 5;
    r.subject = "theorem1 single:2";
    r.diffs.push_back({"weight 6", "80", "79"});
    r.runtime_ms = 1.5;
    CHECK(to_json(r).dump() ==
          R"({"status":"FAIL","m":5,"subject":"theorem1 single:2","diffs":[{"key":"weight 6","predicted":"80",)"
          R"("enumerated":"79"}],"runtime_ms":1.5})");
  }

  TEST_CASE("hex_poly") {
    CHECK(hex_poly(0x25) == "0x25");
    CHECK(hex_poly(0x201B) == "0x201B");
  }
}
