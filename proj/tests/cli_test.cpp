#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using wilsonlab::cli::Environment;
using wilsonlab::cli::kExitMismatch;
using wilsonlab::cli::kExitOk;
using wilsonlab::cli::kExitUsage;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const Environment& env = {}) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = wilsonlab::cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval") {
    auto r = invoke({"eval", "--kind", "double", "--n", "9"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "6\n");

    r = invoke({"eval", "--kind", "double", "--n", "9", "--engine", "both"});
    CHECK(r.out == "oracle=6 closed=6 AGREE\n");

    CHECK(invoke({"eval", "--kind", "double", "--n", "12", "--engine", "closed"}).out == "3\n");
    CHECK(invoke({"eval", "--kind", "double", "--n", "48", "--engine", "closed"}).out == "33\n");
    CHECK(invoke({"eval", "--kind", "factorial", "--n", "5"}).out == "4\n");
    CHECK(invoke({"eval", "--kind", "hyper", "--n", "5"}).out == "3\n");
    CHECK(invoke({"eval", "--kind", "super", "--n", "7"}).out == "6\n");
    CHECK(invoke({"eval", "--kind", "sub", "--n", "5"}).out == "4\n");
    CHECK(invoke({"eval", "--kind", "unit-product", "--n", "18", "--engine", "both"}).out ==
          "oracle=17 closed=17 AGREE\n");
    CHECK(invoke({"eval", "--kind", "gauss", "--n", "9", "--base", "2", "--modulus", "1000"}).out == "105\n");
    CHECK(invoke({"eval", "--kind", "factorial", "--n", "10", "--modulus", "7"}).out == "0\n");
  }

  TEST_CASE("eval errors") {
    CHECK(invoke({"eval", "--kind", "double", "--n", "9", "--modulus", "7", "--engine", "closed"}).code ==
          kExitUsage);
    CHECK(invoke({"eval", "--kind", "triple", "--n", "9"}).code == kExitUsage);
    CHECK(invoke({"eval", "--kind", "double"}).code == kExitUsage);
    CHECK(invoke({"eval", "--kind", "hyper", "--n", "9", "--engine", "closed"}).code == kExitUsage);
    CHECK(invoke({"eval", "--kind", "double", "--n", "0"}).code == kExitUsage);
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"frobnicate"}).code == kExitUsage);
  }

  TEST_CASE("help exits zero") {
    const auto r = invoke({"--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("scan") != std::string::npos);
  }

  TEST_CASE("scan") {
    auto r = invoke({"scan", "--from", "2", "--to", "200", "--kinds", "all", "--stable"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("mismatch=0") != std::string::npos);

    r = invoke({"scan", "--from", "9", "--to", "10", "--kinds", "double", "--format", "csv", "--stable"});
    CHECK(r.code == kExitOk);
    CHECK(r.out ==
          "n,kind,modulus,oracle,closed,agree,skipped\r\n"
          "9,double,9,6,6,true,false\r\n"
          "10,double,10,5,5,true,false\r\n");
    CHECK(r.err == "checked=2 agree=2 skipped=0 mismatch=0\n");

    r = invoke({"scan", "--from", "9", "--to", "9", "--kinds", "double", "--format", "jsonl", "--stable"});
    CHECK(r.out == "{\"n\":9,\"kind\":\"double\",\"modulus\":9,\"oracle\":6,\"closed\":6,\"agree\":true,\"skipped\":false}\n");

    r = invoke({"scan", "--from", "2", "--to", "50", "--kinds", "double", "--format", "jsonl"});
    CHECK(r.out.find("oracle_ns") != std::string::npos);
    CHECK(r.err.find("timing kind=double") != std::string::npos);
  }

  TEST_CASE("scan errors") {
    CHECK(invoke({"scan", "--from", "5", "--to", "4"}).code == kExitUsage);
    CHECK(invoke({"scan", "--from", "1", "--to", "4"}).code == kExitUsage);
    CHECK(invoke({"scan", "--kinds", "nope", "--to", "10"}).code == kExitUsage);
    CHECK(invoke({"scan", "--format", "xml"}).code == kExitUsage);
    CHECK(invoke({"scan", "--workers", "0"}).code == kExitUsage);
    CHECK(invoke({"scan", "--to", "10", "--out", "/nonexistent-dir/x.jsonl"}).code == kExitUsage);
    // Nothing is written before a bad range is rejected.
    const auto r = invoke({"scan", "--from", "5", "--to", "4", "--format", "csv"});
    CHECK(r.out.empty());
  }

  TEST_CASE("scan --list-kinds") {
    const auto r = invoke({"scan", "--list-kinds"});
    CHECK(r.code == kExitOk);
    CHECK(r.out ==
          "wilson\ndouble\nsuper-double\nhyper\nsub\ngauss-wilson\nhalf-square\nlegendre-form\n"
          "matrix-det\nmatrix-diag\ngiuga\nnu-mu-corollary\n");
  }

  TEST_CASE("scan writes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "wilsonlab_cli_test.jsonl";
    const auto r = invoke({"scan", "--to", "20", "--kinds", "wilson", "--format", "jsonl", "--stable", "--out",
                           path.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    CHECK(r.err == "checked=19 agree=19 skipped=0 mismatch=0\n");
    std::ifstream in(path);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
      ++lines;
    }
    CHECK(lines == 19);
    std::filesystem::remove(path);
  }

  TEST_CASE("stable scans are byte-identical across worker counts") {
    const auto a = invoke({"scan", "--to", "3000", "--kinds", "all", "--format", "jsonl", "--stable", "--workers", "1"});
    const auto b = invoke({"scan", "--to", "3000", "--kinds", "all", "--format", "jsonl", "--stable", "--workers", "8"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }

  TEST_CASE("matrix") {
    auto r = invoke({"matrix", "--p", "5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out ==
          "det=3 sf(4) mod 5=3 AGREE\n"
          "diag=3 H(4) mod 5=3 AGREE\n"
          "giuga=4 n-1=4 prime=yes AGREE\n");
    CHECK(invoke({"matrix", "--p", "3", "--check", "det"}).out == "det=2 sf(2) mod 3=2 AGREE\n");
    CHECK(invoke({"matrix", "--p", "9", "--check", "giuga"}).out.find("prime=no AGREE") != std::string::npos);
    CHECK(invoke({"matrix", "--p", "4"}).code == kExitUsage);
    CHECK(invoke({"matrix", "--p", "503"}).code == kExitUsage);
    CHECK(invoke({"matrix", "--p", "503", "--cap", "503", "--check", "det"}).code == kExitOk);
    CHECK(invoke({"matrix", "--p", "7", "--check", "trace"}).code == kExitUsage);
  }

  TEST_CASE("stats") {
    CHECK(invoke({"stats", "--p", "7"}).out == "p=7 nu=1 N=1 mu=1 df_nu=6 df=6 oracle=6 AGREE\n");
    CHECK(invoke({"stats", "--p", "13"}).out == "p=13 nu=2 N=3 mu=1 i_p=5 df=8 oracle=8 AGREE\n");
    CHECK(invoke({"stats", "--p", "11"}).out == "p=11 nu=0 N=1 mu=3 df_nu=1 df=1 oracle=1 AGREE\n");
    CHECK(invoke({"stats", "--p", "9"}).code == kExitUsage);
    CHECK(invoke({"stats", "--p", "2"}).code == kExitUsage);
  }

  TEST_CASE("modulus cap from the environment") {
    const Environment capped{std::string("1000")};
    CHECK(invoke({"eval", "--kind", "double", "--n", "999"}, capped).code == kExitOk);
    CHECK(invoke({"eval", "--kind", "double", "--n", "1001"}, capped).code == kExitUsage);
    CHECK(invoke({"scan", "--to", "1001", "--kinds", "wilson"}, capped).code == kExitUsage);
    CHECK(invoke({"stats", "--p", "1009"}, capped).code == kExitUsage);
    CHECK(invoke({"eval", "--kind", "double", "--n", "9"}, Environment{std::string("abc")}).code == kExitUsage);
    CHECK(invoke({"eval", "--kind", "double", "--n", "9"}, Environment{std::string("1")}).code == kExitUsage);
  }
}
