#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <cousin/cli.hpp>

#include "test_util.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult result;
  result.code = cousin::cli_run(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace

TEST_CASE("markdown operator table is byte stable", "[cli]") {
  CliResult r = run_cli({"slopes", "table", "--preset", "GSp4", "--variant",
                         "ss", "--format", "md"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out ==
          "| operator | Id | s1 | s1s0 | s1s0s1 |\n"
          "|---|---|---|---|---|\n"
          "| U2 | 3 | k2+1 | k2+1 | k1+k2 |\n"
          "| U1 | k2+3 | k2+3 | k1+2*k2 | k1+2*k2 |\n");
  // Two invocations agree byte for byte.
  REQUIRE(run_cli({"slopes", "table", "--preset", "GSp4", "--variant", "ss",
                   "--format", "md"})
              .out == r.out);

  CliResult weak = run_cli({"slopes", "table", "--preset", "GSp4", "--variant",
                            "sss", "--format", "md"});
  REQUIRE(weak.out ==
          "| operator | Id | s1 | s1s0 | s1s0s1 |\n"
          "|---|---|---|---|---|\n"
          "| U2 | 3 | k2 | k2 | k1+k2 |\n"
          "| U1 | k2+3 | k2+3 | k1+2*k2 | k1+2*k2 |\n");
}

TEST_CASE("json and markdown outputs carry the same table", "[cli]") {
  CliResult r = run_cli({"slopes", "table", "--preset", "GSp4", "--variant",
                         "ss", "--format", "json"});
  REQUIRE(r.code == 0);
  cousin::json data = cousin::json::parse(r.out);
  REQUIRE(data["genus"] == 2);
  REQUIRE(data["variant"] == "ss");
  REQUIRE(data["columns"] ==
          cousin::json::array({"Id", "s1", "s1s0", "s1s0s1"}));
  REQUIRE(data["rows"][0]["operator"] == "U2");
  REQUIRE(data["rows"][0]["sign_class"] == "T+");
  REQUIRE(data["rows"][0]["cells"] ==
          cousin::json::array({"3", "k2+1", "k2+1", "k1+k2"}));
  REQUIRE(data["rows"][1]["cells"] ==
          cousin::json::array({"k2+3", "k2+3", "k1+2*k2", "k1+2*k2"}));
}

TEST_CASE("group listing output", "[cli]") {
  CliResult r = run_cli({"weyl", "--preset", "GSp4", "--levi", "0",
                         "--list-kostant"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out ==
          "Id  length=0  ell+=0  ell-=3\n"
          "s1  length=1  ell+=1  ell-=2\n"
          "s1s0  length=2  ell+=2  ell-=1\n"
          "s1s0s1  length=3  ell+=3  ell-=0\n");
}

TEST_CASE("flag-variety cohomology reports", "[cli]") {
  CliResult none = run_cli({"cousin", "bwb", "--preset", "A1", "--kappa", "-1"});
  REQUIRE(none.code == 0);
  REQUIRE(cousin::json::parse(none.out) ==
          cousin::json{{"result", nullptr}});

  CliResult hit = run_cli({"cousin", "bwb", "--preset", "C2", "--kappa",
                           "5,3,-8"});
  REQUIRE(hit.code == 0);
  cousin::json data = cousin::json::parse(hit.out);
  REQUIRE(data["result"]["w"] == "s1s0s1");
  REQUIRE(data["result"]["degree"] == 3);
  REQUIRE(data["result"]["dimension"] == 10);
  REQUIRE(data["result"]["weight"] == cousin::json::array({0, -2, -8}));
}

TEST_CASE("slope condition verdicts", "[cli]") {
  CliResult ok = run_cli({"slopes", "cond", "--preset", "GSp4", "--levi", "0",
                          "--kind", "ss", "--flavor", "M", "--sign", "+",
                          "--kappa", "5,3,-8", "--lambda", "-3,3,-8"});
  REQUIRE(ok.code == 0);
  REQUIRE(ok.out == "satisfied\n");

  CliResult bad = run_cli({"slopes", "cond", "--preset", "GSp4", "--levi", "0",
                           "--kind", "ss", "--flavor", "M", "--sign", "+",
                           "--kappa", "5,3,-8", "--lambda", "-2,2,-8"});
  REQUIRE(bad.code == 0);
  REQUIRE(bad.out == "violated\nviolated at s1\n");
}

TEST_CASE("slope bound and character outputs", "[cli]") {
  CliResult bound = run_cli({"slopes", "bound", "--preset", "GSp4", "--levi",
                             "0", "--w", "s1", "--kappa", "5,3,-8"});
  REQUIRE(bound.code == 0);
  REQUIRE(bound.out == "(-2,2,-8)\n");

  CliResult chr = run_cli({"char", "verma", "--preset", "A1", "--weight", "0",
                           "--depth", "3"});
  REQUIRE(chr.code == 0);
  REQUIRE(chr.out == "(0)  1\n(-2)  1\n(-4)  1\n(-6)  1\n");
}

TEST_CASE("polygon and slope-dimension outputs", "[cli]") {
  CliResult poly = run_cli({"newton", "poly", "--p", "3", "--coeffs", "3,-4,1"});
  REQUIRE(poly.code == 0);
  REQUIRE(poly.out ==
          "ord 0, degree 2\n"
          "slope -1 length 1\n"
          "slope 0 length 1\n"
          "valuation 1 x1\n"
          "valuation 0 x1\n");

  CliResult dim = run_cli({"newton", "slopedim", "--p", "5", "--matrix",
                           R"([["1",0,0],[0,"1/5",0],[0,0,"25"]])", "--h", "1"});
  REQUIRE(dim.code == 0);
  REQUIRE(dim.out == "2\n");
}

TEST_CASE("degree-range reports", "[cli]") {
  CliResult ranges = run_cli({"cousin", "ranges", "--preset", "GSp4", "--levi",
                              "0", "--kappa", "5,3,-8"});
  REQUIRE(ranges.code == 0);
  REQUIRE(ranges.out ==
          "cuspidal [0, 0]\n"
          "non_cuspidal [0, 3]\n"
          "interior [0, 0]\n");

  CliResult shape = run_cli({"cousin", "shimura", "--preset", "GSp4", "--levi",
                             "0", "--kappa", "5,3,-8", "--sign", "-"});
  REQUIRE(shape.code == 0);
  REQUIRE(shape.out ==
          "degree 0: s1s0s1\n"
          "degree 1: s1s0\n"
          "degree 2: s1\n"
          "degree 3: Id\n");
}

TEST_CASE("job configuration round trip", "[cli]") {
  cousin::JobConfig config;
  config.command = "slopes.table";
  config.preset = "GSp4";
  config.levi = {0};
  config.format = "md";
  config.seed = 17;
  config.params = cousin::json{{"variant", "ss"}};
  REQUIRE(cousin::job_from_json(cousin::job_to_json(config)) == config);

  cousin::JobConfig bare;
  bare.command = "weyl";
  REQUIRE(cousin::job_from_json(cousin::job_to_json(bare)) == bare);

  REQUIRE_THROWS_AS(cousin::job_from_json(cousin::json::array()),
                    cousin::Error);
  REQUIRE_THROWS_AS(cousin::job_from_json(cousin::json{{"preset", "A1"}}),
                    cousin::Error);
}

TEST_CASE("config document equals the flag spelling", "[cli]") {
  CliResult flags = run_cli({"slopes", "table", "--preset", "GSp4", "--variant",
                             "ss", "--format", "md"});
  std::string doc = R"({"command":"slopes.table","preset":"GSp4",)"
                    R"("format":"md","params":{"variant":"ss"}})";
  CliResult from_doc = run_cli({"--config", doc});
  REQUIRE(from_doc.code == 0);
  REQUIRE(from_doc.out == flags.out);

  // The same document read from a file.
  std::string path = "/tmp/cousin_cli_job.json";
  std::ofstream(path) << doc;
  CliResult from_file = run_cli({"--config", "@" + path});
  REQUIRE(from_file.code == 0);
  REQUIRE(from_file.out == flags.out);
}

TEST_CASE("custom root datum from a document", "[cli]") {
  std::string path = "/tmp/cousin_cli_datum.json";
  std::ofstream(path)
      << R"({"dim":1,"simple_roots":[[2]],"simple_coroots":[[1]],)"
      << R"("gamma_generators":[]})";
  CliResult r = run_cli({"weyl", "--preset", "@" + path});
  REQUIRE(r.code == 0);
  REQUIRE(r.out ==
          "Id  length=0  ell+=0  ell-=1\n"
          "s0  length=1  ell+=1  ell-=0\n");
}

TEST_CASE("structured errors and exit codes", "[cli]") {
  // Missing preset: configuration error.
  CliResult nopreset = run_cli({"cousin", "bwb", "--kappa", "1"});
  REQUIRE(nopreset.code == 2);
  REQUIRE(nopreset.err ==
          "error: [cli/preset] (config) --preset is required for this "
          "command\n");

  // Missing required option: parse error.
  CliResult nokappa = run_cli({"cousin", "bwb", "--preset", "A1"});
  REQUIRE(nokappa.code == 2);
  REQUIRE(nokappa.err.find("[cli/parse] (config)") != std::string::npos);

  // Unknown argument: parse error.
  REQUIRE(run_cli({"weyl", "--bogus"}).code == 2);

  // Dimension mismatch inside the library: precondition error.
  CliResult dim = run_cli({"slopes", "cond", "--preset", "A1", "--kind", "ss",
                           "--flavor", "nu", "--sign", "+", "--nu", "0",
                           "--lambda", "1,2"});
  REQUIRE(dim.code == 3);
  REQUIRE(dim.err.find("(precondition)") != std::string::npos);

  // Non-dominant shifted weight: precondition error.
  REQUIRE(run_cli({"slopes", "cond", "--preset", "A1", "--kind", "ss",
                   "--flavor", "nu", "--sign", "+", "--nu", "-2", "--lambda",
                   "0"})
              .code == 3);

  // Composite p: configuration error.
  REQUIRE(run_cli({"newton", "poly", "--p", "4", "--coeffs", "1,1"}).code == 2);

  // Enumeration cap from the environment: resource error.
  ::setenv("COUSIN_MAX_ENUM", "3", 1);
  CliResult capped = run_cli({"weyl", "--preset", "C2"});
  ::unsetenv("COUSIN_MAX_ENUM");
  REQUIRE(capped.code == 4);
  REQUIRE(capped.err.find("(resource)") != std::string::npos);
}

TEST_CASE("help is available at every level", "[cli]") {
  CliResult top = run_cli({"--help"});
  REQUIRE(top.code == 0);
  REQUIRE(top.out.find("slopes") != std::string::npos);
  REQUIRE(top.out.find("newton") != std::string::npos);
  CliResult sub = run_cli({"slopes", "table", "--help"});
  REQUIRE(sub.code == 0);
  REQUIRE(sub.out.find("--variant") != std::string::npos);
  // No arguments at all: usage goes to the error stream, exit 2.
  CliResult bare = run_cli({});
  REQUIRE(bare.code == 2);
  REQUIRE(!bare.err.empty());
}
