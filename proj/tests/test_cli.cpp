#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "gw/cli.hpp"
#include "gw/partitions.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = gw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("phi command") {
  auto table = run_cli({"phi", "[4,3,3]/[6,2,1]"});
  CHECK(table.code == 0);
  CHECK(table.out == "d: 0\nl: 1\ny: 1\n");

  auto json = run_cli({"phi", "[4,3,3]/[6,2,1]", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out == "{\"d\":0,\"l\":1,\"y\":\"1\"}\n");

  auto csv = run_cli({"phi", "[4]/[]", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "d,l,y\n1,4,256\n");
}

TEST_CASE("limit command") {
  auto ok = run_cli({"limit", "[9,8,1]/[12,3,3]"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "csq: 2/3"));
  CHECK(contains(ok.out, "limit: 0.816496580927726"));

  auto divergent = run_cli({"limit", "[1]/[]"});
  CHECK(divergent.code == 1);
  CHECK(divergent.out.empty());
  CHECK(contains(divergent.err, "does not converge"));
}

TEST_CASE("profile and fingerprint commands") {
  auto profile = run_cli({"profile", "[2]/[1,1]", "--format", "json"});
  CHECK(profile.code == 0);
  CHECK(profile.out ==
        "{\"csq\":\"2\",\"half_pow\":-1,\"lin_coef\":0,\"exp_base\":\"4\"}\n");

  auto fingerprint = run_cli({"fingerprint", "[1]/[]"});
  CHECK(fingerprint.code == 0);
  CHECK(contains(fingerprint.out, "fingerprint: 6"));

  auto kernel = run_cli({"fingerprint", "[9,8,1]/[12,3,3]", "--format", "json"});
  CHECK(contains(kernel.out, "\"fingerprint\":\"1\""));
}

TEST_CASE("preimage command") {
  auto factored = run_cli({"preimage", "--d", "1", "--l", "4", "--y", "2^8"});
  CHECK(factored.code == 0);
  CHECK(contains(factored.out, "word: [6,2,2,2,2,2]/[4,3,3,1,1]"));

  auto plain = run_cli({"preimage", "--d", "1", "--l", "4", "--y", "256"});
  CHECK(plain.out == factored.out);

  auto invalid = run_cli({"preimage", "--y", "2^3"});
  CHECK(invalid.code == 1);
  CHECK(contains(invalid.err, "error"));

  auto bad_text = run_cli({"preimage", "--y", "2^"});
  CHECK(bad_text.code == 2);

  auto real = run_cli({"preimage", "--real", "--d", "0", "--x", "0.5", "--y", "1.0",
                       "--format", "json"});
  CHECK(real.code == 0);
  CHECK(contains(real.out, "\"d\":0"));
}

TEST_CASE("solve-xx command") {
  auto ok = run_cli({"solve-xx", "0.8"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "theta1: 0.0946497108649249"));
  CHECK(contains(ok.out, "theta2: 0.73953365001071"));
  CHECK(contains(ok.out, "residual1: 0"));

  auto outside = run_cli({"solve-xx", "0.5"});
  CHECK(outside.code == 1);
  CHECK(contains(outside.err, "outside"));
}

TEST_CASE("check command") {
  auto primitive = run_cli({"check", "12,3,3 ; 9,8,1"});
  CHECK(primitive.code == 0);
  CHECK(contains(primitive.out, "solution: yes"));
  CHECK(contains(primitive.out, "status: primitive"));

  auto not_solution = run_cli({"check", "2,1 ; 3"});
  CHECK(not_solution.code == 0);
  CHECK(contains(not_solution.out, "solution: no"));

  auto multiple = run_cli({"check", "24,6,6 ; 18,16,2", "--format", "json"});
  CHECK(contains(multiple.out, "\"status\":\"multiple\""));
  CHECK(contains(multiple.out, "\"k\":2"));

  auto decomposable = run_cli({"check", "12,12,3,3,3,3 ; 9,9,8,8,1,1"});
  CHECK(contains(decomposable.out, "status: decomposable"));
  CHECK(contains(decomposable.out, "witness: 12,3,3 ; 9,8,1"));

  auto unknown = run_cli({"check", "12,3,3 ; 9,8,1", "--budget", "10"});
  CHECK(unknown.code == 3);
  CHECK(contains(unknown.out, "status: unknown"));

  auto malformed = run_cli({"check", "12,3,3"});
  CHECK(malformed.code == 2);
}

TEST_CASE("search command") {
  auto json = run_cli({"search", "--max-size", "16", "--max-length", "6",
                       "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out ==
        "[{\"size\":16,\"length\":6,\"lambda\":[6,2,2,2,2,2],\"mu\":[4,4,3,3,1,1]}]\n");

  auto classified = run_cli({"search", "--max-size", "16", "--max-length", "6",
                             "--primitive", "--format", "json"});
  CHECK(contains(classified.out, "\"verdict\":\"primitive\""));

  auto csv = run_cli({"search", "--max-size", "16", "--max-length", "6",
                      "--format", "csv"});
  CHECK(contains(csv.out, "size,length,lambda,mu,verdict,witness\n"));
  CHECK(contains(csv.out, "16,6,\"6,2,2,2,2,2\",\"4,4,3,3,1,1\",,\n"));

  auto table = run_cli({"search", "--max-size", "16", "--max-length", "6"});
  CHECK(contains(table.out, "## length 6"));
  CHECK(contains(table.out, "| 16 | 6,2,2,2,2,2 | 4,4,3,3,1,1 |"));

  auto empty = run_cli({"search", "--max-size", "4", "--max-length", "4",
                        "--format", "json"});
  CHECK(empty.out == "[]\n");

  auto missing_flags = run_cli({"search", "--max-size", "16"});
  CHECK(missing_flags.code == 2);
}

TEST_CASE("search3 command") {
  auto found = run_cli({"search3", "--max-size", "36", "--format", "json"});
  CHECK(found.code == 0);
  CHECK(contains(found.out, "\"lambda\":[12,3,3]"));
  CHECK(contains(found.out, "\"lambda\":[24,6,6]"));

  auto gated = run_cli({"search3", "--max-size", "501"});
  CHECK(gated.code == 2);
  CHECK(contains(gated.err, "--confirm-long"));

  auto confirmed = run_cli({"search3", "--max-size", "501", "--confirm-long",
                            "--format", "csv"});
  CHECK(confirmed.code == 0);
  // 27 multiples of the base pair fit below 501, plus the header line.
  CHECK(std::count(confirmed.out.begin(), confirmed.out.end(), '\n') == 28);
}

TEST_CASE("family and n5 commands") {
  auto family = run_cli({"family", "--n", "5"});
  CHECK(family.code == 0);
  CHECK(contains(family.out, "length: 27"));
  CHECK(contains(family.out, "size: 96"));
  CHECK(contains(family.out, "fingerprint: 2^256"));
  CHECK(contains(family.out, "decomposition: a=0 b=1 c=8 d=0 e=5 f=4"));

  auto primitive_member = run_cli({"family", "--n", "8", "--format", "json"});
  CHECK(contains(primitive_member.out, "\"decomposition\":null"));

  auto degenerate = run_cli({"family", "--n", "2"});
  CHECK(degenerate.code == 1);

  auto n5 = run_cli({"n5"});
  CHECK(n5.code == 0);
  CHECK(contains(n5.out, "block1: 8,2,2,2,2,2,2,2,2 ; 4,4,4,4,4,1,1,1,1"));
  CHECK(contains(n5.out, "recomposes: yes"));
}

TEST_CASE("converge command") {
  auto report = run_cli({"converge", "[9,8,1]/[12,3,3]"});
  CHECK(report.code == 0);
  CHECK(contains(report.out, "strictly_decreasing: yes"));

  auto json = run_cli({"converge", "[9,8,1]/[12,3,3]", "--points", "10,100",
                       "--format", "json"});
  CHECK(json.code == 0);
  CHECK(contains(json.out, "\"rows\":[{\"x\":10,"));

  auto divergent = run_cli({"converge", "[1]/[]"});
  CHECK(divergent.code == 1);

  auto bad_points = run_cli({"converge", "[9,8,1]/[12,3,3]", "--points", "10,,"});
  CHECK(bad_points.code == 2);
}

TEST_CASE("argument and grammar errors") {
  CHECK(run_cli({"phi", "[1"}).code == 2);
  CHECK(run_cli({"phi"}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"phi", "[1]/[]", "--format", "xml"}).code == 2);

  auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "phi"));
  CHECK(contains(help.out, "search3"));
}

TEST_CASE("solution list formatting") {
  auto result = gw::search({.max_size = 16, .max_length = 6, .primitive_only = true});
  REQUIRE(result.entries.size() == 1);

  std::string json = gw::cli::format_solutions(result.entries, gw::cli::OutputFormat::Json);
  CHECK(contains(json, "\"verdict\":\"primitive\""));

  std::string csv = gw::cli::format_solutions(result.entries, gw::cli::OutputFormat::Csv);
  CHECK(contains(csv, "16,6,\"6,2,2,2,2,2\",\"4,4,3,3,1,1\",primitive,\n"));

  std::string table = gw::cli::format_solutions(result.entries, gw::cli::OutputFormat::Table);
  CHECK(contains(table, "| size | lambda | mu | verdict |"));

  CHECK(gw::cli::format_solutions({}, gw::cli::OutputFormat::Json) == "[]\n");
  CHECK(gw::cli::format_solutions({}, gw::cli::OutputFormat::Table) == "(no solutions)\n");
}
