#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "pqhopf/report.hpp"

using namespace pqhopf;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("indicators as CSV") {
  const Run r = run({"indicators", "--family", "grC", "--p", "3", "--q", "2", "--n-max", "12", "--method", "both",
                     "--format", "csv"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 13);
  CHECK(ls[0] == "n,value,residue,predicted,methods_agree,match");
  for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i].find(",true,true") != std::string::npos);
}

TEST_CASE("verification subcommands") {
  CHECK(run({"verify-corollary", "--p", "3", "--q", "2", "--n-max", "30"}).code == 0);
  CHECK(run({"verify-lemma", "--p", "2", "--q", "3"}).code == 0);
  CHECK(run({"verify-theorem", "--p", "3", "--q", "2"}).code == 0);
  CHECK(run({"verify-properties", "--p", "3", "--q", "2", "--n-max", "12"}).code == 0);
  CHECK(run({"axioms", "--family", "f2", "--p", "3", "--q", "2"}).out.find("valid") != std::string::npos);

  const Run bad = run({"axioms", "--family", "f4", "--p", "2", "--q", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("associativity") != std::string::npos);
  CHECK(run({"verify-theorem", "--p", "2", "--q", "3", "--n-max", "6"}).code == 1);
}

TEST_CASE("usage errors") {
  const Run delta = run({"indicators", "--family", "f2", "--delta", "1", "--p", "2", "--q", "3"});
  CHECK(delta.code == 2);
  CHECK(delta.err.find("delta") != std::string::npos);
  CHECK(run({"build", "--p", "3"}).code == 2);
  CHECK(run({"build", "--family", "f9", "--p", "3", "--q", "2"}).code == 2);
  CHECK(run({"indicators", "--family", "f1", "--p", "3", "--q", "3"}).code == 2);
  CHECK(run({"indicators", "--family", "f1", "--p", "3", "--q", "2", "--method", "guess"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("build JSON round-trips through the HopfData reader") {
  const Run r = run({"build", "--family", "f3", "--delta", "1", "--p", "3", "--q", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  const HopfData h = hopf_from_json(j.at("algebra"));
  CHECK(validate(h).ok());
  CHECK(hopf_to_json(h) == j.at("algebra"));
  CHECK(j.at("presentation").at("family") == "f3");
  CHECK(j.at("integrals").at("normalized") == true);
}

TEST_CASE("identical invocations give identical bytes") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"indicators", "--family", "f2", "--p", "2", "--q", "3", "--format", "json"},
           {"verify-properties", "--p", "2", "--q", "3", "--n-max", "12", "--format", "json"},
           {"build", "--family", "grC", "--p", "2", "--q", "5", "--format", "json"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("--out writes the file") {
  const auto path = std::filesystem::temp_directory_path() / "pqhopf_cli_out.csv";
  const Run r = run({"indicators", "--family", "grA", "--p", "2", "--q", "3", "--n-max", "6", "--format", "csv",
                     "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str().rfind("n,value,residue,predicted,methods_agree,match\n", 0) == 0);
  CHECK(content.str().find('\r') == std::string::npos);
  std::filesystem::remove(path);
}
