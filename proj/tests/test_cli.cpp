#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;
using schubfire::cli::run_cli;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

std::map<std::string, std::string> text_fields(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos) out[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return out;
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Invocation r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(CliCount, CubicSurface) {
  const json j = run_json({"count", "--r", "1", "--n", "3", "--d", "3"});
  EXPECT_EQ(j["total_count"], "27");
  EXPECT_EQ(j["m"], 0);
  EXPECT_EQ(j["generically_empty"], false);
  EXPECT_EQ(j["total_class"], json::parse(R"([{"coeff":"27","partition":[2,2]}])"));
}

TEST(CliCount, QuarticPlanes) {
  EXPECT_EQ(run_json({"count", "--r", "2", "--n", "7", "--d", "4"})["total_count"], "3297280");
}

TEST(CliCount, EmptyQuadric) {
  const json j = run_json({"count", "--r", "2", "--n", "4", "--d", "2"});
  EXPECT_EQ(j["generically_empty"], true);
  EXPECT_EQ(j["total_class"], json::array());
  const Invocation text = run({"count", "--r", "2", "--n", "4", "--d", "2"});
  EXPECT_EQ(text_fields(text.out)["total_class"], "0");
}

TEST(CliCount, CountsAbsentAwayFromZeroDimension) {
  const json j = run_json({"count", "--r", "1", "--n", "3", "--d", "2"});
  EXPECT_EQ(j["m"], 1);
  EXPECT_FALSE(j.contains("total_count"));
  EXPECT_EQ(j["status"], "ok");
  const json neg = run_json({"count", "--r", "1", "--n", "3", "--d", "5"});
  EXPECT_EQ(neg["status"], "negative_expected_dimension");
  EXPECT_FALSE(neg.contains("total_count"));
}

TEST(CliSplit, Examples) {
  const json a = run_json({"split", "--r", "3", "--n", "8", "--d", "3", "--k", "2"});
  EXPECT_EQ(a["count_k"], "0");
  EXPECT_EQ(a["count_l"], "321489");
  EXPECT_EQ(a["identity_ok"], true);

  const json b = run_json({"split", "--r", "2", "--n", "7", "--d", "4", "--k", "3"});
  EXPECT_EQ(b["count_k"], "483840");
  EXPECT_EQ(b["count_l"], "2813440");
  EXPECT_EQ(b["params"], json::parse(R"({"d":4,"k":3,"l":1,"n":7,"r":2})"));

  const json c = run_json({"split", "--r", "1", "--n", "3", "--d", "3", "--k", "1", "--route", "both"});
  EXPECT_EQ(c["count_k"], "15");
  EXPECT_EQ(c["count_l"], "12");
  EXPECT_EQ(c["routes_agree"], true);
  EXPECT_EQ(c["route"], "both");
  EXPECT_TRUE(c["timings_ms"].contains("cross_check"));
}

TEST(CliSplit, ProjectiveBundleRoute) {
  const json j = run_json({"split", "--r", "1", "--n", "4", "--d", "5", "--k", "2", "--route", "pb"});
  EXPECT_EQ(j["total_count"], "2875");
  EXPECT_EQ(j["route"], "pb");
  EXPECT_FALSE(j.contains("routes_agree"));
}

TEST(CliClass, ChernBasis) {
  EXPECT_EQ(trim(run({"class", "--expr", "ctop(sym(2,Ustar))", "--r", "2", "--n", "6", "--basis", "chern"}).out),
            "8*c1*c2*c3 - 8*c3^2");
  EXPECT_EQ(trim(run({"class", "--expr", "segre(3,Ustar)", "--r", "2", "--n", "6", "--basis", "chern"}).out),
            "-c1^3 + 2*c1*c2 - c3");
  EXPECT_EQ(trim(run({"class", "--expr", "ctop(sym(2,Ustar))", "--r", "2", "--n", "6", "--basis", "chern", "--latex"}).out),
            "8\\,{c_1}\\,{c_2}\\,{c_3}-8\\,{c_3}^{2}");
}

TEST(CliClass, SchubertBasis) {
  EXPECT_EQ(trim(run({"class", "--expr", "ctop(sym(2,Ustar))", "--r", "2", "--n", "6"}).out), "8*s[3,2,1]");
  EXPECT_EQ(trim(run({"class", "--expr", "ctop(sym(2,Ustar))", "--r", "2", "--n", "4"}).out), "0");
  EXPECT_EQ(trim(run({"class", "--expr", "c1^2", "--r", "1", "--n", "3"}).out), "s[1,1] + s[2]");
  EXPECT_EQ(trim(run({"class", "--expr", "s[1]*s[1] - c2", "--r", "1", "--n", "3"}).out), "s[2]");
  EXPECT_EQ(trim(run({"class", "--expr", "chern(1, sym(2,Ustar) - Ustar)", "--r", "2", "--n", "5"}).out), "3*s[1]");
  EXPECT_EQ(trim(run({"class", "--expr", "ctop(twist(U, 1))", "--r", "0", "--n", "2"}).out), "0");
}

TEST(CliClass, GiambelliInChernBasis) {
  EXPECT_EQ(trim(run({"class", "--expr", "s[2,1]", "--r", "2", "--n", "6", "--basis", "chern"}).out), "c1*c2 - c3");
  EXPECT_EQ(trim(run({"class", "--expr", "s[2]", "--r", "2", "--n", "6", "--basis", "chern"}).out), "c1^2 - c2");
}

TEST(CliClass, Json) {
  const json j = run_json({"class", "--expr", "ctop(sym(2,Ustar))", "--r", "2", "--n", "6", "--basis", "chern"});
  EXPECT_EQ(j["class"], json::parse(R"([{"coeff":"8","monomial":[1,1,1]},{"coeff":"-8","monomial":[0,0,2]}])"));
  EXPECT_EQ(j["basis"], "chern");
}

TEST(CliVerify, Grids) {
  for (const auto& bounds : std::vector<std::vector<std::string>>{{"1", "4", "4"}, {"2", "7", "4"}, {"3", "8", "3"}}) {
    const Invocation r = run({"verify", "--r-max", bounds[0], "--n-max", bounds[1], "--d-max", bounds[2]});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(text_fields(r.out)["all_ok"], "true");
    EXPECT_EQ(text_fields(r.out)["failures"], "0");
  }
}

TEST(CliVerify, DeterministicAcrossJobCounts) {
  const Invocation one = run({"verify", "--r-max", "2", "--n-max", "5", "--d-max", "3", "--jobs", "1", "--route", "both"});
  const Invocation many = run({"verify", "--r-max", "2", "--n-max", "5", "--d-max", "3", "--jobs", "8", "--route", "both"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
}

TEST(CliVerify, SkipsPointsOverTheGuardrail) {
  const json j = run_json({"verify", "--r-max", "5", "--n-max", "6", "--d-max", "4"});
  EXPECT_GT(j["skipped"].get<int>(), 0);
  EXPECT_EQ(j["all_ok"], true);
}

TEST(CliExitCodes, Usage) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count", "--r", "1", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"count", "--r", "3", "--n", "3", "--d", "2"}).code, 2);
  EXPECT_EQ(run({"count", "--r", "x", "--n", "3", "--d", "2"}).code, 2);
  EXPECT_EQ(run({"split", "--r", "1", "--n", "3", "--d", "3", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"split", "--r", "1", "--n", "3", "--d", "3", "--k", "1", "--route", "fast"}).code, 2);
  EXPECT_EQ(run({"count", "--r", "1", "--n", "3", "--d", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--r-max", "1", "--n-max", "3", "--d-max", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliExitCodes, Parse) {
  for (const std::string expr : {"ctop(", "foo", "s[1,2]", "ctop(Ustar - U)", "c1 +", "sym(2,Ustar)", "chern(x, U)"}) {
    const Invocation r = run({"class", "--expr", expr, "--r", "1", "--n", "3"});
    EXPECT_EQ(r.code, 2) << expr;
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(CliExitCodes, Guardrail) {
  EXPECT_EQ(run({"count", "--r", "5", "--n", "9", "--d", "4"}).code, 3);
  EXPECT_EQ(run({"split", "--r", "6", "--n", "9", "--d", "3", "--k", "1"}).code, 3);
}

TEST(CliJson, RoundTripsByteIdentically) {
  const std::vector<std::vector<std::string>> invocations = {
      {"count", "--r", "1", "--n", "3", "--d", "3", "--format", "json"},
      {"split", "--r", "2", "--n", "7", "--d", "4", "--k", "2", "--format", "json", "--latex"},
      {"split", "--r", "1", "--n", "4", "--d", "2", "--k", "1", "--format", "json"},
      {"class", "--expr", "ctop(sym(3,Ustar))", "--r", "3", "--n", "8", "--basis", "chern", "--format", "json"},
      {"verify", "--r-max", "1", "--n-max", "3", "--d-max", "3", "--format", "json"},
  };
  for (const auto& args : invocations) {
    const Invocation r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).dump() + "\n", r.out);
  }
}

TEST(CliJson, TextAndJsonAgree) {
  const std::vector<std::string> base = {"split", "--r", "2", "--n", "7", "--d", "4", "--k", "3", "--route", "both"};
  const auto text = text_fields(run(base).out);
  std::vector<std::string> json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const json j = json::parse(run(json_args).out);
  for (const char* key : {"total_count", "count_k", "count_l", "route", "status"}) {
    EXPECT_EQ(text.at(key), j[key].get<std::string>()) << key;
  }
  for (const char* key : {"m"}) EXPECT_EQ(text.at(key), std::to_string(j[key].get<long>()));
  for (const char* key : {"identity_ok", "routes_agree", "generically_empty"}) {
    EXPECT_EQ(text.at(key), j[key].get<bool>() ? "true" : "false");
  }
  for (const char* key : {"r", "n", "d", "k", "l"}) EXPECT_EQ(text.at(key), std::to_string(j["params"][key].get<int>()));
  EXPECT_EQ(text.at("total_class"), "3297280*s[5,5,5]");
  EXPECT_EQ(j["total_class"][0]["coeff"], "3297280");
}
