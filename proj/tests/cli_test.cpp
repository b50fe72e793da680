/*
   Copyright 2026 The flatflag Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "flatflag/cli/run.hpp"

namespace {

using namespace flatflag;
using cli::json;

const json kC4 = json::parse(R"({"field": {"p": 2, "k": 1}, "level": 0, "twist_degrees": [4, 0],
                                 "A": [[[], [1, 1, 1]], [[], []]]})");
const json kCert = json::parse(R"({"field": {"p": 3, "k": 1}, "r": 2, "A": [[[], [1]], [[0, 1], []]]})");

TEST(Run, ReportsAreByteStable) {
  for (const auto& [name, in] : std::vector<std::pair<std::string, json>>{
           {"pone-pcurv", kC4}, {"hit-cert", kCert}, {"ell-profile", json{{"r", 7}, {"d", -4}}}}) {
    const std::string a = cli::run(name, in).to_json().dump(2);
    const std::string b = cli::run(name, json::parse(in.dump())).to_json().dump(2);
    EXPECT_EQ(a, b);
  }
}

TEST(Run, DigestIgnoresKeyOrder) {
  const json a = json::parse(R"({"r": 5, "d": 3})");
  const json b = json::parse(R"({"d": 3, "r": 5})");
  EXPECT_EQ(cli::digest(a), cli::digest(b));
  EXPECT_NE(cli::digest(a), cli::digest(json{{"r", 5}, {"d", 4}}));
  EXPECT_EQ(cli::digest(a).size(), 16u);
}

TEST(Run, ExitCodeContract) {
  EXPECT_EQ(cli::run("ell-profile", {{"r", 5}, {"d", 3}}).exit_code, cli::kOk);
  EXPECT_EQ(cli::run("no-such-command", json::object()).exit_code, cli::kParse);
  EXPECT_EQ(cli::run("ell-profile", {{"r", "five"}, {"d", 3}}).exit_code, cli::kParse);
  EXPECT_EQ(cli::run("ell-profile", {{"r", 0}, {"d", 3}}).exit_code, cli::kPrecondition);
  EXPECT_EQ(cli::run("pone-descend", kC4).exit_code, cli::kPrecondition);
  auto bad = kC4;
  bad["A"][1][0] = json::array({1});
  const auto rep = cli::run("pone-check", bad);
  EXPECT_EQ(rep.exit_code, cli::kViolation);
  EXPECT_EQ(rep.status, "violation");
  EXPECT_FALSE(rep.result.is_null());  // reported, not crashed
}

TEST(Run, ReportCarriesCheckedInvariants) {
  const auto rep = cli::run("hit-nilflag", json::parse(R"({"field": {"p": 2}, "A": [[[], [0, 1]], [[], []]]})"));
  ASSERT_EQ(rep.exit_code, 0);
  ASSERT_EQ(rep.invariants.size(), 2u);
  for (const auto& [name, ok] : rep.invariants) EXPECT_TRUE(ok) << name;
  const json j = rep.to_json();
  EXPECT_EQ(j["command"], "hit-nilflag");
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["invariants"].size(), 2u);
}

TEST(RoundTrip, PayloadsReparseToEqualValues) {
  // Connections.
  auto pulled = cli::run("pone-pullback", [] {
    json in = kC4;
    in["s"] = 2;
    return in;
  }());
  ASSERT_EQ(pulled.exit_code, 0);
  const auto conn = io::connection_from_json(pulled.result["connection"]);
  EXPECT_EQ(conn.level, 2u);
  EXPECT_EQ(conn.base, io::connection_from_json(kC4).base);
  EXPECT_EQ(io::to_json(conn), pulled.result["connection"]);

  // Matrices of rational functions.
  const auto f = Field::make(2);
  const MatRF psi = io::matrf_from_json(f, pulled.result["psi"]);
  EXPECT_EQ(io::to_json(psi), pulled.result["psi"]);

  // Flags.
  const auto flag = cli::run("pone-flag", kC4);
  EXPECT_EQ(io::to_json(io::flag_from_json(flag.result)), flag.result);

  // Skeletons and classes.
  const auto sk = cli::run("ell-skeleton", json::parse(R"({"atoms": [{"r": 3, "d": 2, "lam": [1]}], "p": 2})"));
  EXPECT_EQ(io::to_json(io::skeleton_from_json(sk.result)), sk.result);

  // Charts and extension-field elements.
  const auto f9 = Field::make(3, 2);
  Sampler s(4);
  for (int i = 0; i < 20; ++i) {
    hitchin::ChartConn c(f9, s.poly_matrix(f9, 2, 2));
    EXPECT_EQ(io::chart_from_json(io::to_json(c)), c);
    const RatFunc r = s.ratfunc(f9, 3);
    EXPECT_EQ(io::ratfunc_from_json(f9, io::to_json(r)), r);
  }
  EXPECT_TRUE(io::field_from_json(io::to_json(*f9))->same_as(*f9));
}

TEST(RoundTrip, ExtensionFieldModulusIsChecked) {
  EXPECT_THROW(io::field_from_json(json::parse(R"({"p": 2, "k": 2, "modulus": [1, 0, 1]})")), InvalidFieldError);
  EXPECT_THROW(io::field_from_json(json::parse(R"({"p": 2, "k": 2, "modulus": [1, 1]})")), ParseError);
}

// ---------------------------------------------------------------------------
// The binary

struct Outcome {
  int code;
  std::string out;
};

Outcome invoke(const std::string& args) {
  const auto tmp = std::filesystem::temp_directory_path() / "flatflag-cli-test.out";
  const std::string cmd = std::string(FLATFLAG_CLI_PATH) + " " + args + " > " + tmp.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::string out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return {WEXITSTATUS(status), out};
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(invoke("ell-profile --r 5 --d 3").code, 0);
  EXPECT_EQ(invoke("hit-dims --g 1 --r 2").code, 2);
  EXPECT_EQ(invoke("no-such-subcommand").code, 3);
  EXPECT_EQ(invoke("ell-profile --data '{not json'").code, 3);
  EXPECT_EQ(invoke("ell-profile --input /nonexistent.json").code, 3);
  EXPECT_EQ(invoke(R"(pone-check --data '{"field":{"p":2},"twist_degrees":[2,0],"A":[[[],[]],[[1],[]]]}')").code, 1);
}

TEST(Binary, JsonOutputIsDeterministicAndParses) {
  const auto a = invoke("ell-profile --r 5 --d 3 --json");
  const auto b = invoke("ell-profile --json --d 3 --r 5");
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["result"]["degL"], json::parse("[0, 1, 2]"));
  EXPECT_EQ(j["result"]["m"], 2);
}

TEST(Binary, FlagsOverrideInlineData) {
  const auto out = invoke(R"(hit-dims --data '{"g": 5, "r": 2}' --g 2 --json)");
  EXPECT_EQ(json::parse(out.out)["result"]["dimB"], 5);
}

// ---------------------------------------------------------------------------
// Selftest

class Selftest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("flatflag-fixtures-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
    for (const auto& e : std::filesystem::directory_iterator(FLATFLAG_FIXTURE_DIR))
      std::filesystem::copy_file(e.path(), dir_ / e.path().filename());
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::filesystem::path dir_;
};

TEST_F(Selftest, ShippedCorpusPasses) {
  const auto rep = cli::selftest(dir_.string(), "", 1);
  EXPECT_EQ(rep.exit_code, 0) << rep.error;
  EXPECT_GT(rep.result["passed"].get<int>(), 80);
}

TEST_F(Selftest, CorruptedFixtureIsNamed) {
  const auto path = dir_ / "elliptic-profile-5-3.json";
  json fx = json::parse(std::ifstream(path));
  fx["expect"]["m"] = 3;
  std::ofstream(path) << fx.dump(2);
  const auto rep = cli::selftest(dir_.string(), "", 1);
  EXPECT_EQ(rep.exit_code, cli::kViolation);
  EXPECT_NE(rep.error.find("profile-5-3"), std::string::npos) << rep.error;
  EXPECT_EQ(rep.result["failed"], 1);
}

TEST_F(Selftest, UnreadableFixtureIsNamed) {
  std::ofstream(dir_ / "zz-broken.json") << "{ not json";
  const auto rep = cli::selftest(dir_.string(), "", 1);
  EXPECT_EQ(rep.exit_code, cli::kViolation);
  EXPECT_NE(rep.error.find("zz-broken.json"), std::string::npos) << rep.error;
}

TEST_F(Selftest, FilterSelectsOneModule) {
  const auto rep = cli::selftest(dir_.string(), "elliptic", 1);
  ASSERT_EQ(rep.exit_code, 0);
  ASSERT_GT(rep.result["items"].size(), 5u);
  for (const auto& item : rep.result["items"]) EXPECT_EQ(item["module"], "elliptic");
  EXPECT_EQ(cli::selftest(dir_.string(), "no-such-item", 1).exit_code, cli::kParse);
}

TEST_F(Selftest, SeedChangesOnlyPropertyInputs) {
  EXPECT_EQ(cli::selftest(dir_.string(), "property", 7).exit_code, 0);
  EXPECT_EQ(cli::selftest(dir_.string(), "", 1).to_json().dump(), cli::selftest(dir_.string(), "", 1).to_json().dump());
}

}  // namespace
