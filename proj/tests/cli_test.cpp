#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "symcone/identities.hpp"

namespace symcone::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json report() const { return nlohmann::json::parse(out); }
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::path(::testing::TempDir()) / name;
}

TEST(Cli, InfoMatchesGolden) {
  const auto r = invoke({"info", "--algebra", "sym", "--rank", "2", "--json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  std::ifstream in(std::string(SYMCONE_GOLDEN_DIR) + "/info_sym_r2.json");
  ASSERT_TRUE(in) << "missing golden file";
  const auto golden = nlohmann::json::parse(in);
  EXPECT_EQ(r.report(), golden) << r.report().dump(2);
}

TEST(Cli, TextOutputByDefault) {
  const auto r = invoke({"info", "--algebra", "herm", "--rank", "3"});
  ASSERT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("dim_F1"), std::string::npos);
  EXPECT_THROW(static_cast<void>(nlohmann::json::parse(r.out)), nlohmann::json::parse_error);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({"info", "--algebra", "octonion"}).code, kUsageError);
  EXPECT_EQ(invoke({"info", "--algebra", "albert", "--rank", "4"}).code, kUsageError);
  EXPECT_EQ(invoke({"info", "--algebra", "spin"}).code, kUsageError);
  EXPECT_EQ(invoke({"info", "--algebra", "sym", "--ambient", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--algebra", "sym", "--rank", "3", "--p", "0.75"}).code,
            kUsageError);
  EXPECT_EQ(invoke({"info", "--config", scratch("does_not_exist.json").string()}).code,
            kUsageError);

  const auto quat = invoke({"verify", "--algebra", "quat", "--samples", "100"});
  EXPECT_EQ(quat.code, kUsageError);
  EXPECT_NE(quat.err.find("sym and herm"), std::string::npos);
}

TEST(Cli, InconsistentRecoverExitsOne) {
  const auto r = invoke({"recover", "--a", "0.3333333333", "--b1", "0.2", "--b2", "0.0666666667",
                         "--n", "6", "--json"});
  EXPECT_EQ(r.code, kCheckFailed);
  EXPECT_FALSE(r.report().at("pass").get<bool>());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, RecoverAlbert) {
  const auto r = invoke({"recover", "--algebra", "albert", "--p", "9", "--pp", "10", "--json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j.at("recovered").at("d"), 8);
  EXPECT_EQ(j.at("recovered").at("r"), 3);
  EXPECT_EQ(j.at("recovered").at("n"), 27);
}

TEST(Cli, ConfigMergeFlagsWin) {
  const auto path = scratch("cfg.json");
  {
    std::ofstream f(path);
    f << R"({"algebra": "herm", "rank": 3, "seed": 7})";
  }
  const auto r = invoke({"info", "--config", path.string(), "--rank", "2", "--json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto cfg = r.report().at("config");
  EXPECT_EQ(cfg.at("algebra"), "herm");
  EXPECT_EQ(cfg.at("rank"), 2);
  EXPECT_EQ(cfg.at("seed"), 7);

  {
    std::ofstream f(path);
    f << R"({"algebra": "herm", "colour": "blue"})";
  }
  EXPECT_EQ(invoke({"info", "--config", path.string()}).code, kUsageError);
}

TEST(Cli, VerifyIsDeterministicAndReproducibleFromItsConfig) {
  const std::vector<std::string> args{"verify", "--algebra", "sym", "--rank", "2",
                                      "--p",    "1.5",       "--pp",  "1",      "--samples",
                                      "20000",  "--seed",    "11",    "--json"};
  const auto first = invoke(args);
  ASSERT_EQ(first.code, kPass) << first.err << first.out;
  EXPECT_EQ(invoke(args).out, first.out);

  const auto path = scratch("replay.json");
  {
    std::ofstream f(path);
    f << first.report().at("config").dump();
  }
  const auto replay = invoke({"verify", "--config", path.string(), "--json"});
  EXPECT_EQ(replay.out, first.out);
}

TEST(Cli, OutFileAndDimsTable) {
  const auto path = scratch("dims.json");
  const auto r = invoke({"dims-table", "--out", path.string()});
  ASSERT_EQ(r.code, kPass) << r.err;
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("rows").size(), symcone::standard_algebras().size());
}

TEST(Cli, CheckIdentitiesPasses) {
  const auto r = invoke({"check-identities", "--algebra", "spin", "--ambient", "5", "--json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_TRUE(r.report().at("pass").get<bool>());
}

}  // namespace
}  // namespace symcone::cli
