#include <gtest/gtest.h>

#include "support.hpp"

namespace symcone {
namespace {

class IdentitySuite : public ::testing::TestWithParam<AlgebraSpec> {};

TEST_P(IdentitySuite, AllChecksPass) {
  const auto alg = GetParam().make();
  IdentityOptions options;
  options.trials = 30;
  options.quadratic_trials = 20;
  const IdentityReport report = run_identity_suite(alg, options);
  for (const auto& c : report.checks)
    EXPECT_TRUE(c.pass) << c.name << ": " << c.max_error << " > " << c.tolerance << " "
                        << c.detail;
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.check("dimensions").max_error, 0.0);
  EXPECT_NEAR(report.trace_numeric, report.trace_closed, 1e-8);
}

INSTANTIATE_TEST_SUITE_P(Standard, IdentitySuite, ::testing::ValuesIn(standard_algebras()),
                         [](const auto& info) {
                           std::string name = info.param.describe();
                           for (char& c : name)
                             if (c == ' ' || c == '=') c = '_';
                           return name;
                         });

TEST(IdentityReport, JsonShape) {
  const auto report = run_identity_suite(make_algebra(AlgebraKind::SymReal, 2));
  const auto j = to_json(report);
  EXPECT_EQ(j.at("dim_F1"), 5);
  EXPECT_EQ(j.at("dim_F2"), 1);
  EXPECT_DOUBLE_EQ(j.at("trace_psi_closed").get<double>(), 4.5);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_THROW(report.check("no_such_check"), std::out_of_range);
}

TEST(StandardAlgebras, Labels) {
  const auto specs = standard_algebras();
  EXPECT_EQ(specs.front().describe(), "sym r=1");
  EXPECT_EQ(specs.back().describe(), "albert");
  EXPECT_EQ((AlgebraSpec{AlgebraKind::SpinFactor, 2, 4}.describe()), "spin E=4");
}

}  // namespace
}  // namespace symcone
