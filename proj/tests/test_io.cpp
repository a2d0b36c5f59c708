#include <gtest/gtest.h>

#include "support.hpp"

using namespace confcoh;
using confcoh::testing::P;

namespace {

const LieConformalAlgebra kSv = builtin("sv");

TEST(CochainJson, RoundTrip) {
  std::mt19937 rng(5);
  const auto m = CoefficientModule::trivial(0);
  for (int i = 0; i < confcoh::testing::kCases; ++i) {
    const int q = std::uniform_int_distribution<int>(0, 4)(rng);
    const int deg = std::uniform_int_distribution<int>(0, 4)(rng);
    Cochain c = confcoh::testing::random_cochain(rng, homogeneous_space(kSv, m, q, deg));
    EXPECT_EQ(cochain_from_json(kSv, Json::parse(cochain_to_json(kSv, c).dump())), c);
  }
}

TEST(CochainJson, Layout) {
  Cochain c(2);
  c.set(Signature({2, 0, 0}), P("-x1^3 + x2^3"));
  EXPECT_EQ(cochain_to_json(kSv, c).dump(),
            R"({"arity":2,"components":[{"tuple":["L","L"],"value":"-x1^3 + x2^3"}]})");
}

TEST(CochainJson, NonCanonicalTupleIsReordered) {
  // γ_{x1,x2}(M, L) = x1 means γ_{x1,x2}(L, M) = −x2.
  const Json j = Json::parse(R"({"arity":2,"components":[{"tuple":["M","L"],"value":"x1"}]})");
  const Cochain c = cochain_from_json(kSv, j);
  EXPECT_EQ(c.component(Signature({1, 0, 1})), P("-x2"));
  // Three slots, cyclic shift (even permutation).
  const Json k = Json::parse(R"({"arity":3,"components":[{"tuple":["Y","M","L"],"value":"x1*x2^2"}]})");
  EXPECT_EQ(cochain_from_json(kSv, k).component(Signature({1, 1, 1})), P("x2*x3^2"));
}

TEST(CochainJson, Errors) {
  EXPECT_THROW(cochain_from_json(kSv, Json::parse(R"({"arity":2,"components":[{"tuple":["L"],"value":"1"}]})")),
               std::invalid_argument);
  EXPECT_THROW(cochain_from_json(kSv, Json::parse(R"({"arity":1,"components":[{"tuple":["Q"],"value":"1"}]})")),
               AlgebraError);
  EXPECT_THROW(cochain_from_json(kSv, Json::parse(R"({"arity":1,"components":[{"tuple":["L"],"value":"x1+"}]})")),
               PolyParseError);
}

TEST(ReportJson, DeterministicAndComplete) {
  EngineOptions opt;
  opt.q_max = 5;
  const auto m = CoefficientModule::trivial(0);
  const std::string a = report_to_json(kSv, compute_cohomology(kSv, m, opt)).dump();
  const std::string b = report_to_json(kSv, compute_cohomology(kSv, m, opt)).dump();
  EXPECT_EQ(a, b);
  const Json j = Json::parse(a);
  for (const char* key : {"algebra", "coefficients", "mode", "dims_basic", "dims_reduced", "representatives", "caps"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["dims_basic"]["3"], 1);
  EXPECT_EQ(j["dims_reduced"]["2"], 1);
  const Cochain rep = cochain_from_json(kSv, j["representatives"]["3"][0]);
  EXPECT_TRUE(differential(kSv, m, rep).is_zero());
}

TEST(Text, Piecewise) {
  EXPECT_EQ(piecewise({{0, 1}, {1, 0}, {2, 0}, {3, 1}, {4, 0}, {5, 2}, {6, 2}, {7, 0}}),
            "1 if q=0,3; 2 if q=5,6; 0 otherwise");
  EXPECT_EQ(piecewise({{0, 0}, {1, 0}}), "0 for all q");
  EXPECT_EQ(dims_row({{0, 1}, {1, 0}, {2, 4}}), "1,0,4");
}

TEST(Text, CochainText) {
  Cochain c(2);
  c.set(Signature({1, 0, 1}), P("x2"));
  c.set(Signature({0, 2, 0}), P("x1 - x2"));
  EXPECT_EQ(cochain_to_text(kSv, c), "(L,M) = x2;  (Y,Y) = x1 - x2");
  EXPECT_EQ(cochain_to_text(kSv, Cochain(1)), "0");
}

}  // namespace
