#include <gtest/gtest.h>

#include <fstream>

#include "support.hpp"

using namespace confcoh;
using confcoh::testing::P;

namespace {

LieConformalAlgebra mutated_sv() {
  return make_algebra("sv-mutated", {"L", "Y", "M"},
                      {{"L", "L", "D + 2*x", "L"},
                       {"Y", "L", "1/2*D + 3/2*x", "Y"},
                       {"L", "Y", "D + 3/2*x", "Y"},
                       {"Y", "Y", "D + 2*x", "M"},
                       {"L", "M", "D + 2*x", "M"},
                       {"M", "L", "x", "M"}},
                      "L");
}

TEST(Bracket, SvEntries) {
  const auto sv = builtin("sv");
  const auto ly = sv.bracket("L", "Y");
  ASSERT_EQ(ly.size(), 1u);
  EXPECT_EQ(ly.at(sv.index_of("Y")), P("D + 3/2*x"));
  const auto ml = sv.bracket("M", "L");
  ASSERT_EQ(ml.size(), 1u);
  EXPECT_EQ(ml.at(sv.index_of("M")), P("x"));
  EXPECT_TRUE(sv.bracket("M", "M").empty());
  EXPECT_THROW(sv.bracket("L", "Q"), AlgebraError);
}

TEST(Builtin, Shapes) {
  const auto sv = builtin("sv");
  EXPECT_EQ(sv.generator_names(), (std::vector<std::string>{"L", "Y", "M"}));
  EXPECT_EQ(sv.table().size(), 6u);
  EXPECT_EQ(builtin("vir").table().size(), 1u);
  const auto hv = builtin("hv");
  EXPECT_EQ(hv.generator_names(), (std::vector<std::string>{"L", "M"}));
  EXPECT_EQ(hv.table().size(), 3u);
  EXPECT_FALSE(hv.bracket("L", "L").empty());
  EXPECT_FALSE(hv.bracket("L", "M").empty());
  EXPECT_FALSE(hv.bracket("M", "L").empty());
  EXPECT_THROW(builtin("w"), AlgebraError);
  for (const char* n : {"vir", "hv", "sv"}) EXPECT_EQ(*builtin(n).virasoro(), 0u);
}

TEST(Axioms, BuiltinsPass) {
  for (const char* n : {"vir", "hv", "sv"}) {
    const auto r = check_axioms(builtin(n));
    EXPECT_TRUE(r.skew_ok) << n;
    EXPECT_TRUE(r.jacobi_ok) << n;
    EXPECT_TRUE(r.failures.empty()) << n;
  }
}

TEST(Axioms, MutatedLMFailsJacobiOnLYY) {
  const auto alg = mutated_sv();
  const auto r = check_axioms(alg);
  EXPECT_FALSE(r.jacobi_ok);
  bool found = false;
  for (const auto& f : r.failures)
    if (f.kind == AxiomFailure::Kind::Jacobi && f.generators == std::vector<GenId>{0, 1, 1}) {
      found = true;
      EXPECT_FALSE(f.residual.empty());
    }
  EXPECT_TRUE(found);
}

TEST(Axioms, SkewFailuresAreConsistentBetweenOrders) {
  // [a_λ b] + [b_{−λ−∂} a] vanishes for (a,b) iff it vanishes for (b,a).
  for (const auto& alg : {builtin("sv"), mutated_sv()}) {
    const auto r = check_axioms(alg);
    std::set<std::pair<GenId, GenId>> failed;
    for (const auto& f : r.failures)
      if (f.kind == AxiomFailure::Kind::Skew) failed.insert({f.generators[0], f.generators[1]});
    for (const auto& [a, b] : failed) EXPECT_TRUE(failed.count({b, a}));
  }
}

TEST(WeightTable, Values) {
  EXPECT_EQ(*weight_table(builtin("sv")), (std::vector<Rational>{1, make_rational(1, 2), 0}));
  EXPECT_EQ(*weight_table(builtin("vir")), (std::vector<Rational>{1}));
  EXPECT_EQ(*weight_table(builtin("hv")), (std::vector<Rational>{1, 0}));
}

TEST(WeightTable, NotGraded) {
  const auto alg = make_algebra("odd", {"L", "A"},
                                {{"L", "L", "D + 2*x", "L"}, {"A", "L", "D", "A"}, {"L", "A", "D", "A"}}, "L");
  EXPECT_FALSE(weight_table(alg).has_value());
  EXPECT_THROW(weight_table(make_algebra("plain", {"A"}, {}, std::nullopt)), AlgebraError);
}

TEST(HomogeneousDegree, Builtins) {
  EXPECT_EQ(builtin("sv").homogeneous_degree(), 1);
  const auto mixed = make_algebra("m", {"L"}, {{"L", "L", "D + 2*x + 1", "L"}}, std::nullopt);
  EXPECT_FALSE(mixed.homogeneous_degree().has_value());
}

TEST(AlgebraFile, RoundTripsThroughText) {
  for (const char* n : {"vir", "hv", "sv"}) {
    const auto alg = builtin(n);
    const auto back = parse_algebra(to_text(alg));
    EXPECT_EQ(back.generator_names(), alg.generator_names());
    EXPECT_EQ(back.table(), alg.table());
    EXPECT_EQ(back.virasoro(), alg.virasoro());
  }
}

TEST(AlgebraFile, MultiTermAndComments) {
  const auto alg = parse_algebra(
      "# two terms\nalgebra t\ngenerators A B\nbracket A A = (D) B - (2*x) A  # trailing\n");
  const auto& e = alg.bracket("A", "A");
  EXPECT_EQ(e.at(0), P("-2*x"));
  EXPECT_EQ(e.at(1), P("D"));
}

TEST(AlgebraFile, ErrorsReportLines) {
  auto line_of = [](const std::string& text) {
    try {
      parse_algebra(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("algebra a\ngenerators L\nbracket L L = (D + 2*x) Q\n"), 3);
  EXPECT_EQ(line_of("algebra a\ngenerators L\n\nbracket L L = (D + y) L\n"), 4);
  EXPECT_EQ(line_of("algebra a\nfrobnicate\n"), 2);
  EXPECT_EQ(line_of("generators L\nbracket L L = D L\n"), 2);
  EXPECT_EQ(line_of("generators L\nbracket L L = (D) L\nbracket L L = (x) L\n"), 3);
}

TEST(AlgebraFile, DemoFiles) {
  std::ifstream good(CONFCOH_DEMO_DIR "/sv.lca");
  ASSERT_TRUE(good);
  const auto sv = parse_algebra(good);
  EXPECT_TRUE(check_axioms(sv).ok());
  EXPECT_EQ(sv.table(), builtin("sv").table());

  std::ifstream bad(CONFCOH_DEMO_DIR "/broken.lca");
  ASSERT_TRUE(bad);
  const auto broken = parse_algebra(bad);
  EXPECT_FALSE(check_axioms(broken).jacobi_ok);
}

}  // namespace
