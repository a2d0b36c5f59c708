#include <gtest/gtest.h>

#include <algorithm>

#include "reference_data.hpp"
#include "support.hpp"

using namespace confcoh;
namespace ref = confcoh::reference;

namespace {

const LieConformalAlgebra kSv = builtin("sv");
const CoefficientModule kC0 = CoefficientModule::trivial(0);

std::vector<int> row(const std::map<int, int>& m) {
  std::vector<int> v;
  for (const auto& [q, d] : m) v.push_back(d);
  return v;
}

std::vector<std::string> rows_at(const std::vector<SolutionRow>& t, int q) {
  std::vector<std::string> out;
  for (const auto& r : t)
    if (r.signature.arity() == q) out.push_back(to_string(r));
  return out;
}

// Filtered SV/ℂ run shared by several tests.
const CohomologyReport& sv_report() {
  static const CohomologyReport rep = compute_cohomology(kSv, kC0, EngineOptions{});
  return rep;
}

TEST(SolutionTable, SvRows) {
  const auto t = solution_table(kSv);
  std::vector<std::string> got;
  for (const auto& r : t) got.push_back(to_string(r));
  std::vector<std::string> want = ref::sv_table_rows();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(rows_at(t, 4), (std::vector<std::string>{"4 | (1,2,1) | 1 | 2", "4 | (2,0,2) | 2 | 2",
                                                      "4 | (2,2,0) | 2 | 3", "4 | (3,0,1) | 3 | 3"}));
  EXPECT_TRUE(rows_at(t, 7).empty());
}

TEST(SolutionTable, Vir) {
  const auto t = solution_table(builtin("vir"));
  EXPECT_EQ(rows_at(t, 1), (std::vector<std::string>{"1 | (1) | 0 | 1"}));
}

TEST(SolutionTable, NeedsGrading) {
  EXPECT_THROW(solution_table(make_algebra("plain", {"A"}, {}, std::nullopt)), AlgebraError);
}

TEST(Cohomology, SvFilteredDims) {
  EXPECT_EQ(row(sv_report().dims_basic), ref::sv_basic_dims());
  EXPECT_EQ(row(sv_report().dims_reduced), ref::sv_reduced_dims());
  EXPECT_TRUE(sv_report().complete);
}

TEST(Cohomology, SvReportVerifies) {
  CohomologyReport rep = sv_report();
  EXPECT_TRUE(verify_report(kSv, kC0, rep));
  EXPECT_TRUE(rep.verified);
  for (const auto& [q, reps] : rep.representatives)
    for (const auto& g : reps) {
      auto c = verify_representative(kSv, kC0, g);
      EXPECT_TRUE(c.is_cocycle);
      EXPECT_FALSE(c.is_coboundary);
    }
}

TEST(Cohomology, SvQ3RepresentativeIsVandermonde) {
  const auto& reps = sv_report().representatives.at(3);
  ASSERT_EQ(reps.size(), 1u);
  const Cochain phi = ref::build(ref::basic_q3()[0]);
  ASSERT_EQ(reps[0].components().size(), 1u);
  const Polynomial& p = reps[0].component(Signature({3, 0, 0}));
  const Polynomial& f = phi.component(Signature({3, 0, 0}));
  EXPECT_TRUE(p == f || p == -f);
}

TEST(Cohomology, SvBasicClassesContainListedCocycles) {
  for (const auto* list : {&ref::basic_q3(), &ref::basic_q5(), &ref::basic_q6()})
    for (const auto& n : *list) {
      const Cochain c = ref::build(n);
      EXPECT_TRUE(differential(kSv, kC0, c).is_zero()) << n.name;
      EXPECT_FALSE(class_contains(kSv, kC0, {}, c, false)) << n.name;
      EXPECT_TRUE(class_contains(kSv, kC0, sv_report().representatives.at(c.arity()), c, false)) << n.name;
    }
}

TEST(Cohomology, SvReducedClassesContainListedCocycles) {
  for (const auto* list : {&ref::reduced_q2(), &ref::reduced_q4(), &ref::reduced_q5()})
    for (const auto& n : *list) {
      const Cochain c = ref::build(n);
      auto check = verify_reduced_representative(kSv, kC0, c);
      EXPECT_TRUE(check.is_cocycle) << n.name;
      EXPECT_FALSE(check.is_coboundary) << n.name;
      EXPECT_TRUE(class_contains(kSv, kC0, sv_report().representatives_reduced.at(c.arity()), c, true)) << n.name;
    }
}

TEST(Cohomology, ReducedRepresentativesComeFromTauOfPartial) {
  for (const auto* list : {&ref::basic_q3(), &ref::basic_q5(), &ref::basic_q6()})
    for (const auto& n : *list) {
      const Cochain g = ref::build(n);
      const Cochain bar = tau(kSv, partial(kC0, g));
      // d(τ∂γ) = ∂γ up to the homotopy scalar, so τ∂γ is a reduced cocycle.
      EXPECT_TRUE(divide_by_partial(kC0, differential(kSv, kC0, bar)).has_value()) << n.name;
      EXPECT_TRUE(class_contains(kSv, kC0, sv_report().representatives_reduced.at(bar.arity()), bar, true));
    }
}

TEST(VerifyRepresentative, CoboundaryOfRandomCochain) {
  std::mt19937 rng(99);
  for (int i = 0; i < 20; ++i) {
    const int q = std::uniform_int_distribution<int>(0, 3)(rng);
    const int deg = std::uniform_int_distribution<int>(0, 3)(rng);
    Cochain phi = confcoh::testing::random_cochain(rng, homogeneous_space(kSv, kC0, q, deg));
    Cochain dphi = differential(kSv, kC0, phi);
    auto r = verify_representative(kSv, kC0, dphi);
    EXPECT_TRUE(r.is_cocycle);
    EXPECT_TRUE(r.is_coboundary);
  }
}

TEST(Cohomology, VirOracle) {
  EngineOptions opt;
  opt.q_max = 5;
  opt.mode = Mode::Oracle;
  const auto vir = builtin("vir");
  const auto rep = compute_cohomology(vir, kC0, opt);
  EXPECT_EQ(row(rep.dims_basic), (std::vector<int>{1, 0, 0, 1, 0, 0}));
  EXPECT_EQ(row(rep.dims_reduced), (std::vector<int>{1, 0, 1, 1, 0, 0}));
  ASSERT_EQ(rep.representatives.at(3).size(), 1u);
  Cochain phi(3);
  phi.set(Signature({3}), parse_polynomial(ref::basic_q3()[0].value));
  EXPECT_TRUE(class_contains(vir, kC0, rep.representatives.at(3), phi, false));
}

TEST(Cohomology, OracleMatchesFilteredLowQ) {
  EngineOptions opt;
  opt.q_max = 5;
  opt.mode = Mode::Oracle;
  const auto rep = compute_cohomology(kSv, kC0, opt);
  std::vector<int> basic(ref::sv_basic_dims().begin(), ref::sv_basic_dims().begin() + 6);
  std::vector<int> reduced(ref::sv_reduced_dims().begin(), ref::sv_reduced_dims().begin() + 6);
  EXPECT_EQ(row(rep.dims_basic), basic);
  EXPECT_EQ(row(rep.dims_reduced), reduced);
}

TEST(Cohomology, BasicDimsIndependentOfTrivialParameter) {
  EngineOptions opt;
  opt.q_max = 6;
  for (const Rational a : {Rational(1), Rational(-1), make_rational(1, 2)}) {
    const auto rep = basic_cohomology(kSv, CoefficientModule::trivial(a), opt);
    EXPECT_EQ(row(rep.dims_basic), std::vector<int>(ref::sv_basic_dims().begin(), ref::sv_basic_dims().begin() + 7));
  }
}

TEST(Vanishing, TrivialNonzero) {
  EngineOptions opt;
  opt.q_max = 4;
  const auto m = CoefficientModule::trivial(2);
  const auto rep = reduced_cohomology(kSv, m, opt);
  EXPECT_EQ(row(rep.dims_reduced), std::vector<int>(5, 0));
  EXPECT_TRUE(rep.verified);
  for (int q = 1; q <= 3; ++q) EXPECT_TRUE(verify_vanishing_homotopy(kSv, m, q, q + 1).has_value());
}

TEST(Vanishing, RankOneBetaNonzero) {
  EngineOptions opt;
  opt.q_max = 3;
  opt.mode = Mode::Oracle;
  const auto m = CoefficientModule::rank_one(kSv, 1, 1);
  const auto rep = reduced_cohomology(kSv, m, opt);
  EXPECT_EQ(row(rep.dims_reduced), std::vector<int>(4, 0));
  EXPECT_TRUE(rep.verified);
}

TEST(Vanishing, RefusesBetaZeroUnlessForced) {
  // With β = 0 the τ₂ homotopy has shift 0 and proves nothing.
  EngineOptions opt;
  EXPECT_THROW(reduced_cohomology(kSv, CoefficientModule::rank_one(kSv, 1, 0), opt), EngineError);
  opt.force_oracle = true;
  opt.mode = Mode::Oracle;
  opt.q_max = 2;
  const auto rep = reduced_cohomology(kSv, CoefficientModule::rank_one(kSv, 1, 0), opt);
  EXPECT_FALSE(rep.complete);
}

TEST(Cohomology, FilteredRejectsRankOneBasic) {
  EngineOptions opt;
  opt.q_max = 2;
  EXPECT_THROW(basic_cohomology(kSv, CoefficientModule::rank_one(kSv, 1, 1), opt), EngineError);
}

}  // namespace
