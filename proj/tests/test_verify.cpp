// The verification harness itself: positive cases, negative controls,
// witnesses and report assembly.

#include <gtest/gtest.h>

#include "gtbcd/representation.hpp"
#include "gtbcd/verify.hpp"

namespace gtbcd {
namespace {

Weight w(std::initializer_list<Rational> xs) { return Weight(xs); }

TEST(Verify, DimensionExamples) {
  const CaseResult b2 = check_dimension({Family::B, 2}, w({1, 0}));
  EXPECT_TRUE(b2.passed);
  EXPECT_NE(b2.residual.find("count 5 vs weyl 5"), std::string::npos);
  EXPECT_TRUE(check_dimension({Family::B, 2}, w({0, 0})).passed);
  EXPECT_TRUE(check_dimension({Family::C, 3}, w({1, 1, 0})).passed);
}

TEST(Verify, DimensionFailsOnBrokenInterlacing) {
  const AlgebraLabel label{Family::B, 2};
  const Weight lambda = w({2, 1});
  const auto pats = enumerate_patterns(label, lambda);
  for (std::size_t k = 0; k < pats.size(); ++k) {
    std::vector<Pattern> broken = pats;
    Pattern& p = broken[k];
    p.level(1).row[0] = p.level(2).primed[0] + 1;  // m_{-2,1} > m'_{-2,2}
    const CaseResult r = check_dimension(label, lambda, &broken);
    EXPECT_FALSE(r.passed) << k;
    EXPECT_NE(r.witness.find("pattern " + std::to_string(k)), std::string::npos);
  }
}

TEST(Verify, DimensionFailsOnMissingOrRepeatedPattern) {
  const AlgebraLabel label{Family::D, 2};
  auto pats = enumerate_patterns(label, w({2, 1}));
  pats.pop_back();
  EXPECT_FALSE(check_dimension(label, w({2, 1}), &pats).passed);
  pats.push_back(pats.front());
  EXPECT_FALSE(check_dimension(label, w({2, 1}), &pats).passed);
}

TEST(Verify, WeightsExamples) {
  EXPECT_TRUE(check_weights({Family::C, 2}, w({0, 0})).passed);
  EXPECT_TRUE(check_weights({Family::D, 3}, w({1, 1, -1})).passed);
}

TEST(Verify, CommutatorsPassAndCorruptionsFail) {
  const AlgebraLabel label{Family::D, 2};
  const Weight lambda = w({1, 0});
  const CaseResult ok = check_commutators(label, lambda);
  EXPECT_TRUE(ok.passed);
  EXPECT_EQ(ok.residual, "0");
  const auto rep = Representation::get(label, lambda);
  // Every single stored entry of every basis operator, corrupted by +1.
  for (const auto& [g, op] : rep->basis_operators()) {
    for (const auto& [key, v] : op.entries) {
      auto ops = rep->basis_operators();
      ops.at(g).add(key.first, key.second, AlgebraicValue(1));
      const CaseResult bad = check_commutators(label, lambda, &ops);
      EXPECT_FALSE(bad.passed) << g.to_string();
      EXPECT_FALSE(bad.witness.empty());
    }
  }
}

TEST(Verify, CommutatorsRejectIncompleteOperatorSets) {
  const AlgebraLabel label{Family::B, 2};
  auto ops = Representation::get(label, w({1, 0}))->basis_operators();
  ops.erase(ops.begin());
  const CaseResult r = check_commutators(label, w({1, 0}), &ops);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.witness.find("no operator"), std::string::npos);
}

TEST(Verify, CasimirSpotValues) {
  const Rational four(4), five(5), six(6);
  const CaseResult b = check_casimir({Family::B, 2}, w({1, 0}), &four);
  EXPECT_TRUE(b.passed);
  EXPECT_NE(b.residual.find("eigenvalue 4"), std::string::npos);
  EXPECT_TRUE(check_casimir({Family::C, 2}, w({1, 0}), &five).passed);
  EXPECT_FALSE(check_casimir({Family::C, 2}, w({1, 0}), &six).passed);
}

TEST(Verify, FactorizationChecks) {
  EXPECT_TRUE(check_wigner_eckart({Family::B, 3}, w({1, 0, 0})).passed);
  EXPECT_TRUE(check_wigner_eckart({Family::D, 3}, w({1, 1, 0})).passed);
  EXPECT_TRUE(check_prop_pp({Family::B, 2}, w({1, 0})).passed);
  // Generators inside g_{n-1} are not tensor operators of this kind.
  EXPECT_FALSE(check_wigner_eckart({Family::B, 3}, w({1, 0, 0}), GeneratorId{-2, -3}).passed);
  EXPECT_FALSE(check_prop_pp({Family::C, 2}, w({1, 0})).passed);
}

TEST(Verify, WignerCheck) {
  const CaseResult r = check_wigner({Family::C, 2}, w({1, 0}), -2);
  EXPECT_TRUE(r.passed);
  EXPECT_NE(r.residual.find("nullity 1"), std::string::npos);
  EXPECT_FALSE(check_wigner({Family::C, 2}, w({1, 0}), 1).passed);  // [1,-1]: not a constituent
}

TEST(Verify, SuitesOnSelectedCases) {
  const std::vector<GridCase> cases = {{{Family::B, 2}, w({1, 0})}, {{Family::D, 3}, w({1, 0, 0})}};
  for (const std::string suite : {"dimension", "weights", "brackets", "casimir", "equivariance"}) {
    const VerificationReport r = run_suite(suite, &cases);
    EXPECT_TRUE(r.passed()) << suite;
    EXPECT_FALSE(r.cases.empty()) << suite;
  }
  EXPECT_THROW(run_suite("nonsense"), DomainError);
}

TEST(Verify, ReportIsSortedAndDeterministic) {
  const std::vector<GridCase> cases = {{{Family::D, 2}, w({1, 0})}, {{Family::B, 2}, w({1, 0})}};
  const VerificationReport a = run_suite("all", &cases);
  const VerificationReport b = run_suite("all", &cases);
  ASSERT_EQ(a.cases.size(), b.cases.size());
  for (std::size_t k = 0; k < a.cases.size(); ++k) {
    EXPECT_EQ(a.cases[k].check, b.cases[k].check);
    EXPECT_EQ(a.cases[k].residual, b.cases[k].residual);
    if (k > 0) {
      EXPECT_LE(std::tie(a.cases[k - 1].check, a.cases[k - 1].label, a.cases[k - 1].lambda),
                std::tie(a.cases[k].check, a.cases[k].label, a.cases[k].lambda));
    }
  }
  const auto j = report_to_json(a);
  EXPECT_EQ(j.at("cases").size(), a.cases.size());
  EXPECT_TRUE(j.at("metadata").contains("arithmetic"));
  EXPECT_EQ(j.at("failures").get<std::size_t>(), a.failures());
}

TEST(Verify, AcceptanceGridShape) {
  const auto grid = acceptance_grid();
  EXPECT_EQ(grid.size(), 22u);
  for (const auto& [label, lambda] : grid) EXPECT_TRUE(is_dominant(label, lambda));
}

}  // namespace
}  // namespace gtbcd
