// Generator matrices of the constructed representations: structural
// properties checked against the defining relations, the weight oracle and
// an independent recomputation from the ambient module.

#include <gtest/gtest.h>

#include <map>

#include "gtbcd/bcd_action.hpp"
#include "gtbcd/gl_kernel.hpp"
#include "gtbcd/representation.hpp"
#include "gtbcd/verify.hpp"
#include "oracles.hpp"

namespace gtbcd {
namespace {

Weight w(std::initializer_list<Rational> xs) { return Weight(xs); }

std::vector<GridCase> small_cases() {
  std::vector<GridCase> out = acceptance_grid();
  out.push_back({{Family::D, 3}, w({Rational(3, 2), Rational(1, 2), Rational(-1, 2)})});
  out.push_back({{Family::B, 3}, w({Rational(1, 2), Rational(1, 2), Rational(1, 2)})});
  out.push_back({{Family::A, 3}, w({2, 1, 0})});
  return out;
}

TEST(Representation, CartanOperatorsAreDiagonalWithPatternWeights) {
  for (const auto& [label, lambda] : small_cases()) {
    const auto rep = Representation::get(label, lambda);
    for (int c = -label.rank; c <= -1; ++c) {
      const SparseOperator h = rep->op({c, c});
      for (const auto& [key, v] : h.entries) EXPECT_EQ(key.first, key.second);
      for (std::size_t i = 0; i < rep->dimension(); ++i) {
        EXPECT_EQ(h.at(i, i), AlgebraicValue(pattern_weight(rep->patterns()[i])[c + label.rank]));
      }
    }
  }
}

TEST(Representation, RaisingIsTransposeOfLowering) {
  for (const auto& [label, lambda] : small_cases()) {
    const auto rep = Representation::get(label, lambda);
    for (GeneratorId g : generator_basis(label)) {
      if (!is_lowering(g)) continue;
      EXPECT_TRUE(same_entries(rep->op({g.j, g.i}), transpose(rep->op(g))))
          << label.to_string() << weight_to_string(lambda) << g.to_string();
    }
  }
}

TEST(Representation, EntriesAreSingleSignedSquareRoots) {
  for (const auto& [label, lambda] : small_cases()) {
    const auto rep = Representation::get(label, lambda);
    for (const auto& [g, op] : rep->basis_operators()) {
      op.check();
      for (const auto& [key, v] : op.entries) EXPECT_EQ(v.term_count(), 1u);
    }
  }
}

TEST(Representation, ClosureAgreesWithDirectAmbientComputation) {
  for (const auto& [label, lambda] : small_cases()) {
    const auto rep = Representation::get(label, lambda);
    for (GeneratorId g : generator_basis(label)) {
      EXPECT_TRUE(same_entries(rep->direct_op(g), rep->op(g)))
          << label.to_string() << weight_to_string(lambda) << g.to_string();
    }
  }
}

TEST(Representation, GeneratorsShiftWeightsByTheirRoot) {
  for (const auto& [label, lambda] : small_cases()) {
    const auto rep = Representation::get(label, lambda);
    for (const auto& [g, op] : rep->basis_operators()) {
      const auto gw = generator_weight(label, g);
      for (const auto& [key, v] : op.entries) {
        Weight expected = rep->weights()[key.second];
        for (std::size_t k = 0; k < expected.size(); ++k) expected[k] += gw[k];
        EXPECT_EQ(rep->weights()[key.first], expected);
      }
    }
  }
}

TEST(Representation, HighestVectorIsAnnihilatedByRaising) {
  for (const auto& [label, lambda] : small_cases()) {
    const auto rep = Representation::get(label, lambda);
    for (GeneratorId g : simple_raising(label)) {
      for (const auto& [key, v] : rep->op(g).entries) EXPECT_NE(key.second, 0u);
    }
  }
}

TEST(Representation, UnnormalizedOperatorIsSimilarToNormalized) {
  const auto rep = Representation::get({Family::B, 2}, w({2, 1}));
  for (GeneratorId g : simple_lowering(rep->label())) {
    const SparseOperator op = rep->op(g);
    const RationalOperator x = rep->unnormalized_op(g);
    std::size_t count = 0;
    for (const auto& [key, q] : x) {
      ++count;
      const Rational ratio = rep->norms()[key.first] / rep->norms()[key.second];
      EXPECT_EQ(op.at(key.first, key.second), AlgebraicValue::sqrt_of(ratio) * AlgebraicValue(q));
    }
    EXPECT_EQ(count, op.entries.size());
  }
}

TEST(Representation, UnknownGeneratorThrows) {
  const auto rep = Representation::get({Family::C, 2}, w({1, 0}));
  EXPECT_THROW(rep->op({3, 1}), DomainError);
}

TEST(Representation, SpinorAndSmallExamples) {
  // o_3 spin 1/2: F(0,-1) lowers the weight by one.
  const auto spin = Representation::get({Family::B, 1}, w({Rational(1, 2)}));
  ASSERT_EQ(spin->dimension(), 2u);
  const SparseOperator f = spin->op({0, -1});
  ASSERT_EQ(f.entries.size(), 1u);
  EXPECT_EQ(f.entries.begin()->first, (SparseOperator::Key{1, 0}));
  // Weight (1/2) -> (-1/2) in the Euclidean normalization: entry^2 = 1/2.
  EXPECT_EQ(f.entries.begin()->second.signum_and_square().second, Rational(1, 2));
}

// --- level structure -------------------------------------------------------

TEST(BcdAction, LevelLoweringDependsOnlyOnLowerLevels) {
  for (const auto& [label, lambda] : small_cases()) {
    if (label.rank < 2) continue;
    for (int level = 2; level <= label.rank; ++level) {
      const auto rep = Representation::get(label, lambda);
      const SparseOperator op = gn_f_minus1_minus2(label, lambda, level);
      const auto& pats = rep->patterns();
      // The operator does not touch levels above `level`, and its value only
      // depends on the levels <= level of source and target.
      std::map<std::pair<std::vector<Rational>, std::vector<Rational>>, AlgebraicValue> seen;
      for (const auto& [key, v] : op.entries) {
        const Pattern& a = pats[key.first];
        const Pattern& b = pats[key.second];
        for (int k = level + 1; k <= label.rank; ++k) EXPECT_EQ(a.level(k), b.level(k));
        const auto local = std::make_pair(pattern_key(sub_pattern(a, level)), pattern_key(sub_pattern(b, level)));
        const auto [it, inserted] = seen.emplace(local, v);
        if (!inserted) {
          EXPECT_EQ(it->second, v) << label.to_string() << weight_to_string(lambda);
        }
      }
    }
  }
}

TEST(BcdAction, LevelIndexIsChecked) {
  EXPECT_THROW(gn_f_minus1_minus2({Family::B, 2}, w({1, 0}), 1), DomainError);
  EXPECT_THROW(gn_f_minus1_minus2({Family::B, 2}, w({1, 0}), 3), DomainError);
}

TEST(BcdAction, O3ClosedFormMatchesConstructionUpToDiagonalSimilarity) {
  for (const Rational& m : {Rational(1), Rational(2), Rational(3)}) {
    const SparseOperator closed = o3_f_minus10(w({m}));
    const SparseOperator built = Representation::get({Family::B, 1}, w({m}))->op({0, -1});
    ASSERT_EQ(closed.entries.size(), built.entries.size());
    for (const auto& [key, v] : built.entries) {
      EXPECT_FALSE(closed.at(key.first, key.second).is_zero());
    }
  }
  // [1]: sigma steps between primed values 1 -> 1 -> 0, entries |2; -2:1| of [1,0],[m'].
  const SparseOperator one = o3_f_minus10(w({1}));
  EXPECT_EQ(one.entries.size(), 2u);
  for (const auto& [key, v] : one.entries) EXPECT_EQ(v, AlgebraicValue(1));
  EXPECT_EQ(o3_f_minus10(w({2})).at(2, 1), AlgebraicValue::sqrt_of(Rational(2)));
}

TEST(BcdAction, Rank2LoweringsAreTheNegativeRoots) {
  EXPECT_EQ(rank2_lowerings({Family::B, 2}, w({1, 0})).size(), 4u);
  EXPECT_EQ(rank2_lowerings({Family::C, 2}, w({1, 0})).size(), 4u);
  EXPECT_EQ(rank2_lowerings({Family::D, 2}, w({1, 0})).size(), 2u);
  for (const auto& [g, op] : rank2_lowerings({Family::B, 2}, w({2, 1}))) EXPECT_TRUE(is_lowering(g));
  EXPECT_THROW(rank2_lowerings({Family::B, 3}, w({1, 0, 0})), DomainError);
}

TEST(BcdAction, ClosedFormReducedElementsHandValues) {
  // Vector representation of sp_4: both closed-form elements are 1 and agree
  // with the construction.
  const AlgebraLabel c2{Family::C, 2};
  const auto closed = rank2_reduced_closed_form(c2, w({1, 0}));
  const auto rep = Representation::get(c2, w({1, 0}));
  for (const auto& [g, op] : closed) {
    EXPECT_EQ(op.entries.size(), 1u);
    for (const auto& [key, v] : op.entries) {
      EXPECT_EQ(v, AlgebraicValue(1));
      EXPECT_EQ(rep->op(g).at(key.first, key.second), v);
    }
  }
  EXPECT_THROW(rank2_reduced_closed_form({Family::D, 2}, w({1, 0})), DomainError);
}

TEST(BcdAction, MaximalLevelOneData) {
  const auto pats = enumerate_patterns({Family::B, 2}, w({1, 0}));
  EXPECT_TRUE(level1_maximal(pats.front()));
  std::size_t maximal = 0;
  for (const auto& p : pats) maximal += level1_maximal(p) ? 1 : 0;
  EXPECT_GT(maximal, 0u);
  EXPECT_LT(maximal, pats.size());
}

}  // namespace
}  // namespace gtbcd
