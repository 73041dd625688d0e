// gl_n kernel values checked against gl_n modules built independently by the
// representation construction (orthonormal Gelfand-Tsetlin basis), plus
// commutation relations of the rational lowering/raising action.

#include <gtest/gtest.h>

#include <map>

#include "gtbcd/gl_kernel.hpp"
#include "gtbcd/representation.hpp"

namespace gtbcd {
namespace {

Row row(std::initializer_list<long> xs) {
  Row r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

AlgebraicValue sqrt_of(long q) { return AlgebraicValue::sqrt_of(Rational(q)); }

// gl_N module from the construction, with gl patterns as keys.
struct GlModule {
  std::shared_ptr<const Representation> rep;
  std::map<GlPattern, std::size_t> index;
  explicit GlModule(const Row& top) {
    rep = Representation::get(AlgebraLabel{Family::A, static_cast<int>(top.size())}, top);
    for (std::size_t i = 0; i < rep->dimension(); ++i) index[to_gl_pattern(rep->patterns()[i])] = i;
  }
  int N() const { return static_cast<int>(rep->label().rank); }
  // Row of length r.
  static const Row& row_of(const GlPattern& g, int r) { return g.rows[g.rows.size() - r]; }
};

TEST(GlKernel, RedMeGl2Example) {
  // Lowering the single entry of the lower row of [1,0]/[1].
  EXPECT_EQ(red_me({row({1, 0}), row({1})}, -2), AlgebraicValue(1));
}

TEST(GlKernel, RedMeHandEvaluation) {
  // -(1)(-1)(-3) / (-1) = 3
  EXPECT_EQ(red_me_squared({row({2, 1, 0}), row({2, 1})}, -3), Rational(3));
  EXPECT_EQ(red_me({row({2, 1, 0}), row({2, 1})}, -3), sqrt_of(3));
}

TEST(GlKernel, RedMeVanishesWhenLeadingFactorVanishes) {
  // m_{-2,n-1} = m_{-1,n}
  EXPECT_TRUE(red_me({row({2, 1, 0}), row({1, 0})}, -2).is_zero());
  EXPECT_TRUE(red_me({row({3, 2}), row({2})}, -2).is_zero());
}

TEST(GlKernel, RedMeRejectsBadIndexAndShape) {
  EXPECT_THROW(red_me({row({2, 1, 0}), row({2, 1})}, -1), DomainError);
  EXPECT_THROW(red_me({row({2, 1, 0}), row({2})}, -3), ShapeError);
}

TEST(GlKernel, RedMeNegativeRadicandOutsideSelectionRules) {
  // Lower row not interlacing: the squared value turns negative.
  GlRowPair rows{row({1, 0}), row({3})};
  EXPECT_LT(red_me_squared(rows, -2), 0);
  EXPECT_THROW(red_me(rows, -2), DomainError);
}

TEST(GlKernel, RedWignerSignRule) {
  // i1 = i2 gives S(0) = +1: never negative, and nonzero somewhere.
  std::size_t positive = 0;
  for (const auto& g : enumerate_gl_patterns(row({3, 1, 0}))) {
    for (int i = -3; i <= -2; ++i) {
      int s = red_wigner({g.rows[0], g.rows[1]}, i, i).sign();
      EXPECT_GE(s, 0) << g.to_string();
      if (s > 0) ++positive;
    }
  }
  EXPECT_GT(positive, 0u);
  // i2 - i1 = -1 < 0 gives a negative value; here the radicand is 1.
  EXPECT_EQ(red_wigner({row({2, 1, 0}), row({2, 0})}, -1, -2), AlgebraicValue(-1));
}

TEST(GlKernel, WignerStandardExamples) {
  EXPECT_EQ(wigner({row({1, 0}), row({1})}, -1), AlgebraicValue(1));
  // Raising the first entry of [1,0] above the lower row [1] is forbidden.
  EXPECT_TRUE(wigner({row({1, 0}), row({1})}, -2).is_zero());
  // spin 1/2 x spin m/2 -> spin (m+1)/2 top state has coefficient 1.
  for (long m = 0; m <= 5; ++m) {
    EXPECT_EQ(wigner({row({m, 0}), row({m})}, -1), AlgebraicValue(1)) << m;
  }
  // Clebsch-Gordan squares of spin 1/2 x spin 1 at total weight 1/2:
  // 1/3 into spin 1/2 and 2/3 into spin 3/2.
  EXPECT_EQ(wigner_squared({row({2, 0}), row({1})}, -2), Rational(1, 3));
  EXPECT_EQ(wigner_squared({row({2, 0}), row({1})}, -1), Rational(2, 3));
}

TEST(GlKernel, WignerZeroDenominator) {
  // Equal shifted entries make a denominator factor vanish.
  EXPECT_THROW(wigner({row({0, 1}), row({3})}, -2), DomainError);
}

TEST(GlKernel, WignerSquaresSumToOne) {
  // Completeness: the fundamental coefficients of a fixed ket over all
  // shifts i form a unit vector.
  for (const auto& top : {row({2, 1, 0}), row({3, 1, 0}), row({2, 2, 0}), row({4, 2, 1})}) {
    for (const auto& g : enumerate_gl_patterns(top)) {
      GlRowPair pr{g.rows[0], g.rows[1]};
      // Inadmissible shifts have vanishing or negative squares.
      Rational admissible = 0;
      for (int i = -3; i <= -1; ++i) {
        Rational w = wigner_squared(pr, i);
        if (w > 0) admissible += w;
      }
      EXPECT_EQ(admissible, Rational(1)) << g.to_string();
    }
  }
}

// Simple lowering of gl_N that decrements row k-1 is F(-(N-k+1), -(N-k+2)).
GeneratorId simple_lowering_at(int N, int k) { return {-(N - k + 1), -(N - k + 2)}; }

TEST(GlKernel, SimpleLoweringFactorizesAgainstConstruction) {
  for (const auto& top : {row({2, 1, 0}), row({3, 1, 0}), row({2, 1, 0, 0}), row({3, 2, 1, 0}), row({1, 0, -1})}) {
    GlModule mod(top);
    const int N = mod.N();
    for (int k = 2; k <= N; ++k) {
      SparseOperator f = mod.rep->op(simple_lowering_at(N, k));
      std::size_t seen = 0;
      for (const auto& [src, j] : mod.index) {
        auto low = gl_gt_lowering(src, k);
        for (const auto& [dst, c] : low) {
          auto up = gl_gt_raising(dst, k);
          Rational back = 0;
          for (const auto& [g, d] : up) {
            if (g == src) back = d;
          }
          AlgebraicValue expected = AlgebraicValue::sqrt_of(c * back);
          EXPECT_EQ(f.at(mod.index.at(dst), j), expected) << src.to_string() << " -> " << dst.to_string();
          ++seen;
        }
      }
      EXPECT_EQ(seen, f.entries.size());
    }
  }
}

TEST(GlKernel, BiedenharnBairdFactorization) {
  // F(-(N-k+1), -(N-k+3)) decrements one entry of row k-1 and one of row k-2.
  for (const auto& top : {row({1, 0, 0}), row({1, 1, 0}), row({2, 0, 0}), row({2, 1, 0}), row({2, 2, 0}),
                          row({3, 0, 0}), row({3, 1, 0}), row({2, 1, 0, 0}), row({3, 1, 0, 0})}) {
    GlModule mod(top);
    const int N = mod.N();
    for (int k = 3; k <= N; ++k) {
      SparseOperator f = mod.rep->op({-(N - k + 1), -(N - k + 3)});
      std::size_t hits = 0;
      for (const auto& [src, j] : mod.index) {
        const Row& rk = GlModule::row_of(src, k);
        const Row& r1 = GlModule::row_of(src, k - 1);
        const Row& r2 = GlModule::row_of(src, k - 2);
        for (std::size_t p1 = 0; p1 < r1.size(); ++p1) {
          for (std::size_t p2 = 0; p2 < r2.size(); ++p2) {
            GlPattern dst = src;
            dst.rows[dst.rows.size() - (k - 1)][p1] -= 1;
            dst.rows[dst.rows.size() - (k - 2)][p2] -= 1;
            if (!gl_valid(dst)) continue;
            AlgebraicValue value = red_me({rk, r1}, static_cast<int>(p1) - k) *
                                   red_wigner({r1, r2}, static_cast<int>(p1) - (k - 1),
                                              static_cast<int>(p2) - (k - 1));
            if (k - 2 >= 1) {
              Row r3 = k - 3 >= 1 ? GlModule::row_of(src, k - 3) : Row{};
              value *= wigner({r2, r3}, static_cast<int>(p2) - (k - 2));
            }
            EXPECT_EQ(f.at(mod.index.at(dst), j), value) << top.size() << " " << src.to_string() << " -> "
                                                           << dst.to_string();
            if (!value.is_zero()) ++hits;
          }
        }
      }
      EXPECT_EQ(hits, f.entries.size()) << "stray entries for top of size " << top.size();
    }
  }
}

TEST(GlKernel, GtLoweringGl2Example) {
  GlPattern g{{row({1, 0}), row({1})}};
  auto out = gl_gt_lowering(g, 2);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].first, (GlPattern{{row({1, 0}), row({0})}}));
  EXPECT_EQ(out[0].second, Rational(1));
}

TEST(GlKernel, GtLoweringBottomOfLadderIsEmpty) {
  EXPECT_TRUE(gl_gt_lowering(GlPattern{{row({1, 0}), row({0})}}, 2).empty());
  EXPECT_TRUE(gl_gt_lowering(GlPattern{{row({2, 1, 0}), row({1, 0}), row({0})}}, 2).empty());
}

TEST(GlKernel, GtLoweringRejectsBadInput) {
  EXPECT_THROW(gl_gt_lowering(GlPattern{{row({1, 0}), row({2})}}, 2), ShapeError);
  EXPECT_THROW(gl_gt_lowering(GlPattern{{row({1, 0}), row({1})}}, 3), DomainError);
}

// Dense rational matrices of the rational action on the gl_N module of `top`.
using RMatrix = std::map<std::pair<std::size_t, std::size_t>, Rational>;

RMatrix rmul(const RMatrix& a, const RMatrix& b) {
  RMatrix out;
  for (const auto& [ka, va] : a) {
    for (const auto& [kb, vb] : b) {
      if (ka.second == kb.first) out[{ka.first, kb.second}] += va * vb;
    }
  }
  return out;
}

RMatrix rcomm(const RMatrix& a, const RMatrix& b) {
  RMatrix out = rmul(a, b);
  for (const auto& [k, v] : rmul(b, a)) out[k] -= v;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TEST(GlKernel, GtActionSatisfiesCommutationRelations) {
  for (const auto& top : {row({1, 0}), row({3, 0}), row({2, 1, 0}), row({3, 1, 0}), row({2, 2, -1}), row({2, 1, 0, 0})}) {
    auto patterns = enumerate_gl_patterns(top);
    std::map<GlPattern, std::size_t> index;
    for (std::size_t i = 0; i < patterns.size(); ++i) index[patterns[i]] = i;
    const int N = static_cast<int>(top.size());
    std::map<int, RMatrix> low, up;
    for (int k = 2; k <= N; ++k) {
      for (std::size_t j = 0; j < patterns.size(); ++j) {
        for (const auto& [g, c] : gl_gt_lowering(patterns[j], k)) low[k][{index.at(g), j}] = c;
        for (const auto& [g, c] : gl_gt_raising(patterns[j], k)) up[k][{index.at(g), j}] = c;
      }
    }
    // Diagonal E_{jj}: sum of row j minus sum of row j-1.
    auto d = [&](const GlPattern& g, int r) {
      Rational s = 0;
      for (const auto& x : GlModule::row_of(g, r)) s += x;
      if (r > 1) {
        for (const auto& x : GlModule::row_of(g, r - 1)) s -= x;
      }
      return s;
    };
    for (int k = 2; k <= N; ++k) {
      for (int l = 2; l <= N; ++l) {
        RMatrix c = rcomm(up[k], low[l]);
        RMatrix expected;
        if (k == l) {
          for (std::size_t j = 0; j < patterns.size(); ++j) {
            Rational h = d(patterns[j], k - 1) - d(patterns[j], k);
            if (h != 0) expected[{j, j}] = h;
          }
        }
        EXPECT_EQ(c, expected) << "[e" << k << ", f" << l << "] on top of size " << N;
        if (std::abs(k - l) >= 2) {
          EXPECT_TRUE(rcomm(low[k], low[l]).empty());
          EXPECT_TRUE(rcomm(up[k], up[l]).empty());
        }
        if (std::abs(k - l) == 1) {
          EXPECT_TRUE(rcomm(low[k], rcomm(low[k], low[l])).empty());
          EXPECT_TRUE(rcomm(up[k], rcomm(up[k], up[l])).empty());
        }
      }
    }
  }
}

}  // namespace
}  // namespace gtbcd
