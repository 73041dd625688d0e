#include "gtbcd/bcd_action.hpp"

#include "gtbcd/gl_kernel.hpp"

namespace gtbcd {

namespace {

SparseOperator empty_operator(const AlgebraLabel& label, const Weight& lambda, GeneratorId g, std::size_t dim) {
  SparseOperator r;
  r.label = label;
  r.hw = lambda;
  r.gen = g;
  r.dim = dim;
  return r;
}

}  // namespace

bool level1_maximal(const Pattern& p) {
  const PatternLevel& l = p.level(1);
  return l.primed == l.row && l.sigma == 0;
}

SparseOperator o3_f_minus10(const Weight& lambda) {
  const AlgebraLabel label{Family::B, 1};
  validate_dominant(label, lambda);
  const auto rep = Representation::get(label, lambda);
  SparseOperator r = empty_operator(label, lambda, {0, -1}, rep->dimension());
  const Rational m = lambda.at(0);
  for (std::size_t j = 0; j < rep->dimension(); ++j) {
    const Pattern& src = rep->patterns()[j];
    const PatternLevel& l = src.level(1);
    Pattern dst = src;
    if (l.sigma == 0) {
      dst.level(1).sigma = 1;
    } else {
      dst.level(1).primed[0] -= 1;
      dst.level(1).sigma = 0;
    }
    if (!validate(dst).empty()) continue;
    const AlgebraicValue v = red_me({Row{m, Rational(0)}, Row{l.primed[0]}}, -2);
    r.add(rep->index_of(dst), j, v);
  }
  return r;
}

std::map<GeneratorId, SparseOperator> rank2_lowerings(const AlgebraLabel& label, const Weight& lambda) {
  if (label.rank != 2 || label.family == Family::A) throw DomainError("rank2_lowerings needs B2, C2 or D2");
  const auto rep = Representation::get(label, lambda);
  std::map<GeneratorId, SparseOperator> out;
  for (const auto& [g, op] : rep->basis_operators()) {
    if (is_lowering(g)) out.emplace(g, op);
  }
  return out;
}

std::map<GeneratorId, SparseOperator> rank2_reduced_closed_form(const AlgebraLabel& label, const Weight& lambda) {
  if (label.rank != 2 || (label.family != Family::B && label.family != Family::C)) {
    throw DomainError("closed-form reduced elements are stated for B2 and C2");
  }
  const auto rep = Representation::get(label, lambda);
  const GeneratorId minus{-1, -2};
  const GeneratorId plus{1, -2};
  std::map<GeneratorId, SparseOperator> out;
  out.emplace(minus, empty_operator(label, lambda, minus, rep->dimension()));
  out.emplace(plus, empty_operator(label, lambda, plus, rep->dimension()));
  for (std::size_t j = 0; j < rep->dimension(); ++j) {
    const Pattern& src = rep->patterns()[j];
    if (!level1_maximal(src)) continue;
    const PatternLevel& top = src.level(2);
    const Row& primed = top.primed;
    const Rational l = src.level(1).row[0];
    const Row upper{top.row[0], top.row[1], Rational(0)};
    auto maximal_below = [&](Pattern p) {
      p.level(1).primed = p.level(1).row;
      p.level(1).sigma = 0;
      return p;
    };
    // F(-1,-2): lowers m_{-2,1} only.
    {
      Pattern dst = src;
      dst.level(1).row[0] = l - 1;
      dst = maximal_below(dst);
      if (validate(dst).empty()) {
        out.at(minus).add(rep->index_of(dst), j, red_me({primed, Row{l}}, -2));
      }
    }
    // F(1,-2): lowers m'_{i1,2} and m_{-2,1}.
    for (int p = 0; p < 2; ++p) {
      Pattern dst = src;
      dst.level(2).primed[p] -= 1;
      dst.level(1).row[0] = l - 1;
      dst = maximal_below(dst);
      if (!validate(dst).empty()) continue;
      const AlgebraicValue v = red_me({upper, primed}, p - 3) * red_wigner({primed, Row{l}}, p - 2, -2);
      out.at(plus).add(rep->index_of(dst), j, v);
    }
  }
  return out;
}

SparseOperator gn_f_minus1_minus2(const AlgebraLabel& label, const Weight& lambda, int level) {
  const int n = label.rank;
  if (level < 2 || level > n) throw DomainError("level must lie in 2..n");
  return Representation::get(label, lambda)->op({-(n - level + 1), -(n - level + 2)});
}

}  // namespace gtbcd
