#pragma once
// Generator matrices of an irreducible representation in the
// Gelfand-Tsetlin type basis labelled by patterns.
//
// The basis is built inside an explicit ambient module by descending the
// chain g_n > g_{n-1} > ... : each g_k-submodule (generated from its highest
// vector by the simple lowering operators of g_k, in a fixed order) is split
// into g_{k-1}-submodules whose highest vectors are the joint kernel of the
// g_{k-1} raising operators, orthogonalized in a fixed order, signed so that
// the first nonzero overlap with the generating words is positive, and
// matched with the patterns that carry the same next row and level weight.
// For gl_n this reproduces the classical Gelfand-Tsetlin basis, in which all
// simple lowering operators have nonnegative entries.  Every step is
// expressed through words in the generators applied to the highest vector,
// so isomorphic g_k-submodules receive identical matrices: the action of g_k
// depends only on the levels <= k of a pattern.  Basis vectors are normalized
// with respect to the invariant form, so raising operators are transposes of
// lowering operators and matrix entries are signed square roots of rationals.

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "gtbcd/lie.hpp"
#include "gtbcd/linalg.hpp"
#include "gtbcd/operators.hpp"
#include "gtbcd/patterns.hpp"
#include "gtbcd/roots.hpp"

namespace gtbcd {

class AmbientModule;

class Representation {
 public:
  /// Builds the basis and all generator matrices; IntegrityError if the
  /// construction is inconsistent with the pattern combinatorics.
  Representation(const AlgebraLabel& label, const Weight& lambda);
  ~Representation();
  Representation(const Representation&) = delete;
  Representation& operator=(const Representation&) = delete;

  /// Shared, immutable instance (built once per (label, lambda)).
  static std::shared_ptr<const Representation> get(const AlgebraLabel& label, const Weight& lambda);

  const AlgebraLabel& label() const { return label_; }
  const Weight& highest_weight() const { return lambda_; }
  std::size_t dimension() const { return patterns_.size(); }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  const std::vector<Weight>& weights() const { return weights_; }
  /// Position of a pattern in pattern order; ShapeError if absent.
  std::size_t index_of(const Pattern& p) const;

  /// pi(F_g) for any generator (partners are expressed through the stored
  /// representative); DomainError for indices outside the algebra.
  SparseOperator op(GeneratorId g) const;
  /// Operators of generator_basis(label), keyed by generator.
  const std::map<GeneratorId, SparseOperator>& basis_operators() const { return ops_; }
  /// pi(F_g) computed directly from the ambient module, bypassing the
  /// transpose and bracket closure (used for cross-checks).
  SparseOperator direct_op(GeneratorId g) const;
  /// Rational matrix of pi(F_g) in the unnormalized basis u_j = sqrt(N_j) b_j:
  /// F u_j = sum_i x_ij u_i.
  RationalOperator unnormalized_op(GeneratorId g) const;
  /// Squared norms N_j of the unnormalized basis vectors.
  const std::vector<Rational>& norms() const { return norms_; }

 private:
  AlgebraLabel label_;
  Weight lambda_;
  std::vector<Pattern> patterns_;
  std::vector<Weight> weights_;
  std::map<std::vector<Rational>, std::size_t> index_;
  std::map<Weight, std::vector<std::size_t>> by_weight_;
  std::unique_ptr<AmbientModule> ambient_;
  std::vector<SparseVector> vectors_;
  std::vector<Rational> norms_;
  std::map<GeneratorId, SparseOperator> ops_;
};

/// Diagonal operator pi(F_{k,k}), k in {-n..-1}: entries weight(p)_k.
SparseOperator cartan(const AlgebraLabel& label, const Weight& lambda, int k);
/// The raising partner of a lowering operator: the transpose in the
/// (normalized) pattern basis.
SparseOperator raising_of(const SparseOperator& lowering);
/// Extends the simple raising, simple lowering and Cartan operators to all
/// of generator_basis by iterated commutators following the structure
/// constants.  If `reference` operators are supplied, every closed operator
/// that also appears there must agree exactly; IntegrityError otherwise.
std::map<GeneratorId, SparseOperator> close_under_brackets(
    const AlgebraLabel& label, const std::map<GeneratorId, SparseOperator>& simple,
    const std::map<GeneratorId, SparseOperator>* reference = nullptr);

/// Simple raising / lowering generators of g_k, k = 0..n, as elements of g_n
/// (g_k acts on the coordinates c with |c| >= n-k+1, and 0 for B).
std::vector<GeneratorId> chain_simple_raising(const AlgebraLabel& label, int k);
std::vector<GeneratorId> chain_simple_lowering(const AlgebraLabel& label, int k);

}  // namespace gtbcd
