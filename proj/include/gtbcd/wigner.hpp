#pragma once
// Fundamental Wigner coefficients: the matrix of the intertwiner
//   Phi : V^{lambda + delta} -> V^std (x) V^lambda,
// where delta is the weight of a standard basis vector e_s (s a coordinate),
// in the pattern bases of both irreducible modules and the coordinate basis
// of the standard module.  Phi is normalized by
//   Phi((m)_max) = e_s (x) (m)_max + lower terms,
// no unitarity is imposed.

#include <cstddef>
#include <map>
#include <memory>
#include <tuple>

#include "json.hpp"
#include "gtbcd/lie.hpp"
#include "gtbcd/linalg.hpp"
#include "gtbcd/numerics.hpp"
#include "gtbcd/patterns.hpp"
#include "gtbcd/representation.hpp"
#include "gtbcd/roots.hpp"

namespace gtbcd {

struct WignerTable {
  using Key = std::tuple<std::size_t, int, std::size_t>;  // (bar index, coordinate i, ket index)
  AlgebraLabel label;
  Weight lambda;
  int shift = 0;
  Weight lambda_bar;
  std::map<Key, AlgebraicValue> entries;  // no stored zeros

  AlgebraicValue at(std::size_t bar, int i, std::size_t ket) const;
};

/// Weight of the standard basis vector e_s: eps_s (s < 0), -eps_{-s} (s > 0),
/// 0 (s = 0).  DomainError if s is not a coordinate.
Weight standard_weight(const AlgebraLabel& label, int s);

/// The intertwiner for lambda_bar = lambda + standard_weight(shift).
/// DomainError if shift is not a coordinate or lambda_bar is not a highest
/// weight of std (x) V^lambda; IntegrityError if the propagation from the
/// highest vector is inconsistent.
WignerTable build_intertwiner(const AlgebraLabel& label, const Weight& lambda, int shift);
/// Shared, immutable table (built once per (label, lambda, shift)).
std::shared_ptr<const WignerTable> intertwiner(const AlgebraLabel& label, const Weight& lambda, int shift);

/// <(m_bar) | e_i (x) (m)>: the coefficient of e_i (x) (m) in Phi((m_bar)).
/// Zero when the weights do not add up.
AlgebraicValue fundamental_wigner(const WignerTable& table, const Pattern& bar, int i, const Pattern& ket);

/// Coordinate of the rank n-1 algebra g_{n-1} corresponding to a coordinate
/// c of g_n with |c| >= 2 (inverse of embed_coordinate).
int restrict_coordinate(int c);

/// Reduced Wigner coefficient of g_n > g_{n-1}: the factor by which the g_n
/// coefficient <(m_bar) | e_i (x) (m)> exceeds the g_{n-1} coefficient of the
/// sub-patterns (for i = +-1 the g_{n-1} factor is delta(sub-patterns equal)).
/// By the Racah factorization it depends only on the level-n data and the
/// level-(n-1) rows.  DomainError when the g_{n-1} factor vanishes.
AlgebraicValue reduced_wigner(const AlgebraLabel& label, const Weight& lambda, int shift, const Pattern& bar, int i,
                              const Pattern& ket);

/// The g_{n-1} coefficient appearing in reduced_wigner (1 or 0 for i = +-1).
AlgebraicValue sub_wigner(const Pattern& bar, int i, const Pattern& ket);

/// Number of generator matrix entries violating Phi pi_bar(g) = (pi_std (x)
/// pi)(g) Phi, over all generators, in exact arithmetic.
std::size_t equivariance_defects(const WignerTable& table);

/// Table entries with nonzero values whose weights do not add up.
std::size_t selection_rule_defects(const WignerTable& table);

/// Exact JSON: {family, rank, hw, shift, entries: [{bar, i, ket, value}]}.
nlohmann::json wigner_to_json(const WignerTable& table);
WignerTable wigner_from_json(const nlohmann::json& j);

/// Matrices of (pi_std (x) pi_lambda)(F_g) on the unnormalized basis
/// e_c (x) u_j, indexed by position(c) * dim + j.
RationalOperator tensor_unnormalized_op(const AlgebraLabel& label, const Representation& ket, GeneratorId g);

}  // namespace gtbcd
