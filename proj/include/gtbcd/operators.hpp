#pragma once
// Sparse matrices with exact algebraic entries acting on a pattern basis.

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "json.hpp"

#include "gtbcd/lie.hpp"
#include "gtbcd/numerics.hpp"
#include "gtbcd/roots.hpp"

namespace gtbcd {

/// pi(F_ij) on the basis of V^lambda, rows and columns indexed in pattern
/// order.  Zero entries are never stored.
struct SparseOperator {
  using Key = std::pair<std::size_t, std::size_t>;  // (row, column)

  AlgebraLabel label;
  Weight hw;
  GeneratorId gen;
  std::size_t dim = 0;
  std::map<Key, AlgebraicValue> entries;

  AlgebraicValue at(std::size_t row, std::size_t col) const;
  /// Adds `value` to an entry, dropping it if the sum vanishes.
  void add(std::size_t row, std::size_t col, const AlgebraicValue& value);
  bool is_zero() const { return entries.empty(); }
  /// Throws ShapeError if an index is out of range or a zero is stored.
  void check() const;
};

/// Equality of dimensions and entries (labels are not compared).
bool same_entries(const SparseOperator& a, const SparseOperator& b);

SparseOperator transpose(const SparseOperator& a);
SparseOperator multiply(const SparseOperator& a, const SparseOperator& b);
/// a b - b a
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
/// sum of c_k * op_k (all of the same dimension; at least one term)
SparseOperator linear_combination(const std::vector<std::pair<Rational, const SparseOperator*>>& terms);
SparseOperator scaled(const SparseOperator& a, const AlgebraicValue& c);
SparseOperator identity_operator(const AlgebraLabel& label, const Weight& hw, std::size_t dim);

/// Exact JSON: {family, rank, hw, gen: [i, j], dim, entries: [[row, col, value], ...]}
/// with value a list of [numerator, denominator, radicand] string triples.
nlohmann::json operator_to_json(const SparseOperator& a);
SparseOperator operator_from_json(const nlohmann::json& j);
nlohmann::json value_to_json(const AlgebraicValue& v);
AlgebraicValue value_from_json(const nlohmann::json& j);

}  // namespace gtbcd
