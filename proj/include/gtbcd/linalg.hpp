#pragma once
// Exact rational linear algebra on small dense matrices and sparse vectors.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gtbcd/numerics.hpp"

namespace gtbcd {

using DenseMatrix = std::vector<std::vector<Rational>>;  // row-major
using SparseVector = std::map<std::size_t, Rational>;    // no stored zeros
/// Sparse rational matrix keyed by (row, column); no stored zeros.
using RationalOperator = std::map<std::pair<std::size_t, std::size_t>, Rational>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(DenseMatrix& m, std::size_t columns);
/// Basis of {x : m x = 0}, one vector per free column, in the canonical form
/// read off the reduced row echelon form (free variable = 1).
std::vector<std::vector<Rational>> nullspace(DenseMatrix m, std::size_t columns);

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);  // y += a x
SparseVector scaled(const SparseVector& x, const Rational& a);

/// Incrementally maintained echelon basis used to test linear independence.
class EchelonBasis {
 public:
  /// Reduces v against the stored vectors; if the remainder is nonzero it is
  /// stored and true is returned.
  bool insert(const SparseVector& v);
  /// True if v lies in the span of the stored vectors.
  bool contains(const SparseVector& v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  SparseVector reduce(SparseVector v) const;
  std::vector<std::pair<std::size_t, SparseVector>> rows_;  // (pivot, vector)
};

}  // namespace gtbcd
