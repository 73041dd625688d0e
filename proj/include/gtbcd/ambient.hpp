#pragma once
// Explicit rational modules that contain every irreducible representation of
// the classical algebras: tensor products of exterior powers of the defining
// representation, of the spin representation (B, D) and of a one-dimensional
// character (gl).  Each factor carries a diagonal positive rational form for
// which the transpose of F_ij is F_ji; the product form has the same property.

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "gtbcd/lie.hpp"
#include "gtbcd/linalg.hpp"
#include "gtbcd/roots.hpp"

namespace gtbcd {

/// One tensor factor: a finite basis, the action of every generator and the
/// diagonal invariant form.
class AmbientFactor {
 public:
  virtual ~AmbientFactor() = default;
  virtual std::size_t dimension() const = 0;
  /// Nonzero entries (row, value) of column `col` of pi(F_g).
  virtual std::vector<std::pair<std::size_t, Rational>> apply(GeneratorId g, std::size_t col) const = 0;
  virtual Rational form(std::size_t index) const = 0;
  /// Weight [eps_{-n}, ..., eps_{-1}] of a basis element.
  virtual Weight weight(std::size_t index) const = 0;
};

std::unique_ptr<AmbientFactor> make_exterior_power(const AlgebraLabel& label, int k);
std::unique_ptr<AmbientFactor> make_spin(const AlgebraLabel& label);
std::unique_ptr<AmbientFactor> make_character(const AlgebraLabel& label, const Rational& shift);

/// Tensor product module with a chosen highest weight vector of weight lambda.
class AmbientModule {
 public:
  /// Builds the factors for the dominant weight lambda and the tensor product
  /// of the factor highest vectors.
  AmbientModule(const AlgebraLabel& label, const Weight& lambda);

  const AlgebraLabel& label() const { return label_; }
  std::size_t dimension() const { return dimension_; }
  const SparseVector& highest_vector() const { return highest_; }

  SparseVector apply(GeneratorId g, const SparseVector& v) const;
  Rational form(std::size_t index) const;
  Rational inner(const SparseVector& a, const SparseVector& b) const;

 private:
  std::vector<std::size_t> split(std::size_t index) const;

  AlgebraLabel label_;
  std::vector<std::unique_ptr<AmbientFactor>> factors_;
  std::vector<std::size_t> strides_;
  std::size_t dimension_ = 1;
  SparseVector highest_;
};

}  // namespace gtbcd
