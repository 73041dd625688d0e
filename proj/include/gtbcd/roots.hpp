#pragma once
// Representation-theoretic oracles that use only root data: Weyl dimension,
// Freudenthal weight multiplicities, the quadratic Casimir eigenvalue and the
// decomposition of a tensor product with the standard representation.
// Weights are vectors in the coordinates [eps_{-n}, ..., eps_{-1}] with the
// standard Euclidean form.

#include <map>
#include <vector>

#include "gtbcd/lie.hpp"
#include "gtbcd/numerics.hpp"

namespace gtbcd {

using Weight = std::vector<Rational>;

std::string weight_to_string(const Weight& w);

/// Checks the dominance and integrality conditions of a highest weight
/// [m_{-n}, ..., m_{-1}] and throws DomainError if violated.
void validate_dominant(const AlgebraLabel& label, const Weight& lambda);
bool is_dominant(const AlgebraLabel& label, const Weight& lambda);
/// True when all entries are half-odd integers (spinor weights of B, D).
bool is_spinor(const Weight& lambda);

std::vector<Weight> positive_roots(const AlgebraLabel& label);
Weight rho(const AlgebraLabel& label);
Rational inner(const Weight& a, const Weight& b);

/// Weyl-group dominant representative of an integral weight.
Weight dominant_representative(const AlgebraLabel& label, const Weight& mu);
/// Weyl-group orbit of a weight (sorted, without repetitions).
std::vector<Weight> weyl_orbit(const AlgebraLabel& label, const Weight& mu);

Integer weyl_dim(const AlgebraLabel& label, const Weight& lambda);
/// Full weight-multiplicity map of the irreducible representation.
std::map<Weight, Integer> freudenthal(const AlgebraLabel& label, const Weight& lambda);
/// <lambda, lambda + 2 rho>.
Rational casimir_eigenvalue(const AlgebraLabel& label, const Weight& lambda);
/// Weights of the standard (defining) representation, with multiplicity.
std::vector<Weight> standard_weights(const AlgebraLabel& label);
/// Highest weights of the irreducible constituents of std (x) V^lambda,
/// with multiplicity, sorted.
std::vector<Weight> tensor_with_standard(const AlgebraLabel& label, const Weight& lambda);

}  // namespace gtbcd
