#pragma once
// Split realizations of gl_n, o_{2n+1}, sp_{2n} and o_{2n}.
//
// Coordinates are indexed -n..-1 (gl_n), -n..-1,0,1..n (o_{2n+1}) and
// -n..-1,1..n (sp_{2n}, o_{2n}).  The generators are
//   gl:  F_ij = E_ij
//   o:   F_ij = E_ij - E_{-j,-i}
//   sp:  F_ij = E_ij - s(i)s(j) E_{-j,-i},   s = sign.
// F_ij with i < j are raising operators, F_ij with i > j lowering, and the
// Cartan subalgebra is spanned by F_{-a,-a}, a = 1..n.

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gtbcd/numerics.hpp"

namespace gtbcd {

enum class Family { A, B, C, D };

char family_char(Family f);
Family parse_family(const std::string& text);

/// A classical Lie algebra of the given family and rank (A denotes gl_n).
struct AlgebraLabel {
  Family family = Family::A;
  int rank = 1;

  /// Throws DomainError for rank < 1 or D of rank < 2.
  void validate() const;
  std::string to_string() const;  // e.g. "B2"
  friend bool operator==(const AlgebraLabel& a, const AlgebraLabel& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator<(const AlgebraLabel& a, const AlgebraLabel& b) {
    return std::tie(a.family, a.rank) < std::tie(b.family, b.rank);
  }
};

/// Generator F_ij.
struct GeneratorId {
  int i = 0;
  int j = 0;
  friend bool operator==(const GeneratorId& a, const GeneratorId& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator!=(const GeneratorId& a, const GeneratorId& b) { return !(a == b); }
  friend bool operator<(const GeneratorId& a, const GeneratorId& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }
  std::string to_string() const;  // "F(-1,-2)"
};

int sign_of(int x);

/// Ordered coordinate list of the defining representation.
std::vector<int> coordinates(const AlgebraLabel& label);
/// Position of a coordinate in coordinates(label); throws DomainError.
int coordinate_position(const AlgebraLabel& label, int c);
int defining_dimension(const AlgebraLabel& label);

/// Nonzero entries (row coordinate, column coordinate, value) of the defining
/// matrix of F_ij.  Empty for generators that vanish identically.
std::vector<std::tuple<int, int, int>> defining_entries(const AlgebraLabel& label, GeneratorId g);

/// True if both indices are coordinates and F_ij is not identically zero.
bool is_generator(const AlgebraLabel& label, GeneratorId g);
bool is_cartan(GeneratorId g);
bool is_raising(GeneratorId g);
bool is_lowering(GeneratorId g);

/// A basis of the algebra: one representative per linearly independent
/// generator (the lexicographically smaller of F_ij and its partner
/// F_{-j,-i}), in lexicographic order.
std::vector<GeneratorId> generator_basis(const AlgebraLabel& label);
/// Cartan generators F_{-n,-n}, ..., F_{-1,-1}.
std::vector<GeneratorId> cartan_generators(const AlgebraLabel& label);
/// Raising operators of simple roots: F_{-a-1,-a} (a = 1..n-1, positions
/// ordered from -n) and the last simple root F_{-1,0} (B), F_{-1,1} (C),
/// F_{-2,1} (D), none extra for gl.
std::vector<GeneratorId> simple_raising(const AlgebraLabel& label);
/// Lowering partners F_ji of simple_raising.
std::vector<GeneratorId> simple_lowering(const AlgebraLabel& label);

using Expansion = std::vector<std::pair<GeneratorId, Rational>>;

/// Expresses F_g in generator_basis: empty for a vanishing generator,
/// otherwise a single pair (representative, +-1).
Expansion expand_generator(const AlgebraLabel& label, GeneratorId g);
/// Structure constants: [F_a, F_b] expanded in generator_basis.
Expansion bracket(const AlgebraLabel& label, GeneratorId a, GeneratorId b);

/// Weight of F_ij as a vector in the coordinates [eps_{-n}, ..., eps_{-1}].
std::vector<Rational> generator_weight(const AlgebraLabel& label, GeneratorId g);
/// Index of the weight component carried by Cartan F_{c,c}, c < 0: c + n.
int weight_index(const AlgebraLabel& label, int c);

/// Invariant form normalized to the Euclidean form on weights:
/// (1/2) tr(XY) for B, C, D and tr(XY) for gl, in the defining representation.
Rational trace_form(const AlgebraLabel& label, GeneratorId a, GeneratorId b);

/// Embedding of the rank-(n-1) algebra into the rank-n algebra of the same
/// family acting on the coordinates other than +-1: coordinate c maps to
/// c - 1 (c < 0), c + 1 (c > 0), 0 -> 0.
int embed_coordinate(int c);
GeneratorId embed_generator(GeneratorId g);

}  // namespace gtbcd
