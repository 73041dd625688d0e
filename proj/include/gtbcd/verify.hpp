#pragma once
// Property-test harness: every comparison between the constructed
// representation and an independent oracle, with a machine-readable report.
//
// All checks are exact.  A failing case carries a witness (pattern indices,
// generator pair, ...) from which the failure can be reproduced.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "gtbcd/lie.hpp"
#include "gtbcd/operators.hpp"
#include "gtbcd/patterns.hpp"
#include "gtbcd/roots.hpp"

namespace gtbcd {

struct CaseResult {
  AlgebraLabel label;
  Weight lambda;
  std::string check;     // check id, e.g. "dimension", "wigner[s=-2]"
  bool passed = false;
  std::string residual;  // exact residual (count of defects, difference, ...) rendered as text
  std::string witness;   // empty when passed
  double elapsed = 0.0;  // seconds
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;  // sorted by (check, label, lambda)
  std::map<std::string, std::string> metadata;
  double elapsed = 0.0;

  bool passed() const;
  std::size_t failures() const;
};

nlohmann::json report_to_json(const VerificationReport& report);

using GridCase = std::pair<AlgebraLabel, Weight>;

/// The acceptance grid (B1, B2, C2, D2, B3, C3, D3 entries).
std::vector<GridCase> acceptance_grid();

/// |patterns| = Weyl dimension, every pattern valid and distinct.  When
/// `patterns` is null the enumeration of (label, lambda) is checked.
CaseResult check_dimension(const AlgebraLabel& label, const Weight& lambda,
                           const std::vector<Pattern>* patterns = nullptr);
/// Multiset of pattern weights = Freudenthal multiplicities.
CaseResult check_weights(const AlgebraLabel& label, const Weight& lambda);
/// [pi(X), pi(Y)] = pi([X, Y]) for all pairs of basis generators.  When
/// `ops` is null the constructed operators are checked; otherwise `ops` must
/// hold an operator for every basis generator.
CaseResult check_commutators(const AlgebraLabel& label, const Weight& lambda,
                             const std::map<GeneratorId, SparseOperator>* ops = nullptr);
/// pi(C_2) = <lambda, lambda + 2 rho> I, with C_2 built from the dual basis
/// of the invariant form.  If `expected` is given the eigenvalue must also
/// equal it.
CaseResult check_casimir(const AlgebraLabel& label, const Weight& lambda, const Rational* expected = nullptr);
/// Constructed matrix elements of F(-1,-2) and F(1,-2) between patterns with
/// maximal level-1 data equal the gl_3 kernel values (B2, C2).
CaseResult check_gl_equivalence(const AlgebraLabel& label, const Weight& lambda);
/// Wigner-Eckart factorization of pi(F(-1,-2)) over g_n > g_{n-1}: within a
/// block fixed by the level-n data and the level-(n-1) rows, entries are
/// proportional to the g_{n-1} Wigner coefficients of the sub-patterns.
CaseResult check_wigner_eckart(const AlgebraLabel& label, const Weight& lambda,
                               GeneratorId g = GeneratorId{-1, -2});
/// o_5: F(+-1,-2) factorize as above and the matrix element between maximal
/// patterns equals the reduced matrix element.
CaseResult check_prop_pp(const AlgebraLabel& label, const Weight& lambda);
/// The intertwiner for `shift` is equivariant, obeys the weight selection
/// rule, and spans the one-dimensional solution space of the linear
/// intertwining equations (null-space oracle), i.e. agrees with it up to a
/// global scalar.
CaseResult check_wigner(const AlgebraLabel& label, const Weight& lambda, int shift);

/// Dimension of the solution space of X pi_bar(g) = (pi_std (x) pi)(g) X over
/// the simple raising and lowering generators (rational unknowns restricted
/// to matching weights), and whether the given intertwiner table solves it.
struct NullspaceOracle {
  std::size_t unknowns = 0;
  std::size_t nullity = 0;
  bool table_solves = false;
};
NullspaceOracle intertwiner_nullspace(const AlgebraLabel& label, const Weight& lambda, int shift);

/// Known suites: dimension, weights, brackets, casimir, gl-equivalence,
/// wigner-eckart, equivariance, prop-pp, all.  `cases` defaults to the
/// acceptance grid (restricted to the entries each suite applies to).
std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& suite, const std::vector<GridCase>* cases = nullptr);

}  // namespace gtbcd
