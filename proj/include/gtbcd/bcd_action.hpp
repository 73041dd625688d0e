#pragma once
// Generator matrices of B, C, D representations assembled level by level,
// and closed-form matrix elements expressed through the gl_n kernel.
//
// Coordinates: for a rank-n algebra the subalgebra g_k of the chain acts on
// the coordinates c with |c| >= n-k+1 (and 0 for B), so the coordinate added
// at level k is -(n-k+1) and the lowering generator that connects level k to
// the g_{k-1} block is F(-(n-k+1), -(n-k+2)).

#include <map>

#include "gtbcd/lie.hpp"
#include "gtbcd/operators.hpp"
#include "gtbcd/patterns.hpp"
#include "gtbcd/representation.hpp"

namespace gtbcd {

/// The weight-lowering generator F(0,-1) of o_3 on V^[m], with the closed-form
/// entries <(m_bar)|F|(m)> = |2; -2:1| of the rows [m, 0], [m']:
///   sigma = 0: sigma -> 1, m' unchanged;  sigma = 1: m' -> m' - 1, sigma -> 0.
/// In this (non-orthonormal) normalization it is diagonally similar to the
/// constructed pi(F(0,-1)).
SparseOperator o3_f_minus10(const Weight& lambda);

/// Constructed lowering operators of a rank-2 algebra (B, C or D), keyed by
/// generator.
std::map<GeneratorId, SparseOperator> rank2_lowerings(const AlgebraLabel& label, const Weight& lambda);

/// Closed-form reduced matrix elements of F(-1,-2) and F(1,-2) for o_5 and
/// sp_4 between patterns whose level-1 data is maximal (primed row equal to
/// the row, sigma = 0): the gl_3 values
///   F(-1,-2): |2; -2:1| of ([m']_2, [m]_1)                     (only m_{-2,1} lowered)
///   F(1,-2):  |3; i1:2| of ([m]_2, [m']_2) * |i1:2; -2:1| of ([m']_2, [m]_1)
///             (m'_{i1,2} and m_{-2,1} lowered)
/// with [m]_2 = [m_{-2,2}, m_{-1,2}, 0].  Entries are indexed in the pattern
/// basis of V^lambda.
std::map<GeneratorId, SparseOperator> rank2_reduced_closed_form(const AlgebraLabel& label, const Weight& lambda);

/// The lowering generator connecting level k to the g_{k-1} block,
/// F(-(n-k+1), -(n-k+2)), for k = 2..n.  Its entries depend only on the
/// levels <= k of the patterns involved.
SparseOperator gn_f_minus1_minus2(const AlgebraLabel& label, const Weight& lambda, int level);

/// True when the level-1 data of a B or C pattern is maximal.
bool level1_maximal(const Pattern& p);

}  // namespace gtbcd
