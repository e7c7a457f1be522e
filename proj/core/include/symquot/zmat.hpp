#pragma once

#include "symquot/ints.hpp"

#include <optional>
#include <vector>

namespace symquot {

/// Dense integer matrix as row vectors.
using ZMat = std::vector<std::vector<Int>>;

namespace zmat {

/// Row-style Hermite normal form (row span preserved): returns the nonzero
/// rows, pivots left-to-right with positive pivot entries and entries above
/// pivots reduced into [0, pivot).
ZMat hnf(ZMat rows);

/// Does x lie in the row span (over Z) of an HNF basis?
bool member(const ZMat& hnf_rows, const std::vector<Int>& x);

/// Solve x = sum c_i row_i over Z against an HNF basis.
std::optional<std::vector<Int>> solve(const ZMat& hnf_rows, const std::vector<Int>& x);

int rank(const ZMat& hnf_rows);

/// Lattice {x in Q^n : G x in Z^rows(G)} for a full-column-rank integer G,
/// returned as an integer basis matrix B with common denominator d: the
/// lattice is (1/d) * rowspan(B).  Used for fractional-ideal inversion.
struct RationalLattice {
    ZMat basis;  // rows
    Int den{1};
};
RationalLattice integral_preimage(const ZMat& G);

}  // namespace zmat

}  // namespace symquot
