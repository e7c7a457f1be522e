#pragma once

#include "symquot/local.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace symquot {

/// A finitely generated O-submodule of O^ambient held in valuation-echelon
/// form: pivot columns strictly increase, each pivot entry is exactly pi^t,
/// entries below pivots vanish and entries above have valuation < t.
struct OLattice {
    unsigned ambient = 0;
    std::vector<std::vector<CycNum>> basis;
    std::vector<unsigned> pivot_col;
    std::vector<long> pivot_val;

    unsigned rank() const { return static_cast<unsigned>(basis.size()); }
};

namespace dvr {

/// Echelonize the O-span of the given vectors.  Entries must have
/// valuation >= 0; throws otherwise.
OLattice echelonize(const LocalContext& ctx, const std::vector<std::vector<CycNum>>& vectors,
                    unsigned ambient);

/// The standard lattice O^n.
OLattice standard_lattice(const LocalContext& ctx, unsigned n);

bool member(const LocalContext& ctx, const OLattice& L, const std::vector<CycNum>& x);

/// Coefficients of x against L's echelon basis (in O); nullopt if x is not
/// in L.
std::optional<std::vector<CycNum>> coords_in(const LocalContext& ctx, const OLattice& L,
                                             const std::vector<CycNum>& x);

bool contains(const LocalContext& ctx, const OLattice& outer, const OLattice& inner);
bool equal(const LocalContext& ctx, const OLattice& A, const OLattice& B);

/// Scale every basis vector by c (c != 0).
OLattice scale(const LocalContext& ctx, const OLattice& L, const CycNum& c);

OLattice sum(const LocalContext& ctx, const OLattice& A, const OLattice& B);
OLattice intersect(const LocalContext& ctx, const OLattice& A, const OLattice& B);

/// Smith form over O of a matrix with entries of valuation >= 0.
/// divisors are the pivot valuations t_1 <= ... <= t_r.  When track_y is set,
/// y holds W^{-1} for the accumulated column operations (A = U D W), so the
/// row span of A equals the span of pi^(t_i) * y_row_i.
struct SmithResult {
    std::vector<long> divisors;
    std::vector<std::vector<CycNum>> y;  // square, side = #columns
    unsigned rank = 0;
};
SmithResult smith(const LocalContext& ctx, std::vector<std::vector<CycNum>> mat, bool track_y);

/// rank over k of the reductions of the given O-vectors.
unsigned rank_mod_p(const LocalContext& ctx, const std::vector<std::vector<CycNum>>& vectors);

/// Purity of L in M per the reduction-rank criterion; checks L subset of M.
/// The certificate carries rank over K and rank over k of the image.
struct PurityCertificate {
    unsigned rank_K = 0;
    unsigned rank_k = 0;
    bool pure() const { return rank_K == rank_k; }
};
PurityCertificate purity_certificate(const LocalContext& ctx, const OLattice& L,
                                     const OLattice& M);
bool is_pure(const LocalContext& ctx, const OLattice& L, const OLattice& M);

/// Minimal pure sublattice of M containing L.
OLattice pure_closure(const LocalContext& ctx, const OLattice& L, const OLattice& M);

/// Valuations of the elementary divisors of L inside M (equal K-ranks
/// required).
std::vector<long> elementary_divisor_valuations(const LocalContext& ctx, const OLattice& L,
                                                const OLattice& M);

/// Lattice {x in O^dim : row . x = 0 for every condition row}; the conditions
/// may have arbitrary K-entries.
OLattice kernel_lattice(const LocalContext& ctx,
                        const std::vector<std::vector<CycNum>>& conditions, unsigned dim);

/// An algebra with a distinguished O-basis given by sparse structure
/// constants; basis_product(i, j) returns the product of basis elements i, j.
struct BasedAlgebra {
    unsigned dim = 0;
    std::function<std::vector<std::pair<unsigned, CycNum>>(unsigned, unsigned)> basis_product;
};

/// Two-sided annihilator {a : a I = 0 = I a} of a two-sided ideal, returned
/// as a pure sublattice.  Throws if I is not an ideal.
OLattice module_annihilator(const LocalContext& ctx, const BasedAlgebra& alg, const OLattice& I);

/// a * v and v * a in a based algebra, v given by coordinates.
std::vector<CycNum> algebra_mul(const LocalContext& ctx, const BasedAlgebra& alg,
                                const std::vector<CycNum>& a, const std::vector<CycNum>& b);

}  // namespace dvr

}  // namespace symquot
