#include "symquot/olattice.hpp"

#include <algorithm>

namespace symquot::dvr {

namespace {

bool vec_is_zero(const CycField& F, const std::vector<CycNum>& v) {
    return std::all_of(v.begin(), v.end(), [&](const CycNum& c) { return F.is_zero(c); });
}

}  // namespace

OLattice echelonize(const LocalContext& ctx, const std::vector<std::vector<CycNum>>& vectors,
                    unsigned ambient) {
    const CycField& F = ctx.field();
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw arith_error("echelonize: wrong vector length");
        for (const auto& c : v) {
            if (!ctx.in_O(c)) throw arith_error("echelonize: entry of negative valuation");
        }
    }
    std::vector<std::vector<CycNum>> rows = vectors;
    OLattice L;
    L.ambient = ambient;
    size_t top = 0;
    for (unsigned col = 0; col < ambient && top < rows.size(); ++col) {
        // pick the entry of minimal valuation in this column (ties: row order)
        size_t best = rows.size();
        long best_val = 0;
        for (size_t i = top; i < rows.size(); ++i) {
            auto v = ctx.valuation(rows[i][col]);
            if (!v) continue;
            if (best == rows.size() || *v < best_val) {
                best = i;
                best_val = *v;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[top], rows[best]);
        // normalize the pivot to exactly pi^t
        const long t = best_val;
        CycNum unit_inv = F.inv(ctx.div_uniformizer(rows[top][col], t));
        for (unsigned j = col; j < ambient; ++j) {
            if (!F.is_zero(rows[top][j])) rows[top][j] = F.mul(rows[top][j], unit_inv);
        }
        rows[top][col] = ctx.pi_pow(t);
        for (size_t i = top + 1; i < rows.size(); ++i) {
            if (F.is_zero(rows[i][col])) continue;
            CycNum q = F.mul(rows[i][col], ctx.pi_pow(-t));
            for (unsigned j = col; j < ambient; ++j) {
                if (!F.is_zero(rows[top][j])) {
                    rows[i][j] = F.sub(rows[i][j], F.mul(q, rows[top][j]));
                }
            }
        }
        L.pivot_col.push_back(col);
        L.pivot_val.push_back(t);
        ++top;
    }
    rows.resize(top);
    // reduce entries above pivots where the valuation allows it
    for (size_t i = top; i-- > 0;) {
        unsigned col = L.pivot_col[i];
        long t = L.pivot_val[i];
        for (size_t k = 0; k < i; ++k) {
            if (F.is_zero(rows[k][col])) continue;
            if (!ctx.val_at_least(rows[k][col], t)) continue;
            CycNum q = F.mul(rows[k][col], ctx.pi_pow(-t));
            for (unsigned j = 0; j < ambient; ++j) {
                if (!F.is_zero(rows[i][j])) {
                    rows[k][j] = F.sub(rows[k][j], F.mul(q, rows[i][j]));
                }
            }
        }
    }
    L.basis = std::move(rows);
    return L;
}

OLattice standard_lattice(const LocalContext& ctx, unsigned n) {
    const CycField& F = ctx.field();
    OLattice L;
    L.ambient = n;
    L.basis.assign(n, std::vector<CycNum>(n, F.zero()));
    for (unsigned i = 0; i < n; ++i) {
        L.basis[i][i] = F.one();
        L.pivot_col.push_back(i);
        L.pivot_val.push_back(0);
    }
    return L;
}

std::optional<std::vector<CycNum>> coords_in(const LocalContext& ctx, const OLattice& L,
                                             const std::vector<CycNum>& x) {
    const CycField& F = ctx.field();
    if (x.size() != L.ambient) throw arith_error("coords_in: wrong vector length");
    std::vector<CycNum> r = x;
    std::vector<CycNum> coeff(L.rank(), F.zero());
    for (unsigned i = 0; i < L.rank(); ++i) {
        unsigned col = L.pivot_col[i];
        if (F.is_zero(r[col])) continue;
        CycNum q = F.mul(r[col], ctx.pi_pow(-L.pivot_val[i]));
        if (!ctx.in_O(q)) return std::nullopt;
        coeff[i] = q;
        for (unsigned j = col; j < L.ambient; ++j) {
            if (!F.is_zero(L.basis[i][j])) r[j] = F.sub(r[j], F.mul(q, L.basis[i][j]));
        }
    }
    if (!vec_is_zero(F, r)) return std::nullopt;
    return coeff;
}

bool member(const LocalContext& ctx, const OLattice& L, const std::vector<CycNum>& x) {
    return coords_in(ctx, L, x).has_value();
}

bool contains(const LocalContext& ctx, const OLattice& outer, const OLattice& inner) {
    if (outer.ambient != inner.ambient) return false;
    for (const auto& row : inner.basis) {
        if (!member(ctx, outer, row)) return false;
    }
    return true;
}

bool equal(const LocalContext& ctx, const OLattice& A, const OLattice& B) {
    return contains(ctx, A, B) && contains(ctx, B, A);
}

OLattice scale(const LocalContext& ctx, const OLattice& L, const CycNum& c) {
    const CycField& F = ctx.field();
    std::vector<std::vector<CycNum>> rows = L.basis;
    for (auto& r : rows) {
        for (auto& x : r) x = F.mul(x, c);
    }
    return echelonize(ctx, rows, L.ambient);
}

OLattice sum(const LocalContext& ctx, const OLattice& A, const OLattice& B) {
    if (A.ambient != B.ambient) throw arith_error("sum: ambient mismatch");
    std::vector<std::vector<CycNum>> rows = A.basis;
    rows.insert(rows.end(), B.basis.begin(), B.basis.end());
    return echelonize(ctx, rows, A.ambient);
}

OLattice intersect(const LocalContext& ctx, const OLattice& A, const OLattice& B) {
    const CycField& F = ctx.field();
    if (A.ambient != B.ambient) throw arith_error("intersect: ambient mismatch");
    if (A.rank() == 0 || B.rank() == 0) {
        OLattice Z;
        Z.ambient = A.ambient;
        return Z;
    }
    // pairs (a, b) with sum a_i A_i - sum b_j B_j = 0
    const unsigned ra = A.rank(), rb = B.rank();
    std::vector<std::vector<CycNum>> conditions;
    conditions.reserve(A.ambient);
    for (unsigned c = 0; c < A.ambient; ++c) {
        std::vector<CycNum> row(ra + rb, F.zero());
        for (unsigned i = 0; i < ra; ++i) row[i] = A.basis[i][c];
        for (unsigned j = 0; j < rb; ++j) row[ra + j] = F.neg(B.basis[j][c]);
        conditions.push_back(std::move(row));
    }
    OLattice pairs = kernel_lattice(ctx, conditions, ra + rb);
    std::vector<std::vector<CycNum>> gens;
    for (const auto& pr : pairs.basis) {
        std::vector<CycNum> v(A.ambient, F.zero());
        for (unsigned i = 0; i < ra; ++i) {
            if (F.is_zero(pr[i])) continue;
            for (unsigned c = 0; c < A.ambient; ++c) {
                if (!F.is_zero(A.basis[i][c])) v[c] = F.add(v[c], F.mul(pr[i], A.basis[i][c]));
            }
        }
        gens.push_back(std::move(v));
    }
    return echelonize(ctx, gens, A.ambient);
}

SmithResult smith(const LocalContext& ctx, std::vector<std::vector<CycNum>> mat, bool track_y) {
    const CycField& F = ctx.field();
    SmithResult out;
    if (mat.empty()) return out;
    const unsigned ncols = static_cast<unsigned>(mat[0].size());
    std::vector<std::vector<CycNum>> y;
    if (track_y) {
        y.assign(ncols, std::vector<CycNum>(ncols, F.zero()));
        for (unsigned i = 0; i < ncols; ++i) y[i][i] = F.one();
    }
    const unsigned nrows = static_cast<unsigned>(mat.size());
    unsigned r = 0;
    while (r < nrows && r < ncols) {
        unsigned pr = nrows, pc = ncols;
        long best = 0;
        for (unsigned i = r; i < nrows; ++i) {
            for (unsigned j = r; j < ncols; ++j) {
                auto v = ctx.valuation(mat[i][j]);
                if (!v) continue;
                if (pr == nrows || *v < best) {
                    pr = i;
                    pc = j;
                    best = *v;
                }
            }
        }
        if (pr == nrows) break;
        std::swap(mat[r], mat[pr]);
        if (pc != r) {
            for (unsigned i = 0; i < nrows; ++i) std::swap(mat[i][r], mat[i][pc]);
            if (track_y) std::swap(y[r], y[pc]);
        }
        const long t = best;
        CycNum unit_inv = F.inv(ctx.div_uniformizer(mat[r][r], t));
        for (unsigned j = r; j < ncols; ++j) {
            if (!F.is_zero(mat[r][j])) mat[r][j] = F.mul(mat[r][j], unit_inv);
        }
        mat[r][r] = ctx.pi_pow(t);
        for (unsigned i = r + 1; i < nrows; ++i) {
            if (F.is_zero(mat[i][r])) continue;
            CycNum q = F.mul(mat[i][r], ctx.pi_pow(-t));
            for (unsigned j = r; j < ncols; ++j) {
                if (!F.is_zero(mat[r][j])) mat[i][j] = F.sub(mat[i][j], F.mul(q, mat[r][j]));
            }
        }
        // clear the pivot row to the right by column operations; only row r is
        // affected since the column below the pivot is already zero.  On y the
        // op col_j -= q col_r mirrors as row_r += q row_j.
        for (unsigned j = r + 1; j < ncols; ++j) {
            if (F.is_zero(mat[r][j])) continue;
            CycNum q = F.mul(mat[r][j], ctx.pi_pow(-t));
            mat[r][j] = F.zero();
            if (track_y) {
                for (unsigned c = 0; c < ncols; ++c) {
                    if (!F.is_zero(y[j][c])) y[r][c] = F.add(y[r][c], F.mul(q, y[j][c]));
                }
            }
        }
        out.divisors.push_back(t);
        ++r;
    }
    out.rank = r;
    out.y = std::move(y);
    std::sort(out.divisors.begin(), out.divisors.end());
    return out;
}

unsigned rank_mod_p(const LocalContext& ctx, const std::vector<std::vector<CycNum>>& vectors) {
    const FqField& k = ctx.k();
    std::vector<std::vector<FqField::Elem>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        std::vector<FqField::Elem> r;
        r.reserve(v.size());
        for (const auto& c : v) r.push_back(ctx.residue(c).coords);
        rows.push_back(std::move(r));
    }
    unsigned rank = 0;
    const size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && k.is_zero(rows[piv][col])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        FqField::Elem inv = k.inv(rows[rank][col]);
        for (size_t i = rank + 1; i < rows.size(); ++i) {
            if (k.is_zero(rows[i][col])) continue;
            FqField::Elem f = k.mul(rows[i][col], inv);
            for (size_t j = col; j < ncols; ++j) {
                rows[i][j] = k.sub(rows[i][j], k.mul(f, rows[rank][j]));
            }
        }
        ++rank;
    }
    return rank;
}

PurityCertificate purity_certificate(const LocalContext& ctx, const OLattice& L,
                                     const OLattice& M) {
    std::vector<std::vector<CycNum>> coords;
    coords.reserve(L.rank());
    for (const auto& row : L.basis) {
        auto c = coords_in(ctx, M, row);
        if (!c) throw arith_error("is_pure: L is not contained in M");
        coords.push_back(std::move(*c));
    }
    PurityCertificate cert;
    cert.rank_K = L.rank();
    cert.rank_k = rank_mod_p(ctx, coords);
    return cert;
}

bool is_pure(const LocalContext& ctx, const OLattice& L, const OLattice& M) {
    return purity_certificate(ctx, L, M).pure();
}

OLattice pure_closure(const LocalContext& ctx, const OLattice& L, const OLattice& M) {
    const CycField& F = ctx.field();
    std::vector<std::vector<CycNum>> coords;
    for (const auto& row : L.basis) {
        auto c = coords_in(ctx, M, row);
        if (!c) throw arith_error("pure_closure: L is not contained in M");
        coords.push_back(std::move(*c));
    }
    if (coords.empty()) {
        OLattice Z;
        Z.ambient = M.ambient;
        return Z;
    }
    if (coords.size() == 1) {
        // rank one: divide the generator by pi^(minimal entry valuation)
        long minv = 0;
        bool seen = false;
        for (const auto& c : coords[0]) {
            auto v = ctx.valuation(c);
            if (v && (!seen || *v < minv)) {
                minv = *v;
                seen = true;
            }
        }
        std::vector<CycNum> amb(M.ambient, F.zero());
        for (unsigned j = 0; j < M.rank(); ++j) {
            if (F.is_zero(coords[0][j])) continue;
            CycNum cj = F.mul(coords[0][j], ctx.pi_pow(-minv));
            for (unsigned c = 0; c < M.ambient; ++c) {
                if (!F.is_zero(M.basis[j][c])) amb[c] = F.add(amb[c], F.mul(cj, M.basis[j][c]));
            }
        }
        return echelonize(ctx, {amb}, M.ambient);
    }
    SmithResult s = smith(ctx, coords, /*track_y=*/true);
    std::vector<std::vector<CycNum>> sat_rows;
    for (unsigned i = 0; i < s.rank; ++i) {
        std::vector<CycNum> amb(M.ambient, F.zero());
        for (unsigned j = 0; j < M.rank(); ++j) {
            if (F.is_zero(s.y[i][j])) continue;
            for (unsigned c = 0; c < M.ambient; ++c) {
                if (!F.is_zero(M.basis[j][c])) {
                    amb[c] = F.add(amb[c], F.mul(s.y[i][j], M.basis[j][c]));
                }
            }
        }
        sat_rows.push_back(std::move(amb));
    }
    return echelonize(ctx, sat_rows, M.ambient);
}

std::vector<long> elementary_divisor_valuations(const LocalContext& ctx, const OLattice& L,
                                                const OLattice& M) {
    if (L.rank() != M.rank()) {
        throw arith_error("elementary_divisor_valuations: rank mismatch");
    }
    std::vector<std::vector<CycNum>> coords;
    for (const auto& row : L.basis) {
        auto c = coords_in(ctx, M, row);
        if (!c) throw arith_error("elementary_divisor_valuations: L not contained in M");
        coords.push_back(std::move(*c));
    }
    if (coords.empty()) return {};
    SmithResult s = smith(ctx, coords, /*track_y=*/false);
    if (s.rank != L.rank()) throw arith_error("elementary_divisor_valuations: degenerate input");
    return s.divisors;
}

OLattice kernel_lattice(const LocalContext& ctx,
                        const std::vector<std::vector<CycNum>>& conditions, unsigned dim) {
    const CycField& F = ctx.field();
    std::vector<std::vector<CycNum>> basis(dim, std::vector<CycNum>(dim, F.zero()));
    for (unsigned i = 0; i < dim; ++i) basis[i][i] = F.one();
    for (const auto& lam : conditions) {
        if (lam.size() != dim) throw arith_error("kernel_lattice: wrong condition length");
        if (basis.empty()) break;
        std::vector<CycNum> vals(basis.size(), F.zero());
        size_t star = basis.size();
        for (size_t i = 0; i < basis.size(); ++i) {
            CycNum acc = F.zero();
            for (unsigned j = 0; j < dim; ++j) {
                if (!F.is_zero(lam[j]) && !F.is_zero(basis[i][j])) {
                    acc = F.add(acc, F.mul(lam[j], basis[i][j]));
                }
            }
            vals[i] = acc;
            if (star == basis.size() && !F.is_zero(acc)) star = i;
        }
        if (star == basis.size()) continue;
        CycNum inv = F.inv(vals[star]);
        std::vector<std::vector<CycNum>> next;
        next.reserve(basis.size() - 1);
        for (size_t i = 0; i < basis.size(); ++i) {
            if (i == star) continue;
            if (F.is_zero(vals[i])) {
                next.push_back(std::move(basis[i]));
                continue;
            }
            CycNum f = F.mul(vals[i], inv);
            std::vector<CycNum> row = std::move(basis[i]);
            for (unsigned j = 0; j < dim; ++j) {
                if (!F.is_zero(basis[star][j])) {
                    row[j] = F.sub(row[j], F.mul(f, basis[star][j]));
                }
            }
            next.push_back(std::move(row));
        }
        basis = std::move(next);
    }
    // clear denominators so entries live in O, then saturate
    for (auto& row : basis) {
        Int lcm = 1;
        for (const auto& c : row) lcm = lcm / int_gcd(lcm, c.den) * c.den;
        for (auto& c : row) c = F.mul_int(c, lcm);
    }
    OLattice span = echelonize(ctx, basis, dim);
    return pure_closure(ctx, span, standard_lattice(ctx, dim));
}

std::vector<CycNum> algebra_mul(const LocalContext& ctx, const BasedAlgebra& alg,
                                const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
    const CycField& F = ctx.field();
    std::vector<CycNum> out(alg.dim, F.zero());
    for (unsigned i = 0; i < alg.dim; ++i) {
        if (F.is_zero(a[i])) continue;
        for (unsigned j = 0; j < alg.dim; ++j) {
            if (F.is_zero(b[j])) continue;
            CycNum ab = F.mul(a[i], b[j]);
            for (const auto& [idx, c] : alg.basis_product(i, j)) {
                out[idx] = F.add(out[idx], F.mul(ab, c));
            }
        }
    }
    return out;
}

OLattice module_annihilator(const LocalContext& ctx, const BasedAlgebra& alg,
                            const OLattice& I) {
    const CycField& F = ctx.field();
    const unsigned n = alg.dim;
    if (I.ambient != n) throw arith_error("module_annihilator: ambient mismatch");
    // ideal-closure check: b_x * v and v * b_x stay in I for every basis x
    for (unsigned x = 0; x < n; ++x) {
        std::vector<CycNum> ex(n, F.zero());
        ex[x] = F.one();
        for (const auto& v : I.basis) {
            if (!member(ctx, I, algebra_mul(ctx, alg, ex, v)) ||
                !member(ctx, I, algebra_mul(ctx, alg, v, ex))) {
                throw arith_error("module_annihilator: input is not a two-sided ideal");
            }
        }
    }
    // conditions: for every basis vector v of I and output coordinate z,
    //   sum_i a_i (e_i v)_z = 0   and   sum_i a_i (v e_i)_z = 0
    std::vector<std::vector<CycNum>> conditions;
    for (const auto& v : I.basis) {
        std::vector<std::vector<CycNum>> left(n, std::vector<CycNum>(n, F.zero()));
        std::vector<std::vector<CycNum>> right(n, std::vector<CycNum>(n, F.zero()));
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) {
                if (F.is_zero(v[j])) continue;
                for (const auto& [idx, c] : alg.basis_product(i, j)) {
                    left[idx][i] = F.add(left[idx][i], F.mul(v[j], c));
                }
                for (const auto& [idx, c] : alg.basis_product(j, i)) {
                    right[idx][i] = F.add(right[idx][i], F.mul(v[j], c));
                }
            }
        }
        for (auto& row : left) conditions.push_back(std::move(row));
        for (auto& row : right) conditions.push_back(std::move(row));
    }
    return kernel_lattice(ctx, conditions, n);
}

}  // namespace symquot::dvr
