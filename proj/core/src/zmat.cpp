#include "symquot/zmat.hpp"

#include <algorithm>

namespace symquot::zmat {

ZMat hnf(ZMat rows) {
    if (rows.empty()) return rows;
    const size_t ncols = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != ncols) throw arith_error("zmat::hnf: ragged matrix");
    }
    size_t top = 0;
    std::vector<size_t> pivot_cols;
    for (size_t col = 0; col < ncols && top < rows.size(); ++col) {
        // gcd-eliminate the column below `top`
        for (;;) {
            size_t best = rows.size();
            Int best_abs = 0;
            for (size_t i = top; i < rows.size(); ++i) {
                Int a = int_abs(rows[i][col]);
                if (a != 0 && (best_abs == 0 || a < best_abs)) {
                    best = i;
                    best_abs = a;
                }
            }
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool clean = true;
            for (size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[top][col];
                if (q != 0) {
                    for (size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[top][j];
                }
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (top < rows.size() && rows[top][col] != 0) {
            if (rows[top][col] < 0) {
                for (size_t j = 0; j < ncols; ++j) rows[top][j] = -rows[top][j];
            }
            pivot_cols.push_back(col);
            ++top;
        }
    }
    rows.resize(top);
    // reduce entries above each pivot into [0, pivot)
    for (size_t i = rows.size(); i-- > 0;) {
        size_t col = pivot_cols[i];
        for (size_t k = 0; k < i; ++k) {
            Int rem = rows[k][col] % rows[i][col];
            if (rem < 0) rem += rows[i][col];
            Int q = div_exact(rows[k][col] - rem, rows[i][col]);
            if (q != 0) {
                for (size_t j = 0; j < ncols; ++j) rows[k][j] -= q * rows[i][j];
            }
        }
    }
    return rows;
}

bool member(const ZMat& hnf_rows, const std::vector<Int>& x) {
    return solve(hnf_rows, x).has_value();
}

std::optional<std::vector<Int>> solve(const ZMat& hnf_rows, const std::vector<Int>& x) {
    std::vector<Int> r = x;
    std::vector<Int> coeff(hnf_rows.size(), 0);
    size_t col = 0;
    for (size_t i = 0; i < hnf_rows.size(); ++i) {
        while (col < r.size() && hnf_rows[i][col] == 0) {
            if (r[col] != 0) return std::nullopt;
            ++col;
        }
        if (col >= r.size()) break;
        if (r[col] != 0) {
            if (r[col] % hnf_rows[i][col] != 0) return std::nullopt;
            Int q = r[col] / hnf_rows[i][col];
            coeff[i] = q;
            for (size_t j = col; j < r.size(); ++j) r[j] -= q * hnf_rows[i][j];
        }
        ++col;
    }
    for (const Int& c : r) {
        if (c != 0) return std::nullopt;
    }
    return coeff;
}

int rank(const ZMat& hnf_rows) { return static_cast<int>(hnf_rows.size()); }

RationalLattice integral_preimage(const ZMat& G) {
    // L = {x in Q^n : G x in Z^m}.  Replacing G by its row HNF H preserves the
    // condition (same row span), and full column rank makes H square upper
    // triangular with positive diagonal.  Then L = H^{-1} Z^n, spanned by the
    // columns of adj(H) over the denominator det(H).
    if (G.empty()) throw arith_error("integral_preimage: empty matrix");
    const size_t n = G[0].size();
    ZMat H = hnf(G);
    if (H.size() != n) throw arith_error("integral_preimage: not of full column rank");
    Int d = 1;
    for (size_t i = 0; i < n; ++i) d *= H[i][i];
    ZMat A(n, std::vector<Int>(n, 0));  // adj(H): H * A = d * I
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = n; i-- > 0;) {
            Int acc = (i == k) ? d : Int(0);
            for (size_t j = i + 1; j < n; ++j) acc -= H[i][j] * A[j][k];
            A[i][k] = div_exact(acc, H[i][i]);
        }
    }
    ZMat basis(n, std::vector<Int>(n));
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i < n; ++i) basis[k][i] = A[i][k];
    }
    RationalLattice out;
    out.basis = hnf(std::move(basis));
    out.den = d;
    return out;
}

}  // namespace symquot::zmat
