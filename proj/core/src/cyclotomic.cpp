#include "symquot/cyclotomic.hpp"

#include "symquot/fpoly.hpp"

#include <algorithm>
#include <sstream>

namespace symquot {

CycField::CycField(unsigned m) : m_(m) {
    if (m == 0) throw arith_error("CycField: conductor must be >= 1");
    phi_ = static_cast<unsigned>(euler_phi_u64(m));
    phi_poly_ = cyclotomic_poly_z(m);
    if (phi_poly_.size() != phi_ + 1) throw arith_error("CycField: Phi_m degree mismatch");

    // Reduction rows: x^(phi+k) mod Phi_m for k = 0..phi-1.
    highpow_.resize(phi_);
    std::vector<Int> cur(phi_, 0);  // x^phi mod Phi
    for (unsigned j = 0; j < phi_; ++j) cur[j] = -phi_poly_[j];
    for (unsigned k = 0; k < phi_; ++k) {
        highpow_[k] = cur;
        // multiply by x and reduce once
        std::vector<Int> nxt(phi_, 0);
        Int top = cur[phi_ - 1];
        for (unsigned j = phi_ - 1; j >= 1; --j) nxt[j] = cur[j - 1];
        nxt[0] = 0;
        if (top != 0) {
            for (unsigned j = 0; j < phi_; ++j) nxt[j] += top * -phi_poly_[j];
        }
        cur = std::move(nxt);
    }

    zeta_pow_.resize(m_);
    std::vector<Int> z(phi_, 0);
    z[0] = 1;
    for (unsigned j = 0; j < m_; ++j) {
        zeta_pow_[j] = z;
        // multiply by zeta = x
        std::vector<Int> raw(phi_ + 1, 0);
        for (unsigned i = 0; i < phi_; ++i) raw[i + 1] = z[i];
        z = reduce_raw(std::move(raw));
    }
}

std::vector<Int> CycField::reduce_raw(std::vector<Int> coeffs) const {
    if (coeffs.size() < phi_) coeffs.resize(phi_, 0);
    for (size_t k = coeffs.size(); k-- > phi_;) {
        Int c = coeffs[k];
        if (c == 0) continue;
        const std::vector<Int>& row = highpow_.at(k - phi_);
        for (unsigned j = 0; j < phi_; ++j) coeffs[j] += c * row[j];
    }
    coeffs.resize(phi_);
    return coeffs;
}

void CycField::normalize(CycNum& a) const {
    if (a.den == 0) throw arith_error("CycNum: zero denominator");
    if (a.den < 0) {
        a.den = -a.den;
        for (Int& c : a.num) c = -c;
    }
    Int g = a.den;
    for (const Int& c : a.num) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    if (g > 1) {
        a.den /= g;
        for (Int& c : a.num) c /= g;
    }
}

CycNum CycField::zero() const { return CycNum{std::vector<Int>(phi_, 0), 1}; }

CycNum CycField::one() const {
    CycNum a = zero();
    a.num[0] = 1;
    return a;
}

CycNum CycField::from_int(const Int& n) const {
    CycNum a = zero();
    a.num[0] = n;
    return a;
}

CycNum CycField::from_rational(const Int& n, const Int& d) const {
    CycNum a = zero();
    a.num[0] = n;
    a.den = d;
    normalize(a);
    return a;
}

CycNum CycField::root_of_unity(long k) const {
    long r = k % static_cast<long>(m_);
    if (r < 0) r += m_;
    return CycNum{zeta_pow_[static_cast<size_t>(r)], 1};
}

bool CycField::is_zero(const CycNum& a) const {
    return std::all_of(a.num.begin(), a.num.end(), [](const Int& c) { return c == 0; });
}

bool CycField::is_rational(const CycNum& a) const {
    for (unsigned j = 1; j < phi_; ++j) {
        if (a.num[j] != 0) return false;
    }
    return true;
}

CycNum CycField::add(const CycNum& a, const CycNum& b) const {
    CycNum r;
    r.num.resize(phi_);
    r.den = a.den * b.den;
    for (unsigned j = 0; j < phi_; ++j) r.num[j] = a.num[j] * b.den + b.num[j] * a.den;
    normalize(r);
    return r;
}

CycNum CycField::sub(const CycNum& a, const CycNum& b) const {
    CycNum r;
    r.num.resize(phi_);
    r.den = a.den * b.den;
    for (unsigned j = 0; j < phi_; ++j) r.num[j] = a.num[j] * b.den - b.num[j] * a.den;
    normalize(r);
    return r;
}

CycNum CycField::neg(const CycNum& a) const {
    CycNum r = a;
    for (Int& c : r.num) c = -c;
    return r;
}

CycNum CycField::mul(const CycNum& a, const CycNum& b) const {
    // monomial * monomial resolves through the zeta-power table
    int ia = -1, ib = -1;
    bool amono = true, bmono = true;
    for (unsigned i = 0; i < phi_ && (amono || bmono); ++i) {
        if (amono && a.num[i] != 0) {
            if (ia >= 0) {
                amono = false;
            } else {
                ia = static_cast<int>(i);
            }
        }
        if (bmono && b.num[i] != 0) {
            if (ib >= 0) {
                bmono = false;
            } else {
                ib = static_cast<int>(i);
            }
        }
    }
    if (amono && ia < 0) return zero();
    if (bmono && ib < 0) return zero();
    if (amono && bmono) {
        CycNum r{zeta_pow_[(static_cast<unsigned>(ia) + static_cast<unsigned>(ib)) % m_],
                 a.den * b.den};
        Int c = a.num[static_cast<unsigned>(ia)] * b.num[static_cast<unsigned>(ib)];
        for (Int& x : r.num) {
            if (x != 0) x *= c;
        }
        normalize(r);
        return r;
    }
    std::vector<Int> raw(2 * phi_ - 1, 0);
    for (unsigned i = 0; i < phi_; ++i) {
        if (a.num[i] == 0) continue;
        for (unsigned j = 0; j < phi_; ++j) {
            if (b.num[j] == 0) continue;
            raw[i + j] += a.num[i] * b.num[j];
        }
    }
    CycNum r{reduce_raw(std::move(raw)), a.den * b.den};
    normalize(r);
    return r;
}

CycNum CycField::mul_int(const CycNum& a, const Int& c) const {
    CycNum r = a;
    for (Int& x : r.num) x *= c;
    normalize(r);
    return r;
}

CycNum CycField::div_int(const CycNum& a, const Int& c) const {
    if (c == 0) throw arith_error("CycField::div_int: zero divisor");
    CycNum r = a;
    r.den *= c;
    normalize(r);
    return r;
}

CycNum CycField::inv(const CycNum& a) const {
    if (is_zero(a)) throw arith_error("CycField::inv: zero");
    // monomial: (c zeta^i / d)^{-1} = d zeta^{-i} / c
    {
        int idx = -1;
        bool mono = true;
        for (unsigned i = 0; i < phi_; ++i) {
            if (a.num[i] == 0) continue;
            if (idx >= 0) {
                mono = false;
                break;
            }
            idx = static_cast<int>(i);
        }
        if (mono && idx >= 0) {
            CycNum r{zeta_pow_[(m_ - static_cast<unsigned>(idx) % m_) % m_], a.num[static_cast<unsigned>(idx)]};
            for (Int& x : r.num) {
                if (x != 0) x *= a.den;
            }
            normalize(r);
            return r;
        }
    }
    // Solve M_a x = e_0 over Q where M_a is multiplication by a.num in the
    // power basis; the denominator rides along afterwards.
    unsigned n = phi_;
    // columns of M: a.num * x^j reduced
    std::vector<std::vector<Int>> col(n);
    std::vector<Int> cur = a.num;
    for (unsigned j = 0; j < n; ++j) {
        col[j] = cur;
        if (j + 1 < n) {
            std::vector<Int> raw(n + 1, 0);
            for (unsigned i = 0; i < n; ++i) raw[i + 1] = cur[i];
            cur = reduce_raw(std::move(raw));
        }
    }
    // fraction-free Gaussian elimination on [M | e_0]
    std::vector<std::vector<Int>> A(n, std::vector<Int>(n + 1, 0));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) A[i][j] = col[j][i];
    }
    A[0][n] = 1;
    std::vector<unsigned> perm(n);
    Int prev = 1;
    for (unsigned k = 0; k < n; ++k) {
        unsigned piv = k;
        while (piv < n && A[piv][k] == 0) ++piv;
        if (piv == n) throw arith_error("CycField::inv: singular multiplication matrix");
        std::swap(A[k], A[piv]);
        for (unsigned i = k + 1; i < n; ++i) {
            for (unsigned j = k + 1; j <= n; ++j) {
                A[i][j] = div_exact(A[k][k] * A[i][j] - A[i][k] * A[k][j], prev);
            }
            A[i][k] = 0;
        }
        prev = A[k][k];
    }
    // back substitution over Q: keep x_i = p_i / q_i with a shared running form
    std::vector<Int> xn(n), xd(n);
    for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
        // A[i][i] x_i = A[i][n] - sum_{j>i} A[i][j] x_j
        Int accn = A[i][static_cast<int>(n)];
        Int accd = 1;
        for (unsigned j = i + 1; j < n; ++j) {
            if (A[i][j] == 0 || xn[j] == 0) continue;
            // acc -= A[i][j] * xn[j]/xd[j]
            accn = accn * xd[j] - A[i][j] * xn[j] * accd;
            accd *= xd[j];
            Int g = int_gcd(accn, accd);
            if (g > 1) {
                accn /= g;
                accd /= g;
            }
        }
        xn[i] = accn;
        xd[i] = accd * A[i][i];
        Int g = int_gcd(xn[i], xd[i]);
        if (g > 1) {
            xn[i] /= g;
            xd[i] /= g;
        }
    }
    // combine into a single CycNum
    Int lcm = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (xn[i] == 0) continue;
        lcm = lcm / int_gcd(lcm, xd[i]) * xd[i];
    }
    lcm = int_abs(lcm);
    if (lcm == 0) lcm = 1;
    // inv(num/den) = den * inv(num)
    CycNum r = zero();
    for (unsigned i = 0; i < n; ++i) {
        if (xn[i] != 0) r.num[i] = xn[i] * div_exact(lcm, xd[i]) * a.den;
    }
    r.den = lcm;
    normalize(r);
    return r;
}

CycNum CycField::div(const CycNum& a, const CycNum& b) const { return mul(a, inv(b)); }

CycNum CycField::pow(const CycNum& a, long e) const {
    CycNum base = e < 0 ? inv(a) : a;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    CycNum acc = one();
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        base = mul(base, base);
        n >>= 1;
    }
    return acc;
}

CycNum CycField::conj(const CycNum& a) const {
    CycNum r = zero();
    r.den = a.den;
    std::vector<Int> raw(phi_, 0);
    CycNum acc = zero();
    for (unsigned j = 0; j < phi_; ++j) {
        if (a.num[j] == 0) continue;
        long k = -static_cast<long>(j);
        const CycNum zj = root_of_unity(k);
        for (unsigned i = 0; i < phi_; ++i) raw[i] += a.num[j] * zj.num[i];
    }
    r.num = std::move(raw);
    normalize(r);
    return r;
}

std::string CycField::to_string(const CycNum& a) const {
    std::ostringstream os;
    os << "(";
    for (unsigned j = 0; j < phi_; ++j) os << (j ? "," : "") << a.num[j];
    os << ")";
    if (a.den != 1) os << "/" << a.den;
    return os.str();
}

CycNum convert_field(const CycField& from, const CycField& to, const CycNum& x) {
    if (from.conductor() == to.conductor()) return x;
    if (to.conductor() % from.conductor() == 0) {
        // embed: zeta_from = zeta_to^r
        long r = static_cast<long>(to.conductor() / from.conductor());
        CycNum acc = to.zero();
        for (unsigned j = 0; j < from.degree(); ++j) {
            if (x.num[j] == 0) continue;
            acc = to.add(acc, to.mul_int(to.root_of_unity(r * static_cast<long>(j)), x.num[j]));
        }
        return to.div_int(acc, x.den);
    }
    if (from.conductor() % to.conductor() == 0) {
        // contract: solve sum_i d_i zeta_from^(r i) = x over Q, r = m_from/m_to
        long r = static_cast<long>(from.conductor() / to.conductor());
        unsigned nf = from.degree(), nt = to.degree();
        // columns: zeta_from^(r i) in from-coordinates; augmented with x.num
        std::vector<std::vector<Int>> A(nf, std::vector<Int>(nt + 1, 0));
        for (unsigned i = 0; i < nt; ++i) {
            CycNum c = from.root_of_unity(r * static_cast<long>(i));
            for (unsigned row = 0; row < nf; ++row) A[row][i] = c.num[row];
        }
        for (unsigned row = 0; row < nf; ++row) A[row][nt] = x.num[row];
        // rational Gaussian elimination (columns 0..nt-1 as unknowns)
        std::vector<Int> den(nf, 1);
        unsigned rank = 0;
        std::vector<int> pivot_of_col(nt, -1);
        for (unsigned c = 0; c < nt && rank < nf; ++c) {
            unsigned piv = rank;
            while (piv < nf && A[piv][c] == 0) ++piv;
            if (piv == nf) continue;
            std::swap(A[rank], A[piv]);
            std::swap(den[rank], den[piv]);
            for (unsigned i = 0; i < nf; ++i) {
                if (i == rank || A[i][c] == 0) continue;
                // row_i := row_i - (A[i][c]/A[rank][c]) row_rank, over Q with
                // per-row denominators
                Int f1 = A[rank][c] * den[i];
                Int f2 = A[i][c] * den[rank];
                for (unsigned j = 0; j <= nt; ++j) A[i][j] = A[i][j] * f1 - A[rank][j] * f2;
                den[i] = den[i] * f1;
                Int g = den[i];
                for (unsigned j = 0; j <= nt && g != 1; ++j) g = int_gcd(g, A[i][j]);
                if (g > 1) {
                    den[i] /= g;
                    for (unsigned j = 0; j <= nt; ++j) A[i][j] /= g;
                }
            }
            pivot_of_col[c] = static_cast<int>(rank);
            ++rank;
        }
        // consistency: rows beyond pivots must be zero in the augmented column
        for (unsigned i = 0; i < nf; ++i) {
            bool zero_coeffs = true;
            for (unsigned j = 0; j < nt; ++j) {
                if (A[i][j] != 0) {
                    zero_coeffs = false;
                    break;
                }
            }
            if (zero_coeffs && A[i][nt] != 0) {
                throw arith_error("convert_field: element does not lie in the smaller field");
            }
        }
        CycNum out = to.zero();
        out.den = x.den;
        // read solution: for pivot column c with pivot row r0: d_c = A[r0][nt]/A[r0][c]
        Int lcm = 1;
        std::vector<Int> dn(nt, 0), dd(nt, 1);
        for (unsigned c = 0; c < nt; ++c) {
            int r0 = pivot_of_col[c];
            if (r0 < 0) continue;
            dn[c] = A[r0][nt];
            dd[c] = A[r0][c];
            if (dd[c] < 0) {
                dd[c] = -dd[c];
                dn[c] = -dn[c];
            }
            Int g = int_gcd(dn[c], dd[c]);
            if (g > 1) {
                dn[c] /= g;
                dd[c] /= g;
            }
            lcm = lcm / int_gcd(lcm, dd[c]) * dd[c];
        }
        for (unsigned c = 0; c < nt; ++c) out.num[c] = dn[c] * (lcm / dd[c]);
        out.den = x.den * lcm;
        to.normalize(out);
        return out;
    }
    throw arith_error("convert_field: conductors are not nested");
}

}  // namespace symquot
