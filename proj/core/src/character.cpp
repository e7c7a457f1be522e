#include "symquot/character.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace symquot {

namespace {

using u64 = std::uint64_t;

u64 addm(u64 a, u64 b, u64 m) { return (a + b) % m; }
u64 subm(u64 a, u64 b, u64 m) { return (a + m - b % m) % m; }
u64 mulm(u64 a, u64 b, u64 m) { return a % m * (b % m) % m; }

u64 powm(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulm(r, a, m);
        a = mulm(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invm(u64 a, u64 m) { return inv_mod_u64(a % m, m); }

/// Smallest prime l with l = 1 mod e and l > 2*floor(sqrt(n)); the working
/// prime for the eigenvector method.
u64 choose_working_prime(unsigned e, unsigned n) {
    u64 bound = 2;
    while (bound * bound <= 4ull * n) ++bound;  // bound > 2 sqrt(n)
    for (u64 l = e + 1;; l += e) {
        if (l <= bound) continue;
        if (is_prime_u64(l)) return l;
    }
}

u64 primitive_root(u64 l) {
    auto fac = prime_factors_u64(l - 1);
    for (u64 g = 2; g < l; ++g) {
        bool ok = true;
        for (u64 q : fac) {
            if (powm(g, (l - 1) / q, l) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw arith_error("primitive_root: none found");
}

u64 sqrt_mod(u64 a, u64 l) {
    a %= l;
    if (a == 0) return 0;
    if (powm(a, (l - 1) / 2, l) != 1) throw arith_error("sqrt_mod: not a square");
    if (l % 4 == 3) return powm(a, (l + 1) / 4, l);
    // Tonelli-Shanks
    u64 q = l - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    u64 z = 2;
    while (powm(z, (l - 1) / 2, l) == 1) ++z;
    u64 m = s, c = powm(z, q, l), t = powm(a, q, l), r = powm(a, (q + 1) / 2, l);
    while (t != 1) {
        u64 t2 = t;
        unsigned i = 0;
        while (t2 != 1) {
            t2 = mulm(t2, t2, l);
            ++i;
        }
        u64 b = powm(c, 1ull << (m - i - 1), l);
        m = i;
        c = mulm(b, b, l);
        t = mulm(t, c, l);
        r = mulm(r, b, l);
    }
    return r;
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

/// reduced row echelon form in place; returns pivot columns
std::vector<unsigned> rref(Mat& M, u64 l) {
    std::vector<unsigned> pivots;
    if (M.empty()) return pivots;
    size_t rows = M.size(), cols = M[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        u64 inv = invm(M[rank][c], l);
        for (size_t j = 0; j < cols; ++j) M[rank][j] = mulm(M[rank][j], inv, l);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || M[i][c] == 0) continue;
            u64 f = M[i][c];
            for (size_t j = 0; j < cols; ++j) M[i][j] = subm(M[i][j], mulm(f, M[rank][j], l), l);
        }
        pivots.push_back(static_cast<unsigned>(c));
        ++rank;
    }
    M.resize(rank);
    return pivots;
}

/// characteristic polynomial over F_l via Hessenberg reduction;
/// returns coefficients of det(lambda I - M), constant term first
Vec charpoly(Mat M, u64 l) {
    const size_t n = M.size();
    // similarity reduction to upper Hessenberg
    for (size_t c = 0; c + 2 < n; ++c) {
        size_t piv = c + 1;
        while (piv < n && M[piv][c] == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            std::swap(M[piv], M[c + 1]);
            for (size_t i = 0; i < n; ++i) std::swap(M[i][piv], M[i][c + 1]);
        }
        u64 inv = invm(M[c + 1][c], l);
        for (size_t r = c + 2; r < n; ++r) {
            if (M[r][c] == 0) continue;
            u64 f = mulm(M[r][c], inv, l);
            for (size_t j = 0; j < n; ++j) M[r][j] = subm(M[r][j], mulm(f, M[c + 1][j], l), l);
            for (size_t i = 0; i < n; ++i) M[i][c + 1] = addm(M[i][c + 1], mulm(f, M[i][r], l), l);
        }
    }
    // p_0 = 1; p_m from the Hessenberg recurrence
    std::vector<Vec> p(n + 1);
    p[0] = {1};
    for (size_t m = 1; m <= n; ++m) {
        // (lambda - h_{m-1,m-1}) * p_{m-1}
        Vec cur(m + 1, 0);
        for (size_t j = 0; j < p[m - 1].size(); ++j) {
            cur[j + 1] = addm(cur[j + 1], p[m - 1][j], l);
            cur[j] = subm(cur[j], mulm(M[m - 1][m - 1], p[m - 1][j], l), l);
        }
        u64 subprod = 1;
        for (size_t i = m - 1; i-- > 0;) {
            // term h_{i, m-1} * prod_{j=i+1}^{m-1} h_{j, j-1} * p_i
            subprod = mulm(subprod, M[i + 1][i], l);
            if (M[i][m - 1] == 0) continue;
            u64 coef = mulm(M[i][m - 1], subprod, l);
            for (size_t j = 0; j < p[i].size(); ++j) {
                cur[j] = subm(cur[j], mulm(coef, p[i][j], l), l);
            }
        }
        p[m] = std::move(cur);
    }
    return p[n];
}

Vec mat_vec(const Mat& A, const Vec& x, u64 l) {
    Vec y(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i) {
        u64 acc = 0;
        for (size_t j = 0; j < x.size(); ++j) acc = addm(acc, mulm(A[i][j], x[j], l), l);
        y[i] = acc;
    }
    return y;
}

}  // namespace

CharacterTable character_table(const GroupPtr& G) {
    const unsigned n = G->order();
    const unsigned r = G->class_count();
    const unsigned e = G->exponent();

    // class-sum structure constants: a[i][j][k] with C_i C_j = sum a_ijk C_k
    std::vector<Mat> A(r, Mat(r, Vec(r, 0)));
    for (unsigned k = 0; k < r; ++k) {
        unsigned zk = G->class_rep(k);
        for (unsigned i = 0; i < r; ++i) {
            for (unsigned x : G->class_members(i)) {
                unsigned j = G->class_of(G->mul(G->inv(x), zk));
                A[i][j][k] += 1;
            }
        }
    }
    const u64 l = choose_working_prime(e, n);
    for (auto& Ai : A) {
        for (auto& row : Ai) {
            for (auto& v : row) v %= l;
        }
    }
    // reshape: M_i[j][k] = a_ijk as a matrix acting on vectors (omega(C_k))_k
    // A[i][j][k] already has that layout.

    // split the common eigenspaces
    std::vector<Mat> spaces;
    {
        Mat full(r, Vec(r, 0));
        for (unsigned i = 0; i < r; ++i) full[i][i] = 1;
        spaces.push_back(std::move(full));
    }
    for (unsigned i = 1; i < r; ++i) {
        bool all_one = std::all_of(spaces.begin(), spaces.end(),
                                   [](const Mat& S) { return S.size() == 1; });
        if (all_one) break;
        std::vector<Mat> next;
        for (const Mat& S : spaces) {
            const size_t dim = S.size();
            if (dim == 1) {
                next.push_back(S);
                continue;
            }
            // restriction B of A_i to the invariant space S: solve S^T stacked
            // Build matrix with rows = basis vectors; the action sends basis
            // row b to A_i b; solve for coordinates in the S-basis.
            Mat rows = S;  // dim x r, in RREF (rows are canonical)
            std::vector<unsigned> pivots;
            {
                Mat tmp = rows;
                pivots = rref(tmp, l);
            }
            Mat B(dim, Vec(dim, 0));
            for (size_t b = 0; b < dim; ++b) {
                Vec img = mat_vec(A[i], rows[b], l);
                // coordinates against RREF basis: img = sum coord_t * rows[t]
                Vec coord(dim, 0);
                for (size_t t = 0; t < dim; ++t) {
                    u64 c = img[pivots[t]];
                    coord[t] = c;
                    if (c == 0) continue;
                    for (size_t j = 0; j < img.size(); ++j) {
                        img[j] = subm(img[j], mulm(c, rows[t][j], l), l);
                    }
                }
                if (std::any_of(img.begin(), img.end(), [](u64 v) { return v != 0; })) {
                    throw arith_error("character_table: class matrix left an invariant space");
                }
                for (size_t t = 0; t < dim; ++t) B[t][b] = coord[t];
            }
            // eigenvalues of B: roots of the characteristic polynomial
            Vec cp = charpoly(B, l);
            std::vector<u64> roots;
            for (u64 lam = 0; lam < l; ++lam) {
                u64 acc = 0;
                for (size_t j = cp.size(); j-- > 0;) acc = addm(mulm(acc, lam, l), cp[j], l);
                if (acc == 0) roots.push_back(lam);
            }
            for (u64 lam : roots) {
                // kernel of (B - lam) inside S
                Mat K = B;
                for (size_t t = 0; t < dim; ++t) K[t][t] = subm(K[t][t], lam, l);
                // kernel basis of K (dim x dim)
                Mat Kr = K;
                std::vector<unsigned> kp = rref(Kr, l);
                std::vector<bool> is_piv(dim, false);
                for (unsigned c : kp) is_piv[c] = true;
                Mat sub;  // coordinates inside S
                for (size_t c = 0; c < dim; ++c) {
                    if (is_piv[c]) continue;
                    Vec v(dim, 0);
                    v[c] = 1;
                    for (size_t t = 0; t < kp.size(); ++t) v[kp[t]] = subm(0, Kr[t][c], l);
                    sub.push_back(std::move(v));
                }
                if (sub.empty()) continue;
                // back to ambient coordinates, canonicalized
                Mat amb;
                for (const Vec& v : sub) {
                    Vec w(r, 0);
                    for (size_t t = 0; t < dim; ++t) {
                        if (v[t] == 0) continue;
                        for (size_t j = 0; j < r; ++j) {
                            w[j] = addm(w[j], mulm(v[t], rows[t][j], l), l);
                        }
                    }
                    amb.push_back(std::move(w));
                }
                rref(amb, l);
                next.push_back(std::move(amb));
            }
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r) {
        throw arith_error("character_table: eigenspace splitting failed");
    }
    for (const Mat& S : spaces) {
        if (S.size() != 1) throw arith_error("character_table: splitting left a fat space");
    }

    // normalize omega vectors (identity coordinate 1), recover degrees
    u64 n_mod = n % l;
    std::vector<Vec> omega;
    std::vector<unsigned> degree;
    for (const Mat& S : spaces) {
        Vec v = S[0];
        if (v[0] == 0) throw arith_error("character_table: eigenvector vanishes at identity");
        u64 inv = invm(v[0], l);
        for (auto& x : v) x = mulm(x, inv, l);
        // 1/d^2 = (1/|G|) sum_k v_k v_{kbar} / |C_k|
        u64 acc = 0;
        for (unsigned k = 0; k < r; ++k) {
            u64 t = mulm(v[k], v[G->inverse_class(k)], l);
            acc = addm(acc, mulm(t, invm(G->class_size(k) % l, l), l), l);
        }
        if (acc == 0) throw arith_error("character_table: degree recovery failed");
        u64 d2 = mulm(n_mod, invm(acc, l), l);
        u64 d = sqrt_mod(d2, l);
        if (d > l - d) d = l - d;
        if (d == 0 || d * d > n) throw arith_error("character_table: implausible degree");
        omega.push_back(std::move(v));
        degree.push_back(static_cast<unsigned>(d));
    }
    {
        unsigned long long sum = 0;
        for (unsigned d : degree) sum += 1ull * d * d;
        if (sum != n) throw arith_error("character_table: degree square sum mismatch");
    }

    // lift character values: chi(g) = sum_j mult_j zeta_o^j with multiplicities
    // recovered by the inverse DFT over F_l
    CharacterTable T;
    T.group = G;
    T.field = std::make_shared<CycField>(e);
    const CycField& F = *T.field;
    u64 w = powm(primitive_root(l), (l - 1) / e, l);

    // per-class tables shared by every character: power-map classes and the
    // powers of the order-o root of unity mod l
    std::vector<std::vector<unsigned>> power_classes(r);
    std::vector<std::vector<u64>> root_pows(r);
    std::vector<u64> size_inv(r);
    for (unsigned k = 0; k < r; ++k) {
        unsigned o = G->element_order(G->class_rep(k));
        power_classes[k].resize(o);
        for (unsigned t = 0; t < o; ++t) power_classes[k][t] = G->power_class(k, t);
        u64 wo = powm(w, e / o, l);
        root_pows[k].resize(o);
        u64 cur = 1;
        for (unsigned t = 0; t < o; ++t) {
            root_pows[k][t] = cur;
            cur = mulm(cur, wo, l);
        }
        size_inv[k] = invm(G->class_size(k) % l, l);
    }
    for (unsigned chi = 0; chi < r; ++chi) {
        Character C;
        C.degree = degree[chi];
        C.values.resize(r, F.zero());
        std::vector<u64> chi_mod(r);
        for (unsigned k = 0; k < r; ++k) {
            chi_mod[k] = mulm(mulm(degree[chi] % l, omega[chi][k], l), size_inv[k], l);
        }
        for (unsigned k = 0; k < r; ++k) {
            unsigned o = G->element_order(G->class_rep(k));
            u64 oinv = invm(o % l, l);
            CycNum val = F.zero();
            unsigned multsum = 0;
            for (unsigned j = 0; j < o; ++j) {
                u64 acc = 0;
                for (unsigned t = 0; t < o; ++t) {
                    u64 term = mulm(chi_mod[power_classes[k][t]],
                                    root_pows[k][(1ull * (o - j) * t) % o], l);
                    acc = addm(acc, term, l);
                }
                u64 mj = mulm(acc, oinv, l);
                if (mj > static_cast<u64>(degree[chi])) {
                    throw arith_error("character_table: eigenvalue multiplicity out of range");
                }
                if (mj == 0) continue;
                multsum += static_cast<unsigned>(mj);
                val = F.add(val, F.mul_int(F.root_of_unity(static_cast<long>(e / o) * j),
                                           Int(mj)));
            }
            if (multsum != degree[chi]) {
                throw arith_error("character_table: multiplicities do not sum to the degree");
            }
            C.values[k] = std::move(val);
        }
        T.irr.push_back(std::move(C));
    }

    // canonical order: by degree, then by value tuples
    auto cyc_less = [&F](const CycNum& a, const CycNum& b) {
        if (a.den != b.den) return a.den < b.den;
        return a.num < b.num;
    };
    std::sort(T.irr.begin(), T.irr.end(), [&](const Character& a, const Character& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (unsigned k = 0; k < r; ++k) {
            if (!(a.values[k] == b.values[k])) return cyc_less(a.values[k], b.values[k]);
        }
        return false;
    });

    // exact orthogonality checks, rows and columns, accumulated over raw
    // power-basis coordinates (character values are integral, denominator 1)
    const unsigned phi = F.degree();
    for (unsigned i = 0; i < r; ++i) {
        for (const auto& v : T.irr[i].values) {
            if (v.den != 1) throw arith_error("character_table: non-integral value");
        }
    }
    auto accumulate = [&](std::vector<Int>& acc, const CycNum& a, const CycNum& b,
                          const Int& weight) {
        CycNum prod = F.mul(a, b);
        for (unsigned c = 0; c < phi; ++c) {
            if (prod.num[c] != 0) acc[c] += weight * prod.num[c];
        }
    };
    for (unsigned i = 0; i < r; ++i) {
        for (unsigned j = i; j < r; ++j) {
            std::vector<Int> acc(phi, 0);
            for (unsigned k = 0; k < r; ++k) {
                accumulate(acc, T.irr[i].values[k], T.irr[j].values[G->inverse_class(k)],
                           Int(G->class_size(k)));
            }
            Int expect = i == j ? Int(n) : Int(0);
            if (acc[0] != expect ||
                !std::all_of(acc.begin() + 1, acc.end(), [](const Int& c) { return c == 0; })) {
                throw arith_error("character_table: row orthogonality failed");
            }
        }
    }
    for (unsigned k = 0; k < r; ++k) {
        for (unsigned k2 = k; k2 < r; ++k2) {
            std::vector<Int> acc(phi, 0);
            for (unsigned i = 0; i < r; ++i) {
                accumulate(acc, T.irr[i].values[k], T.irr[i].values[G->inverse_class(k2)],
                           Int(1));
            }
            // sum = |G| / |C_k| on the diagonal, zero off it
            Int expect = 0;
            if (k == k2) expect = div_exact(Int(n), Int(G->class_size(k)));
            if (acc[0] != expect ||
                !std::all_of(acc.begin() + 1, acc.end(), [](const Int& c) { return c == 0; })) {
                throw arith_error("character_table: column orthogonality failed");
            }
        }
    }
    return T;
}

CycNum character_inner(const CharacterTable& T, const Character& a, const Character& b) {
    const CycField& F = *T.field;
    const Group& G = *T.group;
    CycNum acc = F.zero();
    for (unsigned k = 0; k < G.class_count(); ++k) {
        CycNum t = F.mul(a.values[k], b.values[G.inverse_class(k)]);
        acc = F.add(acc, F.mul_int(t, Int(G.class_size(k))));
    }
    return F.div_int(acc, Int(G.order()));
}

std::vector<std::vector<CycNum>> linear_characters(const CharacterTable& T,
                                                   const Group::Sub& H) {
    const CycField& F = *T.field;
    const Group& Hg = *H.group;
    auto derived = Hg.commutator_subgroup();
    auto Q = Hg.quotient(derived);
    CharacterTable QT = character_table(Q.group);
    std::vector<std::vector<CycNum>> out;
    for (const Character& chi : QT.irr) {
        if (chi.degree != 1) throw arith_error("linear_characters: abelianization not abelian?");
        std::vector<CycNum> eta(Hg.order(), F.zero());
        for (unsigned h = 0; h < Hg.order(); ++h) {
            unsigned q = Q.proj[h];
            eta[h] = convert_field(*QT.field, F, chi.values[Q.group->class_of(q)]);
        }
        out.push_back(std::move(eta));
    }
    return out;
}

InducedCharacter induce_linear(const CharacterTable& T, const std::vector<unsigned>& H_elems,
                               const std::vector<CycNum>& eta) {
    const CycField& F = *T.field;
    const Group& G = *T.group;
    if (!G.is_subgroup(H_elems)) throw arith_error("induce_linear: not a subgroup");
    std::vector<unsigned> H = H_elems;
    std::sort(H.begin(), H.end());
    if (eta.size() != H.size()) throw arith_error("induce_linear: eta length mismatch");
    std::vector<int> pos(G.order(), -1);
    for (size_t i = 0; i < H.size(); ++i) pos[H[i]] = static_cast<int>(i);
    // homomorphism check
    for (size_t i = 0; i < H.size(); ++i) {
        for (size_t j = 0; j < H.size(); ++j) {
            unsigned prod = G.mul(H[i], H[j]);
            if (!(F.mul(eta[i], eta[j]) == eta[static_cast<size_t>(pos[prod])])) {
                throw arith_error("induce_linear: eta is not a homomorphism");
            }
        }
    }
    InducedCharacter out;
    out.character.values.assign(G.class_count(), F.zero());
    for (unsigned c = 0; c < G.class_count(); ++c) {
        unsigned g = G.class_rep(c);
        CycNum acc = F.zero();
        for (unsigned x = 0; x < G.order(); ++x) {
            unsigned y = G.mul(G.mul(x, g), G.inv(x));
            if (pos[y] >= 0) acc = F.add(acc, eta[static_cast<size_t>(pos[y])]);
        }
        out.character.values[c] = F.div_int(acc, Int(H.size()));
    }
    // the induced degree |G:H| * eta(1)
    const CycNum& deg = out.character.values[0];
    if (!F.is_rational(deg) || deg.den != 1) {
        throw arith_error("induce_linear: induced degree is not an integer");
    }
    out.character.degree = static_cast<unsigned>(to_long(deg.num[0]));
    CycNum norm = character_inner(T, out.character, out.character);
    out.irreducible = norm == F.one();
    return out;
}

std::optional<MonomialRealization> monomial_realization(
    const CharacterTable& T, unsigned chi_index,
    const std::vector<std::vector<unsigned>>* subgroup_pool) {
    const CycField& F = *T.field;
    const Group& G = *T.group;
    const Character& chi = T.irr[chi_index];
    const unsigned d = chi.degree;
    if (G.order() % d != 0) return std::nullopt;
    const unsigned target = G.order() / d;

    auto build = [&](const std::vector<unsigned>& H,
                     const std::vector<CycNum>& eta) -> MonomialRealization {
        MonomialRealization R;
        R.subgroup = H;
        R.eta = eta;
        std::vector<int> pos(G.order(), -1);
        for (size_t i = 0; i < H.size(); ++i) pos[H[i]] = static_cast<int>(i);
        // left coset representatives, smallest-index first
        std::vector<unsigned> reps;
        std::vector<bool> covered(G.order(), false);
        for (unsigned g = 0; g < G.order(); ++g) {
            if (covered[g]) continue;
            reps.push_back(g);
            for (unsigned h : H) covered[G.mul(g, h)] = true;
        }
        R.matrices.assign(G.order(),
                          std::vector<std::vector<CycNum>>(d, std::vector<CycNum>(d, F.zero())));
        for (unsigned g = 0; g < G.order(); ++g) {
            for (unsigned i = 0; i < d; ++i) {
                for (unsigned j = 0; j < d; ++j) {
                    unsigned y = G.mul(G.mul(G.inv(reps[i]), g), reps[j]);
                    if (pos[y] >= 0) R.matrices[g][i][j] = eta[static_cast<size_t>(pos[y])];
                }
            }
        }
        // multiplicativity on the full table and the trace identity
        for (unsigned g = 0; g < G.order(); ++g) {
            CycNum tr = F.zero();
            for (unsigned i = 0; i < d; ++i) tr = F.add(tr, R.matrices[g][i][i]);
            if (!(tr == chi.values[G.class_of(g)])) {
                throw arith_error("monomial_realization: trace mismatch");
            }
        }
        for (unsigned g = 0; g < G.order(); ++g) {
            for (unsigned h = 0; h < G.order(); ++h) {
                unsigned gh = G.mul(g, h);
                for (unsigned i = 0; i < d; ++i) {
                    for (unsigned j = 0; j < d; ++j) {
                        CycNum acc = F.zero();
                        for (unsigned t = 0; t < d; ++t) {
                            if (!F.is_zero(R.matrices[g][i][t]) &&
                                !F.is_zero(R.matrices[h][t][j])) {
                                acc = F.add(acc,
                                            F.mul(R.matrices[g][i][t], R.matrices[h][t][j]));
                            }
                        }
                        if (!(acc == R.matrices[gh][i][j])) {
                            throw arith_error("monomial_realization: not multiplicative");
                        }
                    }
                }
            }
        }
        return R;
    };

    if (d == 1) {
        std::vector<unsigned> H(G.order());
        std::iota(H.begin(), H.end(), 0u);
        std::vector<CycNum> eta(G.order(), F.zero());
        for (unsigned g = 0; g < G.order(); ++g) eta[g] = chi.values[G.class_of(g)];
        return build(H, eta);
    }

    std::vector<std::vector<unsigned>> own_pool;
    if (!subgroup_pool) {
        own_pool = G.subgroups_up_to(target);
        subgroup_pool = &own_pool;
    }
    for (const auto& H : *subgroup_pool) {
        if (H.size() != target) continue;
        Group::Sub sub = G.subgroup(H);
        for (const auto& eta : linear_characters(T, sub)) {
            InducedCharacter ind = induce_linear(T, H, eta);
            bool match = true;
            for (unsigned c = 0; c < G.class_count() && match; ++c) {
                match = ind.character.values[c] == chi.values[c];
            }
            if (match) return build(H, eta);
        }
    }
    return std::nullopt;
}

std::vector<Int> brauer_restriction_coords(const CharacterTable& T, std::uint64_t p,
                                           unsigned chi_index) {
    const Group& G = *T.group;
    auto reg = G.p_regular_classes(p);
    std::vector<Int> coords;
    for (unsigned c : reg) {
        const CycNum& v = T.irr[chi_index].values[c];
        if (v.den != 1) throw arith_error("brauer_restriction: non-integral character value");
        coords.insert(coords.end(), v.num.begin(), v.num.end());
    }
    return coords;
}

DecompositionLattice decomposition_lattice(const CharacterTable& T, std::uint64_t p) {
    ZMat rows;
    for (unsigned i = 0; i < T.size(); ++i) {
        rows.push_back(brauer_restriction_coords(T, p, i));
    }
    DecompositionLattice L{zmat::hnf(rows)};
    // self-consistency: the lattice rank equals the number of p-regular classes
    if (static_cast<size_t>(zmat::rank(L.hnf)) != T.group->p_regular_classes(p).size()) {
        throw arith_error("decomposition lattice: unexpected rank");
    }
    return L;
}

bool decomposition_divisible(const DecompositionLattice& L, const CharacterTable& T,
                             std::uint64_t p, unsigned chi_index) {
    auto coeff = zmat::solve(L.hnf, brauer_restriction_coords(T, p, chi_index));
    if (!coeff) throw arith_error("decomposition lattice: restriction not in the span");
    return std::all_of(coeff->begin(), coeff->end(),
                       [&](const Int& c) { return c % Int(p) == 0; });
}

bool decomposition_divisible_by_p(const CharacterTable& T, std::uint64_t p, unsigned chi_index) {
    return decomposition_divisible(decomposition_lattice(T, p), T, p, chi_index);
}

BlockPartition block_partition(const CharacterTable& T, const LocalContextPtr& ctx) {
    const Group& G = *T.group;
    const unsigned r = T.size();
    const CycField& Ftab = *T.field;
    const CycField& Fctx = ctx->field();
    // central characters agree modulo P exactly when their residue vectors
    // are equal; omega_chi(C) = |C| chi(g_C) / chi(1) lies in O
    std::vector<std::vector<FqField::Elem>> omega_res(r);
    for (unsigned i = 0; i < r; ++i) {
        omega_res[i].reserve(r);
        for (unsigned k = 0; k < r; ++k) {
            CycNum v = Ftab.div_int(Ftab.mul_int(T.irr[i].values[k], Int(G.class_size(k))),
                                    Int(T.irr[i].degree));
            omega_res[i].push_back(ctx->residue(convert_field(Ftab, Fctx, v)).coords);
        }
    }
    BlockPartition out;
    out.block_of.assign(r, 0);
    std::map<std::vector<FqField::Elem>, unsigned> seen;
    for (unsigned i = 0; i < r; ++i) {
        auto it = seen.find(omega_res[i]);
        if (it == seen.end()) {
            it = seen.emplace(omega_res[i], static_cast<unsigned>(out.blocks.size())).first;
            out.blocks.emplace_back();
        }
        out.block_of[i] = it->second;
        out.blocks[it->second].push_back(i);
    }
    out.heights.assign(r, 0);
    for (const auto& blk : out.blocks) {
        int minv = -1;
        for (unsigned i : blk) {
            int v = padic_val_u64(T.irr[i].degree, ctx->p());
            if (minv < 0 || v < minv) minv = v;
        }
        for (unsigned i : blk) {
            out.heights[i] =
                static_cast<unsigned>(padic_val_u64(T.irr[i].degree, ctx->p()) - minv);
        }
    }
    // the trivial character: all values 1
    for (unsigned i = 0; i < r; ++i) {
        if (T.irr[i].degree != 1) continue;
        bool triv = true;
        for (unsigned k = 0; k < r && triv; ++k) triv = T.irr[i].values[k] == Ftab.one();
        if (triv) {
            out.principal_block = out.block_of[i];
            break;
        }
    }
    return out;
}

bool is_central_type(const CharacterTable& T, unsigned chi_index) {
    const Group& G = *T.group;
    unsigned d = T.irr[chi_index].degree;
    return 1ull * d * d * G.center().size() == G.order();
}

LocalContextPtr context_for(const CharacterTable& T, std::uint64_t p, unsigned conductor) {
    unsigned m = conductor ? conductor : T.group->exponent();
    return make_context(m, p, T.group->order());
}

}  // namespace symquot
