#include "symquot/local.hpp"

#include <algorithm>

namespace symquot {

namespace {

/// Kernel over F_p of an r x c matrix (entries reduced mod p): basis of
/// column vectors x with M x = 0, as integer 0..p-1 vectors.
std::vector<std::vector<std::uint64_t>> fp_kernel(std::vector<std::vector<std::uint64_t>> M,
                                                  size_t cols, std::uint64_t p) {
    size_t rows = M.size();
    std::vector<int> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && M[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        std::uint64_t inv = inv_mod_u64(M[rank][c] % p, p);
        for (size_t j = 0; j < cols; ++j) M[rank][j] = M[rank][j] % p * inv % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            std::uint64_t f = M[i][c] % p;
            if (f == 0) continue;
            for (size_t j = 0; j < cols; ++j) {
                M[i][j] = (M[i][j] + (p - f) * M[rank][j]) % p;
            }
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<std::vector<std::uint64_t>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[c] = 1;
        for (size_t c2 = 0; c2 < cols; ++c2) {
            int r0 = pivot_of_col[c2];
            if (r0 >= 0) v[c2] = (p - M[static_cast<size_t>(r0)][c] % p) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::shared_ptr<const LocalContext> LocalContext::make(unsigned m, std::uint64_t p,
                                                       std::uint64_t order_hint) {
    if (m == 0) throw arith_error("make_context: m must be >= 1");
    if (!is_prime_u64(p)) throw arith_error("make_context: p must be prime");

    auto ctx = std::shared_ptr<LocalContext>(new LocalContext());
    ctx->m_ = m;
    ctx->p_ = p;
    ctx->s_ = 0;
    {
        unsigned mm = m;
        while (mm % p == 0) {
            mm /= static_cast<unsigned>(p);
            ++ctx->s_;
        }
        ctx->m_prime_ = mm;
    }
    ctx->e_ = static_cast<unsigned>(euler_phi_u64(pow_u64(p, ctx->s_)));
    ctx->f_ = ctx->m_prime_ == 1 ? 1 : mult_order_u64(p % ctx->m_prime_, ctx->m_prime_);
    ctx->field_ = std::make_shared<CycField>(m);
    const CycField& F = *ctx->field_;
    const unsigned d = F.degree();

    ctx->residue_factor_ = cyclotomic_factors_mod_p(ctx->m_prime_, p).front();
    ctx->k_ = std::make_unique<FqField>(p, ctx->residue_factor_);

    // residue images of the power basis: zeta_m -> ybar^beta with
    // beta = (p^s)^{-1} mod m'
    std::uint64_t beta = 0;
    if (ctx->m_prime_ > 1) beta = inv_mod_u64(pow_u64(p, ctx->s_) % ctx->m_prime_, ctx->m_prime_);
    FqField::Elem ybar = ctx->k_->gen();
    ctx->res_zeta_.resize(d);
    for (unsigned j = 0; j < d; ++j) {
        std::uint64_t expo = ctx->m_prime_ == 1 ? 0 : (beta * j) % ctx->m_prime_;
        ctx->res_zeta_[j] = ctx->k_->pow(ybar, Int(expo));
    }

    // the prime P as an integer lattice: kernel of the residue map mod p
    {
        std::vector<std::vector<std::uint64_t>> R(ctx->f_, std::vector<std::uint64_t>(d, 0));
        for (unsigned j = 0; j < d; ++j) {
            for (unsigned i = 0; i < ctx->f_; ++i) R[i][j] = ctx->res_zeta_[j][i] % p;
        }
        auto ker = fp_kernel(std::move(R), d, p);
        ZMat gens;
        for (const auto& v : ker) {
            std::vector<Int> row(d);
            for (unsigned j = 0; j < d; ++j) row[j] = Int(v[j]);
            gens.push_back(std::move(row));
        }
        for (unsigned j = 0; j < d; ++j) {
            std::vector<Int> row(d, 0);
            row[j] = Int(p);
            gens.push_back(std::move(row));
        }
        ctx->P_hnf_ = zmat::hnf(std::move(gens));
    }

    // w0: a basis element of J = (p) : P not lying in (p); then
    // v_P(w0) = e - 1 and v_P'(w0) >= e at the other primes above p, so the
    // valuation loop below can strip one power of P at a time via
    // x -> x * w0 / p without ever leaving Z[zeta_m].
    {
        std::vector<std::vector<std::uint64_t>> stacked;
        stacked.reserve(ctx->P_hnf_.size() * d);
        for (const auto& b : ctx->P_hnf_) {
            // columns of the multiplication-by-b matrix, mod p
            std::vector<Int> cur = b;
            std::vector<std::vector<std::uint64_t>> colmod(d, std::vector<std::uint64_t>(d));
            CycNum bc{b, 1};
            for (unsigned j = 0; j < d; ++j) {
                CycNum prod = F.mul(bc, F.root_of_unity(static_cast<long>(j)));
                for (unsigned i = 0; i < d; ++i) {
                    Int r = prod.num[i] % Int(p);
                    if (r < 0) r += Int(p);
                    colmod[i][j] = r.convert_to<std::uint64_t>();
                }
            }
            for (unsigned i = 0; i < d; ++i) stacked.push_back(colmod[i]);
        }
        auto ker = fp_kernel(std::move(stacked), d, p);
        ZMat gens;
        for (const auto& v : ker) {
            std::vector<Int> row(d);
            for (unsigned j = 0; j < d; ++j) row[j] = Int(v[j]);
            gens.push_back(std::move(row));
        }
        for (unsigned j = 0; j < d; ++j) {
            std::vector<Int> row(d, 0);
            row[j] = Int(p);
            gens.push_back(std::move(row));
        }
        ZMat J = zmat::hnf(std::move(gens));
        bool found = false;
        for (const auto& row : J) {
            bool unit_mod_p = std::any_of(row.begin(), row.end(),
                                          [&](const Int& c) { return c % Int(p) != 0; });
            if (unit_mod_p) {
                ctx->w0_ = row;
                found = true;
                break;
            }
        }
        if (!found) throw arith_error("make_context: anti-uniformizer construction failed");
    }

    if (ctx->s_ >= 1) {
        ctx->pi_ = F.sub(F.one(), F.root_of_unity(static_cast<long>(ctx->m_prime_)));
    } else {
        ctx->pi_ = F.from_int(Int(p));
    }
    ctx->pi_inv_ = F.inv(ctx->pi_);

    ctx->single_prime_ = euler_phi_u64(ctx->m_prime_) == ctx->f_;

    // Non-termination guard for the strip loop.  Echelon intermediates can
    // exceed the t_max bound for paper quantities after near-cancellations,
    // so that bound serves as a floor with generous headroom.
    long vp_hint = order_hint ? padic_val_u64(order_hint, p) : 40;
    long base = static_cast<long>(ctx->e_) * (vp_hint + 2) + static_cast<long>(d);
    ctx->cap_ = 8 * base + 256;

    // construction self-checks: v(pi) = 1 and v(p) = e
    auto vp = ctx->valuation(F.from_int(Int(p)));
    auto vpi = ctx->valuation(ctx->pi_);
    if (!vp || *vp != static_cast<long>(ctx->e_) || !vpi || *vpi != 1) {
        throw arith_error("make_context: uniformizer normalization check failed");
    }
    return ctx;
}

FqField::Elem LocalContext::residue_vec(const std::vector<Int>& num) const {
    FqField::Elem acc = k_->zero();
    for (size_t j = 0; j < num.size(); ++j) {
        Int r = num[j] % Int(p_);
        if (r == 0) continue;
        if (r < 0) r += Int(p_);
        FqField::Elem term = res_zeta_[j];
        std::uint64_t c = r.convert_to<std::uint64_t>();
        for (auto& x : term) x = x * c % p_;
        acc = k_->add(acc, term);
    }
    return acc;
}

std::vector<Int> LocalContext::mul_intvec(const std::vector<Int>& a,
                                          const std::vector<Int>& b) const {
    CycNum r = field_->mul(CycNum{a, 1}, CycNum{b, 1});
    if (r.den != 1) throw arith_error("mul_intvec: unexpected denominator");
    return r.num;
}

std::optional<long> LocalContext::valuation(const CycNum& x) const {
    if (field_->is_zero(x)) return std::nullopt;
    long v = 0;
    // denominator contributes -e per power of p
    Int den = x.den;
    while (den % Int(p_) == 0) {
        den /= Int(p_);
        v -= static_cast<long>(e_);
    }
    std::vector<Int> n = x.num;
    long steps = 0;
    while (k_->is_zero(residue_vec(n))) {
        // strip one power of P: n -> n * w0 / p stays integral
        n = mul_intvec(n, w0_);
        for (Int& c : n) c = div_exact(c, Int(p_));
        ++v;
        if (++steps > cap_) throw arith_error("valuation: cap exceeded on nonzero element");
    }
    return v;
}

bool LocalContext::in_O(const CycNum& x) const {
    auto v = valuation(x);
    return !v || *v >= 0;
}

bool LocalContext::val_at_least(const CycNum& x, long t) const {
    auto v = valuation(x);
    return !v || *v >= t;
}

ResidueElem LocalContext::residue_int(const Int& n) const {
    Int r = n % Int(p_);
    if (r < 0) r += Int(p_);
    return ResidueElem{k_->from_int(r.convert_to<std::uint64_t>())};
}

const ZMat& LocalContext::prime_power(unsigned k) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (p_pow_cache_.empty()) {
        ZMat id(field_->degree(), std::vector<Int>(field_->degree(), 0));
        for (unsigned j = 0; j < field_->degree(); ++j) id[j][j] = 1;
        p_pow_cache_.emplace(0, std::move(id));
    }
    auto it = p_pow_cache_.upper_bound(k);
    --it;
    unsigned have = it->first;
    while (have < k) {
        const ZMat& cur = p_pow_cache_.at(have);
        ZMat gens;
        gens.reserve(cur.size() * P_hnf_.size());
        for (const auto& a : cur) {
            for (const auto& b : P_hnf_) gens.push_back(mul_intvec(a, b));
        }
        ++have;
        p_pow_cache_.emplace(have, zmat::hnf(std::move(gens)));
    }
    return p_pow_cache_.at(k);
}

std::vector<Int> LocalContext::denominator_helper(unsigned a) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = b_cache_.find(a);
        if (it != b_cache_.end()) return it->second;
    }
    // B spans the part of (p^a) prime to P:  C = p^a * (P^(a e))^{-1} is the
    // product of the other primes above p to the power a*e; any basis vector
    // of C outside P works.
    const unsigned d = field_->degree();
    const ZMat& Pae = prime_power(a * e_);
    ZMat stacked;
    stacked.reserve(Pae.size() * d);
    for (const auto& b : Pae) {
        CycNum bc{b, 1};
        std::vector<std::vector<Int>> cols(d);
        for (unsigned j = 0; j < d; ++j) {
            cols[j] = field_->mul(bc, field_->root_of_unity(static_cast<long>(j))).num;
        }
        for (unsigned i = 0; i < d; ++i) {
            std::vector<Int> row(d);
            for (unsigned j = 0; j < d; ++j) row[j] = cols[j][i];
            stacked.push_back(std::move(row));
        }
    }
    zmat::RationalLattice inv = zmat::integral_preimage(stacked);
    Int pa = boost::multiprecision::pow(Int(p_), a);
    ZMat cgens;
    for (const auto& row : inv.basis) {
        std::vector<Int> v(d);
        for (unsigned j = 0; j < d; ++j) v[j] = div_exact(row[j] * pa, inv.den);
        cgens.push_back(std::move(v));
    }
    ZMat C = zmat::hnf(std::move(cgens));
    for (const auto& row : C) {
        if (!k_->is_zero(residue_vec(row))) {
            std::lock_guard<std::mutex> lock(cache_mu_);
            b_cache_.emplace(a, row);
            return row;
        }
    }
    throw arith_error("residue: denominator helper not found");
}

ResidueElem LocalContext::residue(const CycNum& x) const {
    auto v = valuation(x);
    if (v && *v < 0) throw arith_error("residue: negative valuation");
    if (!v) return ResidueElem{k_->zero()};
    Int den = x.den;
    unsigned a = 0;
    while (den % Int(p_) == 0) {
        den /= Int(p_);
        ++a;
    }
    FqField::Elem dres = residue_int(den).coords;
    if (a == 0) {
        return ResidueElem{k_->mul(residue_vec(x.num), k_->inv(dres))};
    }
    if (single_prime_) {
        // (p) = P^e, so O-elements reduce to p-free denominators after the
        // exact division num / pi^(ae); the leftover unit pi^(ae)/p^a is
        // cached per a.  residue(x) = residue(num/pi^(ae)) residue(unit)/d'.
        const CycField& F = *field_;
        CycNum y0 = F.mul(CycNum{x.num, 1}, pi_pow(-static_cast<long>(a * e_)));
        CycNum unit;
        {
            std::lock_guard<std::mutex> lock(cache_mu_);
            auto it = unit_cache_.find(a);
            if (it == unit_cache_.end()) {
                CycNum u = pi_pow(static_cast<long>(a * e_));
                u.den *= boost::multiprecision::pow(Int(p_), a);
                F.normalize(u);
                it = unit_cache_.emplace(a, std::move(u)).first;
            }
            unit = it->second;
        }
        if (y0.den % Int(p_) == 0 || unit.den % Int(p_) == 0) {
            throw arith_error("residue: single-prime reduction failed");
        }
        FqField::Elem ry = k_->mul(residue_vec(y0.num), k_->inv(residue_int(y0.den).coords));
        FqField::Elem ru = k_->mul(residue_vec(unit.num), k_->inv(residue_int(unit.den).coords));
        return ResidueElem{k_->mul(k_->mul(ry, ru), k_->inv(dres))};
    }
    std::vector<Int> B = denominator_helper(a);
    Int pa = boost::multiprecision::pow(Int(p_), a);
    std::vector<Int> A = mul_intvec(x.num, B);
    for (Int& c : A) c = div_exact(c, pa);
    FqField::Elem num_res = residue_vec(A);
    FqField::Elem den_res = k_->mul(residue_vec(B), dres);
    return ResidueElem{k_->mul(num_res, k_->inv(den_res))};
}

CycNum LocalContext::pi_pow(long t) const {
    const CycNum& base = t >= 0 ? pi_ : pi_inv_;
    unsigned long n = static_cast<unsigned long>(t >= 0 ? t : -t);
    CycNum acc = field_->one();
    CycNum b = base;
    while (n > 0) {
        if (n & 1) acc = field_->mul(acc, b);
        b = field_->mul(b, b);
        n >>= 1;
    }
    return acc;
}

CycNum LocalContext::div_uniformizer(const CycNum& x, long t) const {
    if (field_->is_zero(x)) return x;
    auto v = valuation(x);
    if (v && *v < t) throw arith_error("div_uniformizer: valuation below t");
    return field_->mul(x, pi_pow(-t));
}

CycNum LocalContext::residue_section(unsigned j) const {
    // residue(zeta^c) = ybar^(beta c mod m') with beta p^s = 1 (mod m'), so
    // zeta^(p^s mod m') lifts ybar
    if (m_prime_ == 1) return field_->one();
    unsigned c = pow_u64(p_, s_) % m_prime_;
    return field_->root_of_unity(static_cast<long>((1ull * c * j) % m_));
}

}  // namespace symquot
