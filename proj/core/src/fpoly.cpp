#include "symquot/fpoly.hpp"

#include <algorithm>
#include <sstream>

namespace symquot {

namespace fp {

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = x % p;
    }
    trim(r);
    return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = (i < a.size() ? a[i] : 0) + p - (i < b.size() ? b[i] : 0) % p;
        r[i] = x % p;
    }
    trim(r);
    return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    trim(r);
    return r;
}

FpPoly scalar_mul(const FpPoly& a, std::uint64_t c, std::uint64_t p) {
    c %= p;
    FpPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c % p;
    trim(r);
    return r;
}

FpPoly divmod(FpPoly& rem, const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (b.empty()) throw arith_error("fp::divmod: division by zero polynomial");
    rem = a;
    trim(rem);
    FpPoly q;
    std::uint64_t lead_inv = inv_mod_u64(b.back(), p);
    while (rem.size() >= b.size()) {
        size_t shift = rem.size() - b.size();
        std::uint64_t c = rem.back() * lead_inv % p;
        if (q.size() < shift + 1) q.resize(shift + 1, 0);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            std::uint64_t t = rem[shift + i] + p - b[i] * c % p;
            rem[shift + i] = t % p;
        }
        trim(rem);
    }
    trim(q);
    return q;
}

FpPoly mod(FpPoly a, const FpPoly& b, std::uint64_t p) {
    FpPoly rem;
    divmod(rem, a, b, p);
    return rem;
}

FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

FpPoly make_monic(const FpPoly& a, std::uint64_t p) {
    if (a.empty()) return a;
    return scalar_mul(a, inv_mod_u64(a.back(), p), p);
}

FpPoly pow_x_mod(const Int& e, const FpPoly& f, std::uint64_t p) {
    FpPoly base = mod(FpPoly{0, 1}, f, p);
    FpPoly acc{1};
    Int n = e;
    while (n > 0) {
        if ((n & 1) != 0) acc = mod(mul(acc, base, p), f, p);
        base = mod(mul(base, base, p), f, p);
        n >>= 1;
    }
    return acc;
}

bool is_irreducible(const FpPoly& f, std::uint64_t p) {
    int d = degree(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // x^(p^d) == x mod f, and gcd(x^(p^(d/l)) - x, f) == 1 for primes l | d.
    Int pd = boost::multiprecision::pow(Int(p), d);
    FpPoly xq = pow_x_mod(pd, f, p);
    FpPoly x{0, 1};
    if (sub(xq, mod(x, f, p), p) != FpPoly{}) return false;
    for (std::uint64_t l : prime_factors_u64(static_cast<std::uint64_t>(d))) {
        Int e = boost::multiprecision::pow(Int(p), d / static_cast<int>(l));
        FpPoly g = gcd(sub(pow_x_mod(e, f, p), mod(x, f, p), p), f, p);
        if (degree(g) != 0) return false;
    }
    return true;
}

std::string to_string(const FpPoly& a) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? " " : "") << a[i];
    os << "]";
    return os.str();
}

bool lex_less(const FpPoly& a, const FpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace fp

FqField::FqField(std::uint64_t p, FpPoly modulus) : p_(p), g_(std::move(modulus)) {
    f_ = fp::degree(g_);
    if (f_ < 1) throw arith_error("FqField: modulus must have degree >= 1");
    g_ = fp::make_monic(g_, p_);
    q_ = boost::multiprecision::pow(Int(p_), f_);
}

FqField::Elem FqField::one() const {
    Elem e(f_, 0);
    e[0] = 1 % p_;
    return e;
}

FqField::Elem FqField::from_int(std::uint64_t c) const {
    Elem e(f_, 0);
    e[0] = c % p_;
    return e;
}

FqField::Elem FqField::gen() const {
    Elem e(f_, 0);
    if (f_ == 1) {
        // y = -g[0] in the degree-one case
        e[0] = (p_ - g_[0] % p_) % p_;
    } else {
        e[1] = 1;
    }
    return e;
}

bool FqField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

FqField::Elem FqField::add(const Elem& a, const Elem& b) const {
    Elem r(f_);
    for (int i = 0; i < f_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

FqField::Elem FqField::sub(const Elem& a, const Elem& b) const {
    Elem r(f_);
    for (int i = 0; i < f_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
    return r;
}

FqField::Elem FqField::neg(const Elem& a) const {
    Elem r(f_);
    for (int i = 0; i < f_; ++i) r[i] = (p_ - a[i]) % p_;
    return r;
}

FqField::Elem FqField::mul(const Elem& a, const Elem& b) const {
    FpPoly pa(a.begin(), a.end());
    FpPoly pb(b.begin(), b.end());
    fp::trim(pa);
    fp::trim(pb);
    FpPoly pr = fp::mod(fp::mul(pa, pb, p_), g_, p_);
    Elem r(f_, 0);
    for (size_t i = 0; i < pr.size(); ++i) r[i] = pr[i];
    return r;
}

FqField::Elem FqField::inv(const Elem& a) const {
    if (is_zero(a)) throw arith_error("FqField::inv: zero");
    // extended Euclid in F_p[y]
    FpPoly r0 = g_, r1(a.begin(), a.end());
    fp::trim(r1);
    FpPoly t0{}, t1{1};
    while (!r1.empty()) {
        FpPoly rem;
        FpPoly q = fp::divmod(rem, r0, r1, p_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        FpPoly nt = fp::sub(t0, fp::mul(q, t1, p_), p_);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    // r0 = gcd, a nonzero constant
    if (fp::degree(r0) != 0) throw arith_error("FqField::inv: modulus not irreducible?");
    FpPoly res = fp::scalar_mul(t0, inv_mod_u64(r0[0], p_), p_);
    Elem out(f_, 0);
    for (size_t i = 0; i < res.size(); ++i) out[i] = res[i];
    return out;
}

FqField::Elem FqField::pow(Elem a, Int e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem acc = one();
    while (e > 0) {
        if ((e & 1) != 0) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

std::string FqField::to_string(const Elem& a) const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < f_; ++i) os << (i ? " " : "") << a[i];
    os << ")";
    return os.str();
}

FpPoly least_irreducible(std::uint64_t p, int degree) {
    if (degree == 1) return FpPoly{0, 1};  // y itself; caller rarely needs deg 1
    // enumerate monic polynomials y^d + c_{d-1} y^{d-1} + ... + c_0 in
    // lexicographic order on (c_0, ..., c_{d-1})
    std::vector<std::uint64_t> c(degree, 0);
    for (;;) {
        FpPoly f(c.begin(), c.end());
        f.push_back(1);
        if (fp::is_irreducible(f, p)) return f;
        int i = 0;
        while (i < degree && ++c[i] == p) c[i++] = 0;
        if (i == degree) throw arith_error("least_irreducible: search exhausted");
    }
}

std::vector<Int> cyclotomic_poly_z(unsigned n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division over Z.
    std::vector<Int> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<Int> phi_d = cyclotomic_poly_z(d);
        // exact polynomial division num /= phi_d (phi_d monic)
        std::vector<Int> q(num.size() - phi_d.size() + 1, 0);
        std::vector<Int> rem = num;
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            Int c = rem[i + phi_d.size() - 1];
            q[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= c * phi_d[j];
        }
        for (const Int& r : rem) {
            if (r != 0) throw arith_error("cyclotomic_poly_z: non-exact division");
        }
        num = std::move(q);
    }
    return num;
}

std::vector<FpPoly> cyclotomic_factors_mod_p(unsigned n, std::uint64_t p) {
    if (n % p == 0) throw arith_error("cyclotomic_factors_mod_p: p divides n");
    if (n == 1) return {FpPoly{p - 1, 1}};  // x - 1
    unsigned f = mult_order_u64(p % n, n);

    FpPoly q = least_irreducible(p, static_cast<int>(f));
    FqField F(p, q);

    // find an element of exact multiplicative order n
    Int cof = (F.order() - 1) / n;
    std::vector<std::uint64_t> nfac = prime_factors_u64(n);
    FqField::Elem omega;
    bool found = false;
    for (std::uint64_t trial = 1; !found; ++trial) {
        // deterministic sequence of candidates: base-p digits of trial
        FqField::Elem xi(F.degree() == 1 ? 1 : F.degree(), 0);
        xi.resize(F.degree(), 0);
        std::uint64_t t = trial;
        for (int i = 0; i < F.degree() && t; ++i, t /= p) xi[i] = t % p;
        if (F.is_zero(xi)) continue;
        FqField::Elem cand = F.pow(xi, cof);
        bool ok = !F.is_zero(F.sub(F.pow(cand, Int(n)), F.one()));
        if (ok) continue;  // order does not divide n (cannot happen), skip
        ok = true;
        for (std::uint64_t l : nfac) {
            if (F.is_zero(F.sub(F.pow(cand, Int(n / l)), F.one()))) {
                ok = false;
                break;
            }
        }
        if (ok) {
            omega = cand;
            found = true;
        }
        if (trial > (std::uint64_t)1 << 24) throw arith_error("cyclotomic_factors_mod_p: root search exhausted");
    }

    // Frobenius orbits on primitive n-th roots: {j p^i mod n}, gcd(j, n) = 1
    std::vector<bool> seen(n, false);
    std::vector<FpPoly> factors;
    for (unsigned j = 1; j < n; ++j) {
        if (seen[j] || std::gcd(j, n) != 1) continue;
        std::vector<unsigned> orbit;
        unsigned cur = j;
        do {
            seen[cur] = true;
            orbit.push_back(cur);
            cur = static_cast<unsigned>((static_cast<std::uint64_t>(cur) * p) % n);
        } while (cur != j);

        // product of (Y - omega^i) over the orbit, computed over F_q
        std::vector<FqField::Elem> poly{F.one()};
        for (unsigned i : orbit) {
            FqField::Elem root = F.pow(omega, Int(i));
            std::vector<FqField::Elem> next(poly.size() + 1, F.zero());
            for (size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] = F.add(next[k + 1], poly[k]);
                next[k] = F.sub(next[k], F.mul(root, poly[k]));
            }
            poly = std::move(next);
        }
        // coefficients must lie in the prime field
        FpPoly fac(poly.size());
        for (size_t k = 0; k < poly.size(); ++k) {
            for (int d = 1; d < F.degree(); ++d) {
                if (poly[k][d] != 0) throw arith_error("cyclotomic factor coefficient not in F_p");
            }
            fac[k] = poly[k][0];
        }
        factors.push_back(std::move(fac));
    }
    std::sort(factors.begin(), factors.end(), fp::lex_less);
    return factors;
}

}  // namespace symquot
