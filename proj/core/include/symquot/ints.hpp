#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace symquot {

using Int = boost::multiprecision::cpp_int;

struct arith_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

/// Exact quotient a/b; throws if b does not divide a.
inline Int div_exact(const Int& a, const Int& b) {
    if (b == 0) throw arith_error("div_exact: division by zero");
    Int q = a / b;
    if (q * b != a) throw arith_error("div_exact: not divisible");
    return q;
}

inline long to_long(const Int& a) { return a.convert_to<long>(); }

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n % d == 0) return n == d;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Distinct prime factors of n (trial division; desk-scale inputs).
inline std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// v_p(n) for n != 0.
inline int padic_val_u64(std::uint64_t n, std::uint64_t p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline int padic_val_int(Int n, const Int& p) {
    if (n == 0) throw arith_error("padic_val_int: zero");
    n = int_abs(n);
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline std::uint64_t euler_phi_u64(std::uint64_t n) {
    std::uint64_t r = n;
    for (std::uint64_t q : prime_factors_u64(n)) r = r / q * (q - 1);
    return n == 0 ? 0 : r;
}

/// Multiplicative order of a modulo n, gcd(a, n) = 1. ord(anything mod 1) = 1.
inline unsigned mult_order_u64(std::uint64_t a, std::uint64_t n) {
    if (n == 1) return 1;
    a %= n;
    if (std::gcd(a, n) != 1) throw arith_error("mult_order: not a unit");
    std::uint64_t x = a % n;
    unsigned k = 1;
    while (x != 1) {
        x = (x * a) % n;
        ++k;
    }
    return k;
}

inline std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t n) {
    if (n == 1) return 0;
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(n), nr = static_cast<long long>(a % n);
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw arith_error("inv_mod: not invertible");
    if (t < 0) t += static_cast<long long>(n);
    return static_cast<std::uint64_t>(t);
}

}  // namespace symquot
