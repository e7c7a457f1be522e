#pragma once

#include "symquot/ints.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symquot {

/// Polynomials over F_p, coefficient vectors with c[i] the coefficient of x^i,
/// always trimmed (no trailing zeros).  p is passed explicitly.
using FpPoly = std::vector<std::uint64_t>;

namespace fp {

void trim(FpPoly& a);
int degree(const FpPoly& a);  // -1 for the zero polynomial
FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly scalar_mul(const FpPoly& a, std::uint64_t c, std::uint64_t p);
/// Remainder of a modulo monic-izable b.
FpPoly mod(FpPoly a, const FpPoly& b, std::uint64_t p);
FpPoly divmod(FpPoly& rem, const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p);
FpPoly make_monic(const FpPoly& a, std::uint64_t p);
/// x^e mod f, e given as a big integer.
FpPoly pow_x_mod(const Int& e, const FpPoly& f, std::uint64_t p);
bool is_irreducible(const FpPoly& f, std::uint64_t p);
std::string to_string(const FpPoly& a);

/// Lexicographically-least comparison used for the canonical residue factor:
/// degree first, then coefficient tuples from the constant term upward.
bool lex_less(const FpPoly& a, const FpPoly& b);

}  // namespace fp

/// The finite field F_{p^f} presented as F_p[y]/(g) for a monic irreducible g.
/// Elements are coefficient vectors of length f (fixed size, not trimmed).
class FqField {
  public:
    FqField(std::uint64_t p, FpPoly modulus);

    std::uint64_t p() const { return p_; }
    int degree() const { return f_; }
    const FpPoly& modulus() const { return g_; }
    /// q = p^f as a big integer.
    const Int& order() const { return q_; }

    using Elem = std::vector<std::uint64_t>;

    Elem zero() const { return Elem(f_, 0); }
    Elem one() const;
    Elem from_int(std::uint64_t c) const;
    /// The class of y, a root of the modulus.
    Elem gen() const;
    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(Elem a, Int e) const;
    std::string to_string(const Elem& a) const;

  private:
    std::uint64_t p_;
    int f_;
    FpPoly g_;
    Int q_;
};

/// Least monic irreducible polynomial of the given degree over F_p, in the
/// degree-then-coefficient order.  Deterministic.
FpPoly least_irreducible(std::uint64_t p, int degree);

/// Cyclotomic polynomial Phi_n over Z.
std::vector<Int> cyclotomic_poly_z(unsigned n);

/// All monic irreducible factors of Phi_n mod p for p coprime to n, each of
/// degree ord_n(p), computed from Frobenius orbits of a primitive n-th root
/// of unity.  Sorted lex-least first.
std::vector<FpPoly> cyclotomic_factors_mod_p(unsigned n, std::uint64_t p);

}  // namespace symquot
