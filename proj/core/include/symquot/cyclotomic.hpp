#pragma once

#include "symquot/ints.hpp"

#include <memory>
#include <string>
#include <vector>

namespace symquot {

/// An element of K = Q(zeta_m): integer coefficients in the power basis
/// 1, zeta, ..., zeta^(phi(m)-1) of Z[zeta_m] over a positive integer
/// denominator.  Always kept gcd-reduced with den > 0.  All arithmetic is
/// exact and dispatched through the owning CycField.
struct CycNum {
    std::vector<Int> num;
    Int den{1};

    bool operator==(const CycNum& o) const { return num == o.num && den == o.den; }
};

/// Arithmetic context for Q(zeta_m): the cyclotomic polynomial and the
/// reduction table for the power basis.  Immutable after construction.
class CycField {
  public:
    explicit CycField(unsigned m);

    unsigned conductor() const { return m_; }
    unsigned degree() const { return phi_; }
    const std::vector<Int>& minimal_poly() const { return phi_poly_; }

    CycNum zero() const;
    CycNum one() const;
    CycNum from_int(const Int& n) const;
    CycNum from_rational(const Int& n, const Int& d) const;
    /// zeta_m^k for any integer k (reduced mod m).
    CycNum root_of_unity(long k) const;

    bool is_zero(const CycNum& a) const;
    bool is_rational(const CycNum& a) const;

    CycNum add(const CycNum& a, const CycNum& b) const;
    CycNum sub(const CycNum& a, const CycNum& b) const;
    CycNum neg(const CycNum& a) const;
    CycNum mul(const CycNum& a, const CycNum& b) const;
    CycNum mul_int(const CycNum& a, const Int& c) const;
    CycNum div_int(const CycNum& a, const Int& c) const;
    /// Exact multiplicative inverse in K; throws on zero.
    CycNum inv(const CycNum& a) const;
    CycNum div(const CycNum& a, const CycNum& b) const;
    CycNum pow(const CycNum& a, long e) const;

    /// Complex conjugate zeta -> zeta^(-1).
    CycNum conj(const CycNum& a) const;

    std::string to_string(const CycNum& a) const;

    void normalize(CycNum& a) const;

  private:
    unsigned m_;
    unsigned phi_;
    std::vector<Int> phi_poly_;                 // monic, degree phi_
    std::vector<std::vector<Int>> highpow_;     // x^(phi_+k) mod Phi_m, k = 0..phi_-2
    std::vector<std::vector<Int>> zeta_pow_;    // zeta^j in the power basis, j = 0..m-1

    std::vector<Int> reduce_raw(std::vector<Int> coeffs) const;
    friend class CycFieldTester;
};

using CycFieldPtr = std::shared_ptr<const CycField>;

/// Re-express x (an element of Q(zeta_(from.m))) in Q(zeta_(to.m)).
/// Supported when one conductor divides the other; contraction throws if the
/// element does not lie in the smaller field.
CycNum convert_field(const CycField& from, const CycField& to, const CycNum& x);

}  // namespace symquot
