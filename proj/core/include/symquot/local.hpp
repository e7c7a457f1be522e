#pragma once

#include "symquot/cyclotomic.hpp"
#include "symquot/fpoly.hpp"
#include "symquot/zmat.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace symquot {

/// An element of the residue field k = F_(p^f).
struct ResidueElem {
    FqField::Elem coords;
    bool operator==(const ResidueElem& o) const { return coords == o.coords; }
};

/// The arithmetic world: K = Q(zeta_m), the discrete valuation ring O
/// obtained by localizing Z[zeta_m] at a fixed prime P above p, its residue
/// field k, and the uniformizer pi.  Immutable after construction; the
/// internal ideal-power caches are guarded and safe to share across threads.
class LocalContext {
  public:
    /// order_hint bounds the p-part of group orders this context will see;
    /// it only sizes the internal valuation cap.
    static std::shared_ptr<const LocalContext> make(unsigned m, std::uint64_t p,
                                                    std::uint64_t order_hint = 0);

    unsigned m() const { return m_; }
    std::uint64_t p() const { return p_; }
    unsigned s() const { return s_; }
    unsigned m_prime() const { return m_prime_; }
    unsigned ramification() const { return e_; }    // e = phi(p^s)
    unsigned residue_degree() const { return f_; }  // f = ord of p mod m'
    const FpPoly& residue_factor() const { return residue_factor_; }
    const CycField& field() const { return *field_; }
    CycFieldPtr field_ptr() const { return field_; }
    const FqField& k() const { return *k_; }
    const CycNum& uniformizer() const { return pi_; }
    long valuation_cap() const { return cap_; }

    /// v_P(x) normalized so v(pi) = 1; nullopt encodes +infinity (x = 0).
    std::optional<long> valuation(const CycNum& x) const;
    bool in_O(const CycNum& x) const;
    bool val_at_least(const CycNum& x, long t) const;

    /// Reduction O -> k; rejects inputs of negative valuation.
    ResidueElem residue(const CycNum& x) const;
    ResidueElem residue_int(const Int& n) const;

    /// Exact y with y * pi^t = x; rejects when v(x) < t.
    CycNum div_uniformizer(const CycNum& x, long t) const;
    /// pi^t for t of either sign (exact).
    CycNum pi_pow(long t) const;
    /// A root-of-unity lift of ybar^j (the j-th power-basis element of k).
    CycNum residue_section(unsigned j) const;

  private:
    LocalContext() = default;

    unsigned m_ = 1;
    std::uint64_t p_ = 2;
    unsigned s_ = 0;
    unsigned m_prime_ = 1;
    unsigned e_ = 1;
    unsigned f_ = 1;
    long cap_ = 0;
    CycFieldPtr field_;
    FpPoly residue_factor_;
    std::unique_ptr<FqField> k_;
    CycNum pi_;
    CycNum pi_inv_;
    std::vector<FqField::Elem> res_zeta_;  // residue of zeta^j, j < phi(m)
    std::vector<Int> w0_;                  // v_P(w0) = e-1, v_P'(w0) >= e for P' != P
    ZMat P_hnf_;                           // the prime P as an integer lattice

    bool single_prime_ = false;  // P is the only prime of Z[zeta_m] above p

    mutable std::mutex cache_mu_;
    mutable std::map<unsigned, ZMat> p_pow_cache_;           // P^k lattices
    mutable std::map<unsigned, std::vector<Int>> b_cache_;   // denominator helpers
    mutable std::map<unsigned, CycNum> unit_cache_;          // pi^(ae)/p^a units

    FqField::Elem residue_vec(const std::vector<Int>& num) const;
    std::vector<Int> mul_intvec(const std::vector<Int>& a, const std::vector<Int>& b) const;
    const ZMat& prime_power(unsigned k) const;
    std::vector<Int> denominator_helper(unsigned a) const;
};

using LocalContextPtr = std::shared_ptr<const LocalContext>;

/// Spec entry point: the context for conductor m and prime p.
inline LocalContextPtr make_context(unsigned m, std::uint64_t p, std::uint64_t order_hint = 0) {
    return LocalContext::make(m, p, order_hint);
}

}  // namespace symquot
