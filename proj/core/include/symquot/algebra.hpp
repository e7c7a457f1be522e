#pragma once

#include "symquot/character.hpp"
#include "symquot/olattice.hpp"

#include <functional>
#include <optional>
#include <string>

namespace symquot {

/// Coefficient vector over K indexed by group elements.
using AlgebraElement = std::vector<CycNum>;

/// OG for a fixed group and local context; products use the multiplication
/// table, translations are coordinate permutations.
class GroupAlgebra {
  public:
    GroupAlgebra(GroupPtr G, LocalContextPtr ctx);

    const Group& group() const { return *G_; }
    const LocalContext& ctx() const { return *ctx_; }
    LocalContextPtr ctx_ptr() const { return ctx_; }
    const CycField& field() const { return ctx_->field(); }
    unsigned dim() const { return G_->order(); }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement basis_elem(unsigned g) const;
    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement scalar_mul(const CycNum& c, const AlgebraElement& a) const;
    /// g * a and a * g as coordinate permutations.
    AlgebraElement left_translate(unsigned g, const AlgebraElement& a) const;
    AlgebraElement right_translate(const AlgebraElement& a, unsigned g) const;
    bool is_zero(const AlgebraElement& a) const;
    bool in_O(const AlgebraElement& a) const;
    bool is_central(const AlgebraElement& a) const;

    dvr::BasedAlgebra based() const;
    OLattice standard() const;
    /// O-span of the class sums = Z(OG).
    OLattice center_lattice() const;
    /// O-span of {x - 1 : x != 1}.
    OLattice augmentation_ideal() const;

    /// residues of the coefficients, as a vector over k.
    std::vector<FqField::Elem> residue_vector(const AlgebraElement& a) const;

  private:
    GroupPtr G_;
    LocalContextPtr ctx_;
};

/// Row space over the residue field, kept in reduced echelon form.
class FqSpace {
  public:
    explicit FqSpace(const FqField& k, unsigned width) : k_(&k), width_(width) {}
    /// returns true if the vector enlarged the space
    bool add(std::vector<FqField::Elem> v);
    bool member(std::vector<FqField::Elem> v) const;
    unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
    unsigned width() const { return width_; }
    const std::vector<std::vector<FqField::Elem>>& rows() const { return rows_; }

  private:
    const FqField* k_;
    unsigned width_;
    std::vector<std::vector<FqField::Elem>> rows_;
    std::vector<unsigned> pivots_;
};

/// e(chi) = (chi(1)/|G|) sum_x chi(x^{-1}) x, in the algebra's context field.
AlgebraElement idempotent(const CharacterTable& T, const GroupAlgebra& A, unsigned chi);
AlgebraElement block_idempotent(const CharacterTable& T, const GroupAlgebra& A,
                                const std::vector<unsigned>& chis);

/// Least t >= 0 with pi^t e(chi) in OG.
long min_lambda_exponent(const CharacterTable& T, const GroupAlgebra& A, unsigned chi);

/// The lattice span{g pi^t e(chi) : g in G} inside OG.
OLattice idempotent_lattice(const CharacterTable& T, const GroupAlgebra& A, unsigned chi);

struct SymmetricQuotientResult {
    bool symmetric = false;
    long lambda_exponent = 0;
    dvr::PurityCertificate certificate;
    /// pivot columns and valuations of the tested lattice (witness data)
    std::vector<std::pair<unsigned, long>> lattice_pivots;
};
/// Purity of the scaled-idempotent lattice in OG.
SymmetricQuotientResult is_symmetric_quotient(const CharacterTable& T, const GroupAlgebra& A,
                                              unsigned chi);

/// {a in OG : a e(chi) = 0}, the kernel of OG -> OG e(chi).
OLattice kernel_ideal(const CharacterTable& T, const GroupAlgebra& A, unsigned chi);
/// OG cap KG e(chi), as the pure closure of the scaled-idempotent lattice.
OLattice idempotent_annihilator(const CharacterTable& T, const GroupAlgebra& A, unsigned chi);

/// dim over k of the span of the reduced monomial matrices equals chi(1)^2?
bool is_matrix_algebra(const CharacterTable& T, const GroupAlgebra& A, unsigned chi,
                       const MonomialRealization& R);

struct TraceFormResult {
    long exponent = 0;  // r
    std::vector<long> divisors;
    bool gram_checked = false;
    bool gram_unimodular = false;
    /// when probing all exponents 0..r (non-symmetric diagnostics): does any
    /// exponent give a symmetrising Gram matrix?
    std::optional<bool> gram_any_exponent;
};
/// r = max elementary divisor of span{M(g)} in the full matrix lattice; when
/// requested, verifies that pi^(-r) tr is a symmetrising form by Gram
/// unimodularity (or probes all exponents).
TraceFormResult trace_form_exponent(const CharacterTable& T, const GroupAlgebra& A, unsigned chi,
                                    const MonomialRealization& R, bool check_gram,
                                    bool probe_all_exponents = false);

struct NakayamaResult {
    bool principal_central = false;
    bool double_membership_verified = false;
    unsigned candidate_rank = 0;   // rank of Z(OG) cap ann(I)
    std::string method;            // basis-candidate | exhaustive | submodule-certificate
    AlgebraElement generator;      // valid when principal_central
};
/// Is ann(I) = OG z for central z?  The annihilator may be supplied to avoid
/// recomputation; otherwise the generic module_annihilator runs.
NakayamaResult nakayama_check(const GroupAlgebra& A, const OLattice& I,
                              const OLattice* precomputed_ann = nullptr);
/// The decision core: is N = OG z for central z, N a pure ideal?
NakayamaResult nakayama_decide(const GroupAlgebra& A, const OLattice& N);

struct AugmentationResult {
    bool symmetric = false;        // the group criterion
    bool group_criterion = false;
    bool witness_verified = false;
    std::string method;
    AlgebraElement z;              // positive witness
    std::optional<unsigned> top_dimension;  // dim_k of Ibar/JbarIbar when computed
};
/// OG / O(sum_x x) symmetric?  Positive direction constructs and verifies the
/// central generator of the augmentation ideal; negative direction certifies
/// non-principality at the k-level.
AugmentationResult augmentation_quotient_symmetric(const CharacterTable& T,
                                                   const GroupAlgebra& A);

/// A finite-dimensional algebra over the residue field by sparse structure
/// constants.
struct KBasedAlgebra {
    const FqField* field = nullptr;
    unsigned dim = 0;
    std::function<std::vector<std::pair<unsigned, FqField::Elem>>(unsigned, unsigned)>
        basis_product;
};
KBasedAlgebra group_k_algebra(GroupPtr G, const FqField& k);

/// Jacobson radical in characteristic p by the characteristic-polynomial
/// coefficient chain; postconditions (nilpotency, semisimple quotient) are
/// verified.  Desk scale.
std::vector<std::vector<FqField::Elem>> radical_of_reduction(const KBasedAlgebra& alg);

struct Section3Report {
    unsigned n = 0;
    std::string kind;
    long lambda_exponent = 0;
    bool basis_confirmed = false;
    bool pure = false;
    bool ok() const { return basis_confirmed && pure; }
};
/// The cyclic-subgroup computation: z = pi^t e(chi) in OH for H cyclic of
/// order 2^n, with the action of the named family; checks the two-element
/// O-basis {z, 2^n e(eta)} of OH z and the purity of OH z in OH.
Section3Report verify_section3_basis(unsigned n, const std::string& kind);

struct Example61Report {
    unsigned p = 0;
    long lambda_exponent = 0;      // in the conductor-p context
    bool basis_confirmed = false;  // {z, |H| e(psi_i), 2 <= i <= p} spans OH z
    bool witness_in_lattice = false;
    bool witness_coeffs_divisible = false;
    bool witness_quotient_outside = false;
    bool oh_lattice_pure = true;   // expected false
    std::optional<bool> full_group_symmetric;  // classifier verdict at p = 3
    bool linear_symmetric = false;             // sanity companion
    bool ok() const {
        return basis_confirmed && witness_in_lattice && witness_coeffs_divisible &&
               witness_quotient_outside && !oh_lattice_pure &&
               (!full_group_symmetric.has_value() || !*full_group_symmetric) &&
               linear_symmetric;
    }
};
/// The wreath-product counterexample at an odd prime: the stated O-basis of
/// OH z, an explicit non-purity witness, and the non-symmetric verdict.
Example61Report verify_example61(unsigned p);

}  // namespace symquot
