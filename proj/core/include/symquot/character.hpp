#pragma once

#include "symquot/group.hpp"
#include "symquot/local.hpp"

#include <optional>
#include <vector>

namespace symquot {

/// An ordinary character: one exact value per conjugacy class, in the power
/// basis of Q(zeta_exp(G)).
struct Character {
    std::vector<CycNum> values;
    unsigned degree = 0;
};

struct CharacterTable {
    GroupPtr group;
    CycFieldPtr field;  // conductor exp(G)
    std::vector<Character> irr;

    unsigned size() const { return static_cast<unsigned>(irr.size()); }
};

/// Full irreducible table by the class-sum eigenvector method, exact lifting
/// of the mod-l data to cyclotomic integers, both orthogonality relations
/// verified exactly.  Deterministic row order: degree, then value tuples.
CharacterTable character_table(const GroupPtr& G);

/// <a, b> = (1/|G|) sum_g a(g) b(g^{-1}), exact.
CycNum character_inner(const CharacterTable& T, const Character& a, const Character& b);

/// All linear characters of the subgroup (through its abelianization),
/// canonically ordered; values are indexed by subgroup element index.
std::vector<std::vector<CycNum>> linear_characters(const CharacterTable& T,
                                                   const Group::Sub& H);

struct InducedCharacter {
    Character character;
    bool irreducible = false;
};

/// Induction of a linear character of the subgroup with element list
/// H_elems; eta is indexed like H_elems.  Validates that H is a subgroup and
/// eta a homomorphism.
InducedCharacter induce_linear(const CharacterTable& T, const std::vector<unsigned>& H_elems,
                               const std::vector<CycNum>& eta);

/// A monomial O-realization: chi = Ind_H^G(eta) with monomial matrices over
/// Z[zeta] of size chi(1).
struct MonomialRealization {
    std::vector<unsigned> subgroup;                         // element list of H
    std::vector<CycNum> eta;                                // linear character on H
    std::vector<std::vector<std::vector<CycNum>>> matrices; // one d x d matrix per g
};

/// Bounded deterministic search over subgroups of index chi(1) and their
/// linear characters; nullopt when no realization exists.  A precomputed
/// subgroup pool (sorted as Group::subgroups_up_to returns) avoids repeated
/// enumeration.
std::optional<MonomialRealization> monomial_realization(
    const CharacterTable& T, unsigned chi_index,
    const std::vector<std::vector<unsigned>>* subgroup_pool = nullptr);

/// Restriction of chi to the p-regular classes as integer coordinates
/// (concatenated power-basis vectors), the coordinates used by the
/// divisibility lattice test.
std::vector<Int> brauer_restriction_coords(const CharacterTable& T, std::uint64_t p,
                                           unsigned chi_index);

/// The Z-span of all restrictions d_G(psi) in p-regular coordinates.
struct DecompositionLattice {
    ZMat hnf;
};
DecompositionLattice decomposition_lattice(const CharacterTable& T, std::uint64_t p);
bool decomposition_divisible(const DecompositionLattice& L, const CharacterTable& T,
                             std::uint64_t p, unsigned chi_index);

/// Is d_G(chi) divisible by p inside the Z-span of all d_G(psi)?
bool decomposition_divisible_by_p(const CharacterTable& T, std::uint64_t p, unsigned chi_index);

struct BlockPartition {
    std::vector<std::vector<unsigned>> blocks;  // chi indices per block
    std::vector<unsigned> block_of;             // chi index -> block id
    std::vector<unsigned> heights;              // per chi
    unsigned principal_block = 0;               // block of the trivial character
};

/// Blocks by central-character congruence mod P, heights from degree
/// valuations within each block.
BlockPartition block_partition(const CharacterTable& T, const LocalContextPtr& ctx);

bool is_central_type(const CharacterTable& T, unsigned chi_index);

/// The canonical local context for classification: conductor exp(G) (or an
/// override), cap hint |G|.
LocalContextPtr context_for(const CharacterTable& T, std::uint64_t p, unsigned conductor = 0);

}  // namespace symquot
