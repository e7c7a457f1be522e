#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace symquot {

/// A finite group backed by its full multiplication table.  Elements are
/// 0-based indices with 0 the identity; the table file format on disk is
/// 1-based.  Immutable after construction.
class Group {
  public:
    /// Build from a descriptor: cyclic:n, dihedral:n, quaternion:n,
    /// semidihedral:n, quasidihedral:n, modular:p^n, extraspecial:p:+|-,
    /// wreath:p, product:A*B, file:path.
    static std::shared_ptr<const Group> build(const std::string& spec);
    /// Build from an explicit 0-based table (validated).
    static std::shared_ptr<const Group> from_table(std::vector<std::vector<std::uint16_t>> table,
                                                   std::string name, bool full_assoc_check);

    unsigned order() const { return n_; }
    const std::string& name() const { return name_; }
    unsigned mul(unsigned a, unsigned b) const { return table_[a][b]; }
    unsigned inv(unsigned a) const { return inverse_[a]; }
    unsigned element_order(unsigned a) const { return elt_order_[a]; }
    unsigned exponent() const { return exponent_; }
    unsigned pow(unsigned a, long e) const;

    unsigned class_count() const { return static_cast<unsigned>(classes_.size()); }
    const std::vector<unsigned>& class_members(unsigned c) const { return classes_[c]; }
    unsigned class_of(unsigned x) const { return class_of_[x]; }
    unsigned class_rep(unsigned c) const { return classes_[c][0]; }
    unsigned class_size(unsigned c) const { return static_cast<unsigned>(classes_[c].size()); }
    /// class index of the inverses of class c
    unsigned inverse_class(unsigned c) const { return class_of_[inverse_[classes_[c][0]]]; }
    /// class index of rep^t
    unsigned power_class(unsigned c, long t) const { return class_of_[pow(classes_[c][0], t)]; }

    const std::vector<unsigned>& center() const { return center_; }
    bool is_abelian() const { return center_.size() == n_; }
    bool is_cyclic() const;

    /// subgroup closure of a generating set (sorted element list)
    std::vector<unsigned> closure(std::vector<unsigned> gens) const;
    /// all subgroups of order <= max_order (sorted element lists, sorted by
    /// (order, lexicographic member list)); deterministic
    std::vector<std::vector<unsigned>> subgroups_up_to(unsigned max_order) const;
    /// derived subgroup [G, G]
    std::vector<unsigned> commutator_subgroup() const;
    bool is_subgroup(const std::vector<unsigned>& elems) const;

    /// the subgroup as its own Group plus the embedding into this group
    struct Sub {
        std::shared_ptr<const Group> group;
        std::vector<unsigned> to_parent;           // sub index -> parent index
        std::vector<int> from_parent;              // parent index -> sub index or -1
    };
    Sub subgroup(const std::vector<unsigned>& elems) const;
    /// quotient by a normal subgroup: the Group plus the projection map
    struct Quot {
        std::shared_ptr<const Group> group;
        std::vector<unsigned> proj;  // parent index -> quotient index
    };
    Quot quotient(const std::vector<unsigned>& normal_subgroup) const;

    std::vector<unsigned> p_regular_classes(std::uint64_t p) const;
    bool is_p_nilpotent(std::uint64_t p) const;
    bool sylow_is_cyclic(std::uint64_t p) const;

  private:
    Group() = default;
    void finalize(bool full_assoc_check);

    unsigned n_ = 0;
    std::string name_;
    std::vector<std::vector<std::uint16_t>> table_;
    std::vector<std::uint16_t> inverse_;
    std::vector<unsigned> elt_order_;
    std::vector<std::vector<unsigned>> classes_;
    std::vector<unsigned> class_of_;
    std::vector<unsigned> center_;
    unsigned exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace symquot
