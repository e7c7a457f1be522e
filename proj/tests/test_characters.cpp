#include <doctest.h>

#include "symquot/character.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace symquot;

namespace {

std::string fixture(const char* name) { return std::string(FIXTURES_DIR) + "/" + name; }

std::multiset<unsigned> degree_multiset(const CharacterTable& T) {
    std::multiset<unsigned> out;
    for (const auto& chi : T.irr) out.insert(chi.degree);
    return out;
}

unsigned trivial_index(const CharacterTable& T) {
    for (unsigned i = 0; i < T.size(); ++i) {
        if (T.irr[i].degree != 1) continue;
        bool triv = true;
        for (const auto& v : T.irr[i].values) triv = triv && v == T.field->one();
        if (triv) return i;
    }
    throw std::runtime_error("no trivial character");
}

}  // namespace

TEST_CASE("cyclic:3 table is the DFT matrix") {
    auto T = character_table(Group::build("cyclic:3"));
    const CycField& F = *T.field;
    REQUIRE(T.size() == 3);
    for (const auto& chi : T.irr) CHECK(chi.degree == 1);
    // rows: (1,1,1), (1,z,z^2), (1,z^2,z) in some canonical order
    std::set<std::string> rows;
    for (const auto& chi : T.irr) {
        std::string r;
        for (const auto& v : chi.values) r += F.to_string(v) + ";";
        rows.insert(r);
    }
    auto row_of = [&](std::initializer_list<long> zs) {
        std::string r;
        for (long k : zs) r += F.to_string(F.root_of_unity(k)) + ";";
        return r;
    };
    CHECK(rows.count(row_of({0, 0, 0})));
    CHECK(rows.count(row_of({0, 1, 2})));
    CHECK(rows.count(row_of({0, 2, 1})));
}

TEST_CASE("degree multisets of small groups") {
    CHECK(degree_multiset(character_table(Group::build("dihedral:8"))) ==
          std::multiset<unsigned>{1, 1, 1, 1, 2});
    CHECK(degree_multiset(character_table(Group::build("quaternion:8"))) ==
          std::multiset<unsigned>{1, 1, 1, 1, 2});
    CHECK(degree_multiset(character_table(Group::build("file:" + fixture("s3.tbl")))) ==
          std::multiset<unsigned>{1, 1, 2});
    CHECK(degree_multiset(character_table(Group::build("dihedral:16"))) ==
          std::multiset<unsigned>{1, 1, 1, 1, 2, 2, 2});
    CHECK(degree_multiset(character_table(Group::build("extraspecial:3:+"))) ==
          std::multiset<unsigned>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
}

TEST_CASE("wreath:3 table shape") {
    auto T = character_table(Group::build("wreath:3"));
    REQUIRE(T.size() == 17);
    unsigned lin = 0, deg3 = 0;
    for (const auto& chi : T.irr) {
        if (chi.degree == 1) ++lin;
        if (chi.degree == 3) ++deg3;
    }
    CHECK(lin == 9);
    CHECK(deg3 == 8);
}

TEST_CASE("tables are deterministic across rebuilds") {
    auto T1 = character_table(Group::build("dihedral:16"));
    auto T2 = character_table(Group::build("dihedral:16"));
    REQUIRE(T1.size() == T2.size());
    for (unsigned i = 0; i < T1.size(); ++i) {
        CHECK(T1.irr[i].values == T2.irr[i].values);
    }
}

TEST_CASE("induction from subgroups") {
    auto T = character_table(Group::build("dihedral:16"));
    const CycField& F = *T.field;
    const Group& G = *T.group;

    // H = G with a linear character gives the character back, irreducible
    unsigned t0 = trivial_index(T);
    std::vector<unsigned> whole(G.order());
    std::iota(whole.begin(), whole.end(), 0u);
    std::vector<CycNum> triv(G.order(), F.one());
    auto ind = induce_linear(T, whole, triv);
    CHECK(ind.irreducible);
    CHECK(ind.character.values == T.irr[t0].values);

    // faithful linear character of C_8 induces an irreducible of degree 2
    std::vector<unsigned> H;
    for (unsigned a = 0; a < 8; ++a) H.push_back(a);  // <s> in normal form order
    std::vector<CycNum> eta(8, F.zero());
    for (unsigned a = 0; a < 8; ++a) eta[a] = F.root_of_unity(2 * a);  // zeta_16^2 = zeta_8
    auto ind2 = induce_linear(T, H, eta);
    CHECK(ind2.character.degree == 2);
    CHECK(ind2.irreducible);
    // the induced character vanishes outside H and restricts to eta + eta bar
    for (unsigned c = 0; c < G.class_count(); ++c) {
        unsigned rep = G.class_rep(c);
        if (std::find(H.begin(), H.end(), rep) == H.end()) {
            CHECK(F.is_zero(ind2.character.values[c]));
        }
    }

    // rejections
    CHECK_THROWS(induce_linear(T, std::vector<unsigned>{0, 1, 2}, triv));  // not a subgroup
    std::vector<CycNum> bad(8, F.one());
    bad[1] = F.from_int(2);
    CHECK_THROWS(induce_linear(T, H, bad));  // not a homomorphism
}

TEST_CASE("wreath base character induces irreducibly") {
    auto G = Group::build("wreath:3");
    auto T = character_table(G);
    const CycField& F = *T.field;
    // base subgroup H = C_3^3 = elements with r = 0, indices 0..26
    std::vector<unsigned> H;
    for (unsigned i = 0; i < 27; ++i) H.push_back(i);
    REQUIRE(G->is_subgroup(H));
    // psi_1: (a_1, a_2, a_3) -> zeta_3^(a_1); encoding is base-3 digits,
    // exponent field zeta_9 so zeta_3 = zeta_9^3
    std::vector<CycNum> eta(27, F.zero());
    for (unsigned v = 0; v < 27; ++v) eta[v] = F.root_of_unity(3L * (v % 3));
    auto ind = induce_linear(T, H, eta);
    CHECK(ind.character.degree == 3);
    CHECK(ind.irreducible);
}

TEST_CASE("monomial realizations") {
    // linear characters: 1x1, H = G
    auto Tc = character_table(Group::build("cyclic:5"));
    for (unsigned i = 0; i < Tc.size(); ++i) {
        auto R = monomial_realization(Tc, i);
        REQUIRE(R.has_value());
        CHECK(R->matrices[1].size() == 1);
        CHECK(R->subgroup.size() == 5);
    }

    // quaternion:16 faithful degree-2: induced from the cyclic C_8
    auto Tq = character_table(Group::build("quaternion:16"));
    bool found_deg2 = false;
    for (unsigned i = 0; i < Tq.size(); ++i) {
        if (Tq.irr[i].degree != 2) continue;
        found_deg2 = true;
        auto R = monomial_realization(Tq, i);
        REQUIRE(R.has_value());
        CHECK(R->subgroup.size() == 8);
    }
    CHECK(found_deg2);

    // wreath:3 degree-3: induced from the base subgroup (order 27)
    auto Tw = character_table(Group::build("wreath:3"));
    for (unsigned i = 0; i < Tw.size(); ++i) {
        if (Tw.irr[i].degree != 3) continue;
        auto R = monomial_realization(Tw, i);
        REQUIRE(R.has_value());
        CHECK(R->subgroup.size() == 27);
        break;
    }
}

TEST_CASE("decomposition divisibility") {
    // nonlinear character of a p-group: restriction is chi(1) * (trivial)
    auto Tw = character_table(Group::build("wreath:3"));
    for (unsigned i = 0; i < Tw.size(); ++i) {
        bool expect = Tw.irr[i].degree == 3;  // 3 | chi(1)
        CHECK(decomposition_divisible_by_p(Tw, 3, i) == expect);
    }

    // linear characters are never divisible
    auto Tc = character_table(Group::build("cyclic:6"));
    for (unsigned i = 0; i < Tc.size(); ++i) {
        CHECK_FALSE(decomposition_divisible_by_p(Tc, 2, i));
        CHECK_FALSE(decomposition_divisible_by_p(Tc, 3, i));
    }

    // S_3 at p = 3: the degree-2 row restricts to d(1) + d(sgn)
    auto Ts = character_table(Group::build("file:" + fixture("s3.tbl")));
    for (unsigned i = 0; i < Ts.size(); ++i) {
        CHECK_FALSE(decomposition_divisible_by_p(Ts, 3, i));
        CHECK_FALSE(decomposition_divisible_by_p(Ts, 2, i));
    }
}

TEST_CASE("blocks and heights") {
    // p-groups form one block; heights are the degree valuations
    auto Tw = character_table(Group::build("wreath:3"));
    auto ctx = context_for(Tw, 3);
    auto B = block_partition(Tw, ctx);
    CHECK(B.blocks.size() == 1);
    for (unsigned i = 0; i < Tw.size(); ++i) {
        CHECK(B.heights[i] == (Tw.irr[i].degree == 3 ? 1 : 0));
    }

    // cyclic:6 at p = 3: two blocks of three linear characters
    auto Tc = character_table(Group::build("cyclic:6"));
    auto ctx3 = context_for(Tc, 3);
    auto B3 = block_partition(Tc, ctx3);
    REQUIRE(B3.blocks.size() == 2);
    CHECK(B3.blocks[0].size() == 3);
    CHECK(B3.blocks[1].size() == 3);

    // S_3 at p = 3: one block of everything (defect 1), heights zero
    auto Ts = character_table(Group::build("file:" + fixture("s3.tbl")));
    auto ctxs = context_for(Ts, 3);
    auto Bs = block_partition(Ts, ctxs);
    CHECK(Bs.blocks.size() == 1);
    for (unsigned i = 0; i < Ts.size(); ++i) CHECK(Bs.heights[i] == 0);

    // S_3 at p = 2: the degree-2 character has defect zero, alone in its block
    auto ctx2 = context_for(Ts, 2);
    auto Bs2 = block_partition(Ts, ctx2);
    CHECK(Bs2.blocks.size() == 2);
    for (unsigned i = 0; i < Ts.size(); ++i) {
        if (Ts.irr[i].degree == 2) {
            CHECK(Bs2.blocks[Bs2.block_of[i]].size() == 1);
            CHECK(Bs2.heights[i] == 0);
        }
    }
}

TEST_CASE("central type") {
    auto Te = character_table(Group::build("extraspecial:3:+"));
    for (unsigned i = 0; i < Te.size(); ++i) {
        if (Te.irr[i].degree == 3) CHECK(is_central_type(Te, i));
    }
    // linear character of an abelian group
    auto Tc = character_table(Group::build("cyclic:4"));
    for (unsigned i = 0; i < Tc.size(); ++i) CHECK(is_central_type(Tc, i));
    // wreath:3 degree-3: 9 != 81/3
    auto Tw = character_table(Group::build("wreath:3"));
    for (unsigned i = 0; i < Tw.size(); ++i) {
        if (Tw.irr[i].degree == 3) CHECK_FALSE(is_central_type(Tw, i));
        if (Tw.irr[i].degree == 1) CHECK_FALSE(is_central_type(Tw, i));
    }
}

TEST_CASE("brauer restriction is additive and the trivial one never vanishes") {
    auto T = character_table(Group::build("dihedral:12"));
    unsigned t0 = trivial_index(T);
    auto reg = T.group->p_regular_classes(2);
    for (unsigned c : reg) {
        CHECK_FALSE(T.field->is_zero(T.irr[t0].values[c]));
    }
    // additivity is linear algebra on coordinates
    auto a = brauer_restriction_coords(T, 2, 0);
    auto b = brauer_restriction_coords(T, 2, 1);
    CHECK(a.size() == b.size());
}
