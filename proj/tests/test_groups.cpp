#include <doctest.h>

#include "symquot/group.hpp"
#include "symquot/ints.hpp"

#include <fstream>
#include <map>
#include <set>

using namespace symquot;

namespace {

std::string fixture(const char* name) { return std::string(FIXTURES_DIR) + "/" + name; }

/// Brute-force conjugacy class enumeration, independent of the Group
/// bookkeeping.
unsigned class_count_oracle(const Group& G) {
    std::set<unsigned> seen;
    unsigned classes = 0;
    for (unsigned x = 0; x < G.order(); ++x) {
        if (seen.count(x)) continue;
        ++classes;
        for (unsigned g = 0; g < G.order(); ++g) {
            seen.insert(G.mul(G.mul(g, x), G.inv(g)));
        }
    }
    return classes;
}

}  // namespace

TEST_CASE("family orders and class structure") {
    auto w3 = Group::build("wreath:3");
    CHECK(w3->order() == 81);
    CHECK(w3->class_count() == 17);
    CHECK(w3->exponent() == 9);
    CHECK(w3->center().size() == 3);

    auto c5 = Group::build("cyclic:5");
    CHECK(c5->class_count() == 5);
    for (unsigned c = 0; c < 5; ++c) CHECK(c5->class_size(c) == 1);

    auto d16 = Group::build("dihedral:16");
    CHECK(d16->order() == 16);
    CHECK(d16->class_count() == 7);
    CHECK(d16->class_count() == class_count_oracle(*d16));

    auto q16 = Group::build("quaternion:16");
    CHECK(q16->order() == 16);
    CHECK(q16->class_count() == class_count_oracle(*q16));
    // generalized quaternion of order 16 has max element order 8 < 16
    CHECK_FALSE(q16->sylow_is_cyclic(2));

    auto sd16 = Group::build("semidihedral:16");
    auto qd16 = Group::build("quasidihedral:16");
    CHECK(sd16->order() == 16);
    CHECK(qd16->order() == 16);
    // the two index-2 actions are different groups: centers differ
    CHECK(sd16->center().size() == 4);
    CHECK(qd16->center().size() == 2);

    auto m27 = Group::build("modular:27");
    CHECK(m27->order() == 27);
    CHECK(m27->exponent() == 9);

    auto es_plus = Group::build("extraspecial:3:+");
    CHECK(es_plus->order() == 27);
    CHECK(es_plus->exponent() == 3);
    CHECK(es_plus->center().size() == 3);
    auto es_minus = Group::build("extraspecial:27:-");
    CHECK(es_minus->order() == 27);
    CHECK(es_minus->exponent() == 9);
    CHECK(es_minus->center().size() == 3);
}

TEST_CASE("defining relations hold in the two-generator families") {
    // for order 2^(n+1) with cyclic part s of order 2^n and t outside:
    // dihedral / quaternion: t s t^{-1} = s^{-1}
    // semidihedral:          t s t^{-1} = s^{1+2^{n-1}}
    // quasidihedral:         t s t^{-1} = s^{-1+2^{n-1}}
    std::map<std::string, long> twist = {
        {"dihedral:16", -1}, {"quaternion:16", -1}, {"semidihedral:16", 5},
        {"quasidihedral:16", 3}, {"dihedral:32", -1}, {"quaternion:32", -1},
        {"semidihedral:32", 9}, {"quasidihedral:32", 7}};
    for (const auto& [spec, w] : twist) {
        auto G = Group::build(spec);
        unsigned m = G->order() / 2;
        unsigned s = 1;  // s^1 at index 1 in the normal-form ordering
        unsigned t = m;  // first element outside <s>
        CHECK(G->element_order(s) == m);
        unsigned lhs = G->mul(G->mul(t, s), G->inv(t));
        unsigned rhs = G->pow(s, w);
        CHECK(lhs == rhs);
    }
    // quaternion: t^2 = s^(2^(n-1))
    auto q = Group::build("quaternion:16");
    CHECK(q->mul(8, 8) == q->pow(1, 4));
}

TEST_CASE("class equation and center") {
    for (const char* spec :
         {"cyclic:12", "dihedral:16", "quaternion:32", "wreath:3", "extraspecial:3:+"}) {
        auto G = Group::build(spec);
        unsigned total = 0;
        unsigned singletons = 0;
        for (unsigned c = 0; c < G->class_count(); ++c) {
            total += G->class_size(c);
            CHECK(G->order() % G->class_size(c) == 0);
            if (G->class_size(c) == 1) ++singletons;
        }
        CHECK(total == G->order());
        CHECK(singletons == G->center().size());
        CHECK(G->class_size(0) == 1);
        CHECK(G->class_rep(0) == 0);
    }
}

TEST_CASE("file groups: S_3 and Klein four") {
    auto s3 = Group::build("file:" + fixture("s3.tbl"));
    CHECK(s3->order() == 6);
    CHECK(s3->class_count() == 3);
    CHECK_FALSE(s3->is_abelian());
    CHECK(s3->exponent() == 6);

    auto v4 = Group::build("file:" + fixture("klein4.tbl"));
    CHECK(v4->order() == 4);
    CHECK(v4->is_abelian());
    CHECK_FALSE(v4->is_cyclic());
    CHECK_FALSE(v4->sylow_is_cyclic(2));

    CHECK_THROWS(Group::build("file:/nonexistent/path.tbl"));
    CHECK_THROWS(Group::build("nonsense:3"));
    CHECK_THROWS(Group::build("dihedral:7"));
}

TEST_CASE("file group validation rejects broken tables") {
    std::string bad = fixture("bad.tbl");
    {
        std::ofstream out(bad);
        out << "3\n1 2 3\n2 3 1\n3 2 1\n";  // not associative / not a group
    }
    CHECK_THROWS(Group::build("file:" + bad));
}

TEST_CASE("p-regular classes") {
    auto w3 = Group::build("wreath:3");
    CHECK(w3->p_regular_classes(3) == std::vector<unsigned>{0});

    auto s3 = Group::build("file:" + fixture("s3.tbl"));
    auto reg3 = s3->p_regular_classes(3);
    REQUIRE(reg3.size() == 2);
    CHECK(s3->element_order(s3->class_rep(reg3[1])) == 2);  // transpositions

    auto c6 = Group::build("cyclic:6");
    auto reg2 = c6->p_regular_classes(2);
    REQUIRE(reg2.size() == 3);
    for (unsigned c : reg2) CHECK(c6->element_order(c6->class_rep(c)) % 2 == 1);
}

TEST_CASE("p-nilpotency") {
    CHECK(Group::build("cyclic:12")->is_p_nilpotent(2));
    CHECK(Group::build("cyclic:12")->is_p_nilpotent(3));
    auto s3 = Group::build("file:" + fixture("s3.tbl"));
    CHECK_FALSE(s3->is_p_nilpotent(3));  // product of two transpositions has order 3
    CHECK(s3->is_p_nilpotent(2));
    CHECK(Group::build("wreath:3")->is_p_nilpotent(3));
    CHECK(Group::build("dihedral:16")->is_p_nilpotent(2));
    // dihedral of order 12 is S_3 x C_2: normal 2-complement C_3 exists,
    // but there is no normal 3-complement
    auto d12 = Group::build("dihedral:12");
    CHECK(d12->is_p_nilpotent(2));
    CHECK_FALSE(d12->is_p_nilpotent(3));
}

TEST_CASE("sylow_is_cyclic") {
    CHECK(Group::build("cyclic:12")->sylow_is_cyclic(3));
    CHECK(Group::build("cyclic:12")->sylow_is_cyclic(2));
    CHECK_FALSE(Group::build("product:cyclic:2*cyclic:2")->sylow_is_cyclic(2));
    CHECK_FALSE(Group::build("quaternion:16")->sylow_is_cyclic(2));
    CHECK(Group::build("file:" + fixture("s3.tbl"))->sylow_is_cyclic(2));
}

TEST_CASE("subgroup machinery") {
    auto d16 = Group::build("dihedral:16");
    auto subs = d16->subgroups_up_to(16);
    // subgroup counts of the dihedral group of order 16: 1+1+7+... compare
    // against a brute-force closure double check of a few members
    for (const auto& S : subs) {
        CHECK(d16->is_subgroup(S));
        CHECK(16 % S.size() == 0);
    }
    // index-2 subgroups of D_16: the cyclic C_8 and two dihedral D_8s
    unsigned index2 = 0;
    for (const auto& S : subs) {
        if (S.size() == 8) ++index2;
    }
    CHECK(index2 == 3);

    auto sub = d16->subgroup(subs[1]);
    CHECK(sub.group->order() == subs[1].size());

    auto w3 = Group::build("wreath:3");
    auto der = w3->commutator_subgroup();
    CHECK(der.size() == 9);  // abelianization has order 9
    auto q = w3->quotient(der);
    CHECK(q.group->order() == 9);
    CHECK(q.group->is_abelian());

    auto s3 = Group::build("file:" + fixture("s3.tbl"));
    CHECK(s3->commutator_subgroup().size() == 3);
}
