#include <doctest.h>

#include "symquot/olattice.hpp"

#include <random>

using namespace symquot;

namespace {

std::vector<CycNum> vec(const CycField& F, std::initializer_list<int> ints) {
    std::vector<CycNum> v;
    for (int c : ints) v.push_back(F.from_int(c));
    return v;
}

/// Direct Lemma-style purity oracle: J(O)L = J(O)M cap L, decided purely by
/// membership arithmetic.
bool purity_oracle(const LocalContext& ctx, const OLattice& L, const OLattice& M) {
    OLattice piL = dvr::scale(ctx, L, ctx.uniformizer());
    OLattice piM = dvr::scale(ctx, M, ctx.uniformizer());
    OLattice rhs = dvr::intersect(ctx, piM, L);
    return dvr::equal(ctx, piL, rhs);
}

OLattice random_sublattice(const LocalContext& ctx, const OLattice& M, std::mt19937& rng,
                           int nvec) {
    const CycField& F = ctx.field();
    std::uniform_int_distribution<int> dc(-3, 3);
    std::uniform_int_distribution<int> dv(0, 3);
    std::vector<std::vector<CycNum>> gens;
    for (int v = 0; v < nvec; ++v) {
        std::vector<CycNum> x(M.ambient, F.zero());
        for (const auto& row : M.basis) {
            CycNum c = F.mul(F.from_int(dc(rng)), ctx.pi_pow(dv(rng)));
            for (unsigned j = 0; j < M.ambient; ++j) {
                if (!F.is_zero(row[j])) x[j] = F.add(x[j], F.mul(c, row[j]));
            }
        }
        gens.push_back(std::move(x));
    }
    return dvr::echelonize(ctx, gens, M.ambient);
}

}  // namespace

TEST_CASE("echelonize worked examples over Z_(2)") {
    auto ctx = make_context(1, 2);
    const CycField& F = ctx->field();

    // span{(2,0),(1,1)} -> basis {(1,1),(0,2)}
    OLattice L = dvr::echelonize(*ctx, {vec(F, {2, 0}), vec(F, {1, 1})}, 2);
    REQUIRE(L.rank() == 2);
    CHECK(L.basis[0] == vec(F, {1, 1}));
    CHECK(L.basis[1] == vec(F, {0, 2}));
    CHECK(L.pivot_val == std::vector<long>{0, 1});

    // identity is fixed
    OLattice id = dvr::echelonize(*ctx, {vec(F, {1, 0}), vec(F, {0, 1})}, 2);
    CHECK(id.basis[0] == vec(F, {1, 0}));
    CHECK(id.basis[1] == vec(F, {0, 1}));

    // empty span
    OLattice Z = dvr::echelonize(*ctx, {}, 3);
    CHECK(Z.rank() == 0);
    CHECK(Z.ambient == 3);

    // re-echelonizing is idempotent
    OLattice L2 = dvr::echelonize(*ctx, L.basis, 2);
    CHECK(L2.basis == L.basis);

    // negative valuation rejected
    CHECK_THROWS_AS(dvr::echelonize(*ctx, {{F.from_rational(1, 2), F.one()}}, 2), arith_error);
}

TEST_CASE("membership and span preservation") {
    auto ctx = make_context(8, 2);
    const CycField& F = ctx->field();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dc(-4, 4);
    for (int it = 0; it < 20; ++it) {
        std::vector<std::vector<CycNum>> gens;
        for (int g = 0; g < 4; ++g) {
            std::vector<CycNum> v;
            for (int j = 0; j < 3; ++j) {
                CycNum c = F.zero();
                for (unsigned d = 0; d < F.degree(); ++d) c.num[d] = dc(rng);
                F.normalize(c);
                v.push_back(c);
            }
            gens.push_back(std::move(v));
        }
        OLattice L = dvr::echelonize(*ctx, gens, 3);
        for (const auto& g : gens) CHECK(dvr::member(*ctx, L, g));
        OLattice L2 = dvr::echelonize(*ctx, L.basis, 3);
        CHECK(dvr::equal(*ctx, L, L2));
    }
}

TEST_CASE("is_pure worked examples") {
    auto ctx = make_context(1, 2);
    const CycField& F = ctx->field();
    OLattice O2 = dvr::standard_lattice(*ctx, 2);

    OLattice tors = dvr::echelonize(*ctx, {vec(F, {2, 0})}, 2);
    CHECK_FALSE(dvr::is_pure(*ctx, tors, O2));

    OLattice ax = dvr::echelonize(*ctx, {vec(F, {1, 0})}, 2);
    CHECK(dvr::is_pure(*ctx, ax, O2));

    auto cert = dvr::purity_certificate(*ctx, tors, O2);
    CHECK(cert.rank_K == 1);
    CHECK(cert.rank_k == 0);

    OLattice bad = dvr::echelonize(*ctx, {vec(F, {1, 0})}, 2);
    OLattice small = dvr::echelonize(*ctx, {vec(F, {0, 3})}, 2);
    CHECK_THROWS_AS(dvr::is_pure(*ctx, bad, small), arith_error);  // containment violated
}

TEST_CASE("pure_closure worked examples") {
    auto ctx = make_context(1, 2);
    const CycField& F = ctx->field();
    OLattice O2 = dvr::standard_lattice(*ctx, 2);

    OLattice L = dvr::echelonize(*ctx, {vec(F, {2, 0})}, 2);
    OLattice C = dvr::pure_closure(*ctx, L, O2);
    CHECK(dvr::equal(*ctx, C, dvr::echelonize(*ctx, {vec(F, {1, 0})}, 2)));

    OLattice D = dvr::echelonize(*ctx, {vec(F, {2, 2})}, 2);
    OLattice CD = dvr::pure_closure(*ctx, D, O2);
    CHECK(dvr::equal(*ctx, CD, dvr::echelonize(*ctx, {vec(F, {1, 1})}, 2)));

    // closure of a pure lattice is itself, and closure is idempotent
    OLattice P = dvr::echelonize(*ctx, {vec(F, {1, 2})}, 2);
    CHECK(dvr::equal(*ctx, dvr::pure_closure(*ctx, P, O2), P));
    CHECK(dvr::equal(*ctx, dvr::pure_closure(*ctx, CD, O2), CD));
}

TEST_CASE("pure_closure needs combinations, not just pivot division") {
    // span{(p,1)} is already pure although its pivot has positive valuation.
    auto ctx = make_context(1, 3);
    const CycField& F = ctx->field();
    OLattice O2 = dvr::standard_lattice(*ctx, 2);
    OLattice L = dvr::echelonize(*ctx, {vec(F, {3, 1})}, 2);
    CHECK(dvr::is_pure(*ctx, L, O2));
    CHECK(dvr::equal(*ctx, dvr::pure_closure(*ctx, L, O2), L));
}

TEST_CASE("elementary divisor valuations") {
    auto ctx = make_context(8, 2);
    const CycField& F = ctx->field();
    OLattice O3 = dvr::standard_lattice(*ctx, 3);

    CHECK(dvr::elementary_divisor_valuations(*ctx, O3, O3) == std::vector<long>{0, 0, 0});

    OLattice piM = dvr::scale(*ctx, O3, ctx->uniformizer());
    CHECK(dvr::elementary_divisor_valuations(*ctx, piM, O3) == std::vector<long>{1, 1, 1});

    // diagonal case {0, e} with v(p) = e = 4
    auto ctx2 = make_context(8, 2);
    OLattice O2 = dvr::standard_lattice(*ctx2, 2);
    OLattice D = dvr::echelonize(*ctx2, {vec(F, {1, 0}), vec(F, {0, 2})}, 2);
    CHECK(dvr::elementary_divisor_valuations(*ctx2, D, O2) == std::vector<long>{0, 4});

    OLattice low = dvr::echelonize(*ctx2, {vec(F, {1, 0})}, 2);
    CHECK_THROWS_AS(dvr::elementary_divisor_valuations(*ctx2, low, O2), arith_error);
}

TEST_CASE("max elementary divisor r is the least pi^r M in L exponent") {
    auto ctx = make_context(3, 3);
    std::mt19937 rng(321);
    OLattice M = dvr::standard_lattice(*ctx, 4);
    for (int it = 0; it < 25; ++it) {
        OLattice L = random_sublattice(*ctx, M, rng, 6);
        if (L.rank() != 4) continue;
        auto divs = dvr::elementary_divisor_valuations(*ctx, L, M);
        long r = divs.back();
        OLattice pirM = dvr::scale(*ctx, M, ctx->pi_pow(r));
        CHECK(dvr::contains(*ctx, L, pirM));
        if (r >= 1) {
            OLattice pir1M = dvr::scale(*ctx, M, ctx->pi_pow(r - 1));
            CHECK_FALSE(dvr::contains(*ctx, L, pir1M));
        }
    }
}

TEST_CASE("purity agrees with the radical-intersection oracle on random lattices") {
    std::mt19937 rng(2024);
    int checked = 0;
    for (auto [m, p] : {std::pair<unsigned, std::uint64_t>{1, 2}, {4, 2}, {3, 3}, {8, 2}}) {
        auto ctx = make_context(m, p);
        for (int it = 0; it < 40; ++it) {
            unsigned amb = 2 + (it % 5);
            OLattice M0 = dvr::standard_lattice(*ctx, amb);
            OLattice M = random_sublattice(*ctx, M0, rng, amb + 1);
            if (M.rank() == 0) continue;
            OLattice L = random_sublattice(*ctx, M, rng, M.rank() + 1);
            if (L.rank() == 0) continue;
            bool fast = dvr::is_pure(*ctx, L, M);
            bool slow = purity_oracle(*ctx, L, M);
            CHECK(fast == slow);
            ++checked;
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("pure_closure is minimal: removing any basis vector breaks containment") {
    auto ctx = make_context(4, 2);
    std::mt19937 rng(55);
    OLattice M = dvr::standard_lattice(*ctx, 4);
    int interesting = 0;
    for (int it = 0; it < 30; ++it) {
        OLattice L = random_sublattice(*ctx, M, rng, 3);
        if (L.rank() < 2) continue;
        OLattice C = dvr::pure_closure(*ctx, L, M);
        CHECK(dvr::is_pure(*ctx, C, M));
        CHECK(dvr::contains(*ctx, C, L));
        CHECK(C.rank() == L.rank());
        for (unsigned drop = 0; drop < C.rank(); ++drop) {
            std::vector<std::vector<CycNum>> rows;
            for (unsigned i = 0; i < C.rank(); ++i) {
                if (i != drop) rows.push_back(C.basis[i]);
            }
            OLattice Cm = dvr::echelonize(*ctx, rows, C.ambient);
            CHECK_FALSE(dvr::contains(*ctx, Cm, L));
        }
        ++interesting;
    }
    CHECK(interesting >= 10);
}

TEST_CASE("module_annihilator on the group algebra of C_2") {
    auto ctx = make_context(1, 2);
    const CycField& F = ctx->field();
    // C_2 group algebra: basis e0 = 1, e1 = g with g^2 = 1
    dvr::BasedAlgebra alg;
    alg.dim = 2;
    alg.basis_product = [&F](unsigned i, unsigned j) {
        return std::vector<std::pair<unsigned, CycNum>>{{i ^ j, F.one()}};
    };

    OLattice whole = dvr::standard_lattice(*ctx, 2);
    OLattice zero;
    zero.ambient = 2;
    CHECK(dvr::module_annihilator(*ctx, alg, whole).rank() == 0);
    CHECK(dvr::equal(*ctx, dvr::module_annihilator(*ctx, alg, zero), whole));

    // I = O (1 + g): annihilator is the augmentation ideal O (1 - g)
    OLattice I = dvr::echelonize(*ctx, {vec(F, {1, 1})}, 2);
    OLattice ann = dvr::module_annihilator(*ctx, alg, I);
    OLattice aug = dvr::echelonize(*ctx, {vec(F, {1, -1})}, 2);
    CHECK(dvr::equal(*ctx, ann, aug));
    // ann(ann(ann(I))) = ann(I)
    OLattice a2 = dvr::module_annihilator(*ctx, alg, ann);
    OLattice a3 = dvr::module_annihilator(*ctx, alg, a2);
    CHECK(dvr::equal(*ctx, a3, ann));

    // not an ideal: O * g alone is not multiplicatively closed into itself
    OLattice notideal = dvr::echelonize(*ctx, {vec(F, {0, 1})}, 2);
    CHECK_THROWS_AS(dvr::module_annihilator(*ctx, alg, notideal), arith_error);
}

TEST_CASE("intersection and sum sanity") {
    auto ctx = make_context(1, 2);
    const CycField& F = ctx->field();
    OLattice A = dvr::echelonize(*ctx, {vec(F, {2, 0}), vec(F, {0, 1})}, 2);
    OLattice B = dvr::echelonize(*ctx, {vec(F, {1, 0}), vec(F, {0, 2})}, 2);
    OLattice I = dvr::intersect(*ctx, A, B);
    OLattice expect = dvr::echelonize(*ctx, {vec(F, {2, 0}), vec(F, {0, 2})}, 2);
    CHECK(dvr::equal(*ctx, I, expect));
    OLattice S = dvr::sum(*ctx, A, B);
    CHECK(dvr::equal(*ctx, S, dvr::standard_lattice(*ctx, 2)));
}
