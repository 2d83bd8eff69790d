#include "doctest.h"
#include "zpg/catalog.hpp"
#include "zpg/explicit.hpp"

using namespace zpg;

namespace {
Idempotent idem(const char* g, Int p, Int n) { return idempotent_with_order(parse_group(g), p, n); }
ModuleType T(Int Q, std::vector<Int> p) { return make_type(Q, std::move(p)); }
ExplicitModule inversion(std::vector<Int> exps) {
    Mat A = zero_mat(exps.size(), exps.size());
    for (size_t i = 0; i < exps.size(); ++i) A[i][i] = -1;
    return ExplicitModule(2, exps, parse_group("2"), {A});
}
ExplicitModule trivial(Int p, std::vector<Int> exps, const char* g) {
    AbelianGroup G = parse_group(g);
    return ExplicitModule(p, exps, G, std::vector<Mat>(G.rank(), identity_mat(exps.size())));
}
}  // namespace

TEST_CASE("realizations") {
    ExplicitModule a = realize(idem("2", 2, 2), T(2, {2}));
    CHECK(a.exps() == std::vector<Int>{2});
    CHECK(a.act({1}) == Mat{{3}});

    ExplicitModule b = realize(idem("3", 2, 3), T(4, {1}));
    CHECK(b.exps() == std::vector<Int>{1, 1});
    Mat g = b.act({1});
    CHECK(g != b.reduce_rows(identity_mat(2)));
    CHECK(b.compose(g, b.compose(g, g)) == b.reduce_rows(identity_mat(2)));

    Idempotent f = idem("4", 2, 4);
    ExplicitModule c = realize(f, T(2, {2}));
    CHECK(c.size() == 4);
    CHECK(iso_type(c, f) == T(2, {2}));
    CHECK(iso_type(realize(f, T(2, {3, 1})), f) == T(2, {3, 1}));
    CHECK(iso_type(realize(f, T(2, {})), f).parts.empty());
    CHECK(iso_type(direct_sum(realize(f, T(2, {2})), realize(f, T(2, {1}))), f) == T(2, {2, 1}));
    CHECK_THROWS_AS(realize(f, T(2, {3}), 2), InputError);
}

TEST_CASE("oracle counts") {
    for (Int Q : {2, 3})
        for (auto& re : realizations_for_Q(Q)) {
            auto oc = oracle_counts(realize(re.e, T(Q, {1})), realize(re.e, T(Q, {2})));
            CHECK(oc.hom == Q);
            CHECK(oc.sur == 0);
            auto od = oracle_counts(realize(re.e, T(Q, {2})), realize(re.e, T(Q, {1})));
            CHECK(od.hom == Q);
            CHECK(od.sur == Q - 1);
            CHECK(oracle_counts(realize(re.e, T(Q, {2})), realize(re.e, T(Q, {2}))).sur == Q * Q - Q);
        }
    auto e = realizations_for_Q(2).front().e;
    CHECK(oracle_counts(realize(e, T(2, {1, 1})), realize(e, T(2, {1}))).hom == 4);
    CHECK(oracle_counts(realize(e, T(2, {1, 1})), realize(e, T(2, {1, 1}))).sur == 6);
    CHECK(oracle_counts(realize(e, T(2, {2, 1})), realize(e, T(2, {1}))).hom == 4);
}

TEST_CASE("module validation") {
    CHECK_THROWS_AS(ExplicitModule(2, {1, 2}, parse_group("2"), {Mat{{1, 0}, {1, 1}}}), InputError);  // entry not divisible by 2
    CHECK_THROWS_AS(ExplicitModule(2, {2}, parse_group("2"), {Mat{{2}}}), InputError);               // not invertible
    CHECK_THROWS_AS(ExplicitModule(2, {2}, parse_group("3"), {Mat{{3}}}), InputError);               // order 2 != 3
}

TEST_CASE("A/B sets") {
    ExplicitModule H = inversion({2});
    ABSets s = ab_sets(H, {1});
    CHECK(s.Aminus.size() == 4);
    CHECK(s.Bminus.size() == 2);
    CHECK(s.A0.size() == 2);
    ExplicitModule Tm = trivial(3, {2}, "3");
    ABSets t = ab_sets(Tm, {1});
    CHECK(t.Bminus.size() == 1);
    CHECK(t.Aplus.size() == 9);
    CHECK(t.Aminus.size() == 3);
    // trivial mod m with p | |g|: both operators vanish on A
    for (Int p : {2, 3}) {
        Idempotent e = idem(std::to_string(p).c_str(), p, p);
        ExplicitModule A = realize(e, make_type(e.Q, {1}));
        CHECK(ab_sets(A, {1}).A0.size() == static_cast<size_t>(A.size()));
    }
}

TEST_CASE("conjugacy statistics and extensions") {
    ExplicitModule Z2 = trivial(2, {1}, "2");
    auto ex = enumerate_extensions(Z2);
    REQUIRE(ex.size() == 2);
    for (auto& G : ex) {
        auto st = conjugacy_stats(G, {1});
        if (G.is_split_cocycle_zero()) {
            CHECK(st.c_size == 2);
            CHECK(st.d == 2);
            CHECK(splitting_count(G) == 2);
        } else {
            CHECK(st.d == 0);
            CHECK(splitting_count(G) == 0);
        }
    }
    ExplicitModule Z4 = inversion({2});
    CHECK(enumerate_extensions(Z4).size() == 2);
    CHECK(h2_size(Z4) == 2);
    ExplicitGroup D = ExplicitGroup::semidirect(Z4);
    auto st = conjugacy_stats(D, {1});
    CHECK(st.c_size == 4);
    CHECK(st.d == 2);
    CHECK(splitting_count(D) == 4);
    CHECK(aut_extension_count(Z4, find_adapted_basis(Z4)) == 4);
    CHECK(enumerate_extensions(trivial(2, {1}, "3")).size() == 1);
    CHECK(h2_size(trivial(2, {1}, "2,2")) == 8);
}

TEST_CASE("extension group laws") {
    ExplicitModule H = inversion({2, 1});
    for (auto& G : enumerate_extensions(H)) {
        for (Int x = 0; x < G.size(); ++x) {
            CHECK(G.mul(x, G.inv(x)) == 0);
            for (Int y = 0; y < G.size(); y += 3)
                for (Int z = 0; z < G.size(); z += 5) CHECK(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
        }
    }
}

TEST_CASE("fiber tools") {
    for (auto& re : realizations_for_Q(2)) {
        ExplicitModule A = realize(re.e, T(2, {1}));
        Mat id = A.reduce_rows(identity_mat(A.ncoords()));
        FiberResult r = fiber_tools(re.e, A, A, A, id, id);
        CHECK(r.common_quotient == T(2, {1}));
        CHECK(r.boxtimes == T(2, {1}));

        ExplicitModule N = realize(re.e, T(2, {2}));
        Mat nat;
        for_each_hom(N, A, [&](const Mat& phi) {
            if (nat.empty() && is_surjective(N, A, phi)) nat = phi;
        });
        FiberResult s = fiber_tools(re.e, N, N, A, nat, nat);
        CHECK(s.common_quotient == T(2, {2}));
        CHECK(s.boxtimes == T(2, {2}));
        CHECK(s.rk_boxtimes == 1);
    }
}

TEST_CASE("powering orbits") {
    ExplicitModule H = trivial(3, {1}, "2");
    ExplicitGroup G = ExplicitGroup::semidirect(H);
    CHECK(powering_orbits_formula(G, 5) == powering_orbits_brute(G, 5));
    CHECK_THROWS_AS(powering_orbits_brute(G, 4), InputError);
}
