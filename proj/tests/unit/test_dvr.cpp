#include "doctest.h"
#include "zpg/dvr.hpp"

using namespace zpg;

namespace {
ModuleType T(Int Q, std::vector<Int> p) { return make_type(Q, std::move(p)); }
}  // namespace

TEST_CASE("ideal operations") {
    IdealOps o = ideal_ops(T(2, {3, 1}), 2);
    CHECK(o.rk_I == 1);
    CHECK(o.IM == T(2, {1}));
    CHECK(o.M_I == T(2, {2, 1}));
    CHECK(o.M_mod_I == T(2, {2, 1}));
    CHECK(o.closure == T(2, {5, 3}));
    IdealOps c = ideal_ops(ideal_ops(T(3, {1}), 1).closure, 1);
    CHECK(c.IM == T(3, {1}));
    IdealOps z = ideal_ops(T(2, {}), 3);
    CHECK(z.IM.parts.empty());
    CHECK(z.closure.parts.empty());
    CHECK(z.rk_I == 0);
}

TEST_CASE("hom, sur and aut counts") {
    for (Int Q : {2, 3, 4, 5, 9}) {
        CHECK(hom_count(T(Q, {1}), T(Q, {2})) == Q);
        CHECK(hom_count(T(Q, {2}), T(Q, {1})) == Q);
        CHECK(sur_count(T(Q, {2}), T(Q, {1})) == Q - 1);
        CHECK(sur_count(T(Q, {1}), T(Q, {2})) == 0);
        CHECK(aut_count(T(Q, {1})) == Q - 1);
        CHECK(aut_count(T(Q, {2})) == Q * Q - Q);
        CHECK(sur_count(T(Q, {2, 1}), T(Q, {2, 1})) == aut_count(T(Q, {2, 1})));
    }
    CHECK(hom_count(T(2, {1, 1}), T(2, {1})) == 4);
    CHECK(aut_count(T(2, {1, 1})) == 6);
    CHECK(aut_count(T(2, {1, 1, 1})) == 168);
    CHECK(aut_count(T(2, {2, 1})) == 8);  // Aut(Z/4 x Z/2) = D4
    CHECK(aut_count(T(3, {})) == 1);
    CHECK_THROWS_AS(hom_count(T(2, {1}), T(3, {1})), InputError);
}

TEST_CASE("weights") {
    for (Int Q : {2, 3, 4}) {
        CHECK(weight(T(Q, {2}), T(Q, {2}), 1) == Q);
        CHECK(weight(T(Q, {2}), T(Q, {2}), 1) * sur_count(T(Q, {1}), T(Q, {1})) == sur_count(T(Q, {2}), T(Q, {2})));
        CHECK(weight(T(Q, {1}), T(Q, {2}), 1) == Q);
        CHECK(sur_count(T(Q, {1}), T(Q, {2})) == weight(T(Q, {1}), T(Q, {2}), 1) * sur_count(T(Q, {}), T(Q, {1})));
    }
    CHECK(weight(T(2, {2, 1}), T(2, {2}), 1) == 4);
    CHECK(sur_count(T(2, {2, 1}), T(2, {2})) == 4 * sur_count(T(2, {1}), T(2, {1})));
    CHECK_THROWS_AS(weight(T(2, {1}), T(2, {1}), 1), InputError);
}

TEST_CASE("gaussian binomials and submodule counts") {
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(7, 0, 5) == 1);
    CHECK(gaussian_binomial(3, 1, 3) == 13);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(submodule_type_count(T(2, {1, 1}), T(2, {1})) == 3);
    CHECK(submodule_type_count(T(2, {2}), T(2, {1})) == 1);
    CHECK(submodule_type_count(T(2, {2, 1}), T(2, {1})) == 3);
}

TEST_CASE("partitions") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_bounded(3, -1, -1).size() == 7);  // incl. the empty partition
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(subpartitions({2, 1}).size() == 5);
    CHECK_THROWS_AS(make_type(6, {1}), InputError);
    CHECK_THROWS_AS(make_type(2, {0}), InputError);
}
