#include "doctest.h"
#include "zpg/abelian.hpp"
#include "zpg/idempotent.hpp"

using namespace zpg;

TEST_CASE("element orders in Z/2 x Z/4") {
    AbelianGroup G = parse_group("2,4");
    CHECK(element_order(G, {0, 0}) == 1);
    CHECK(element_order(G, {1, 2}) == 2);
    CHECK(element_order(G, {0, 1}) == 4);
}

TEST_CASE("cyclic quotients") {
    CHECK(cyclic_quotients(parse_group("2,2")).size() == 4);
    CHECK(cyclic_quotients(parse_group("4")).size() == 3);
    // 1 trivial, 3 of order 2, 2 of order 4 (kernels <(1,0)> and <(1,2)>); the quotient by <(0,2)> is not cyclic
    CHECK(cyclic_quotients(parse_group("2,4")).size() == 6);
    CHECK(cyclic_quotients(AbelianGroup::from_cyclic_orders({4, 2})).size() == 6);
    CHECK(cyclic_quotients(AbelianGroup::from_cyclic_orders({2, 3})).size() == cyclic_quotients(parse_group("6")).size());
}

TEST_CASE("invariant factor normalisation") {
    CHECK(AbelianGroup::from_cyclic_orders({4, 2}).invariant_factors() == std::vector<Int>{2, 4});
    CHECK(AbelianGroup::from_cyclic_orders({2, 3}).invariant_factors() == std::vector<Int>{6});
    CHECK(AbelianGroup::from_cyclic_orders({1, 1}).order() == 1);
    CHECK_THROWS_AS(AbelianGroup::from_invariant_factors({4, 2}), InputError);
    CHECK_THROWS_AS(parse_group("2,x"), InputError);
    CHECK_THROWS_AS(parse_element(parse_group("2,4"), "1"), InputError);
}

TEST_CASE("Frobenius orbits") {
    auto o32 = frobenius_orbits(parse_group("3"), 2);
    REQUIRE(o32.size() == 2);
    CHECK(o32[0].size() == 1);
    CHECK(o32[1].size() == 2);
    CHECK(frobenius_orbits(parse_group("3"), 7).size() == 3);
    auto o22 = frobenius_orbits(parse_group("2"), 2);
    CHECK(o22.size() == 2);
    for (auto& o : o22) CHECK(o.size() == 1);
}

TEST_CASE("wedge square of the p-part") {
    CHECK(wedge_square_p_part(parse_group("4"), 2).order() == 1);
    CHECK(wedge_square_p_part(parse_group("2,2"), 2).invariant_factors() == std::vector<Int>{2});
    CHECK(wedge_square_p_part(parse_group("3"), 2).order() == 1);
    CHECK(wedge_square_p_part(parse_group("2,4,8"), 2).invariant_factors() == std::vector<Int>{2, 2, 4});
}

TEST_CASE("groups of a given order") {
    CHECK(abelian_groups_of_order(16).size() == 5);
    CHECK(abelian_groups_of_order(72).size() == 6);
    CHECK(abelian_groups_of_order(1).size() == 1);
}

TEST_CASE("subgroup enumeration") {
    CHECK(all_subgroups(parse_group("2,2")).size() == 5);
    CHECK(all_subgroups(parse_group("2,4")).size() == 8);
    CHECK(all_subgroups(parse_group("12")).size() == 6);
}
