#include "doctest.h"
#include "zpg/catalog.hpp"
#include "zpg/idempotent.hpp"

using namespace zpg;

namespace {
Idempotent nontrivial(const char* g, Int p, Int n) { return idempotent_with_order(parse_group(g), p, n); }
}  // namespace

TEST_CASE("idempotent enumeration") {
    auto e22 = enumerate_idempotents(parse_group("2"), 2);
    CHECK(e22.size() == 2);
    auto e32 = enumerate_idempotents(parse_group("3"), 2);
    REQUIRE(e32.size() == 2);
    CHECK(e32[1].dimension() == 2);
    CHECK(e32[1].Q == 4);
    auto e37 = enumerate_idempotents(parse_group("3"), 7);
    CHECK(e37.size() == 3);
    for (auto& e : e37) CHECK(e.dimension() == 1);

    Idempotent f = nontrivial("4", 2, 4);
    CHECK(f.e_ram == 2);
    CHECK(f.f == 1);
    CHECK(f.uniformizer == Uniformizer::ONE_MINUS_GAMMA);
    CHECK(nontrivial("3", 2, 3).uniformizer == Uniformizer::P);
}

TEST_CASE("huge residue degree does not overflow") {
    // ord_83(2) = 82
    for (auto& e : enumerate_idempotents(parse_group("83"), 2))
        if (!e.is_trivial()) {
            CHECK(e.f == 82);
            CHECK(e.Q == 0);
        }
}

TEST_CASE("annihilation") {
    AbelianGroup G2 = parse_group("2");
    CHECK(gamma_annihilation(nontrivial("2", 2, 2), {1}) == Annihilator::NORM);
    CHECK(gamma_annihilation(nontrivial("2", 2, 1), {1}) == Annihilator::ONE_MINUS_GAMMA);
    CHECK(gamma_annihilation(nontrivial("4", 2, 4), {2}) == Annihilator::NORM);
}

TEST_CASE("ideal image valuations") {
    CHECK(ideal_image_valuation(nontrivial("2", 2, 2), {1}).d == 1);
    CHECK(ideal_image_valuation(nontrivial("4", 2, 4), {2}).d == 2);
    CHECK(ideal_image_valuation(nontrivial("3", 2, 3), {1}).d == 0);
    CHECK(one_minus_chi_valuation(nontrivial("4", 2, 4), {1}) == std::optional<Int>(1));
    CHECK(!one_minus_chi_valuation(nontrivial("2", 2, 1), {1}).has_value());
}

TEST_CASE("threshold ideals") {
    for (Int p : {2, 3, 5}) CHECK(threshold_ideal(nontrivial(std::to_string(p).c_str(), p, p)).d == 1);
    CHECK(threshold_ideal(nontrivial("4", 2, 4)).d == 2);
    CHECK(threshold_ideal(nontrivial("2,8", 2, 1)).d == 3);  // (p^n) with p^n = 8
    CHECK(threshold_ideal(nontrivial("3", 2, 3)).whole_ring());
    CHECK(threshold_ideal(nontrivial("3", 2, 1)).whole_ring());
}

TEST_CASE("residue keys") {
    auto e = enumerate_idempotents(parse_group("2"), 2);
    CHECK(residue_module_key(e[0]) == residue_module_key(e[1]));
    std::map<ResidueKey, int> c;
    for (auto& x : enumerate_idempotents(parse_group("6"), 2)) ++c[residue_module_key(x)];
    CHECK(c.size() == 2);
    for (auto& [k, v] : c) CHECK(v == 2);
}

TEST_CASE("ramification types") {
    for (Int p : {2, 3, 5}) {
        AbelianGroup G = parse_group(std::to_string(p));
        Idempotent e = idempotent_with_order(G, p, p);
        CHECK(ramtype_qualifies(e, IdealPower{1}, {{1}}, {{1}}));
    }
    CHECK_FALSE(ramtype_qualifies(nontrivial("2", 2, 2), IdealPower{1}, {}, {{1}}));
    CHECK(ramtype_qualifies(nontrivial("4", 2, 4), IdealPower{2}, {{2}}, {{2}}));
    CHECK_FALSE(ramtype_qualifies(nontrivial("4", 2, 4), IdealPower{2}, {{2}}, {{1}}));
    CHECK_FALSE(ramtype_qualifies(nontrivial("4", 2, 4), IdealPower{3}, {{1}}, {{1}}));
    CHECK_THROWS_AS(ramtype_qualifies(nontrivial("2,2", 2, 2), IdealPower{1}, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}), InputError);
    CHECK(ramtype_qualifies_A(nontrivial("2", 2, 2), {{1}}, {{1}}));
    CHECK_FALSE(ramtype_qualifies_A(nontrivial("3", 2, 3), {{1}}, {{1}}));
}

TEST_CASE("cyclic quotient collisions") {
    auto c = cyclic_quotient_collisions(parse_group("3"), 7);
    REQUIRE(c.size() == 1);
    CHECK(c[0].quotient_order == 3);
    CHECK(c[0].idempotent_indices.size() == 2);
    CHECK(cyclic_quotient_collisions(parse_group("3"), 2).empty());
    CHECK(cyclic_quotient_collisions(parse_group("2,2"), 2).empty());
}
