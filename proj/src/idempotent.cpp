#include "zpg/idempotent.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace zpg {

const char* to_string(Uniformizer u) { return u == Uniformizer::P ? "P" : "ONE_MINUS_GAMMA"; }

const char* to_string(Annihilator a) {
    return a == Annihilator::ONE_MINUS_GAMMA ? "ONE_MINUS_GAMMA_ANNIHILATES" : "NORM_ANNIHILATES";
}

namespace {

Idempotent from_orbit(const AbelianGroup& G, Int p, std::vector<Character> orbit) {
    Idempotent e;
    e.G = G;
    e.p = p;
    e.orbit = std::move(orbit);
    e.n = char_order(G, e.orbit.front());
    PPart pp = split_p(e.n, p);
    e.p_part = pp.p_power;
    e.k = pp.k;
    e.m_prime = pp.m_prime;
    e.e_ram = euler_phi(pp.p_power);
    e.f = mult_order(p, pp.m_prime);
    // 0 when p^f does not fit in 64 bits (large residue degree, e.g. |Gamma| near 200)
    e.Q = e.f * std::log2(static_cast<double>(p)) < 62 ? ipow(p, e.f) : 0;
    e.uniformizer = pp.k == 0 ? Uniformizer::P : Uniformizer::ONE_MINUS_GAMMA;
    if (static_cast<Int>(e.orbit.size()) != e.f * e.e_ram)
        throw InternalError("orbit size differs from f*phi(p^k)");
    return e;
}

}  // namespace

std::vector<Idempotent> enumerate_idempotents(const AbelianGroup& G, Int p) {
    std::vector<Idempotent> out;
    for (auto& orb : frobenius_orbits(G, p)) out.push_back(from_orbit(G, p, std::move(orb)));
    return out;
}

Idempotent idempotent_of(const AbelianGroup& G, Int p, const Character& chi) {
    G.check(chi.c);
    for (auto& e : enumerate_idempotents(G, p))
        if (std::find(e.orbit.begin(), e.orbit.end(), chi) != e.orbit.end()) return e;
    throw InternalError("character not in any orbit");
}

Annihilator gamma_annihilation(const Idempotent& e, const Elem& g) {
    if (element_order(e.G, g) == 1) throw InputError("gamma_annihilation: identity element");
    return char_value(e.G, e.rep(), g) == 0 ? Annihilator::ONE_MINUS_GAMMA : Annihilator::NORM;
}

namespace {
// Order of zeta = chi(g).
Int value_order(const Idempotent& e, const Elem& g) {
    Int E = e.G.exponent();
    Int v = char_value(e.G, e.rep(), g);
    return E / gcd(E, v);
}

bool is_p_power(Int x, Int p) {
    while (x % p == 0) x /= p;
    return x == 1;
}
}  // namespace

std::optional<Int> one_minus_chi_valuation(const Idempotent& e, const Elem& g) {
    Int d0 = value_order(e, g);
    if (d0 == 1) return std::nullopt;
    if (!is_p_power(d0, e.p)) return Int{0};
    return e.e_ram / euler_phi(d0);
}

IdealPower ideal_image_valuation(const Idempotent& e, const Elem& g) {
    Int ord = element_order(e.G, g);
    if (ord == 1) throw InputError("ideal_image_valuation: identity element");
    Int d0 = value_order(e, g);
    if (d0 == 1) return IdealPower{e.e_ram * val_p(ord, e.p)};  // norm maps to |g|
    return IdealPower{*one_minus_chi_valuation(e, g)};
}

IdealPower threshold_ideal(const Idempotent& e) {
    Int best = 0;
    for (Int i = 1; i < e.G.order(); ++i) best = std::max(best, ideal_image_valuation(e, e.G.element(i)).d);
    return IdealPower{best};
}

Character prime_to_p_component(const Idempotent& e) {
    // chi' = chi^a with a = 0 mod p^k, a = 1 mod m'
    Int a = 0;
    while (!(a % e.p_part == 0 && a % e.m_prime == 1 % e.m_prime)) ++a;
    return char_pow(e.G, e.rep(), a);
}

ResidueKey residue_module_key(const Idempotent& e) {
    Character chi1 = prime_to_p_component(e);
    std::vector<Int> orb;
    Int a = 1;
    for (Int j = 0; j < e.f; ++j) {
        orb.push_back(e.G.index(char_pow(e.G, chi1, a).c));
        a = a * e.p % e.G.exponent();
    }
    std::sort(orb.begin(), orb.end());
    orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
    return ResidueKey{e.Q, orb};
}

namespace {
IndexSet span(const Idempotent& e, const std::vector<Elem>& gens) {
    for (const auto& g : gens) e.G.check(g);
    return subgroup_generated(e.G, gens);
}

void check_contained(const IndexSet& inner, const IndexSet& outer) {
    if (!std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()))
        throw InputError("inertia subgroup must lie in the decomposition subgroup");
}

bool acts_trivially_mod(const Idempotent& e, const IndexSet& D, Int d) {
    for (Int i : D) {
        auto v = one_minus_chi_valuation(e, e.G.element(i));
        if (v && *v < d) return false;
    }
    return true;
}
}  // namespace

bool ramtype_qualifies(const Idempotent& e, IdealPower I, const std::vector<Elem>& inertia_gens,
                       const std::vector<Elem>& decomposition_gens) {
    IndexSet In = span(e, inertia_gens), D = span(e, decomposition_gens);
    check_contained(In, D);
    Int sz = static_cast<Int>(In.size());
    Int gen_found = 0;
    bool cond_a = false;
    for (Int i : In) {
        Elem g = e.G.element(i);
        if (element_order(e.G, g) != sz) continue;
        ++gen_found;
        if (sz > 1 && ideal_image_valuation(e, g).d >= I.d) cond_a = true;
    }
    if (gen_found == 0) throw InputError("ramtype_qualifies: inertia subgroup is not cyclic");
    return cond_a && acts_trivially_mod(e, D, I.d);
}

bool ramtype_qualifies_A(const Idempotent& e, const std::vector<Elem>& inertia_gens,
                         const std::vector<Elem>& decomposition_gens) {
    IndexSet In = span(e, inertia_gens), D = span(e, decomposition_gens);
    check_contained(In, D);
    if (static_cast<Int>(In.size()) % e.p != 0) return false;
    return acts_trivially_mod(e, D, 1);
}

std::vector<QuotientCollision> cyclic_quotient_collisions(const AbelianGroup& G, Int p) {
    auto idems = enumerate_idempotents(G, p);
    std::map<IndexSet, std::vector<size_t>> by_kernel;
    for (size_t i = 0; i < idems.size(); ++i) by_kernel[char_kernel(G, idems[i].rep())].push_back(i);
    std::vector<QuotientCollision> out;
    for (auto& [ker, ids] : by_kernel)
        if (ids.size() > 1)
            out.push_back({G.order() / static_cast<Int>(ker.size()), ker, ids});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.quotient_order != b.quotient_order ? a.quotient_order < b.quotient_order : a.kernel < b.kernel;
    });
    return out;
}

}  // namespace zpg
