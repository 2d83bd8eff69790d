#pragma once

#include <optional>
#include <vector>

#include "zpg/abelian.hpp"

namespace zpg {

enum class Uniformizer { P, ONE_MINUS_GAMMA };
const char* to_string(Uniformizer u);

// A primitive idempotent of Q_p[Gamma], identified with its Galois orbit of characters.
// e Z_p[Gamma] is the ring of integers of Q_p(zeta_n): ramification e_ram = phi(p^k),
// residue degree f = ord_{m'}(p).
struct Idempotent {
    AbelianGroup G;
    Int p = 0;
    std::vector<Character> orbit;  // sorted by element index; orbit[0] is the representative
    Int n = 1;                     // character order = |Gamma / ker chi|
    Int p_part = 1;                // p^k
    Int k = 0;
    Int m_prime = 1;
    Int e_ram = 1;
    Int f = 1;
    Int Q = 0;  // p^f, or 0 when that overflows Int
    Uniformizer uniformizer = Uniformizer::P;

    const Character& rep() const { return orbit.front(); }
    Int dimension() const { return f * e_ram; }
    bool is_trivial() const { return n == 1; }
    Int cyclic_quotient_order() const { return n; }
};

std::vector<Idempotent> enumerate_idempotents(const AbelianGroup& G, Int p);
// The idempotent whose orbit contains chi.
Idempotent idempotent_of(const AbelianGroup& G, Int p, const Character& chi);

enum class Annihilator { ONE_MINUS_GAMMA, NORM };
const char* to_string(Annihilator a);
Annihilator gamma_annihilation(const Idempotent& e, const Elem& g);

// The ideal m^d of a DVR; d == 0 is the whole ring.
struct IdealPower {
    Int d = 0;
    bool whole_ring() const { return d == 0; }
    bool operator==(const IdealPower& o) const { return d == o.d; }
};

// Valuation (in units of the uniformizer) of 1 - chi(g); nullopt when chi(g) = 1.
std::optional<Int> one_minus_chi_valuation(const Idempotent& e, const Elem& g);

IdealPower ideal_image_valuation(const Idempotent& e, const Elem& g);
IdealPower threshold_ideal(const Idempotent& e);

// Residue field A = eZ_p[Gamma]/m_e as a key: (Q, Galois-under-Frobenius orbit of the
// prime-to-p component of chi), the orbit stored as sorted element indices.
struct ResidueKey {
    Int Q;
    std::vector<Int> prime_to_p_orbit;
    bool operator==(const ResidueKey& o) const { return Q == o.Q && prime_to_p_orbit == o.prime_to_p_orbit; }
    bool operator<(const ResidueKey& o) const {
        return Q != o.Q ? Q < o.Q : prime_to_p_orbit < o.prime_to_p_orbit;
    }
};
Character prime_to_p_component(const Idempotent& e);
ResidueKey residue_module_key(const Idempotent& e);

// Ramification-type classifiers. The exclusion of the residue characteristic from the set of
// primes considered is left to the caller.
bool ramtype_qualifies(const Idempotent& e, IdealPower I, const std::vector<Elem>& inertia_gens,
                       const std::vector<Elem>& decomposition_gens);
bool ramtype_qualifies_A(const Idempotent& e, const std::vector<Elem>& inertia_gens,
                         const std::vector<Elem>& decomposition_gens);

// Cyclic quotients Gamma/ker chi carrying more than one idempotent.
struct QuotientCollision {
    Int quotient_order;
    IndexSet kernel;
    std::vector<size_t> idempotent_indices;  // into enumerate_idempotents(G, p)
};
std::vector<QuotientCollision> cyclic_quotient_collisions(const AbelianGroup& G, Int p);

}  // namespace zpg
