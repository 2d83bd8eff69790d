#pragma once

#include <vector>

#include "zpg/common.hpp"

namespace zpg {

using Elem = std::vector<Int>;

// Finite abelian group prod Z/d_i in invariant-factor form d_1 | d_2 | ... | d_k, d_i >= 2.
// Elements are exponent tuples; they are also indexed densely (mixed radix, first coordinate
// slowest) so that subgroups can be stored as sorted index lists.
class AbelianGroup {
public:
    AbelianGroup() = default;

    // Validates divisibility; throws InputError otherwise.
    static AbelianGroup from_invariant_factors(std::vector<Int> d);
    // Any list of cyclic orders (1s allowed); returns the canonical invariant-factor form.
    static AbelianGroup from_cyclic_orders(const std::vector<Int>& orders);

    const std::vector<Int>& invariant_factors() const { return d_; }
    size_t rank() const { return d_.size(); }
    Int order() const { return order_; }
    Int exponent() const { return d_.empty() ? 1 : d_.back(); }

    void check(const Elem& g) const;  // coordinate count and range
    Elem reduce(Elem g) const;
    Int index(const Elem& g) const;
    Elem element(Int idx) const;
    Elem zero() const { return Elem(d_.size(), 0); }
    Elem generator(size_t i) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem scale(Int k, const Elem& a) const;

    std::string str() const { return join_ints(d_); }
    bool operator==(const AbelianGroup& o) const { return d_ == o.d_; }

private:
    std::vector<Int> d_;
    Int order_ = 1;
};

AbelianGroup parse_group(const std::string& s);  // "2,4"; "" or "1" is the trivial group
Elem parse_element(const AbelianGroup& G, const std::string& s);

Int element_order(const AbelianGroup& G, const Elem& g);

// Subgroups as sorted lists of element indices.
using IndexSet = std::vector<Int>;

inline constexpr Int kSubgroupCap = 4096;

IndexSet subgroup_generated(const AbelianGroup& G, const std::vector<Elem>& gens);
std::vector<IndexSet> all_subgroups(const AbelianGroup& G);  // |G| <= kSubgroupCap
bool quotient_is_cyclic(const AbelianGroup& G, const IndexSet& N);

struct CyclicQuotient {
    IndexSet kernel;
    Int order;
};
std::vector<CyclicQuotient> cyclic_quotients(const AbelianGroup& G);

// Characters: coefficient tuple c with chi(g) = zeta_E^{sum_i c_i (E/d_i) g_i}.
struct Character {
    Elem c;
    bool operator==(const Character& o) const { return c == o.c; }
    bool operator<(const Character& o) const { return c < o.c; }
};

Int char_value(const AbelianGroup& G, const Character& chi, const Elem& g);  // exponent mod E
Int char_order(const AbelianGroup& G, const Character& chi);
Character char_pow(const AbelianGroup& G, const Character& chi, Int k);
std::vector<Character> all_characters(const AbelianGroup& G);
IndexSet char_kernel(const AbelianGroup& G, const Character& chi);

// Decomposition of n = p^k * m' with gcd(p, m') = 1.
struct PPart {
    Int p_power;  // p^k
    Int k;
    Int m_prime;
};
PPart split_p(Int n, Int p);

// The exponents a in (Z/n)^x that fix the simple factor of Q_p(zeta_n): all a that are units
// mod p^k and powers of p mod m'. Sorted ascending.
std::vector<Int> decomposition_exponents(Int n, Int p);

// Orbits of the absolute Galois group of Q_p on characters (the simple factors of Q_p[Gamma]).
// Each orbit is sorted; orbits are sorted by (order, first character index).
std::vector<std::vector<Character>> frobenius_orbits(const AbelianGroup& G, Int p);

AbelianGroup sylow(const AbelianGroup& G, Int p);
AbelianGroup wedge_square_p_part(const AbelianGroup& G, Int p);

// Every isomorphism class of abelian group of order n (canonical invariant factors).
std::vector<AbelianGroup> abelian_groups_of_order(Int n);

}  // namespace zpg
