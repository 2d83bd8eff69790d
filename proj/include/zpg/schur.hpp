#pragma once

#include <map>
#include <vector>

#include "zpg/common.hpp"

namespace zpg {

// The class-2 central cover of H = prod Z/2^{d_i} (d descending) killing 2-torsion of the
// commutator lattice: elements (a, c) with a in prod Z/2^{d_i}, c in prod_{i<j} Z/2^{d_j - 1},
// together with the involution sigma(a, c) = (-a, c).
class TwoCover {
public:
    struct Elt {
        std::vector<Int> a, c;
        bool operator==(const Elt& o) const { return a == o.a && c == o.c; }
        bool operator<(const Elt& o) const { return a != o.a ? a < o.a : c < o.c; }
    };

    // H given by its cyclic orders (each a power of 2, any order; 1s are dropped).
    explicit TwoCover(const std::vector<Int>& orders);

    const std::vector<Int>& d() const { return d_; }
    size_t r() const { return d_.size(); }
    size_t npairs() const { return pairs_.size(); }
    std::pair<size_t, size_t> pair(size_t t) const { return pairs_[t]; }
    const std::vector<Int>& kernel_mods() const { return kmod_; }  // 2^{d_j - 1}
    Int kernel_size() const;
    Int kernel_exponent() const;
    Int order() const;  // |H| * |kernel|

    Elt identity() const;
    Elt mul(const Elt& x, const Elt& y) const;
    Elt sigma(const Elt& x) const;
    Elt pow(const Elt& x, Int k) const;  // k >= 0
    Elt from_index(Int idx) const;       // all elements, a then c in mixed radix
    Elt generator(size_t i) const;
    Elt central(const std::vector<Int>& c) const;

    std::vector<Int> kernel_add(const std::vector<Int>& x, const std::vector<Int>& y) const;
    std::vector<Int> kernel_scale(Int k, const std::vector<Int>& x) const;
    Int kernel_index(const std::vector<Int>& x) const;
    std::vector<Int> kernel_element(Int idx) const;

    // class representative with {0,1} exponents, indexed by bits: a_i = (cls >> i) & 1
    std::vector<Int> class_exponents(Int cls) const;
    Int nclasses() const { return Int(1) << d_.size(); }

private:
    std::vector<Int> d_;
    std::vector<std::pair<size_t, size_t>> pairs_;
    std::vector<Int> kmod_;
    std::vector<Int> hmod_;
};

// (x^a sigma)^2, by multiplication in the cover.
std::vector<Int> square_of_lift(const TwoCover& C, const std::vector<Int>& a);
// sum_{j<i} a_i a_j e_{ji}
std::vector<Int> square_of_lift_closed(const TwoCover& C, const std::vector<Int>& a);

Int q_exponent(const TwoCover& C, Int q);  // ((q-1)/2) * q^{-1} mod kernel exponent
// m indexed by class (size nclasses()).
std::vector<Int> w_map(const TwoCover& C, Int q, const std::vector<Int>& m);
Int nr_pow(const TwoCover& C, Int q, const std::vector<Int>& x);
Int nr_pow_brute(const TwoCover& C, Int q, const std::vector<Int>& x);  // solutions y^(q-1) = x in ker

bool in_lattice_kernel(const TwoCover& C, const std::vector<Int>& m);
BigInt lattice_kernel_count(size_t r, Int n);
// Number of lattice-kernel vectors per value of sum_gamma m_gamma s_gamma (kernel index).
std::vector<BigInt> lattice_kernel_by_square_sum(const TwoCover& C, Int n);

BigInt b_exact(const std::vector<Int>& H, Int q, Int n);
BigInt b_exact_enum(const std::vector<Int>& H, Int q, Int n);  // explicit vectors, brute nr
BigInt b_closed(const std::vector<Int>& H, Int v, Int n);
BigInt wedge_torsion(const std::vector<Int>& H, Int v);  // #(wedge^2 2H)[2^{v-1}]

Rational moment_ratio(const std::vector<Int>& H, Int v);
// (b(H)/b(H/2H)) * |H/2H| / |H|
Rational b_ratio_exact(const std::vector<Int>& H, Int q, Int n);
Rational b_ratio_closed(const std::vector<Int>& H, Int v, Int n);

// Fiber sizes of m -> W(m) over the lattice kernel, keyed by kernel index.
std::map<Int, BigInt> w_fibers(const TwoCover& C, Int q, Int n);
// Same, pushed to ker / 2 ker (keyed by the index of the reduced element).
std::map<Int, BigInt> w_fibers_mod2(const TwoCover& C, Int q, Int n);
// The subgroup 2^{v-1} ker as kernel indices.
std::vector<Int> scaled_kernel(const TwoCover& C, Int v);

std::vector<Int> parse_two_group(const std::string& s);

}  // namespace zpg
