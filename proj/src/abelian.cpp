#include "zpg/abelian.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zpg {

AbelianGroup AbelianGroup::from_invariant_factors(std::vector<Int> d) {
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 2) throw InputError("invariant factors must be >= 2");
        if (i + 1 < d.size() && d[i + 1] % d[i] != 0)
            throw InputError("invariant factors must divide each other: " + join_ints(d));
    }
    AbelianGroup G;
    G.d_ = std::move(d);
    for (Int x : G.d_) {
        if (G.order_ > (Int(1) << 40) / x) throw InputError("group too large");
        G.order_ *= x;
    }
    return G;
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<Int>& orders) {
    // prime -> exponents of the primary components
    std::map<Int, std::vector<Int>> primary;
    for (Int n : orders) {
        if (n < 1) throw InputError("cyclic orders must be positive");
        for (Int q : prime_factors(n)) primary[q].push_back(val_p(n, q));
    }
    size_t k = 0;
    for (auto& [q, ex] : primary) {
        std::sort(ex.rbegin(), ex.rend());
        k = std::max(k, ex.size());
    }
    // d_k collects the largest exponent of each prime, d_{k-1} the next, ...
    std::vector<Int> d(k, 1);
    for (auto& [q, ex] : primary)
        for (size_t i = 0; i < ex.size(); ++i) d[k - 1 - i] *= ipow(q, ex[i]);
    return from_invariant_factors(d);
}

void AbelianGroup::check(const Elem& g) const {
    if (g.size() != d_.size())
        throw InputError("element has " + std::to_string(g.size()) + " coordinates, group " +
                         str() + " needs " + std::to_string(d_.size()));
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] < 0 || g[i] >= d_[i]) throw InputError("element coordinate out of range");
}

Elem AbelianGroup::reduce(Elem g) const {
    if (g.size() != d_.size()) throw InputError("element coordinate count mismatch");
    for (size_t i = 0; i < g.size(); ++i) g[i] = mod(g[i], d_[i]);
    return g;
}

Int AbelianGroup::index(const Elem& g) const {
    Int idx = 0;
    for (size_t i = 0; i < d_.size(); ++i) idx = idx * d_[i] + g[i];
    return idx;
}

Elem AbelianGroup::element(Int idx) const {
    Elem g(d_.size());
    for (size_t i = d_.size(); i-- > 0;) {
        g[i] = idx % d_[i];
        idx /= d_[i];
    }
    return g;
}

Elem AbelianGroup::generator(size_t i) const {
    Elem g = zero();
    g.at(i) = 1;
    return g;
}

Elem AbelianGroup::add(const Elem& a, const Elem& b) const {
    Elem r(d_.size());
    for (size_t i = 0; i < d_.size(); ++i) r[i] = (a[i] + b[i]) % d_[i];
    return r;
}

Elem AbelianGroup::neg(const Elem& a) const {
    Elem r(d_.size());
    for (size_t i = 0; i < d_.size(); ++i) r[i] = mod(-a[i], d_[i]);
    return r;
}

Elem AbelianGroup::scale(Int k, const Elem& a) const {
    Elem r(d_.size());
    for (size_t i = 0; i < d_.size(); ++i)
        r[i] = static_cast<Int>(mod(static_cast<Int>((static_cast<__int128>(k % d_[i]) * a[i]) % d_[i]), d_[i]));
    return r;
}

AbelianGroup parse_group(const std::string& s) {
    return AbelianGroup::from_cyclic_orders(parse_int_list(s));
}

Elem parse_element(const AbelianGroup& G, const std::string& s) {
    Elem g = parse_int_list(s);
    if (G.rank() == 0 && g == Elem{0}) g.clear();
    G.check(g);
    return g;
}

Int element_order(const AbelianGroup& G, const Elem& g) {
    G.check(g);
    Int n = 1;
    const auto& d = G.invariant_factors();
    for (size_t i = 0; i < d.size(); ++i) n = lcm(n, d[i] / gcd(d[i], g[i]));
    return n;
}

IndexSet subgroup_generated(const AbelianGroup& G, const std::vector<Elem>& gens) {
    std::vector<char> in(static_cast<size_t>(G.order()), 0);
    std::vector<Elem> queue{G.zero()};
    in[0] = 1;
    for (size_t h = 0; h < queue.size(); ++h) {
        for (const auto& g : gens) {
            Elem x = G.add(queue[h], g);
            Int ix = G.index(x);
            if (!in[ix]) {
                in[ix] = 1;
                queue.push_back(std::move(x));
            }
        }
    }
    IndexSet out;
    for (Int i = 0; i < G.order(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

std::vector<IndexSet> all_subgroups(const AbelianGroup& G) {
    if (G.order() > kSubgroupCap) throw InputError("subgroup enumeration capped at |G| <= 4096");
    std::vector<IndexSet> cyclic;
    std::set<IndexSet> seen_cyclic;
    for (Int i = 0; i < G.order(); ++i) {
        IndexSet c = subgroup_generated(G, {G.element(i)});
        if (seen_cyclic.insert(c).second) cyclic.push_back(std::move(c));
    }
    std::set<IndexSet> all{IndexSet{0}};
    std::vector<IndexSet> queue{IndexSet{0}};
    for (size_t h = 0; h < queue.size(); ++h) {
        for (const auto& c : cyclic) {
            if (std::includes(queue[h].begin(), queue[h].end(), c.begin(), c.end())) continue;
            std::vector<Elem> gens;
            gens.reserve(queue[h].size() + c.size());
            for (Int i : queue[h]) gens.push_back(G.element(i));
            for (Int i : c) gens.push_back(G.element(i));
            IndexSet s = subgroup_generated(G, gens);
            if (all.insert(s).second) queue.push_back(std::move(s));
        }
    }
    return {all.begin(), all.end()};
}

bool quotient_is_cyclic(const AbelianGroup& G, const IndexSet& N) {
    Int target = G.order() / static_cast<Int>(N.size());
    std::vector<char> inN(static_cast<size_t>(G.order()), 0);
    for (Int i : N) inN[i] = 1;
    for (Int i = 0; i < G.order(); ++i) {
        Elem g = G.element(i), x = g;
        Int k = 1;
        while (!inN[G.index(x)]) {
            x = G.add(x, g);
            ++k;
        }
        if (k == target) return true;
    }
    return false;
}

std::vector<CyclicQuotient> cyclic_quotients(const AbelianGroup& G) {
    std::vector<CyclicQuotient> out;
    for (auto& N : all_subgroups(G))
        if (quotient_is_cyclic(G, N)) {
            Int ord = G.order() / static_cast<Int>(N.size());
            out.push_back({std::move(N), ord});
        }
    std::sort(out.begin(), out.end(), [](const CyclicQuotient& a, const CyclicQuotient& b) {
        return a.order != b.order ? a.order < b.order : a.kernel < b.kernel;
    });
    return out;
}

Int char_value(const AbelianGroup& G, const Character& chi, const Elem& g) {
    G.check(g);
    G.check(chi.c);
    const auto& d = G.invariant_factors();
    Int E = G.exponent(), v = 0;
    for (size_t i = 0; i < d.size(); ++i)
        v = static_cast<Int>((v + static_cast<__int128>(chi.c[i]) * (E / d[i]) % E * g[i]) % E);
    return v;
}

Int char_order(const AbelianGroup& G, const Character& chi) { return element_order(G, chi.c); }

Character char_pow(const AbelianGroup& G, const Character& chi, Int k) {
    return Character{G.scale(k, chi.c)};
}

std::vector<Character> all_characters(const AbelianGroup& G) {
    std::vector<Character> out;
    out.reserve(static_cast<size_t>(G.order()));
    for (Int i = 0; i < G.order(); ++i) out.push_back(Character{G.element(i)});
    return out;
}

IndexSet char_kernel(const AbelianGroup& G, const Character& chi) {
    IndexSet out;
    for (Int i = 0; i < G.order(); ++i)
        if (char_value(G, chi, G.element(i)) == 0) out.push_back(i);
    return out;
}

PPart split_p(Int n, Int p) {
    PPart r{1, 0, n};
    while (r.m_prime % p == 0) {
        r.m_prime /= p;
        r.p_power *= p;
        ++r.k;
    }
    return r;
}

std::vector<Int> decomposition_exponents(Int n, Int p) {
    if (n == 1) return {1};
    PPart pp = split_p(n, p);
    std::set<Int> frob;  // powers of p mod m'
    Int x = 1 % pp.m_prime;
    do {
        frob.insert(x);
        x = (x * p) % pp.m_prime;
    } while (!frob.count(x));
    std::vector<Int> out;
    for (Int a = 1; a < n; ++a)
        if (gcd(a, n) == 1 && frob.count(a % pp.m_prime)) out.push_back(a);
    return out;
}

std::vector<std::vector<Character>> frobenius_orbits(const AbelianGroup& G, Int p) {
    if (!is_prime(p)) throw InputError("p must be prime");
    std::vector<char> seen(static_cast<size_t>(G.order()), 0);
    std::vector<std::vector<Character>> orbits;
    for (Int i = 0; i < G.order(); ++i) {
        if (seen[i]) continue;
        Character chi{G.element(i)};
        Int n = char_order(G, chi);
        std::vector<Character> orb;
        for (Int a : decomposition_exponents(n, p)) {
            Character psi = char_pow(G, chi, a);
            Int j = G.index(psi.c);
            if (!seen[j]) {
                seen[j] = 1;
                orb.push_back(psi);
            }
        }
        std::sort(orb.begin(), orb.end(),
                  [&](const Character& a, const Character& b) { return G.index(a.c) < G.index(b.c); });
        orbits.push_back(std::move(orb));
    }
    std::stable_sort(orbits.begin(), orbits.end(), [&](const auto& a, const auto& b) {
        Int na = char_order(G, a[0]), nb = char_order(G, b[0]);
        if (na != nb) return na < nb;
        return G.index(a[0].c) < G.index(b[0].c);
    });
    return orbits;
}

AbelianGroup sylow(const AbelianGroup& G, Int p) {
    std::vector<Int> orders;
    for (Int d : G.invariant_factors()) orders.push_back(ipow(p, val_p(d, p)));
    return AbelianGroup::from_cyclic_orders(orders);
}

AbelianGroup wedge_square_p_part(const AbelianGroup& G, Int p) {
    std::vector<Int> a;
    AbelianGroup S = sylow(G, p);
    for (Int d : S.invariant_factors()) a.push_back(val_p(d, p));
    std::sort(a.begin(), a.end());
    std::vector<Int> orders;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) orders.push_back(ipow(p, std::min(a[i], a[j])));
    return AbelianGroup::from_cyclic_orders(orders);
}

namespace {
void partitions_rec(Int n, Int maxpart, std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (Int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(Int n) {
    std::vector<std::vector<Int>> choices{{}};  // lists of cyclic prime-power orders
    for (Int q : prime_factors(n)) {
        Int a = val_p(n, q);
        std::vector<std::vector<Int>> parts, cur_out;
        std::vector<Int> cur;
        partitions_rec(a, a, cur, parts);
        for (const auto& base : choices)
            for (const auto& lam : parts) {
                auto c = base;
                for (Int x : lam) c.push_back(ipow(q, x));
                cur_out.push_back(c);
            }
        choices = std::move(cur_out);
    }
    std::vector<AbelianGroup> out;
    for (const auto& c : choices) out.push_back(AbelianGroup::from_cyclic_orders(c));
    return out;
}

}  // namespace zpg
