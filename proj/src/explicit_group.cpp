#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "zpg/explicit.hpp"

namespace zpg {

ExplicitGroup::ExplicitGroup(ExplicitModule H, std::vector<std::vector<Int>> cocycle)
    : H_(std::move(H)), f_(std::move(cocycle)) {
    nH_ = H_.size();
    nG_ = H_.gamma().order();
    if (nH_ * nG_ > kGroupCap) throw InputError("ExplicitGroup: more than 8192 elements");
    const AbelianGroup& G = H_.gamma();
    if (static_cast<Int>(f_.size()) != nG_) throw InputError("ExplicitGroup: cocycle table shape");
    for (const auto& row : f_)
        if (static_cast<Int>(row.size()) != nG_) throw InputError("ExplicitGroup: cocycle table shape");
    hmod_.resize(H_.ncoords());
    hplace_.resize(H_.ncoords());
    Int place = 1;
    for (size_t i = H_.ncoords(); i-- > 0;) {
        hmod_[i] = ipow(H_.p(), H_.exps()[i]);
        hplace_[i] = place;
        place *= hmod_[i];
    }
    gmul_.resize(static_cast<size_t>(nG_ * nG_));
    ginv_.resize(static_cast<size_t>(nG_));
    for (Int a = 0; a < nG_; ++a) {
        Elem ea = G.element(a);
        ginv_[a] = G.index(G.neg(ea));
        for (Int b = 0; b < nG_; ++b) gmul_[a * nG_ + b] = G.index(G.add(ea, G.element(b)));
    }
    act_.assign(static_cast<size_t>(nG_), std::vector<Int>(static_cast<size_t>(nH_)));
    for (Int g = 0; g < nG_; ++g) {
        Mat A = H_.act(G.element(g));
        for (Int h = 0; h < nH_; ++h) act_[g][h] = H_.index(H_.apply(A, H_.element(h)));
    }
    hneg_.resize(static_cast<size_t>(nH_));
    for (Int h = 0; h < nH_; ++h) hneg_[h] = H_.index(H_.sub(Vec(H_.ncoords(), 0), H_.element(h)));
    for (Int a = 0; a < nG_; ++a)
        for (Int b = 0; b < nG_; ++b) {
            if (f_[a][b] < 0 || f_[a][b] >= nH_) throw InputError("ExplicitGroup: cocycle value out of range");
            if ((a == 0 || b == 0) && f_[a][b] != 0) throw InputError("ExplicitGroup: cocycle not normalized");
        }
    for (Int a = 0; a < nG_; ++a)
        for (Int b = 0; b < nG_; ++b)
            for (Int c = 0; c < nG_; ++c) {
                Int lhs = hadd(act_[a][f_[b][c]], f_[a][gmul_[b * nG_ + c]]);
                Int rhs = hadd(f_[a][b], f_[gmul_[a * nG_ + b]][c]);
                if (lhs != rhs) throw InputError("ExplicitGroup: cocycle identity fails");
            }
}

ExplicitGroup ExplicitGroup::semidirect(const ExplicitModule& H) {
    Int n = H.gamma().order();
    return ExplicitGroup(H, std::vector<std::vector<Int>>(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0)));
}

Int ExplicitGroup::hadd(Int a, Int b) const {
    Int r = 0;
    for (size_t i = 0; i < hmod_.size(); ++i) {
        Int m = hmod_[i], pl = hplace_[i];
        Int d = ((a / pl) % m + (b / pl) % m) % m;
        r += d * pl;
    }
    return r;
}

Int ExplicitGroup::mul(Int x, Int y) const {
    Int h1 = h_of(x), g1 = g_of(x), h2 = h_of(y), g2 = g_of(y);
    Int h = hadd(hadd(h1, act_[g1][h2]), f_[g1][g2]);
    return encode(h, gmul_[g1 * nG_ + g2]);
}

Int ExplicitGroup::inv(Int x) const {
    Int h = h_of(x), g = g_of(x), gi = ginv_[g];
    return encode(act_[gi][hneg_[hadd(h, f_[g][gi])]], gi);
}

Int ExplicitGroup::pow(Int x, Int k) const {
    if (k < 0) return pow(inv(x), -k);
    Int r = 0;
    while (k) {
        if (k & 1) r = mul(r, x);
        x = mul(x, x);
        k >>= 1;
    }
    return r;
}

Int ExplicitGroup::order_of(Int x) const {
    Int y = x, k = 1;
    while (y != 0) {
        y = mul(y, x);
        ++k;
    }
    return k;
}

bool ExplicitGroup::is_split_cocycle_zero() const {
    for (const auto& row : f_)
        for (Int v : row)
            if (v) return false;
    return true;
}

// ---------------------------------------------------------------- cochains

namespace {
struct Cochains {
    Zpn R;
    size_t k = 0;
    Int nG = 1;
    std::vector<Int> a;  // exponents of H
    Mat delta2;          // rows C^3, cols C^2 (normalized), rows scaled to mod p^Nb
    std::vector<Vec> b2_gens;
    std::vector<Vec> k2_gens;
    std::vector<Vec> z2_gens;  // kernel generators
    size_t dim2() const { return static_cast<size_t>((nG - 1) * (nG - 1)) * k; }
    size_t c2(Int x, Int y) const { return static_cast<size_t>((x - 1) * (nG - 1) + (y - 1)) * k; }
};

Cochains build_cochains(const ExplicitModule& H, ExtensionCaps caps) {
    const AbelianGroup& G = H.gamma();
    if (G.order() > caps.max_gamma) throw InputError("extensions: |Gamma| above the cap");
    if (H.size() > caps.max_H) throw InputError("extensions: |H| above the cap");
    Cochains C;
    C.R = H.ring();
    C.k = H.ncoords();
    C.nG = G.order();
    C.a = H.exps();
    const Zpn& R = C.R;
    Int n = C.nG;
    size_t k = C.k;
    std::vector<Mat> act;
    std::vector<std::vector<Int>> gm(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (Int x = 0; x < n; ++x) {
        act.push_back(H.act(G.element(x)));
        for (Int y = 0; y < n; ++y) gm[x][y] = G.index(G.add(G.element(x), G.element(y)));
    }
    size_t d2 = C.dim2();
    for (size_t u = 0; u < d2; ++u) {
        Vec e(d2, 0);
        e[u] = R.red(ipow(H.p(), C.a[u % k]));
        C.k2_gens.push_back(e);
    }
    if (n == 1 || k == 0) return C;
    auto add_block = [&](Vec& row, size_t off, size_t i, Int coef) {  // row for output coordinate i
        row[off + i] = R.add(row[off + i], coef);
    };
    // delta^2 f(x,y,z) = x.f(y,z) - f(xy,z) + f(x,yz) - f(x,y)
    for (Int x = 1; x < n; ++x)
        for (Int y = 1; y < n; ++y)
            for (Int z = 1; z < n; ++z)
                for (size_t i = 0; i < k; ++i) {
                    Vec row(d2, 0);
                    size_t o = C.c2(y, z);
                    for (size_t j = 0; j < k; ++j) row[o + j] = R.add(row[o + j], act[x][i][j]);
                    if (gm[x][y] != 0) add_block(row, C.c2(gm[x][y], z), i, -1);
                    if (gm[y][z] != 0) add_block(row, C.c2(x, gm[y][z]), i, 1);
                    add_block(row, C.c2(x, y), i, -1);
                    Int sc = R.ppow(R.N - C.a[i]);
                    for (auto& v : row) v = R.mul(v, sc);
                    C.delta2.push_back(std::move(row));
                }
    C.z2_gens = kernel_generators(R, C.delta2);
    // delta^1 phi(x,y) = x.phi(y) - phi(xy) + phi(x), one column per coordinate of C^1
    for (Int t = 1; t < n; ++t)
        for (size_t j = 0; j < k; ++j) {
            Vec col(d2, 0);
            for (Int x = 1; x < n; ++x)
                for (Int y = 1; y < n; ++y) {
                    size_t o = C.c2(x, y);
                    if (y == t)
                        for (size_t i = 0; i < k; ++i) col[o + i] = R.add(col[o + i], act[x][i][j]);
                    if (gm[x][y] == t) col[o + j] = R.sub(col[o + j], 1);
                    if (x == t) col[o + j] = R.add(col[o + j], 1);
                }
            for (size_t u = 0; u < d2; ++u) col[u] = mod(col[u], ipow(H.p(), C.a[u % k]));
            C.b2_gens.push_back(std::move(col));
        }
    return C;
}

std::vector<Vec> concat(std::vector<Vec> a, const std::vector<Vec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}
}  // namespace

BigInt h2_size(const ExplicitModule& H, ExtensionCaps caps) {
    Cochains C = build_cochains(H, caps);
    if (C.nG == 1 || C.k == 0) return 1;
    Int z = Lattice(C.R, C.dim2(), concat(C.z2_gens, C.k2_gens)).log_size();
    Int b = Lattice(C.R, C.dim2(), concat(C.b2_gens, C.k2_gens)).log_size();
    if (b > z) throw InternalError("h2_size: coboundaries exceed cocycles");
    return boost::multiprecision::pow(BigInt(H.p()), static_cast<unsigned>(z - b));
}

std::vector<ExplicitGroup> enumerate_extensions(const ExplicitModule& H, ExtensionCaps caps) {
    Cochains C = build_cochains(H, caps);
    std::vector<ExplicitGroup> out;
    if (C.nG == 1 || C.k == 0) {
        out.push_back(ExplicitGroup::semidirect(H));
        return out;
    }
    size_t d2 = C.dim2();
    Lattice B(C.R, d2, concat(C.b2_gens, C.k2_gens));
    std::set<Vec> seen;
    std::vector<Vec> queue{B.reduce(Vec(d2, 0))};
    seen.insert(queue[0]);
    for (size_t h = 0; h < queue.size(); ++h)
        for (const auto& z : C.z2_gens) {
            Vec s(d2);
            for (size_t u = 0; u < d2; ++u) s[u] = C.R.add(queue[h][u], z[u]);
            s = B.reduce(s);
            if (seen.insert(s).second) queue.push_back(s);
        }
    BigInt expect = h2_size(H, caps);
    if (BigInt(queue.size()) != expect) throw InternalError("enumerate_extensions: class count mismatch");
    Int n = C.nG;
    for (const auto& v : queue) {
        std::vector<std::vector<Int>> f(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
        for (Int x = 1; x < n; ++x)
            for (Int y = 1; y < n; ++y) {
                size_t o = C.c2(x, y);
                Vec blk(v.begin() + static_cast<long>(o), v.begin() + static_cast<long>(o + C.k));
                f[x][y] = H.index(H.reduce(blk));
            }
        out.emplace_back(H, f);
    }
    return out;
}

// ---------------------------------------------------------------- conjugacy

namespace {
std::vector<Int> lifts_of_order(const ExplicitGroup& G, Int g, Int ord) {
    std::vector<Int> c;
    for (Int h = 0; h < G.H().size(); ++h) {
        Int x = G.encode(h, g);
        if (G.order_of(x) == ord) c.push_back(x);
    }
    return c;
}

// class id per element of the input list (-1 stays for elements outside)
std::vector<Int> conjugacy_labels(const ExplicitGroup& G, const std::vector<Int>& elems, Int& nclasses) {
    std::vector<Int> label(static_cast<size_t>(G.size()), -1);
    std::vector<Int> inverses(static_cast<size_t>(G.size()));
    for (Int y = 0; y < G.size(); ++y) inverses[y] = G.inv(y);
    nclasses = 0;
    for (Int x : elems) {
        if (label[x] >= 0) continue;
        for (Int y = 0; y < G.size(); ++y) {
            Int z = G.mul(G.mul(y, x), inverses[y]);
            label[z] = nclasses;
        }
        ++nclasses;
    }
    return label;
}
}  // namespace

ConjugacyStats conjugacy_stats(const ExplicitGroup& G, const Elem& g) {
    const AbelianGroup& Gm = G.gamma();
    Int gi = Gm.index(Gm.reduce(g));
    std::vector<Int> c = lifts_of_order(G, gi, element_order(Gm, Gm.element(gi)));
    ConjugacyStats st;
    st.c_size = static_cast<Int>(c.size());
    conjugacy_labels(G, c, st.d);
    return st;
}

Int splitting_count(const ExplicitGroup& G) {
    const AbelianGroup& Gm = G.gamma();
    size_t r = Gm.rank();
    std::vector<std::vector<Int>> cand(r);
    for (size_t i = 0; i < r; ++i) {
        Int gi = Gm.index(Gm.generator(i));
        Int d = Gm.invariant_factors()[i];
        for (Int h = 0; h < G.H().size(); ++h) {
            Int x = G.encode(h, gi);
            if (G.pow(x, d) == 0) cand[i].push_back(x);
        }
    }
    std::vector<Int> chosen;
    Int count = 0;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == r) {
            ++count;
            return;
        }
        for (Int x : cand[i]) {
            bool ok = true;
            for (Int y : chosen)
                if (G.mul(x, y) != G.mul(y, x)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(x);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return count;
}

namespace {
std::vector<Int> all_c(const ExplicitGroup& G) {
    const AbelianGroup& Gm = G.gamma();
    std::vector<Int> c;
    for (Int g = 0; g < Gm.order(); ++g) {
        auto part = lifts_of_order(G, g, element_order(Gm, Gm.element(g)));
        c.insert(c.end(), part.begin(), part.end());
    }
    return c;
}
}  // namespace

bool c_generates(const ExplicitGroup& G) {
    std::vector<char> in(static_cast<size_t>(G.size()), 0);
    std::vector<Int> members{0}, gens;
    in[0] = 1;
    for (Int x : all_c(G)) {
        if (in[x]) continue;
        gens.push_back(x);
        std::vector<Int> queue = members;
        for (size_t h = 0; h < queue.size(); ++h)
            for (Int s : gens) {
                Int z = G.mul(queue[h], s);
                if (!in[z]) {
                    in[z] = 1;
                    queue.push_back(z);
                }
            }
        members = std::move(queue);
        if (static_cast<Int>(members.size()) == G.size()) return true;
    }
    return static_cast<Int>(members.size()) == G.size();
}

namespace {
void require_power_unit(const ExplicitGroup& G, Int q) {
    if (q < 1 || std::gcd(q, G.gamma().order()) != 1)
        throw InputError("powering orbits: q must be a positive integer prime to |Gamma|");
}
}  // namespace

Int powering_orbits_brute(const ExplicitGroup& G, Int q) {
    require_power_unit(G, q);
    std::vector<Int> c = all_c(G);
    Int ncls = 0;
    std::vector<Int> label = conjugacy_labels(G, c, ncls);
    std::vector<Int> parent(static_cast<size_t>(ncls));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<Int(Int)> find = [&](Int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (Int x : c) {
        Int y = G.pow(x, q);
        if (label[y] < 0) throw InternalError("powering orbits: q-th power left c");
        parent[find(label[x])] = find(label[y]);
    }
    Int k = 0;
    for (Int i = 0; i < ncls; ++i)
        if (find(i) == i) ++k;
    return k;
}

Int powering_orbits_formula(const ExplicitGroup& G, Int q) {
    require_power_unit(G, q);
    const AbelianGroup& Gm = G.gamma();
    std::vector<char> done(static_cast<size_t>(Gm.order()), 0);
    Int total = 0;
    for (Int g = 0; g < Gm.order(); ++g) {
        if (done[g]) continue;
        Elem x = Gm.element(g);
        for (Int y = g; !done[y];) {
            done[y] = 1;
            x = Gm.scale(q, x);
            y = Gm.index(x);
        }
        total += conjugacy_stats(G, Gm.element(g)).d;
    }
    return total;
}

// ---------------------------------------------------------------- adapted bases

namespace {
bool acts_trivially(const ExplicitModule& H, const Elem& g) {
    return H.act(g) == H.reduce_rows(identity_mat(H.ncoords()));
}
}  // namespace

std::vector<Elem> find_adapted_basis(const ExplicitModule& H) {
    const AbelianGroup& G = H.gamma();
    if (G.order() == 1) return {G.zero()};
    std::vector<Elem> trivial;
    for (Int i = 1; i < G.order(); ++i)
        if (acts_trivially(H, G.element(i))) trivial.push_back(G.element(i));
    std::vector<Elem> basis;
    std::vector<Elem> best;
    std::function<bool(size_t, Int)> rec = [&](size_t start, Int span) {
        if (span == G.order()) {
            best = basis;
            return true;
        }
        for (size_t t = start; t < trivial.size(); ++t) {
            basis.push_back(trivial[t]);
            Int s = static_cast<Int>(subgroup_generated(G, basis).size());
            if (s == span * element_order(G, trivial[t]) && rec(t + 1, s)) return true;
            basis.pop_back();
        }
        return false;
    };
    for (Int i = 1; i < G.order(); ++i) {
        Elem g = G.element(i);
        basis = {g};
        if (rec(0, element_order(G, g))) return best;
    }
    throw InputError("find_adapted_basis: no basis with all but the first element acting trivially");
}

BigInt aut_extension_count(const ExplicitModule& H, const std::vector<Elem>& basis) {
    const AbelianGroup& G = H.gamma();
    if (basis.empty()) throw InputError("aut_extension_count: empty basis");
    Int prod = 1;
    for (const auto& b : basis) prod *= element_order(G, b);
    if (prod != G.order() || static_cast<Int>(subgroup_generated(G, basis).size()) != G.order())
        throw InputError("aut_extension_count: not a basis of Gamma");
    for (size_t j = 1; j < basis.size(); ++j)
        if (!acts_trivially(H, basis[j])) throw InputError("aut_extension_count: later basis elements must act trivially");
    ABSets s = ab_sets(H, basis[0]);
    BigInt total = static_cast<Int>(s.Aminus.size());
    for (size_t j = 1; j < basis.size(); ++j) {
        Int m = element_order(G, basis[j]);
        Int cnt = 0;
        for (Int x : s.Aplus)
            if (H.index(H.scale(m, H.element(x))) == 0) ++cnt;
        total *= cnt;
    }
    return total;
}

// ---------------------------------------------------------------- fiber products

FiberResult fiber_tools(const Idempotent& e, const ExplicitModule& N1, const ExplicitModule& N2,
                        const ExplicitModule& N3, const Mat& pi1, const Mat& pi2) {
    if (!is_equivariant(N1, N3, pi1) || !is_equivariant(N2, N3, pi2))
        throw InputError("fiber_tools: maps are not equivariant");
    if (!is_surjective(N1, N3, pi1) || !is_surjective(N2, N3, pi2))
        throw InputError("fiber_tools: maps must be surjective");
    ModuleType t1 = iso_type(N1, e), t2 = iso_type(N2, e), t3 = iso_type(N3, e);
    if (t1.rank() != t2.rank() || t2.rank() != t3.rank()) throw InputError("fiber_tools: ranks must agree");
    IndexSet ker = kernel_set(N2, N3, pi2);
    FiberResult res;
    res.rk_N3 = t3.rank();
    struct Qual {
        IndexSet U;
        Quotient q;
        Mat psi;
    };
    auto test_U = [&](const IndexSet& U, Qual& out) {
        Quotient q = quotient_module(N2, U);
        Mat pibar = compose_maps(N3, pi2, q.lift);
        bool found = false;
        Mat psi;
        for_each_hom(N1, q.Q, [&](const Mat& phi) {
            if (found) return;
            if (maps_equal(N3, compose_maps(N3, pibar, phi), pi1) && is_surjective(N1, q.Q, phi)) {
                found = true;
                psi = phi;
            }
        });
        if (found) out = Qual{U, q, psi};
        return found;
    };
    IndexSet Ustar = ker;
    for (const auto& U : all_submodules(N2)) {
        if (!set_contains(ker, U)) continue;
        Qual qu;
        if (test_U(U, qu)) {
            ++res.qualifying_U;
            Ustar = set_intersection(Ustar, U);
        }
    }
    if (res.qualifying_U == 0) throw InternalError("fiber_tools: no qualifying submodule");
    Qual star;
    if (!test_U(Ustar, star)) throw InternalError("fiber_tools: intersection of qualifying submodules fails");
    res.U_star = Ustar;
    res.common_quotient = subquotient_type(N2, e, all_elements(N2), Ustar);
    ExplicitModule S = direct_sum(N1, N2);
    S.require_enumerable();
    IndexSet X3, Xb;
    for (Int x = 0; x < N1.size(); ++x) {
        Vec vx = N1.element(x);
        Vec a3 = N3.apply(pi1, vx), ab = star.q.Q.apply(star.psi, vx);
        for (Int y = 0; y < N2.size(); ++y) {
            Vec vy = N2.element(y);
            Vec v = vx;
            v.insert(v.end(), vy.begin(), vy.end());
            Int idx = S.index(v);
            if (N3.apply(pi2, vy) == a3) X3.push_back(idx);
            if (star.q.Q.apply(star.q.proj, vy) == ab) Xb.push_back(idx);
        }
    }
    std::sort(X3.begin(), X3.end());
    std::sort(Xb.begin(), Xb.end());
    IndexSet zero{0};
    res.fiber_over_N3 = subquotient_type(S, e, X3, zero);
    res.boxtimes = subquotient_type(S, e, Xb, zero);
    res.rk_boxtimes = res.boxtimes.rank();
    return res;
}

}  // namespace zpg
