#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "zpg/explicit.hpp"

namespace zpg {

namespace {
Int mulmod(Int a, Int b, Int m) { return static_cast<Int>(mod(static_cast<Int>((static_cast<__int128>(a) * b) % m), m)); }
}  // namespace

ExplicitModule::ExplicitModule(Int p, std::vector<Int> exps, AbelianGroup gamma, std::vector<Mat> action)
    : p_(p), a_(std::move(exps)), gamma_(std::move(gamma)), action_(std::move(action)) {
    if (!is_prime(p_)) throw InputError("ExplicitModule: p must be prime");
    Int top = 1;
    for (Int x : a_) {
        if (x < 1) throw InputError("ExplicitModule: cyclic exponents must be >= 1");
        top = std::max(top, x);
        Int m = ipow(p_, x);
        mods_.push_back(m);
        if (size_ > (Int(1) << 62) / m) throw InputError("ExplicitModule: too large");
        size_ *= m;
    }
    R_ = Zpn(p_, top);
    if (action_.size() != gamma_.rank()) throw InputError("ExplicitModule: one matrix per Gamma generator");
    size_t k = a_.size();
    for (auto& A : action_) {
        if (A.size() != k) throw InputError("ExplicitModule: action matrix shape");
        for (auto& row : A)
            if (row.size() != k) throw InputError("ExplicitModule: action matrix shape");
        A = reduce_rows(A);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                if (a_[i] > a_[j] && A[i][j] % ipow(p_, a_[i] - a_[j]) != 0)
                    throw InputError("ExplicitModule: action entry violates divisibility");
    }
    for (size_t i = 0; i < action_.size(); ++i) {
        for (size_t j = i + 1; j < action_.size(); ++j)
            if (compose(action_[i], action_[j]) != compose(action_[j], action_[i]))
                throw InputError("ExplicitModule: action matrices do not commute");
        Mat P = reduce_rows(identity_mat(k));
        for (Int t = 0; t < gamma_.invariant_factors()[i]; ++t) P = compose(P, action_[i]);
        if (P != reduce_rows(identity_mat(k))) throw InputError("ExplicitModule: Gamma relation fails");
    }
}

ExplicitModule ExplicitModule::zero(Int p, const AbelianGroup& gamma) {
    return ExplicitModule(p, {}, gamma, std::vector<Mat>(gamma.rank()));
}

Vec ExplicitModule::reduce(Vec x) const {
    for (size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i], mods_[i]);
    return x;
}

Mat ExplicitModule::reduce_rows(Mat A) const {
    for (size_t i = 0; i < A.size(); ++i)
        for (auto& v : A[i]) v = mod(v, mods_[i]);
    return A;
}

Int ExplicitModule::index(const Vec& x) const {
    Int idx = 0;
    for (size_t i = 0; i < a_.size(); ++i) idx = idx * mods_[i] + x[i];
    return idx;
}

Vec ExplicitModule::element(Int idx) const {
    Vec x(a_.size());
    for (size_t i = a_.size(); i-- > 0;) {
        x[i] = idx % mods_[i];
        idx /= mods_[i];
    }
    return x;
}

Vec ExplicitModule::add(const Vec& x, const Vec& y) const {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = (x[i] + y[i]) % mods_[i];
    return r;
}

Vec ExplicitModule::sub(const Vec& x, const Vec& y) const {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = mod(x[i] - y[i], mods_[i]);
    return r;
}

Vec ExplicitModule::scale(Int c, const Vec& x) const {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = mulmod(mod(c, mods_[i]), x[i], mods_[i]);
    return r;
}

Vec ExplicitModule::apply(const Mat& A, const Vec& x) const {
    Vec y(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i) {
        Int m = mods_[i], s = 0;
        for (size_t j = 0; j < x.size(); ++j) s = (s + mulmod(A[i][j], x[j], m)) % m;
        y[i] = s;
    }
    return y;
}

Mat ExplicitModule::compose(const Mat& A, const Mat& B) const {
    size_t r = A.size(), mid = B.size(), c = mid ? B[0].size() : (r ? A[0].size() : 0);
    if (mid == 0) c = a_.size();
    Mat C = zero_mat(r, c);
    for (size_t i = 0; i < r; ++i) {
        Int m = mods_[i];
        for (size_t t = 0; t < mid; ++t) {
            Int x = A[i][t] % m;
            if (!x) continue;
            for (size_t j = 0; j < c; ++j) C[i][j] = (C[i][j] + mulmod(x, B[t][j], m)) % m;
        }
    }
    return C;
}

Mat ExplicitModule::act(const Elem& g) const {
    gamma_.check(g);
    Mat P = reduce_rows(identity_mat(a_.size()));
    for (size_t i = 0; i < g.size(); ++i)
        for (Int t = 0; t < g[i]; ++t) P = compose(P, action_[i]);
    return P;
}

void ExplicitModule::require_enumerable() const {
    if (size_ > kModuleCap) throw InputError("module has more than 4096 elements; enumeration refused");
}

ExplicitModule direct_sum(const ExplicitModule& A, const ExplicitModule& B) {
    if (A.p() != B.p() || !(A.gamma() == B.gamma())) throw InputError("direct_sum: incompatible modules");
    std::vector<Int> ex = A.exps();
    ex.insert(ex.end(), B.exps().begin(), B.exps().end());
    size_t ka = A.ncoords(), kb = B.ncoords();
    std::vector<Mat> act;
    for (size_t g = 0; g < A.gamma().rank(); ++g) {
        Mat M = zero_mat(ka + kb, ka + kb);
        for (size_t i = 0; i < ka; ++i)
            for (size_t j = 0; j < ka; ++j) M[i][j] = A.action()[g][i][j];
        for (size_t i = 0; i < kb; ++i)
            for (size_t j = 0; j < kb; ++j) M[ka + i][ka + j] = B.action()[g][i][j];
        act.push_back(std::move(M));
    }
    return ExplicitModule(A.p(), ex, A.gamma(), act);
}

Vec apply_map(const ExplicitModule& N, const Mat& phi, const Vec& x) { return N.apply(phi, x); }

Mat compose_maps(const ExplicitModule& target, const Mat& A, const Mat& B) { return target.compose(A, B); }

bool maps_equal(const ExplicitModule& N, const Mat& A, const Mat& B) { return N.reduce_rows(A) == N.reduce_rows(B); }

bool is_equivariant(const ExplicitModule& M, const ExplicitModule& N, const Mat& phi) {
    for (size_t g = 0; g < M.gamma().rank(); ++g) {
        Mat left = N.compose(N.action()[g], phi);
        Mat right = N.compose(phi, M.action()[g]);
        if (!maps_equal(N, left, right)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- sets

IndexSet all_elements(const ExplicitModule& M) {
    M.require_enumerable();
    IndexSet s(static_cast<size_t>(M.size()));
    for (Int i = 0; i < M.size(); ++i) s[i] = i;
    return s;
}

IndexSet image_set(const ExplicitModule& M, const ExplicitModule& N, const Mat& phi, const IndexSet& S) {
    N.require_enumerable();
    std::vector<char> in(static_cast<size_t>(N.size()), 0);
    for (Int i : S) in[N.index(N.apply(phi, M.element(i)))] = 1;
    IndexSet out;
    for (Int i = 0; i < N.size(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

IndexSet kernel_set(const ExplicitModule& M, const ExplicitModule& N, const Mat& phi) {
    M.require_enumerable();
    IndexSet out;
    for (Int i = 0; i < M.size(); ++i)
        if (N.index(N.apply(phi, M.element(i))) == 0) out.push_back(i);
    return out;
}

namespace {
// Subgroup closure from an initial subgroup under addition of the given generators.
IndexSet closure(const ExplicitModule& M, const IndexSet& start, const std::vector<Vec>& gens) {
    M.require_enumerable();
    std::vector<char> in(static_cast<size_t>(M.size()), 0);
    std::vector<Int> queue;
    for (Int i : start) {
        in[i] = 1;
        queue.push_back(i);
    }
    if (queue.empty()) {
        in[0] = 1;
        queue.push_back(0);
    }
    for (size_t h = 0; h < queue.size(); ++h) {
        Vec x = M.element(queue[h]);
        for (const auto& g : gens) {
            Int j = M.index(M.add(x, g));
            if (!in[j]) {
                in[j] = 1;
                queue.push_back(j);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<Vec> greedy_generators(const ExplicitModule& M, const IndexSet& S) {
    std::vector<Vec> gens;
    IndexSet span{0};
    for (Int i : S) {
        if (std::binary_search(span.begin(), span.end(), i)) continue;
        gens.push_back(M.element(i));
        span = closure(M, span, {gens.back()});
        if (span.size() == S.size()) break;
    }
    return gens;
}
}  // namespace

IndexSet set_sum(const ExplicitModule& M, const IndexSet& A, const IndexSet& B) {
    if (A.size() < B.size()) return closure(M, B, greedy_generators(M, A));
    return closure(M, A, greedy_generators(M, B));
}

IndexSet set_intersection(const IndexSet& A, const IndexSet& B) {
    IndexSet out;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const IndexSet& outer, const IndexSet& inner) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

IndexSet submodule_generated(const ExplicitModule& M, const std::vector<Vec>& gens) {
    std::vector<Vec> all;
    const AbelianGroup& G = M.gamma();
    std::vector<Mat> acts;
    for (Int i = 0; i < G.order(); ++i) acts.push_back(M.act(G.element(i)));
    for (const auto& x : gens)
        for (const auto& A : acts) all.push_back(M.apply(A, M.reduce(x)));
    return closure(M, {}, all);
}

std::vector<IndexSet> all_submodules(const ExplicitModule& M) {
    M.require_enumerable();
    std::vector<IndexSet> cyclic;
    std::set<IndexSet> seen_c;
    for (Int i = 0; i < M.size(); ++i) {
        IndexSet c = submodule_generated(M, {M.element(i)});
        if (seen_c.insert(c).second) cyclic.push_back(std::move(c));
    }
    std::set<IndexSet> all{IndexSet{0}};
    std::vector<IndexSet> queue{IndexSet{0}};
    for (size_t h = 0; h < queue.size(); ++h)
        for (const auto& c : cyclic) {
            if (set_contains(queue[h], c)) continue;
            IndexSet s = set_sum(M, queue[h], c);
            if (all.insert(s).second) queue.push_back(std::move(s));
        }
    return {all.begin(), all.end()};
}

ModuleType subquotient_type(const ExplicitModule& M, const Idempotent& e, const IndexSet& A, const IndexSet& B) {
    if (!set_contains(A, B)) throw InputError("subquotient_type: B must lie in A");
    Mat pi = uniformizer_action(M, e);
    std::vector<Int> sizes;  // |pi^j A + B| / |B|
    IndexSet S = A;
    const size_t nb = B.size();
    while (true) {
        IndexSet T = set_sum(M, S, B);
        size_t r = T.size() / nb;
        sizes.push_back(static_cast<Int>(r));
        if (r == 1) break;
        IndexSet next = image_set(M, M, pi, S);
        if (next == S) throw InputError("subquotient_type: uniformizer is not topologically nilpotent");
        S = std::move(next);
    }
    Partition conj;
    for (size_t j = 1; j < sizes.size(); ++j) {
        Int ratio = sizes[j - 1] / sizes[j];
        if (ratio * sizes[j] != sizes[j - 1]) throw InputError("subquotient_type: filtration not by Q-powers");
        Int lg = 0, x = ratio;
        while (x % e.Q == 0) {
            x /= e.Q;
            ++lg;
        }
        if (x != 1) throw InputError("subquotient_type: filtration quotient is not a power of Q");
        if (!conj.empty() && lg > conj.back()) throw InputError("subquotient_type: filtration not monotone");
        conj.push_back(lg);
    }
    while (!conj.empty() && conj.back() == 0) conj.pop_back();
    return make_type(e.Q, conjugate(conj));
}

Int orbit_count(const ExplicitModule& M, const IndexSet& A, const IndexSet& B) {
    if (!set_contains(A, B)) throw InputError("orbit_count: B must lie in A");
    std::vector<Int> coset(static_cast<size_t>(M.size()), -1);
    Int ncos = 0;
    std::vector<Vec> belems;
    for (Int b : B) belems.push_back(M.element(b));
    std::vector<Int> rep;
    for (Int a : A) {
        if (coset[a] >= 0) continue;
        Vec x = M.element(a);
        for (const auto& b : belems) coset[M.index(M.add(x, b))] = ncos;
        rep.push_back(a);
        ++ncos;
    }
    std::vector<Int> parent(static_cast<size_t>(ncos));
    for (Int i = 0; i < ncos; ++i) parent[i] = i;
    std::function<Int(Int)> find = [&](Int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& G : M.action())
        for (Int c = 0; c < ncos; ++c) {
            Int img = M.index(M.apply(G, M.element(rep[c])));
            Int d = coset[img];
            if (d < 0) throw InputError("orbit_count: A is not Gamma-stable");
            parent[find(c)] = find(d);
        }
    Int k = 0;
    for (Int c = 0; c < ncos; ++c)
        if (find(c) == c) ++k;
    return k;
}

// ---------------------------------------------------------------- homomorphisms

namespace {
struct HomSystem {
    Zpn R;
    size_t k = 0, l = 0;
    std::vector<Int> shift, rad;  // per unknown u = i*k + j
    std::vector<Vec> gens;        // kernel generators, reduced mod rad
    Int log_size = 0;             // log_p |Hom|
};

HomSystem build_hom_system(const ExplicitModule& M, const ExplicitModule& N) {
    if (M.p() != N.p() || !(M.gamma() == N.gamma())) throw InputError("hom: incompatible modules");
    HomSystem S;
    S.k = M.ncoords();
    S.l = N.ncoords();
    Int Nb = 1;
    for (Int a : M.exps()) Nb = std::max(Nb, a);
    for (Int b : N.exps()) Nb = std::max(Nb, b);
    S.R = Zpn(M.p(), Nb);
    size_t cols = S.k * S.l;
    if (cols == 0) return S;
    const auto& a = M.exps();
    const auto& b = N.exps();
    for (size_t i = 0; i < S.l; ++i)
        for (size_t j = 0; j < S.k; ++j) {
            S.shift.push_back(std::max<Int>(b[i] - a[j], 0));
            S.rad.push_back(ipow(M.p(), std::min(a[j], b[i])));
        }
    Mat L;
    for (size_t g = 0; g < M.gamma().rank(); ++g) {
        const Mat& A = M.action()[g];
        const Mat& B = N.action()[g];
        for (size_t i = 0; i < S.l; ++i)
            for (size_t c = 0; c < S.k; ++c) {
                Vec row(cols, 0);
                for (size_t j = 0; j < S.k; ++j)  // (phi A)_{ic}
                    row[i * S.k + j] = S.R.add(row[i * S.k + j], S.R.mul(S.R.ppow(S.shift[i * S.k + j]), A[j][c]));
                for (size_t s = 0; s < S.l; ++s)  // (B phi)_{ic}
                    row[s * S.k + c] = S.R.sub(row[s * S.k + c], S.R.mul(B[i][s], S.R.ppow(S.shift[s * S.k + c])));
                Int sc = S.R.ppow(Nb - b[i]);
                for (auto& v : row) v = S.R.mul(v, sc);
                L.push_back(std::move(row));
            }
    }
    std::vector<Vec> kg;
    if (L.empty()) {
        for (size_t u = 0; u < cols; ++u) {
            Vec e(cols, 0);
            e[u] = 1;
            kg.push_back(e);
        }
    } else {
        kg = kernel_generators(S.R, L);
    }
    std::vector<Vec> with_k = kg;
    Int klog = 0;
    for (size_t u = 0; u < cols; ++u) {
        Vec e(cols, 0);
        e[u] = S.rad[u];
        with_k.push_back(e);
        klog += Nb - val_p(S.rad[u], M.p());
    }
    S.log_size = Lattice(S.R, cols, with_k).log_size() - klog;
    for (auto& g : kg) {
        for (size_t u = 0; u < cols; ++u) g[u] = mod(g[u], S.rad[u]);
        if (std::any_of(g.begin(), g.end(), [](Int x) { return x != 0; })) S.gens.push_back(g);
    }
    return S;
}

Mat phi_from_t(const HomSystem& S, const ExplicitModule& N, const Vec& t) {
    Mat phi = zero_mat(S.l, S.k);
    for (size_t i = 0; i < S.l; ++i)
        for (size_t j = 0; j < S.k; ++j) phi[i][j] = t[i * S.k + j] * ipow(N.p(), S.shift[i * S.k + j]);
    return N.reduce_rows(phi);
}
}  // namespace

BigInt hom_size_oracle(const ExplicitModule& M, const ExplicitModule& N) {
    HomSystem S = build_hom_system(M, N);
    return boost::multiprecision::pow(BigInt(M.p()), static_cast<unsigned>(S.log_size));
}

void for_each_hom(const ExplicitModule& M, const ExplicitModule& N, const std::function<void(const Mat&)>& fn) {
    HomSystem S = build_hom_system(M, N);
    size_t cols = S.k * S.l;
    if (cols == 0) {
        fn(zero_mat(S.l, S.k));
        return;
    }
    if (S.log_size * std::log2(static_cast<double>(M.p())) > 22.0 + 1e-9)
        throw InputError("for_each_hom: Hom group too large to enumerate");
    // Embed prod Z/rad_u into (Z/p^Nb)^cols by scaling; the Howell rows of the image then
    // parametrize Hom uniquely with coefficients below p^(Nb - pivot valuation).
    const Zpn& R = S.R;
    std::vector<Int> up(cols);
    for (size_t u = 0; u < cols; ++u) up[u] = R.N - val_p(S.rad[u], M.p());
    std::vector<Vec> gens;
    for (const auto& g : S.gens) {
        Vec v(cols);
        for (size_t u = 0; u < cols; ++u) v[u] = R.mul(g[u], R.ppow(up[u]));
        gens.push_back(v);
    }
    Lattice L(R, cols, gens);
    const auto& rows = L.rows();
    std::vector<Int> radix;
    Int total = 1;
    for (const auto& r : rows) {
        auto it = std::find_if(r.begin(), r.end(), [](Int x) { return x != 0; });
        radix.push_back(ipow(M.p(), R.N - R.val(*it)));
        total *= radix.back();
    }
    if (total != ipow(M.p(), S.log_size)) throw InternalError("for_each_hom: parametrization size mismatch");
    std::vector<Int> c(rows.size(), 0);
    Vec acc(cols, 0), t(cols);
    for (Int step = 0; step < total; ++step) {
        std::fill(acc.begin(), acc.end(), 0);
        for (size_t r = 0; r < rows.size(); ++r)
            if (c[r])
                for (size_t u = 0; u < cols; ++u) acc[u] = R.add(acc[u], R.mul(c[r], rows[r][u]));
        for (size_t u = 0; u < cols; ++u) t[u] = acc[u] / R.ppow(up[u]);
        fn(phi_from_t(S, N, t));
        for (size_t r = rows.size(); r-- > 0;) {
            if (++c[r] < radix[r]) break;
            c[r] = 0;
        }
    }
}

bool is_surjective(const ExplicitModule& M, const ExplicitModule& N, const Mat& phi) {
    size_t l = N.ncoords();
    if (l == 0) return true;
    const Zpn& R = N.ring();
    std::vector<Vec> gens;
    for (size_t j = 0; j < M.ncoords(); ++j) {
        Vec c(l);
        for (size_t i = 0; i < l; ++i) c[i] = phi[i][j];
        gens.push_back(c);
    }
    for (size_t i = 0; i < l; ++i) {
        Vec c(l, 0);
        c[i] = ipow(N.p(), N.exps()[i]);
        gens.push_back(c);
    }
    return Lattice(R, l, gens).log_size() == static_cast<Int>(l) * R.N;
}

OracleCounts oracle_counts(const ExplicitModule& M, const ExplicitModule& N) {
    OracleCounts oc;
    oc.hom = hom_size_oracle(M, N);
    BigInt sur = 0;
    for_each_hom(M, N, [&](const Mat& phi) {
        if (is_surjective(M, N, phi)) ++sur;
    });
    oc.sur = sur;
    return oc;
}

Quotient quotient_module(const ExplicitModule& M, const IndexSet& U) {
    size_t k = M.ncoords();
    const Zpn& R = M.ring();
    std::vector<Vec> cols = greedy_generators(M, U);
    for (size_t i = 0; i < k; ++i) {
        Vec c(k, 0);
        c[i] = ipow(M.p(), M.exps()[i]);
        c[i] = R.red(c[i]);
        cols.push_back(c);
    }
    Mat G = zero_mat(k, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < k; ++i) G[i][j] = cols[j][i];
    Quotient q;
    if (k == 0) {
        q.Q = ExplicitModule::zero(M.p(), M.gamma());
        return q;
    }
    Smith S = smith(R, G, true, false);
    std::vector<size_t> keep;
    std::vector<Int> ex;
    for (size_t i = 0; i < k; ++i)
        if (S.vals[i] > 0) {
            keep.push_back(i);
            ex.push_back(S.vals[i]);
        }
    std::vector<Mat> act;
    for (const auto& A : M.action()) {
        Mat T = mat_mul(R, mat_mul(R, S.U, A), S.Uinv);
        Mat Ak = zero_mat(keep.size(), keep.size());
        for (size_t a = 0; a < keep.size(); ++a)
            for (size_t b = 0; b < keep.size(); ++b) Ak[a][b] = T[keep[a]][keep[b]];
        act.push_back(Ak);
    }
    q.Q = ExplicitModule(M.p(), ex, M.gamma(), act);
    q.proj = zero_mat(keep.size(), k);
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t j = 0; j < k; ++j) q.proj[a][j] = S.U[keep[a]][j];
    q.proj = q.Q.reduce_rows(q.proj);
    q.lift = zero_mat(k, keep.size());
    for (size_t i = 0; i < k; ++i)
        for (size_t b = 0; b < keep.size(); ++b) q.lift[i][b] = S.Uinv[i][keep[b]];
    q.lift = M.reduce_rows(q.lift);
    return q;
}

ABSets ab_sets(const ExplicitModule& H, const Elem& g) {
    Int ord = element_order(H.gamma(), g);
    size_t k = H.ncoords();
    Mat A = H.act(g);
    Mat I = H.reduce_rows(identity_mat(k));
    Mat T = zero_mat(k, k), Nm = zero_mat(k, k), P = I;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) T[i][j] = I[i][j] - A[i][j];
    T = H.reduce_rows(T);
    for (Int j = 1; j <= ord; ++j) {
        P = H.compose(P, A);
        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < k; ++c) Nm[r][c] += P[r][c];
    }
    Nm = H.reduce_rows(Nm);
    ABSets s;
    IndexSet all = all_elements(H);
    s.Aplus = kernel_set(H, H, T);
    s.Aminus = kernel_set(H, H, Nm);
    s.A0 = set_intersection(s.Aplus, s.Aminus);
    s.Bminus = image_set(H, H, T, all);
    s.Bplus = image_set(H, H, Nm, all);
    return s;
}

}  // namespace zpg
