#include <algorithm>
#include <functional>
#include <set>

#include "zpg/schur.hpp"

namespace zpg {

namespace {
Int log2_exact(Int x) {
    if (x < 1 || (x & (x - 1))) throw InputError("expected a power of 2, got " + std::to_string(x));
    Int k = 0;
    while (x > 1) {
        x >>= 1;
        ++k;
    }
    return k;
}
}  // namespace

std::vector<Int> parse_two_group(const std::string& s) {
    std::vector<Int> orders = parse_int_list(s);
    for (Int x : orders) log2_exact(x);
    return orders;
}

TwoCover::TwoCover(const std::vector<Int>& orders) {
    for (Int x : orders) {
        Int k = log2_exact(x);
        if (k > 0) d_.push_back(k);
    }
    std::sort(d_.rbegin(), d_.rend());
    if (d_.size() > 8) throw InputError("TwoCover: rank above 8");
    for (Int di : d_) hmod_.push_back(Int(1) << di);
    for (size_t i = 0; i < d_.size(); ++i)
        for (size_t j = i + 1; j < d_.size(); ++j) {
            pairs_.emplace_back(i, j);
            kmod_.push_back(Int(1) << (d_[j] - 1));
        }
}

Int TwoCover::kernel_size() const {
    Int s = 1;
    for (Int m : kmod_) s *= m;
    return s;
}

Int TwoCover::kernel_exponent() const {
    Int e = 1;
    for (Int m : kmod_) e = std::max(e, m);
    return e;
}

Int TwoCover::order() const {
    Int s = kernel_size();
    for (Int m : hmod_) s *= m;
    return s;
}

TwoCover::Elt TwoCover::identity() const { return Elt{std::vector<Int>(r(), 0), std::vector<Int>(npairs(), 0)}; }

TwoCover::Elt TwoCover::mul(const Elt& x, const Elt& y) const {
    Elt z;
    z.a.resize(r());
    z.c.resize(npairs());
    for (size_t i = 0; i < r(); ++i) z.a[i] = (x.a[i] + y.a[i]) % hmod_[i];
    // collecting y's x_i past x's x_j (i < j) produces [x_i, x_j]^{-a_j b_i}
    for (size_t t = 0; t < npairs(); ++t) {
        auto [i, j] = pairs_[t];
        z.c[t] = mod(x.c[t] + y.c[t] - x.a[j] * y.a[i], kmod_[t]);
    }
    return z;
}

TwoCover::Elt TwoCover::sigma(const Elt& x) const {
    Elt z = x;
    for (size_t i = 0; i < r(); ++i) z.a[i] = mod(-x.a[i], hmod_[i]);
    return z;
}

TwoCover::Elt TwoCover::pow(const Elt& x, Int k) const {
    Elt r0 = identity(), b = x;
    while (k > 0) {
        if (k & 1) r0 = mul(r0, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r0;
}

TwoCover::Elt TwoCover::from_index(Int idx) const {
    Elt z = identity();
    for (size_t t = npairs(); t-- > 0;) {
        z.c[t] = idx % kmod_[t];
        idx /= kmod_[t];
    }
    for (size_t i = r(); i-- > 0;) {
        z.a[i] = idx % hmod_[i];
        idx /= hmod_[i];
    }
    return z;
}

TwoCover::Elt TwoCover::generator(size_t i) const {
    Elt z = identity();
    z.a.at(i) = 1;
    return z;
}

TwoCover::Elt TwoCover::central(const std::vector<Int>& c) const {
    Elt z = identity();
    z.c = c;
    return z;
}

std::vector<Int> TwoCover::kernel_add(const std::vector<Int>& x, const std::vector<Int>& y) const {
    std::vector<Int> z(npairs());
    for (size_t t = 0; t < npairs(); ++t) z[t] = (x[t] + y[t]) % kmod_[t];
    return z;
}

std::vector<Int> TwoCover::kernel_scale(Int k, const std::vector<Int>& x) const {
    std::vector<Int> z(npairs());
    for (size_t t = 0; t < npairs(); ++t) z[t] = mod(mod(k, kmod_[t]) * x[t], kmod_[t]);
    return z;
}

Int TwoCover::kernel_index(const std::vector<Int>& x) const {
    Int idx = 0;
    for (size_t t = 0; t < npairs(); ++t) idx = idx * kmod_[t] + x[t];
    return idx;
}

std::vector<Int> TwoCover::kernel_element(Int idx) const {
    std::vector<Int> x(npairs());
    for (size_t t = npairs(); t-- > 0;) {
        x[t] = idx % kmod_[t];
        idx /= kmod_[t];
    }
    return x;
}

std::vector<Int> TwoCover::class_exponents(Int cls) const {
    std::vector<Int> a(r());
    for (size_t i = 0; i < r(); ++i) a[i] = (cls >> i) & 1;
    return a;
}

std::vector<Int> square_of_lift(const TwoCover& C, const std::vector<Int>& a) {
    if (a.size() != C.r()) throw InputError("square_of_lift: exponent vector length");
    TwoCover::Elt x = C.identity();
    for (size_t i = 0; i < C.r(); ++i) x.a[i] = mod(a[i], Int(1) << C.d()[i]);
    // (x sigma)(x sigma) = x sigma(x)
    TwoCover::Elt s = C.mul(x, C.sigma(x));
    if (s.a != std::vector<Int>(C.r(), 0)) throw InternalError("square_of_lift: square left the kernel");
    return s.c;
}

std::vector<Int> square_of_lift_closed(const TwoCover& C, const std::vector<Int>& a) {
    std::vector<Int> c(C.npairs());
    for (size_t t = 0; t < C.npairs(); ++t) {
        auto [i, j] = C.pair(t);
        c[t] = mod(a[i] * a[j], C.kernel_mods()[t]);
    }
    return c;
}

Int q_exponent(const TwoCover& C, Int q) {
    if (q % 2 == 0 || q < 1) throw InputError("q must be a positive odd integer");
    Int E = C.kernel_exponent();
    if (E == 1) return 0;
    Int qinv = 1;
    while (mod(qinv * q, E) != 1) qinv += 2;
    return mod(((q - 1) / 2) % E * qinv, E);
}

std::vector<Int> w_map(const TwoCover& C, Int q, const std::vector<Int>& m) {
    if (static_cast<Int>(m.size()) != C.nclasses()) throw InputError("w_map: one coordinate per class");
    Int t = q_exponent(C, q);
    std::vector<Int> acc(C.npairs(), 0);
    for (Int cls = 0; cls < C.nclasses(); ++cls) {
        if (m[cls] < 0) throw InputError("w_map: negative coordinate");
        acc = C.kernel_add(acc, C.kernel_scale(m[cls], square_of_lift(C, C.class_exponents(cls))));
    }
    return C.kernel_scale(t, acc);
}

Int nr_pow(const TwoCover& C, Int q, const std::vector<Int>& x) {
    if (q % 2 == 0) throw InputError("q must be odd");
    Int v = val_p(q - 1, 2);
    Int count = 1;
    for (size_t t = 0; t < C.npairs(); ++t) {
        Int m = C.kernel_mods()[t];
        if (m == 1) continue;
        Int g = std::min(Int(1) << std::min<Int>(v, 62), m);
        if (x[t] % g != 0) return 0;
        count *= g;
    }
    return count;
}

Int nr_pow_brute(const TwoCover& C, Int q, const std::vector<Int>& x) {
    if (q % 2 == 0) throw InputError("q must be odd");
    TwoCover::Elt target = C.central(x);
    Int count = 0;
    for (Int i = 0; i < C.kernel_size(); ++i)
        if (C.pow(C.central(C.kernel_element(i)), q - 1) == target) ++count;
    return count;
}

bool in_lattice_kernel(const TwoCover& C, const std::vector<Int>& m) {
    Int total = 0, res = 0;
    for (Int cls = 0; cls < C.nclasses(); ++cls) {
        total += m[cls];
        if (m[cls] % 2) res ^= cls;
    }
    return total % 2 == 0 && res == 0;
}

namespace {
// dp over classes: counts[(res * K + S)] for each total s <= n
std::vector<std::vector<BigInt>> lattice_dp(size_t r, const std::vector<Int>& square_idx, const TwoCover* C,
                                            Int K, Int n) {
    Int ncls = Int(1) << r;
    Int L = 2;
    if (C) L = std::max<Int>(2, C->kernel_exponent());
    size_t nstates = static_cast<size_t>(ncls * K);
    std::vector<std::vector<BigInt>> dp(static_cast<size_t>(n + 1), std::vector<BigInt>(nstates));
    dp[0][0] = 1;
    for (Int cls = 0; cls < ncls; ++cls) {
        // shifted state tables per residue rho of the copy count mod L
        std::vector<std::vector<Int>> shift(static_cast<size_t>(L), std::vector<Int>(nstates));
        for (Int rho = 0; rho < L; ++rho)
            for (Int st = 0; st < static_cast<Int>(nstates); ++st) {
                Int res = st / K, S = st % K;
                Int nres = (rho & 1) ? (res ^ cls) : res;
                Int nS = S;
                if (C) {
                    auto v = C->kernel_add(C->kernel_element(S), C->kernel_scale(rho, C->kernel_element(square_idx[cls])));
                    nS = C->kernel_index(v);
                }
                shift[rho][st] = nres * K + nS;
            }
        std::vector<std::vector<BigInt>> next(static_cast<size_t>(n + 1), std::vector<BigInt>(nstates));
        // G[rho][s] = sum_{j >= 0} dp[s - rho - jL]
        std::vector<std::vector<std::vector<BigInt>>> G(static_cast<size_t>(L));
        for (Int rho = 0; rho < L; ++rho) {
            G[rho].assign(static_cast<size_t>(n + 1), std::vector<BigInt>(nstates));
            for (Int s = rho; s <= n; ++s) {
                G[rho][s] = dp[s - rho];
                if (s - L >= rho)
                    for (size_t st = 0; st < nstates; ++st) G[rho][s][st] += G[rho][s - L][st];
            }
        }
        for (Int s = 0; s <= n; ++s)
            for (Int rho = 0; rho < L && rho <= s; ++rho)
                for (size_t st = 0; st < nstates; ++st)
                    if (G[rho][s][st] != 0) next[s][shift[rho][st]] += G[rho][s][st];
        dp = std::move(next);
    }
    return dp;
}
}  // namespace

BigInt lattice_kernel_count(size_t r, Int n) {
    if (n < 0) throw InputError("n must be >= 0");
    if (n % 2) return 0;
    if (r > 8) throw InputError("rank above 8");
    auto dp = lattice_dp(r, {}, nullptr, 1, n);
    return dp[n][0];
}

std::vector<BigInt> lattice_kernel_by_square_sum(const TwoCover& C, Int n) {
    if (n < 0) throw InputError("n must be >= 0");
    Int K = C.kernel_size();
    std::vector<BigInt> out(static_cast<size_t>(K));
    if (n % 2) return out;
    std::vector<Int> sq;
    for (Int cls = 0; cls < C.nclasses(); ++cls) sq.push_back(C.kernel_index(square_of_lift(C, C.class_exponents(cls))));
    auto dp = lattice_dp(C.r(), sq, &C, K, n);
    for (Int S = 0; S < K; ++S) out[S] = dp[n][S];  // residue 0 block
    return out;
}

std::map<Int, BigInt> w_fibers(const TwoCover& C, Int q, Int n) {
    Int t = q_exponent(C, q);
    auto by = lattice_kernel_by_square_sum(C, n);
    std::map<Int, BigInt> out;
    for (Int S = 0; S < C.kernel_size(); ++S)
        if (by[S] != 0) out[C.kernel_index(C.kernel_scale(t, C.kernel_element(S)))] += by[S];
    return out;
}

std::map<Int, BigInt> w_fibers_mod2(const TwoCover& C, Int q, Int n) {
    std::map<Int, BigInt> out;
    for (auto& [idx, cnt] : w_fibers(C, q, n)) {
        auto x = C.kernel_element(idx);
        for (auto& v : x) v %= 2;
        out[C.kernel_index(x)] += cnt;
    }
    return out;
}

std::vector<Int> scaled_kernel(const TwoCover& C, Int v) {
    if (v < 1) throw InputError("v must be >= 1");
    std::set<Int> s;
    Int f = Int(1) << std::min<Int>(v - 1, 62);
    for (Int i = 0; i < C.kernel_size(); ++i) s.insert(C.kernel_index(C.kernel_scale(f, C.kernel_element(i))));
    return {s.begin(), s.end()};
}

BigInt b_exact(const std::vector<Int>& H, Int q, Int n) {
    TwoCover C(H);
    Int t = q_exponent(C, q);
    auto by = lattice_kernel_by_square_sum(C, n);
    BigInt b = 0;
    for (Int S = 0; S < C.kernel_size(); ++S)
        if (by[S] != 0) b += by[S] * nr_pow(C, q, C.kernel_scale(t, C.kernel_element(S)));
    return b;
}

BigInt b_exact_enum(const std::vector<Int>& H, Int q, Int n) {
    TwoCover C(H);
    if (q % 2 == 0) throw InputError("q must be odd");
    Int K = C.nclasses();
    BigInt total = 0;
    std::vector<Int> m(static_cast<size_t>(K), 0);
    Int visited = 0;
    std::map<Int, Int> nr_cache;
    std::function<void(Int, Int)> rec = [&](Int cls, Int left) {
        if (cls == K - 1) {
            m[cls] = left;
            if (++visited > 4000000) throw InputError("b_exact_enum: too many lattice vectors");
            if (!in_lattice_kernel(C, m)) return;
            auto w = w_map(C, q, m);
            Int key = C.kernel_index(w);
            auto it = nr_cache.find(key);
            if (it == nr_cache.end()) it = nr_cache.emplace(key, nr_pow_brute(C, q, w)).first;
            total += it->second;
            return;
        }
        for (Int k = 0; k <= left; ++k) {
            m[cls] = k;
            rec(cls + 1, left - k);
        }
    };
    rec(0, n);
    return total;
}

BigInt wedge_torsion(const std::vector<Int>& H, Int v) {
    if (v < 1) throw InputError("v must be >= 1");
    TwoCover C(H);
    BigInt w = 1;
    for (Int m : C.kernel_mods()) w *= std::min<Int>(m, Int(1) << std::min<Int>(v - 1, 62));
    return w;
}

BigInt b_closed(const std::vector<Int>& H, Int v, Int n) {
    if (n % 2) return 0;
    return wedge_torsion(H, v) * lattice_kernel_count(TwoCover(H).r(), n);
}

namespace {
BigInt size_of(const std::vector<Int>& H) {
    BigInt s = 1;
    for (Int x : H) s *= x;
    return s;
}
std::vector<Int> elementary_quotient(const TwoCover& C) { return std::vector<Int>(C.r(), 2); }
}  // namespace

Rational moment_ratio(const std::vector<Int>& H, Int v) {
    TwoCover C(H);
    if (C.r() == 0) throw InputError("moment_ratio: H must be nontrivial");
    BigInt twoH = 1;
    for (Int di : C.d()) twoH *= Int(1) << (di - 1);
    return Rational(wedge_torsion(H, v), twoH);
}

Rational b_ratio_exact(const std::vector<Int>& H, Int q, Int n) {
    TwoCover C(H);
    auto E = elementary_quotient(C);
    BigInt num = b_exact(H, q, n), den = b_exact(E, q, n);
    if (den == 0) throw InputError("b_ratio: lattice kernel is empty for this n");
    return Rational(num, den) * Rational(size_of(E), size_of(H));
}

Rational b_ratio_closed(const std::vector<Int>& H, Int v, Int n) {
    TwoCover C(H);
    auto E = elementary_quotient(C);
    BigInt num = b_closed(H, v, n), den = b_closed(E, v, n);
    if (den == 0) throw InputError("b_ratio: lattice kernel is empty for this n");
    return Rational(num, den) * Rational(size_of(E), size_of(H));
}

}  // namespace zpg
