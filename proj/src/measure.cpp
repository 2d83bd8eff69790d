#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

#include "zpg/measure.hpp"
#include "zpg/zpn.hpp"

namespace zpg {

namespace {
Rational inv_pow(Int Q, Int k) {
    if (k < 0) throw InternalError("inv_pow: negative exponent");
    return Rational(BigInt(1), boost::multiprecision::pow(BigInt(Q), static_cast<unsigned>(k)));
}

void require_Q(Int Q) {
    if (!is_prime_power(Q)) throw InputError("Q must be a prime power");
}

std::pair<Int, Int> prime_and_degree(Int Q) {
    for (Int p = 2; p <= Q; ++p)
        if (Q % p == 0) {
            Int f = 0, x = Q;
            while (x % p == 0) {
                x /= p;
                ++f;
            }
            return {p, f};
        }
    throw InputError("Q must be a prime power");
}
}  // namespace

Rational z_partial(Int Q, Int K) {
    require_Q(Q);
    Rational z = 1;
    for (Int i = 2; i <= K; ++i) z *= 1 - inv_pow(Q, i);
    return z;
}

Bracket z_bracket(Int Q, Int K) {
    if (K < 2) throw InputError("z_bracket: K >= 2");
    Rational P = z_partial(Q, K);
    // prod_{i>K}(1 - Q^{-i}) >= 1 - sum_{i>K} Q^{-i} = 1 - Q^{-K}/(Q-1)
    Bracket b;
    b.hi = P;
    b.lo = P * (1 - inv_pow(Q, K) / (Q - 1));
    return b;
}

Rational measure_weight(const ModuleType& M) { return Rational(BigInt(1), aut_count(M) * M.size()); }

Bracket measure(Int Q, const ModuleType& M, Int K) {
    if (M.Q != Q) throw InputError("measure: module type has a different residue field");
    Bracket z = z_bracket(Q, K);
    Rational w = measure_weight(M);
    return Bracket{z.lo * w, z.hi * w, false};
}

Rational mass_of_length(Int Q, Int s) {
    require_Q(Q);
    Rational total = 0;
    for (const auto& lam : partitions_bounded(s, -1, -1)) {
        Int len = 0;
        for (Int x : lam) len += x;
        if (len == s) total += measure_weight(make_type(Q, lam));
    }
    return total;
}

Rational mass_of_length_closed(Int Q, Int s) {
    require_Q(Q);
    Rational den = 1;
    for (Int i = 1; i <= s; ++i) den *= 1 - inv_pow(Q, i);
    return inv_pow(Q, 2 * s) / den;
}

MomentResult moment_truncated(Int Q, const ModuleType& V, Int B, Int K) {
    require_Q(Q);
    if (V.Q != Q) throw InputError("moment: module type has a different residue field");
    if (B < V.length()) throw InputError("moment: B must be at least the length of V");
    MomentResult res;
    res.layer_terms.assign(static_cast<size_t>(B + 1), Rational(0));
    for (const auto& lam : partitions_bounded(B, -1, -1)) {
        ModuleType L = make_type(Q, lam);
        BigInt s = sur_count(L, V);
        if (s != 0) res.layer_terms[L.length()] += measure_weight(L) * s;
    }
    Rational T = 0;
    for (const auto& t : res.layer_terms) T += t;
    Bracket z = z_bracket(Q, K);
    res.partial = z.hi * T;
    res.bracket.lo = z.lo * T;
    // Heuristic tail: geometric continuation of the last layers, doubled.
    Rational tail = 0;
    bool ok = B >= 2 && res.layer_terms[B] != 0 && res.layer_terms[B - 1] != 0;
    if (ok) {
        Rational rho = res.layer_terms[B] / res.layer_terms[B - 1];
        if (B >= 3 && res.layer_terms[B - 2] != 0) rho = std::max(rho, Rational(res.layer_terms[B - 1] / res.layer_terms[B - 2]));
        if (rho < 1)
            tail = 2 * res.layer_terms[B] * rho / (1 - rho);
        else
            ok = false;
    }
    if (!ok && V.length() == 0) {
        // total mass: the closed layer formula bounds the tail rigorously by a geometric series
        Rational first = mass_of_length_closed(Q, B + 1);
        Rational ratio = inv_pow(Q, 2) / (1 - inv_pow(Q, B + 2));
        tail = first / (1 - ratio);
        ok = true;
    }
    if (!ok) throw InputError("moment: no tail estimate available at this truncation");
    res.tail_estimate = z.hi * tail;
    res.bracket.hi = z.hi * (T + tail);
    res.bracket.heuristic = V.length() != 0;
    return res;
}

std::vector<Bracket> nested_moment_brackets(Int Q, const ModuleType& V, Int B0, Int B1, Int K) {
    std::vector<Bracket> out;
    for (Int B = B0; B <= B1; ++B) {
        Bracket b = moment_truncated(Q, V, B, K).bracket;
        if (!out.empty()) {
            b.lo = std::max(b.lo, out.back().lo);
            b.hi = std::min(b.hi, out.back().hi);
        }
        out.push_back(b);
    }
    return out;
}

Rational exact_cokernel_prob(Int Q, Int n, const ModuleType& M) {
    require_Q(Q);
    if (n < 1) throw InputError("n must be >= 1");
    if (M.Q != Q) throw InputError("module type has a different residue field");
    if (M.rank() > n) return 0;  // the cokernel of an n x (n+1) matrix needs at most n generators
    Rational c = 1;
    for (Int k = 2; k <= n + 1; ++k) c *= 1 - inv_pow(Q, k);
    for (Int i = 0; i < M.rank(); ++i) c *= 1 - inv_pow(Q, n - i);
    return c * measure_weight(M);
}

// ---------------------------------------------------------------- sampler

namespace {
using Poly = std::vector<Int>;

bool divides_mod_p(const Poly& b, Poly a, Int p) {  // b monic
    size_t db = b.size() - 1;
    for (size_t i = a.size(); i-- > db;) {
        Int c = mod(a[i], p);
        if (!c) continue;
        for (size_t j = 0; j <= db; ++j) a[i - db + j] = mod(a[i - db + j] - c * b[j], p);
    }
    for (size_t i = 0; i < std::min(db, a.size()); ++i)
        if (mod(a[i], p)) return false;
    return true;
}

Poly find_irreducible(Int p, Int f) {
    Int total = ipow(p, f);
    for (Int code = 0; code < total; ++code) {
        Poly h(static_cast<size_t>(f) + 1, 0);
        Int c = code;
        for (Int i = 0; i < f; ++i) {
            h[i] = c % p;
            c /= p;
        }
        h[f] = 1;
        if (f > 1 && h[0] == 0) continue;
        bool irreducible = true;
        for (Int d = 1; d <= f / 2 && irreducible; ++d) {
            Int cnt = ipow(p, d);
            for (Int g = 0; g < cnt && irreducible; ++g) {
                Poly q(static_cast<size_t>(d) + 1, 0);
                Int x = g;
                for (Int i = 0; i < d; ++i) {
                    q[i] = x % p;
                    x /= p;
                }
                q[d] = 1;
                if (divides_mod_p(q, h, p)) irreducible = false;
            }
        }
        if (irreducible) return h;
    }
    throw InternalError("no irreducible polynomial found");
}

struct SamplerRing {
    Int p, f, prec;
    Zpn R;
    std::vector<Mat> xpow;  // multiplication by x^i on the Galois ring, i < f
};

SamplerRing sampler_ring(Int Q, Int prec) {
    auto [p, f] = prime_and_degree(Q);
    SamplerRing S{p, f, prec, Zpn(p, prec), {}};
    Poly h = find_irreducible(p, f);
    Mat C = zero_mat(static_cast<size_t>(f), static_cast<size_t>(f));
    for (Int j = 0; j + 1 < f; ++j) C[j + 1][j] = 1;
    for (Int i = 0; i < f; ++i) C[i][f - 1] = S.R.red(-h[i]);
    Mat P = identity_mat(static_cast<size_t>(f));
    for (Int i = 0; i < f; ++i) {
        S.xpow.push_back(P);
        P = mat_mul(S.R, P, C);
    }
    return S;
}

SampleOutcome sample_with(const SamplerRing& S, Int Q, Int n, std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 gen(seq);
    std::uniform_int_distribution<Int> digit(0, S.R.m - 1);
    size_t f = static_cast<size_t>(S.f);
    size_t rows = static_cast<size_t>(n) * f, cols = static_cast<size_t>(n + 1) * f;
    Mat A = zero_mat(rows, cols);
    for (Int i = 0; i < n; ++i)
        for (Int j = 0; j <= n; ++j)
            for (size_t t = 0; t < f; ++t) {
                Int u = digit(gen);
                for (size_t r = 0; r < f; ++r)
                    for (size_t c = 0; c < f; ++c)
                        A[i * f + r][j * f + c] = S.R.add(A[i * f + r][j * f + c], S.R.mul(u, S.xpow[t][r][c]));
            }
    Smith sm = smith(S.R, A, false, false);
    std::map<Int, Int> mult;
    SampleOutcome out;
    for (Int v : sm.vals)
        if (v > 0) ++mult[v];
    std::vector<Int> parts;
    for (auto [v, m] : mult) {
        if (m % S.f) throw InternalError("sampler: Z_p-multiplicity not divisible by f");
        if (v >= S.prec) out.overflow = true;
        for (Int k = 0; k < m / S.f; ++k) parts.push_back(v);
    }
    out.type = make_type(Q, parts);
    return out;
}
}  // namespace

SampleOutcome sample_one(Int Q, Int n, Int prec, std::uint64_t seed, std::uint64_t trial) {
    if (n < 1 || prec < 1) throw InputError("sample: n >= 1 and prec >= 1 required");
    return sample_with(sampler_ring(Q, prec), Q, n, seed, trial);
}

Int default_threads() {
    if (const char* env = std::getenv("ZPG_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<Int>(std::min(hc, 64u)) : 1;
}

SampleTable sample(Int Q, Int n, Int prec, Int trials, std::uint64_t seed, Int threads) {
    if (n < 1 || prec < 1) throw InputError("sample: n >= 1 and prec >= 1 required");
    if (trials < 0) throw InputError("sample: trials >= 0");
    SamplerRing S = sampler_ring(Q, prec);
    if (threads <= 0) threads = default_threads();
    threads = std::max<Int>(1, std::min(threads, std::max<Int>(trials, 1)));
    std::vector<std::map<std::string, Int>> local(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    for (Int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            Int lo = trials * t / threads, hi = trials * (t + 1) / threads;
            for (Int i = lo; i < hi; ++i) {
                SampleOutcome o = sample_with(S, Q, n, seed, static_cast<std::uint64_t>(i));
                ++local[t][o.overflow ? std::string("OVERFLOW") : o.type.str()];
            }
        });
    for (auto& th : pool) th.join();
    SampleTable tab{Q, n, prec, seed, trials, {}, threads};
    for (auto& m : local)
        for (auto& [k, v] : m) tab.counts[k] += v;
    return tab;
}

std::map<std::string, Int> cokernel_census(Int p, Int n, Int prec) {
    if (!is_prime(p)) throw InputError("census: p must be prime");
    Zpn R(p, prec);
    Int cells = n * (n + 1);
    double total_d = std::pow(static_cast<double>(R.m), static_cast<double>(cells));
    if (total_d > 5e6) throw InputError("census: too many matrices");
    Int total = ipow(R.m, cells);
    std::map<std::string, Int> out;
    for (Int code = 0; code < total; ++code) {
        Mat A = zero_mat(static_cast<size_t>(n), static_cast<size_t>(n + 1));
        Int c = code;
        for (Int i = 0; i < n; ++i)
            for (Int j = 0; j <= n; ++j) {
                A[i][j] = c % R.m;
                c /= R.m;
            }
        Smith sm = smith(R, A, false, false);
        std::vector<Int> parts;
        bool overflow = false;
        for (Int v : sm.vals) {
            if (v >= prec) overflow = true;
            if (v > 0) parts.push_back(v);
        }
        ++out[overflow ? std::string("OVERFLOW") : make_type(p, parts).str()];
    }
    return out;
}

}  // namespace zpg
