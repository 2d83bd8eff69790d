#include "zpg/dvr.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace zpg {

bool is_prime_power(Int Q) {
    if (Q < 2) return false;
    auto ps = prime_factors(Q);
    return ps.size() == 1;
}

ModuleType make_type(Int Q, std::vector<Int> parts) {
    if (!is_prime_power(Q)) throw InputError("residue field size must be a prime power");
    for (Int x : parts)
        if (x <= 0) throw InputError("partition parts must be positive");
    std::sort(parts.rbegin(), parts.rend());
    return ModuleType{Q, std::move(parts)};
}

Int ModuleType::length() const {
    Int s = 0;
    for (Int x : parts) s += x;
    return s;
}

BigInt ModuleType::size() const { return boost::multiprecision::pow(BigInt(Q), static_cast<unsigned>(length())); }

Partition conjugate(const Partition& lam) {
    Partition c;
    if (lam.empty()) return c;
    for (Int j = 1; j <= lam.front(); ++j) {
        Int cnt = 0;
        for (Int x : lam)
            if (x >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

IdealOps ideal_ops(const ModuleType& M, Int d) {
    if (d < 0) throw InputError("ideal exponent must be >= 0");
    IdealOps r;
    std::vector<Int> im, tors, clo;
    for (Int x : M.parts) {
        if (x > d) im.push_back(x - d);
        if (d > 0) tors.push_back(std::min(x, d));
        clo.push_back(x + d);
        if (x >= d) ++r.rk_I;
    }
    r.IM = make_type(M.Q, im);
    r.M_I = make_type(M.Q, tors);
    r.M_mod_I = r.M_I;
    r.closure = make_type(M.Q, clo);
    if (d == 0) r.rk_I = 0;
    return r;
}

namespace {
void check_same_q(const ModuleType& M, const ModuleType& N) {
    if (M.Q != N.Q) throw InputError("residue field sizes differ");
}
BigInt qpow(Int Q, Int e) { return boost::multiprecision::pow(BigInt(Q), static_cast<unsigned>(e)); }
}  // namespace

BigInt hom_count(const ModuleType& M, const ModuleType& N) {
    check_same_q(M, N);
    Int e = 0;
    for (Int a : M.parts)
        for (Int b : N.parts) e += std::min(a, b);
    return qpow(M.Q, e);
}

BigInt aut_count(const ModuleType& M) {
    // Q^{sum lambda'_i^2} * prod_i prod_{k=1}^{m_i} (1 - Q^{-k})
    Partition c = conjugate(M.parts);
    Int e = 0;
    for (Int x : c) e += x * x;
    std::map<Int, Int> mult;
    for (Int x : M.parts) ++mult[x];
    BigInt num = 1;
    for (auto& [part, m] : mult)
        for (Int k = 1; k <= m; ++k) {
            num *= qpow(M.Q, k) - 1;
            e -= k;
        }
    return num * qpow(M.Q, e);
}

BigInt gaussian_binomial(Int a, Int b, Int Q) {
    if (b < 0 || a < b) throw InputError("gaussian_binomial needs a >= b >= 0");
    BigInt num = 1, den = 1;
    for (Int i = 0; i < b; ++i) {
        num *= qpow(Q, a - i) - 1;
        den *= qpow(Q, i + 1) - 1;
    }
    return num / den;
}

BigInt submodule_type_count(const ModuleType& N, const ModuleType& T) {
    check_same_q(N, T);
    if (T.rank() > N.rank()) return 0;
    for (size_t i = 0; i < T.parts.size(); ++i)
        if (T.parts[i] > N.parts[i]) return 0;
    Partition lc = conjugate(N.parts), nc = conjugate(T.parts);
    auto at = [](const Partition& c, size_t i) -> Int { return i < c.size() ? c[i] : 0; };
    BigInt r = 1;
    for (size_t i = 0; i < lc.size(); ++i) {
        Int li = at(lc, i), ni = at(nc, i), ni1 = at(nc, i + 1);
        r *= qpow(N.Q, ni1 * (li - ni));
        r *= gaussian_binomial(li - ni1, ni - ni1, N.Q);
    }
    return r;
}

std::vector<Partition> subpartitions(const Partition& N) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(size_t, Int)> rec = [&](size_t i, Int cap) {
        if (i == N.size()) {
            Partition t;
            for (Int x : cur)
                if (x > 0) t.push_back(x);
            out.push_back(t);
            return;
        }
        for (Int x = std::min(cap, N[i]); x >= 0; --x) {
            cur.push_back(x);
            rec(i + 1, x);
            cur.pop_back();
        }
    };
    rec(0, N.empty() ? 0 : N.front());
    return out;
}

BigInt sur_count(const ModuleType& M, const ModuleType& N) {
    check_same_q(M, N);
    if (M.rank() < N.rank()) return 0;  // Nakayama: N/mN must be a quotient of M/mM
    std::map<Partition, BigInt> memo;
    std::function<BigInt(const Partition&)> sur = [&](const Partition& T) -> BigInt {
        auto it = memo.find(T);
        if (it != memo.end()) return it->second;
        ModuleType Tt{M.Q, T};
        BigInt r = hom_count(M, Tt);
        for (const auto& S : subpartitions(T)) {
            if (S == T) continue;
            ModuleType St{M.Q, S};
            BigInt c = submodule_type_count(Tt, St);
            if (c != 0) r -= c * sur(S);
        }
        memo.emplace(T, r);
        return r;
    };
    return sur(N.parts);
}

BigInt weight(const ModuleType& M, const ModuleType& H, Int d) {
    check_same_q(M, H);
    if (d < 0) throw InputError("ideal exponent must be >= 0");
    for (Int x : H.parts)
        if (x <= d) throw InputError("weight: H must be the m^d-closure of m^d H (all parts > d)");
    IdealOps ops = ideal_ops(H, d);
    if (sur_count(M, ops.M_mod_I) == 0) return 0;
    return hom_count(M, ops.M_I);
}

std::vector<Partition> partitions_bounded(Int max_size, Int max_part, Int max_len) {
    std::vector<Partition> out;
    for (Int n = 0; n <= max_size; ++n) {
        Partition cur;
        std::function<void(Int, Int)> rec = [&](Int rem, Int cap) {
            if (rem == 0) {
                out.push_back(cur);
                return;
            }
            if (max_len >= 0 && static_cast<Int>(cur.size()) >= max_len) return;
            for (Int k = std::min(rem, cap); k >= 1; --k) {
                cur.push_back(k);
                rec(rem - k, k);
                cur.pop_back();
            }
        };
        rec(n, max_part < 0 ? n : max_part);
    }
    return out;
}

std::vector<Partition> partitions_of(Int n) {
    std::vector<Partition> out;
    for (auto& lam : partitions_bounded(n, -1, -1)) {
        Int s = 0;
        for (Int x : lam) s += x;
        if (s == n) out.push_back(std::move(lam));
    }
    return out;
}

}  // namespace zpg
