#include <algorithm>
#include <map>
#include <numeric>

#include "zpg/explicit.hpp"

namespace zpg {

namespace {
using Poly = std::vector<Int>;  // low degree first

void trim(Poly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

// exact division by a monic integer polynomial
Poly poly_div_exact(Poly a, const Poly& b) {
    size_t db = b.size() - 1;
    if (a.size() < b.size()) throw InternalError("poly_div_exact: degree");
    Poly q(a.size() - db, 0);
    for (size_t i = a.size(); i-- > db;) {
        Int c = a[i];
        q[i - db] = c;
        for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw InternalError("poly_div_exact: nonzero remainder");
    return q;
}

// remainder of a modulo monic b over F_p
Poly poly_rem_p(Poly a, const Poly& b, Int p) {
    for (auto& c : a) c = mod(c, p);
    size_t db = b.size() - 1;
    for (size_t i = a.size(); i-- > db;) {
        Int c = a[i];
        if (!c) continue;
        for (size_t j = 0; j <= db; ++j) a[i - db + j] = mod(a[i - db + j] - c * b[j], p);
    }
    a.resize(std::max<size_t>(db, 1));
    if (db == 0) a.assign(1, 0);
    trim(a);
    return a;
}

Mat companion(const Zpn& R, const Poly& h) {
    size_t d = h.size() - 1;
    Mat C = zero_mat(d, d);
    for (size_t j = 0; j + 1 < d; ++j) C[j + 1][j] = 1;
    for (size_t i = 0; i < d; ++i) C[i][d - 1] = R.red(-h[i]);
    return C;
}

Int chi_exponent(const Idempotent& e, const Elem& g) {  // chi(g) = zeta_n^w
    Int E = e.G.exponent();
    Int v = char_value(e.G, e.rep(), g);
    return v / (E / e.n);
}

Int inverse_mod(Int a, Int n) {
    if (n == 1) return 0;
    for (Int t = 1; t < n; ++t)
        if (mod(a * t, n) == 1) return t;
    throw InternalError("inverse_mod: not a unit");
}

Mat scalar_mat(const Zpn& R, size_t n, Int c) {
    Mat A = zero_mat(n, n);
    for (size_t i = 0; i < n; ++i) A[i][i] = R.red(c);
    return A;
}

bool is_identity(const Mat& A) { return A == identity_mat(A.size()); }
}  // namespace

std::vector<Int> cyclotomic_poly(Int m) {
    static std::map<Int, Poly> memo;
    if (m < 1) throw InputError("cyclotomic_poly: m >= 1");
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    Poly num(static_cast<size_t>(m) + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (Int d = 1; d < m; ++d)
        if (m % d == 0) num = poly_div_exact(num, cyclotomic_poly(d));
    memo[m] = num;
    return num;
}

Elem value_generator(const Idempotent& e) {
    for (Int i = 0; i < e.G.order(); ++i) {
        Elem g = e.G.element(i);
        if (std::gcd(chi_exponent(e, g), e.n) == 1) return g;
    }
    throw InternalError("value_generator: character image is not cyclic of order n");
}

Elem p_part_generator(const Idempotent& e) { return e.G.scale(e.m_prime, value_generator(e)); }

RingModel ring_model(const Idempotent& e, Int N) {
    if (N < 1) throw InputError("ring_model: precision must be >= 1");
    RingModel rm;
    rm.R = Zpn(e.p, N);
    const Zpn& R = rm.R;
    // residue part: degree-f factor of Phi_{m'} mod p, lifted with digits in [0, p)
    Poly phi = cyclotomic_poly(e.m_prime);
    Poly h;
    Int total = ipow(e.p, e.f);
    for (Int code = 0; code < total && h.empty(); ++code) {
        Poly cand(static_cast<size_t>(e.f) + 1, 0);
        Int c = code;
        for (Int i = 0; i < e.f; ++i) {
            cand[i] = c % e.p;
            c /= e.p;
        }
        cand[e.f] = 1;
        if (cand[0] == 0) continue;
        Poly r = poly_rem_p(phi, cand, e.p);
        if (r.size() == 1 && r[0] == 0) h = cand;
    }
    if (h.empty()) throw InternalError("ring_model: no degree-f factor of the cyclotomic polynomial");
    rm.residue_poly = h;
    Mat Zt = companion(R, h);
    for (Int i = 0; i < N; ++i) Zt = mat_pow(R, Zt, e.Q);
    if (!is_identity(mat_pow(R, Zt, e.m_prime))) throw InternalError("ring_model: Teichmuller lift has wrong order");
    for (Int l : prime_factors(e.m_prime))
        if (is_identity(mat_pow(R, Zt, e.m_prime / l)))
            throw InternalError("ring_model: Teichmuller lift is not primitive");
    Mat Cy = e.k == 0 ? identity_mat(1) : companion(R, cyclotomic_poly(e.p_part));
    rm.zeta = kron(R, Zt, Cy);
    rm.D = static_cast<Int>(rm.zeta.size());
    if (rm.D != e.dimension()) throw InternalError("ring_model: rank mismatch");
    size_t D = static_cast<size_t>(rm.D);
    if (e.uniformizer == Uniformizer::P) {
        rm.unif = scalar_mat(R, D, e.p);
    } else {
        Mat K = kron(R, identity_mat(static_cast<size_t>(e.f)), Cy);
        rm.unif = zero_mat(D, D);
        for (size_t i = 0; i < D; ++i)
            for (size_t j = 0; j < D; ++j) rm.unif[i][j] = R.sub(i == j ? 1 : 0, K[i][j]);
    }
    for (size_t i = 0; i < e.G.rank(); ++i) rm.gens.push_back(mat_pow(R, rm.zeta, chi_exponent(e, e.G.generator(i))));
    return rm;
}

std::vector<Int> defining_polynomial(const Idempotent& e, Int N) {
    RingModel rm = ring_model(e, N);
    const Zpn& R = rm.R;
    size_t D = static_cast<size_t>(rm.D);
    Mat B = mat_pow(R, rm.zeta, chi_exponent(e, value_generator(e)));
    std::vector<Mat> coef{identity_mat(D)};
    for (Int a : decomposition_exponents(e.n, e.p)) {
        Mat root = mat_pow(R, B, a);
        std::vector<Mat> next(coef.size() + 1, zero_mat(D, D));
        for (size_t j = 0; j < coef.size(); ++j) {
            Mat t = mat_mul(R, root, coef[j]);
            for (size_t r = 0; r < D; ++r)
                for (size_t c = 0; c < D; ++c) {
                    next[j + 1][r][c] = R.add(next[j + 1][r][c], coef[j][r][c]);
                    next[j][r][c] = R.sub(next[j][r][c], t[r][c]);
                }
        }
        coef = std::move(next);
    }
    std::vector<Int> out;
    for (const auto& C : coef) {
        if (C != scalar_mat(R, D, C[0][0])) throw InternalError("defining_polynomial: coefficient not in Z_p");
        out.push_back(C[0][0]);
    }
    return out;
}

ExplicitModule realize(const Idempotent& e, const ModuleType& lam, Int N) {
    if (lam.Q != e.Q) throw InputError("realize: residue field size does not match the idempotent");
    Int top = lam.parts.empty() ? 0 : lam.parts.front();
    if (N == 0) N = std::max<Int>(top + e.e_ram, 1);
    if (N < top + 1) throw InputError("realize: precision below the module exponent");
    ExplicitModule M = ExplicitModule::zero(e.p, e.G);
    if (lam.parts.empty()) return M;
    RingModel rm = ring_model(e, N);
    const Zpn& R = rm.R;
    for (Int part : lam.parts) {
        Smith S = smith(R, mat_pow(R, rm.unif, part), true, false);
        std::vector<size_t> keep;
        std::vector<Int> ex;
        Int len = 0;
        for (size_t i = 0; i < S.vals.size(); ++i) {
            if (S.vals[i] >= N) throw InputError("realize: precision too low for this part");
            if (S.vals[i] > 0) {
                keep.push_back(i);
                ex.push_back(S.vals[i]);
                len += S.vals[i];
            }
        }
        if (len != e.f * part) throw InternalError("realize: quotient has the wrong length");
        std::vector<Mat> act;
        for (const auto& G : rm.gens) {
            Mat T = mat_mul(R, mat_mul(R, S.U, G), S.Uinv);
            Mat A = zero_mat(keep.size(), keep.size());
            for (size_t a = 0; a < keep.size(); ++a)
                for (size_t b = 0; b < keep.size(); ++b) A[a][b] = T[keep[a]][keep[b]];
            act.push_back(std::move(A));
        }
        M = direct_sum(M, ExplicitModule(e.p, ex, e.G, act));
    }
    return M;
}

Mat uniformizer_action(const ExplicitModule& M, const Idempotent& e) {
    size_t k = M.ncoords();
    if (e.uniformizer == Uniformizer::P) return M.reduce_rows(scalar_mat(M.ring(), k, e.p));
    Mat A = M.act(p_part_generator(e));
    Mat T = zero_mat(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) T[i][j] = (i == j ? 1 : 0) - A[i][j];
    return M.reduce_rows(T);
}

bool is_e_module(const ExplicitModule& M, const Idempotent& e) {
    if (M.p() != e.p || !(M.gamma() == e.G)) return false;
    size_t k = M.ncoords();
    if (k == 0) return true;
    Elem g1 = value_generator(e);
    Int w1 = chi_exponent(e, g1);
    Int w1inv = inverse_mod(mod(w1, e.n), e.n);
    Mat Y = M.act(g1);
    Mat I = M.reduce_rows(identity_mat(k));
    auto power = [&](Int t) {
        Mat P = I;
        for (Int j = 0; j < t; ++j) P = M.compose(P, Y);
        return P;
    };
    for (size_t i = 0; i < e.G.rank(); ++i) {
        Int t = mod(chi_exponent(e, e.G.generator(i)) * w1inv, e.n);
        if (M.action()[i] != power(t)) return false;
    }
    std::vector<Int> c = defining_polynomial(e, M.ring().N);
    Mat acc = zero_mat(k, k), P = I;
    for (Int cj : c) {
        for (size_t r = 0; r < k; ++r)
            for (size_t s = 0; s < k; ++s) acc[r][s] = M.ring().add(acc[r][s], M.ring().mul(cj, P[r][s]));
        P = M.compose(P, Y);
    }
    acc = M.reduce_rows(acc);
    return acc == zero_mat(k, k);
}

namespace {
// log_p |A M| for an endomorphism A of M
Int image_log(const ExplicitModule& M, const Mat& A) {
    size_t k = M.ncoords();
    std::vector<Vec> gens;
    Int klog = 0;
    for (size_t j = 0; j < k; ++j) {
        Vec c(k);
        for (size_t i = 0; i < k; ++i) c[i] = A[i][j];
        gens.push_back(c);
    }
    for (size_t i = 0; i < k; ++i) {
        Vec c(k, 0);
        c[i] = M.ring().red(ipow(M.p(), M.exps()[i]));
        gens.push_back(c);
        klog += M.ring().N - M.exps()[i];
    }
    return Lattice(M.ring(), k, gens).log_size() - klog;
}
}  // namespace

ModuleType iso_type(const ExplicitModule& M, const Idempotent& e) {
    if (!is_e_module(M, e)) throw InputError("iso_type: not a module over this idempotent's ring");
    size_t k = M.ncoords();
    if (k == 0) return make_type(e.Q, {});
    Mat pi = uniformizer_action(M, e);
    Mat P = M.reduce_rows(identity_mat(k));
    std::vector<Int> logs;
    while (true) {
        Int lg = image_log(M, P);
        logs.push_back(lg);
        if (lg == 0) break;
        if (logs.size() > 1 && logs[logs.size() - 2] == lg)
            throw InputError("iso_type: uniformizer does not act nilpotently");
        P = M.compose(P, pi);
    }
    Partition conj;
    for (size_t j = 1; j < logs.size(); ++j) {
        Int diff = logs[j - 1] - logs[j];
        if (diff % e.f != 0) throw InputError("iso_type: filtration quotient is not a power of Q");
        Int r = diff / e.f;
        if (!conj.empty() && r > conj.back()) throw InputError("iso_type: filtration not monotone");
        conj.push_back(r);
    }
    return make_type(e.Q, conjugate(conj));
}

}  // namespace zpg
