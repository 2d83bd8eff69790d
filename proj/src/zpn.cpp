#include "zpg/zpn.hpp"

#include <algorithm>

namespace zpg {

Zpn::Zpn(Int p_, Int N_) : p(p_), N(N_), m(ipow(p_, N_)) {
    if (m > (Int(1) << 62)) throw InputError("modulus p^N too large");
}

Int Zpn::ppow(Int v) const { return ipow(p, v); }

Int Zpn::val(Int a) const {
    a = red(a);
    if (a == 0) return N;
    Int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

Int Zpn::inv_unit(Int u) const {
    // extended Euclid on (u, m)
    __int128 a = red(u), b = m, x0 = 1, x1 = 0;
    while (b) {
        __int128 q = a / b, t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (a != 1) throw InternalError("inv_unit: not a unit");
    return red(static_cast<Int>(x0 % m));
}

Mat zero_mat(size_t r, size_t c) { return Mat(r, Vec(c, 0)); }

Mat identity_mat(size_t n) {
    Mat I = zero_mat(n, n);
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

Mat mat_mul(const Zpn& R, const Mat& A, const Mat& B) {
    size_t r = A.size(), k = B.size(), c = k ? B[0].size() : 0;
    Mat C = zero_mat(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t t = 0; t < k; ++t) {
            Int a = A[i][t];
            if (!a) continue;
            for (size_t j = 0; j < c; ++j) C[i][j] = R.add(C[i][j], R.mul(a, B[t][j]));
        }
    return C;
}

Vec mat_vec(const Zpn& R, const Mat& A, const Vec& x) {
    Vec y(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] = R.add(y[i], R.mul(A[i][j], x[j]));
    return y;
}

Mat mat_pow(const Zpn& R, const Mat& A, Int e) {
    Mat result = identity_mat(A.size()), base = A;
    while (e > 0) {
        if (e & 1) result = mat_mul(R, result, base);
        base = mat_mul(R, base, base);
        e >>= 1;
    }
    return result;
}

Mat kron(const Zpn& R, const Mat& A, const Mat& B) {
    size_t ar = A.size(), ac = ar ? A[0].size() : 0, br = B.size(), bc = br ? B[0].size() : 0;
    Mat C = zero_mat(ar * br, ac * bc);
    for (size_t i = 0; i < ar; ++i)
        for (size_t j = 0; j < ac; ++j)
            for (size_t k = 0; k < br; ++k)
                for (size_t l = 0; l < bc; ++l) C[i * br + k][j * bc + l] = R.mul(A[i][j], B[k][l]);
    return C;
}

Smith smith(const Zpn& R, Mat A, bool track_u, bool track_v) {
    size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    Smith S;
    if (track_u) {
        S.U = identity_mat(rows);
        S.Uinv = identity_mat(rows);
    }
    if (track_v) S.V = identity_mat(cols);
    size_t lim = std::min(rows, cols);
    for (size_t t = 0; t < lim; ++t) {
        // valuation-minimizing pivot
        Int best = R.N;
        size_t bi = t, bj = t;
        for (size_t i = t; i < rows && best > 0; ++i)
            for (size_t j = t; j < cols; ++j) {
                Int v = R.val(A[i][j]);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (best == R.N) {
            for (size_t r = t; r < lim; ++r) S.vals.push_back(R.N);
            break;
        }
        if (bi != t) {
            std::swap(A[bi], A[t]);
            if (track_u) {
                std::swap(S.U[bi], S.U[t]);
                for (auto& row : S.Uinv) std::swap(row[bi], row[t]);
            }
        }
        if (bj != t) {
            for (auto& row : A) std::swap(row[bj], row[t]);
            if (track_v)
                for (auto& row : S.V) std::swap(row[bj], row[t]);
        }
        Int pv = R.ppow(best);
        Int unit = A[t][t] / pv;  // exact as integers
        Int uinv = R.inv_unit(unit);
        for (auto& x : A[t]) x = R.mul(x, uinv);
        if (track_u) {
            for (auto& x : S.U[t]) x = R.mul(x, uinv);
            for (auto& row : S.Uinv) row[t] = R.mul(row[t], unit);
        }
        for (size_t i = t + 1; i < rows; ++i) {
            if (!A[i][t]) continue;
            Int c = A[i][t] / pv;
            for (size_t j = t; j < cols; ++j) A[i][j] = R.sub(A[i][j], R.mul(c, A[t][j]));
            if (track_u) {
                for (size_t j = 0; j < rows; ++j) S.U[i][j] = R.sub(S.U[i][j], R.mul(c, S.U[t][j]));
                for (size_t j = 0; j < rows; ++j) S.Uinv[j][t] = R.add(S.Uinv[j][t], R.mul(c, S.Uinv[j][i]));
            }
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (!A[t][j]) continue;
            Int c = A[t][j] / pv;
            A[t][j] = 0;  // column t is zero below the pivot now
            if (track_v)
                for (size_t i = 0; i < cols; ++i) S.V[i][j] = R.sub(S.V[i][j], R.mul(c, S.V[i][t]));
        }
        S.vals.push_back(best);
    }
    return S;
}

std::vector<Vec> kernel_generators(const Zpn& R, const Mat& A) {
    size_t rows = A.size();
    if (rows == 0) throw InternalError("kernel_generators: need column count");
    size_t cols = A[0].size();
    Smith S = smith(R, A, false, true);
    std::vector<Vec> gens;
    for (size_t k = 0; k < cols; ++k) {
        Int v = k < S.vals.size() ? S.vals[k] : 0;  // free coordinates beyond the row count
        if (v == 0 && k < S.vals.size()) continue;  // unit pivot kills the coordinate
        Int scale = k < S.vals.size() ? R.ppow(R.N - v) : 1;
        Vec g(cols);
        for (size_t i = 0; i < cols; ++i) g[i] = R.mul(S.V[i][k], scale);
        if (std::any_of(g.begin(), g.end(), [](Int x) { return x != 0; })) gens.push_back(std::move(g));
    }
    return gens;
}

Lattice::Lattice(const Zpn& R, size_t n, const std::vector<Vec>& gens) : R_(R), n_(n) {
    std::vector<Vec> work;
    for (const auto& g : gens) {
        if (g.size() != n) throw InternalError("Lattice: generator length");
        Vec h(n);
        for (size_t i = 0; i < n; ++i) h[i] = R.red(g[i]);
        if (std::any_of(h.begin(), h.end(), [](Int x) { return x != 0; })) work.push_back(std::move(h));
    }
    for (size_t col = 0; col < n && !work.empty(); ++col) {
        Int best = R.N;
        size_t bi = 0;
        for (size_t i = 0; i < work.size(); ++i) {
            Int v = R.val(work[i][col]);
            if (v < best) {
                best = v;
                bi = i;
            }
        }
        if (best == R.N) continue;
        Vec piv = std::move(work[bi]);
        work.erase(work.begin() + static_cast<long>(bi));
        Int pv = R.ppow(best);
        Int uinv = R.inv_unit(piv[col] / pv);
        for (auto& x : piv) x = R.mul(x, uinv);
        for (auto& w : work) {
            if (!w[col]) continue;
            Int c = w[col] / pv;
            for (size_t j = col; j < n; ++j) w[j] = R.sub(w[j], R.mul(c, piv[j]));
        }
        // saturation: p^{N-v} * piv has a zero pivot entry and must stay in the span
        if (best > 0) {
            Vec s(n);
            Int sc = R.ppow(R.N - best);
            for (size_t j = 0; j < n; ++j) s[j] = R.mul(piv[j], sc);
            if (std::any_of(s.begin(), s.end(), [](Int x) { return x != 0; })) work.push_back(std::move(s));
        }
        work.erase(std::remove_if(work.begin(), work.end(),
                                  [](const Vec& w) { return std::all_of(w.begin(), w.end(), [](Int x) { return x == 0; }); }),
                   work.end());
        rows_.push_back(std::move(piv));
        pivot_col_.push_back(col);
        pivot_val_.push_back(best);
    }
    // back-reduce entries above later pivots into [0, p^v)
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = i + 1; j < rows_.size(); ++j) {
            Int pv = R_.ppow(pivot_val_[j]);
            Int q = rows_[i][pivot_col_[j]] / pv;
            if (!q) continue;
            for (size_t c = 0; c < n_; ++c) rows_[i][c] = R_.sub(rows_[i][c], R_.mul(q, rows_[j][c]));
        }
}

Vec Lattice::reduce(Vec x) const {
    for (auto& v : x) v = R_.red(v);
    for (size_t r = 0; r < rows_.size(); ++r) {
        Int pv = R_.ppow(pivot_val_[r]);
        Int q = x[pivot_col_[r]] / pv;
        if (!q) continue;
        for (size_t c = 0; c < n_; ++c) x[c] = R_.sub(x[c], R_.mul(q, rows_[r][c]));
    }
    return x;
}

bool Lattice::contains(const Vec& x) const {
    Vec r = reduce(x);
    return std::all_of(r.begin(), r.end(), [](Int v) { return v == 0; });
}

Int Lattice::log_size() const {
    Int s = 0;
    for (Int v : pivot_val_) s += R_.N - v;
    return s;
}

}  // namespace zpg
