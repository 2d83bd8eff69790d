#pragma once

#include <vector>

#include "zpg/common.hpp"

namespace zpg {

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;  // row-major

// Arithmetic in the chain ring Z/p^N.
struct Zpn {
    Int p = 2;
    Int N = 1;
    Int m = 2;  // p^N

    Zpn() = default;
    Zpn(Int p_, Int N_);

    Int red(Int a) const { return mod(a, m); }
    Int add(Int a, Int b) const { return red(a + b); }
    Int sub(Int a, Int b) const { return red(a - b); }
    Int mul(Int a, Int b) const {
        return static_cast<Int>(mod(static_cast<Int>((static_cast<__int128>(a) * b) % m), m));
    }
    Int ppow(Int v) const;               // p^v, v <= N
    Int val(Int a) const;                // N for a == 0
    Int inv_unit(Int u) const;           // u must be a unit
};

Mat zero_mat(size_t r, size_t c);
Mat identity_mat(size_t n);
Mat mat_mul(const Zpn& R, const Mat& A, const Mat& B);
Vec mat_vec(const Zpn& R, const Mat& A, const Vec& x);
Mat mat_pow(const Zpn& R, const Mat& A, Int e);
Mat kron(const Zpn& R, const Mat& A, const Mat& B);

// U * A * V = diag(p^vals[0], p^vals[1], ...), vals ascending, vals[i] = N for zero pivots.
struct Smith {
    std::vector<Int> vals;  // length min(rows, cols)
    Mat U, Uinv, V;
};
Smith smith(const Zpn& R, Mat A, bool track_u, bool track_v);

// Generators of {x : A x = 0} over Z/p^N.
std::vector<Vec> kernel_generators(const Zpn& R, const Mat& A);

// Submodule of (Z/p^N)^n kept in Howell form: echelon rows with pivots p^v, saturated, and
// back-reduced, so reduction of a vector gives a canonical coset representative.
class Lattice {
public:
    Lattice(const Zpn& R, size_t n, const std::vector<Vec>& gens);
    Vec reduce(Vec x) const;
    bool contains(const Vec& x) const;
    Int log_size() const;  // log_p of the number of elements
    const std::vector<Vec>& rows() const { return rows_; }
    size_t dim() const { return n_; }

private:
    Zpn R_;
    size_t n_;
    std::vector<Vec> rows_;
    std::vector<size_t> pivot_col_;
    std::vector<Int> pivot_val_;
};

}  // namespace zpg
