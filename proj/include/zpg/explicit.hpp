#pragma once

#include <functional>
#include <vector>

#include "zpg/abelian.hpp"
#include "zpg/dvr.hpp"
#include "zpg/idempotent.hpp"
#include "zpg/zpn.hpp"

namespace zpg {

inline constexpr Int kModuleCap = 4096;  // element enumeration
inline constexpr Int kGroupCap = 8192;   // conjugacy scans
inline constexpr Int kHomCap = Int(1) << 22;

// prod Z/p^{a_i} with one action matrix per invariant-factor generator of Gamma.
// Entry (i,j) of a matrix lives mod p^{a_i} and is divisible by p^{max(a_i - a_j, 0)}.
class ExplicitModule {
public:
    ExplicitModule() = default;
    ExplicitModule(Int p, std::vector<Int> exps, AbelianGroup gamma, std::vector<Mat> action);

    static ExplicitModule zero(Int p, const AbelianGroup& gamma);

    Int p() const { return p_; }
    const std::vector<Int>& exps() const { return a_; }
    const AbelianGroup& gamma() const { return gamma_; }
    const std::vector<Mat>& action() const { return action_; }
    size_t ncoords() const { return a_.size(); }
    const Zpn& ring() const { return R_; }  // Z/p^{max a_i}
    Int size() const { return size_; }

    Vec reduce(Vec x) const;
    Mat reduce_rows(Mat A) const;  // row i mod p^{a_i}
    Int index(const Vec& x) const;
    Vec element(Int idx) const;
    Vec add(const Vec& x, const Vec& y) const;
    Vec sub(const Vec& x, const Vec& y) const;
    Vec scale(Int c, const Vec& x) const;
    Vec apply(const Mat& A, const Vec& x) const;  // endomorphism
    Mat act(const Elem& g) const;                 // matrix of g in Gamma
    Mat compose(const Mat& A, const Mat& B) const;  // A∘B, endomorphisms

    void require_enumerable() const;

private:
    Int p_ = 2;
    std::vector<Int> a_;
    AbelianGroup gamma_;
    std::vector<Mat> action_;
    Zpn R_;
    std::vector<Int> mods_;
    Int size_ = 1;
};

ExplicitModule direct_sum(const ExplicitModule& A, const ExplicitModule& B);

// Maps M -> N are N.ncoords() x M.ncoords() matrices with rows reduced as in N.
Vec apply_map(const ExplicitModule& N, const Mat& phi, const Vec& x);
Mat compose_maps(const ExplicitModule& target, const Mat& A, const Mat& B);
bool is_equivariant(const ExplicitModule& M, const ExplicitModule& N, const Mat& phi);
bool maps_equal(const ExplicitModule& N, const Mat& A, const Mat& B);

// ---- the ring eZ_p[Gamma] mod p^N ----
std::vector<Int> cyclotomic_poly(Int m);  // integer coefficients, low degree first

struct RingModel {
    Zpn R;
    Int D = 1;                  // Z_p-rank = f * phi(p^k)
    Mat zeta;                   // multiplication by the chosen primitive n-th root of unity
    Mat unif;                   // multiplication by the uniformizer
    std::vector<Mat> gens;      // image of each Gamma generator
    std::vector<Int> residue_poly;  // monic lift h of the degree-f factor of Phi_{m'} mod p
};
RingModel ring_model(const Idempotent& e, Int N);

// The minimal polynomial over Q_p of chi(gamma1) where gamma1 = generator_for(e), mod p^N.
std::vector<Int> defining_polynomial(const Idempotent& e, Int N);
Elem value_generator(const Idempotent& e);  // gamma1 with chi(gamma1) of order n
Elem p_part_generator(const Idempotent& e); // gamma0 with chi(gamma0) of order p^k

ExplicitModule realize(const Idempotent& e, const ModuleType& lam, Int N = 0);  // N = 0: max(lam)+e_ram

Mat uniformizer_action(const ExplicitModule& M, const Idempotent& e);
bool is_e_module(const ExplicitModule& M, const Idempotent& e);
ModuleType iso_type(const ExplicitModule& M, const Idempotent& e);

// ---- subsets and submodules (element index sets) ----
IndexSet all_elements(const ExplicitModule& M);
IndexSet image_set(const ExplicitModule& M, const ExplicitModule& N, const Mat& phi, const IndexSet& S);
IndexSet kernel_set(const ExplicitModule& M, const ExplicitModule& N, const Mat& phi);
IndexSet set_sum(const ExplicitModule& M, const IndexSet& A, const IndexSet& B);
IndexSet set_intersection(const IndexSet& A, const IndexSet& B);
bool set_contains(const IndexSet& outer, const IndexSet& inner);
IndexSet submodule_generated(const ExplicitModule& M, const std::vector<Vec>& gens);
std::vector<IndexSet> all_submodules(const ExplicitModule& M);
// Isomorphism type of the subquotient A/B (submodules B <= A) from its m-filtration.
ModuleType subquotient_type(const ExplicitModule& M, const Idempotent& e, const IndexSet& A, const IndexSet& B);
// Number of Gamma-orbits on A/B.
Int orbit_count(const ExplicitModule& M, const IndexSet& A, const IndexSet& B);

// ---- homomorphisms ----
BigInt hom_size_oracle(const ExplicitModule& M, const ExplicitModule& N);
void for_each_hom(const ExplicitModule& M, const ExplicitModule& N, const std::function<void(const Mat&)>& fn);
bool is_surjective(const ExplicitModule& M, const ExplicitModule& N, const Mat& phi);

struct OracleCounts {
    BigInt hom, sur;
};
OracleCounts oracle_counts(const ExplicitModule& M, const ExplicitModule& N);

struct Quotient {
    ExplicitModule Q;
    Mat proj;  // M -> Q
    Mat lift;  // Q -> M coordinates, a set-theoretic section on generators (proj∘lift = id)
};
Quotient quotient_module(const ExplicitModule& M, const IndexSet& U);

// ---- A/B sets ----
struct ABSets {
    IndexSet A0, Aminus, Aplus, Bminus, Bplus;
};
ABSets ab_sets(const ExplicitModule& H, const Elem& g);

// ---- extensions of Gamma by H ----
class ExplicitGroup {
public:
    // cocycle[a][b] = element index of f(a, b) in H (normalized: zero when a or b is trivial).
    ExplicitGroup(ExplicitModule H, std::vector<std::vector<Int>> cocycle);
    static ExplicitGroup semidirect(const ExplicitModule& H);

    const ExplicitModule& H() const { return H_; }
    const AbelianGroup& gamma() const { return H_.gamma(); }
    const std::vector<std::vector<Int>>& cocycle() const { return f_; }
    Int size() const { return nH_ * nG_; }
    Int encode(Int h, Int g) const { return h * nG_ + g; }
    Int h_of(Int x) const { return x / nG_; }
    Int g_of(Int x) const { return x % nG_; }
    Int mul(Int x, Int y) const;
    Int inv(Int x) const;
    Int pow(Int x, Int k) const;
    Int order_of(Int x) const;
    bool is_split_cocycle_zero() const;
    Int hadd(Int a, Int b) const;
    Int hact(Int g, Int h) const { return act_[g][h]; }

private:
    ExplicitModule H_;
    std::vector<std::vector<Int>> f_;
    Int nH_ = 1, nG_ = 1;
    std::vector<std::vector<Int>> act_;  // act_[g][h]
    std::vector<Int> hmod_, hplace_;     // digit arithmetic on H indices
    std::vector<Int> gmul_;              // gmul_[a * nG + b]
    std::vector<Int> ginv_;
    std::vector<Int> hneg_;
};

struct ExtensionCaps {
    Int max_gamma = 8;
    Int max_H = 256;
};
std::vector<ExplicitGroup> enumerate_extensions(const ExplicitModule& H, ExtensionCaps caps = {});
// |H^2(Gamma, H)| from lattice sizes (no enumeration).
BigInt h2_size(const ExplicitModule& H, ExtensionCaps caps = {});

struct ConjugacyStats {
    Int c_size = 0;
    Int d = 0;
};
ConjugacyStats conjugacy_stats(const ExplicitGroup& G, const Elem& g);
Int splitting_count(const ExplicitGroup& G);
bool c_generates(const ExplicitGroup& G);
// Number of q-th powering orbits on the conjugacy classes in c = union of all c_gamma.
Int powering_orbits_brute(const ExplicitGroup& G, Int q);
Int powering_orbits_formula(const ExplicitGroup& G, Int q);  // sum of d_gamma over q-orbit reps of Gamma

std::vector<Elem> find_adapted_basis(const ExplicitModule& H);
BigInt aut_extension_count(const ExplicitModule& H, const std::vector<Elem>& basis);

// ---- fiber products ----
struct FiberResult {
    IndexSet U_star;                // in N2
    ModuleType common_quotient;     // N2 / U_star
    ModuleType fiber_over_N3;       // N1 x_{N3} N2
    ModuleType boxtimes;            // N1 x_{N2/U_star} N2
    Int rk_boxtimes = 0;
    Int rk_N3 = 0;
    Int qualifying_U = 0;
};
FiberResult fiber_tools(const Idempotent& e, const ExplicitModule& N1, const ExplicitModule& N2,
                        const ExplicitModule& N3, const Mat& pi1, const Mat& pi2);

}  // namespace zpg
