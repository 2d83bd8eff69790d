#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zpg/dvr.hpp"

namespace zpg {

struct Bracket {
    Rational lo, hi;
    bool heuristic = false;  // hi depends on an extrapolated tail
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational width() const { return hi - lo; }
};

// prod_{i >= 2} (1 - Q^{-i}) from the partial product up to index K.
Bracket z_bracket(Int Q, Int K = 64);
Rational z_partial(Int Q, Int K);

// 1 / (#Aut(M) |M|), the measure without the normalizing constant.
Rational measure_weight(const ModuleType& M);
Bracket measure(Int Q, const ModuleType& M, Int K = 64);

// sum over types of length exactly s of measure_weight; closed form Q^{-2s} / prod_{i<=s}(1 - Q^{-i}).
Rational mass_of_length(Int Q, Int s);
Rational mass_of_length_closed(Int Q, Int s);

struct MomentResult {
    Rational partial;       // Z_K * sum_{|lambda| <= B} weight * #Sur(lambda, V)
    Rational tail_estimate;  // heuristic, already multiplied by the upper constant
    Bracket bracket;
    std::vector<Rational> layer_terms;  // one per length s <= B, without the constant
};
MomentResult moment_truncated(Int Q, const ModuleType& V, Int B, Int K = 64);
// Brackets for B = B0..B1, each intersected with the previous one.
std::vector<Bracket> nested_moment_brackets(Int Q, const ModuleType& V, Int B0, Int B1, Int K = 64);

// Exact law of the cokernel of a uniform n x (n+1) matrix over the unramified DVR with residue
// field of size Q, restricted to a fixed type.
Rational exact_cokernel_prob(Int Q, Int n, const ModuleType& M);

// Cokernel of one random matrix; parts equal to prec mean truncation.
struct SampleOutcome {
    ModuleType type;
    bool overflow = false;
};
SampleOutcome sample_one(Int Q, Int n, Int prec, std::uint64_t seed, std::uint64_t trial);

struct SampleTable {
    Int Q = 2, n = 1, prec = 1;
    std::uint64_t seed = 0;
    Int trials = 0;
    std::map<std::string, Int> counts;  // type string ("" = zero module) or "OVERFLOW"
    Int threads_used = 1;
};
SampleTable sample(Int Q, Int n, Int prec, Int trials, std::uint64_t seed, Int threads = 0);
// 0  means: ZPG_THREADS if set, else hardware concurrency.
Int default_threads();

// Exhaustive cokernel census over all n x (n+1) matrices mod p^prec (Q prime only).
std::map<std::string, Int> cokernel_census(Int p, Int n, Int prec);

}  // namespace zpg
