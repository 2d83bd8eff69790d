#pragma once

#include <string>
#include <vector>

#include "zpg/explicit.hpp"

namespace zpg {

// An idempotent together with the group and prime it came from.
struct Realization {
    std::string label;  // e.g. "G=2 p=2 n=2"
    Idempotent e;
};

// The idempotent of (G, p) whose characters have order n (the first one in enumeration order).
Idempotent idempotent_with_order(const AbelianGroup& G, Int p, Int n);

// DVR realizations with residue field of size Q used by the oracle checks.
std::vector<Realization> realizations_for_Q(Int Q);

// Types with parts <= max_part and at most max_rank parts (zero module included).
std::vector<ModuleType> types_bounded(Int Q, Int max_part, Int max_rank);

// e-typed modules for Gamma with |H| <= max_size, over p in primes: (realization, type) pairs.
struct TypedModule {
    Realization r;
    ModuleType type;
};
std::vector<TypedModule> typed_modules(const AbelianGroup& G, const std::vector<Int>& primes, Int max_size,
                                       bool include_zero = false);


}  // namespace zpg
