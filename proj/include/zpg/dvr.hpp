#pragma once

#include <vector>

#include "zpg/common.hpp"

namespace zpg {

using Partition = std::vector<Int>;  // weakly decreasing, positive parts

// Finite module over a DVR with residue field of size Q: direct sum of R/m^{parts_i}.
struct ModuleType {
    Int Q = 2;
    Partition parts;

    Int rank() const { return static_cast<Int>(parts.size()); }
    Int length() const;  // sum of parts; |M| = Q^length
    BigInt size() const;
    std::string str() const { return join_ints(parts); }
    bool operator==(const ModuleType& o) const { return Q == o.Q && parts == o.parts; }
    bool operator<(const ModuleType& o) const { return Q != o.Q ? Q < o.Q : parts < o.parts; }
};

// Sorts descending and validates (parts > 0, Q a prime power >= 2).
ModuleType make_type(Int Q, std::vector<Int> parts);
bool is_prime_power(Int Q);

Partition conjugate(const Partition& lam);

struct IdealOps {
    ModuleType IM;       // m^d M
    ModuleType M_I;      // M[m^d]
    ModuleType M_mod_I;  // M / m^d M
    ModuleType closure;  // parts + d
    Int rk_I = 0;        // #{parts >= d}, d >= 1
};
IdealOps ideal_ops(const ModuleType& M, Int d);

BigInt hom_count(const ModuleType& M, const ModuleType& N);
BigInt aut_count(const ModuleType& M);
BigInt sur_count(const ModuleType& M, const ModuleType& N);
// Number of submodules of N isomorphic to T.
BigInt submodule_type_count(const ModuleType& N, const ModuleType& T);
BigInt weight(const ModuleType& M, const ModuleType& H, Int d);
BigInt gaussian_binomial(Int a, Int b, Int Q);

// All partitions with sum <= max_size, parts <= max_part, at most max_len parts
// (a negative bound means unbounded). Ordered by size, then lexicographically descending.
std::vector<Partition> partitions_bounded(Int max_size, Int max_part, Int max_len);
std::vector<Partition> partitions_of(Int n);
// Partitions T with T_i <= N_i (the isomorphism types of submodules of N).
std::vector<Partition> subpartitions(const Partition& N);

}  // namespace zpg
