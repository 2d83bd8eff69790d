#include "zpg/catalog.hpp"

namespace zpg {

Idempotent idempotent_with_order(const AbelianGroup& G, Int p, Int n) {
    for (auto& e : enumerate_idempotents(G, p))
        if (e.n == n) return e;
    throw InputError("no idempotent with character order " + std::to_string(n));
}

std::vector<Realization> realizations_for_Q(Int Q) {
    std::vector<Realization> out;
    auto add = [&](const std::string& g, Int p, Int n) {
        AbelianGroup G = parse_group(g);
        Idempotent e = idempotent_with_order(G, p, n);
        if (e.Q != Q) throw InternalError("realizations_for_Q: residue field mismatch");
        out.push_back({"G=" + g + " p=" + std::to_string(p) + " n=" + std::to_string(n), e});
    };
    switch (Q) {
        case 2:
            add("2", 2, 2);  // unramified in the sense e_ram = 1, uniformizer 1 - sigma
            add("4", 2, 4);  // e_ram = 2
            break;
        case 3:
            add("2", 3, 2);
            add("3", 3, 3);  // e_ram = 2
            break;
        case 4:
            add("3", 2, 3);
            break;
        default:
            throw InputError("realizations_for_Q: only Q in {2,3,4} are catalogued");
    }
    return out;
}

std::vector<ModuleType> types_bounded(Int Q, Int max_part, Int max_rank) {
    std::vector<ModuleType> out;
    for (auto& lam : partitions_bounded(max_part * max_rank, max_part, max_rank)) out.push_back(make_type(Q, lam));
    return out;
}

std::vector<TypedModule> typed_modules(const AbelianGroup& G, const std::vector<Int>& primes, Int max_size,
                                       bool include_zero) {
    std::vector<TypedModule> out;
    for (Int p : primes)
        for (auto& e : enumerate_idempotents(G, p)) {
            Realization r{"G=" + G.str() + " p=" + std::to_string(p) + " n=" + std::to_string(e.n), e};
            Int maxlen = 0;
            for (Int s = e.Q; s <= max_size; s *= e.Q) ++maxlen;
            for (auto& lam : partitions_bounded(maxlen, -1, -1)) {
                if (lam.empty() && !include_zero) continue;
                out.push_back({r, make_type(e.Q, lam)});
            }
        }
    return out;
}

}  // namespace zpg
