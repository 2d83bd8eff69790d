#include "doctest.h"
#include "zpg/measure.hpp"

using namespace zpg;

namespace {
ModuleType T(Int Q, std::vector<Int> p) { return make_type(Q, std::move(p)); }
}  // namespace

TEST_CASE("normalising constant") {
    for (Int Q : {2, 3, 4}) {
        Bracket z = z_bracket(Q, 30);
        CHECK(z.lo < z.hi);
        CHECK(z_partial(Q, 30) == z.hi);
        CHECK(z_bracket(Q, 31).hi < z.hi);
        Bracket m0 = measure(Q, T(Q, {}), 30);
        CHECK(m0.lo == z.lo);
        CHECK(m0.hi == z.hi);
        CHECK(measure_weight(T(Q, {1})) / measure_weight(T(Q, {})) == Rational(1, (Q - 1) * Q));
        CHECK(measure(Q, T(Q, {2, 1})).lo > 0);
    }
    CHECK(z_partial(2, 2) == Rational(3, 4));
}

TEST_CASE("mass by length") {
    for (Int Q : {2, 3})
        for (Int s = 0; s <= 6; ++s) CHECK(mass_of_length(Q, s) == mass_of_length_closed(Q, s));
}

TEST_CASE("moments") {
    MomentResult r = moment_truncated(2, T(2, {1}), 12);
    Rational half(1, 2);
    CHECK(r.bracket.contains(half));
    CHECK(r.bracket.width() < Rational(1, 100));
    CHECK(r.bracket.heuristic);
    // B = 16 as a higher-precision reference: nested inside the B = 12 bracket
    Bracket b16 = moment_truncated(2, T(2, {1}), 16).bracket;
    CHECK(b16.contains(half));
    CHECK(b16.width() < r.bracket.width());
    for (Int Q : {2, 3}) {
        Bracket z = moment_truncated(Q, T(Q, {}), 10).bracket;
        CHECK(z.contains(1));
        CHECK_FALSE(z.heuristic);
    }
    // |V| = 9 for V = (1,1) over Q = 3
    Bracket v11 = moment_truncated(3, T(3, {1, 1}), 10).bracket;
    CHECK(v11.contains(Rational(1, 9)));
    CHECK_FALSE(v11.contains(Rational(1, 81)));
    CHECK_THROWS_AS(moment_truncated(2, T(2, {3, 2}), 4), InputError);
}

TEST_CASE("finite-n cokernel law") {
    CHECK(exact_cokernel_prob(2, 1, T(2, {})) == Rational(3, 4));
    auto c = cokernel_census(2, 1, 3);
    Int total = 0;
    for (auto& [k, v] : c) total += v;
    CHECK(total == 64);
    CHECK(c[""] == 48);
    Rational s = 0;
    for (Int len = 0; len <= 12; ++len)
        for (auto& lam : partitions_of(len)) s += exact_cokernel_prob(3, 2, T(3, lam));
    CHECK(s < 1);
    CHECK(s > Rational(999, 1000));
}

TEST_CASE("sampler") {
    SampleTable a = sample(2, 3, 4, 500, 99, 1), b = sample(2, 3, 4, 500, 99, 3);
    CHECK(a.counts == b.counts);
    Int total = 0;
    for (auto& [k, v] : a.counts) total += v;
    CHECK(total == 500);
    SampleTable c = sample(2, 3, 4, 500, 100, 1);
    CHECK(c.counts != a.counts);
    // prec = 1 only sees the residue rank
    for (auto& [k, v] : sample(3, 3, 1, 200, 5, 1).counts) CHECK((k.empty() || k == "OVERFLOW"));
    CHECK_THROWS_AS(sample(2, 0, 3, 10, 1, 1), InputError);
    SampleOutcome o = sample_one(4, 2, 3, 1, 0);
    CHECK(o.type.Q == 4);
}
