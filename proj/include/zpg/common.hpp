#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zpg {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr const char* kVersion = "0.1.0";

// Thrown for malformed input (bad element, mismatched residue field, violated precondition).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal invariant failed; indicates a bug, never bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

bool is_prime(Int n);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
Int ipow(Int b, Int e);         // throws on overflow
Int val_p(Int n, Int p);        // p-adic valuation of n != 0
Int euler_phi(Int n);
Int mult_order(Int a, Int m);   // order of a in (Z/m)^x, m >= 1 (returns 1 for m == 1)
Int mod(Int a, Int m);          // representative in [0, m)
std::vector<Int> prime_factors(Int n);  // distinct, ascending

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);  // "a/b", or "a" when b == 1

std::vector<Int> parse_int_list(const std::string& s);  // "2,4" -> {2,4}; "" -> {}
std::string join_ints(const std::vector<Int>& v);       // {2,4} -> "2,4"

}  // namespace zpg
