#include "zpg/common.hpp"

#include <limits>
#include <sstream>

namespace zpg {

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int gcd(Int a, Int b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

Int ipow(Int b, Int e) {
    Int r = 1;
    for (Int i = 0; i < e; ++i) {
        if (b != 0 && r > std::numeric_limits<Int>::max() / (b < 0 ? -b : b))
            throw InputError("integer overflow in ipow");
        r *= b;
    }
    return r;
}

Int val_p(Int n, Int p) {
    if (n == 0) throw InternalError("val_p(0)");
    Int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Int euler_phi(Int n) {
    Int r = n;
    for (Int q : prime_factors(n)) r = r / q * (q - 1);
    return r;
}

Int mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

Int mult_order(Int a, Int m) {
    if (m == 1) return 1;
    a = mod(a, m);
    if (gcd(a, m) != 1) throw InputError("mult_order: not a unit");
    Int x = a, k = 1;
    while (x != 1) {
        x = static_cast<Int>((static_cast<__int128>(x) * a) % m);
        ++k;
    }
    return k;
}

std::vector<Int> prime_factors(Int n) {
    std::vector<Int> out;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        Int v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw InputError("not an integer: '" + tok + "'");
        }
        while (pos < tok.size() && tok[pos] == ' ') ++pos;
        if (pos != tok.size()) throw InputError("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::string join_ints(const std::vector<Int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace zpg
