#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints {

// Exact scalars. Rationals are GMP mpq (always canonical: lowest terms,
// positive denominator); integers are GMP mpz.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// ceil(a/b) for exact integers, b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("to_long: value does not fit");
    return a.get_si();
}

// "num/den" (lowest terms) or plain "num" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "3", "-5", "3/4", "-7/2".
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    }
}

// Binomial coefficients C(0..n, 0..n) as exact integers.
inline std::vector<std::vector<Int>> binomial_table(int n) {
    std::vector<std::vector<Int>> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        c[i].resize(i + 1);
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            c[i][j] = (j == i) ? Int(1) : c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

// FNV-1a over a byte string; used for content hashes of schemes.
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace fatpoints
