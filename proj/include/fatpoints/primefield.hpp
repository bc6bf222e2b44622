#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "fatpoints/rational.hpp"

namespace fatpoints {

// Arithmetic modulo a word-sized prime p > 2^60. Elements are residues in
// [0, p); the field object carries the modulus so values from different
// moduli can never be combined silently.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < (1ULL << 60)) throw std::invalid_argument("PrimeField: modulus below 2^60");
    }

    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        if (s >= p_ || s < a) s -= p_;
        return s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("PrimeField::inv of zero");
        return pow(a, p_ - 2);
    }

    std::uint64_t from_int(const Int& z) const {
        Int r = z % Int(p_);
        if (r < 0) r += Int(p_);
        return r.get_ui();
    }
    // Fails (nullopt) when p divides the denominator.
    std::optional<std::uint64_t> from_rat(const Rat& q) const {
        std::uint64_t den = from_int(q.get_den());
        if (den == 0) return std::nullopt;
        return mul(from_int(q.get_num()), inv(den));
    }

private:
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

// Deterministic stream of distinct random primes in (2^60, 2^62). The stream
// is reproducible from the seed; `index` selects the position in the stream.
std::uint64_t sample_prime(std::uint64_t seed, unsigned index);

}  // namespace fatpoints
