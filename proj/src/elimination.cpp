#include "fatpoints/elimination.hpp"

#include <algorithm>
#include <cstdlib>

namespace fatpoints {

namespace {

constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);

void swap_rows(std::vector<Int>& a, std::size_t cols, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a[r1 * cols + j], a[r2 * cols + j]);
}

}  // namespace

IntMatrix clear_denominators(const RatMatrix& m) {
    IntMatrix z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& q = m.at(i, j);
            z.at(i, j) = q.get_num() * (l / q.get_den());
        }
    }
    return z;
}

std::size_t rank_integer(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Int>& a = m.data();
    std::size_t r = 0;
    Int prev(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = kNoPivot;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i * cols + c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == kNoPivot) continue;
        swap_rows(a, cols, piv, r);
        const Int pivot = a[r * cols + c];
        // One-step Bareiss: every updated entry is a minor of the original
        // matrix, so the division by the previous pivot is exact.
        const long rr = static_cast<long>(r);
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = rr + 1; i < static_cast<long>(rows); ++i) {
            const Int lead = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int t = a[i * cols + j] * pivot - lead * a[r * cols + j];
                mpz_divexact(a[i * cols + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * cols + c] = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

std::size_t rank_rational(const RatMatrix& m) { return rank_integer(clear_denominators(m)); }

std::size_t rank_mod(const PrimeField& f, Matrix<std::uint64_t> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t>& a = m.data();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = kNoPivot;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i * cols + c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == kNoPivot) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const std::uint64_t inv_pivot = f.inv(a[r * cols + c]);
        const long rr = static_cast<long>(r);
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = rr + 1; i < static_cast<long>(rows); ++i) {
            const std::uint64_t lead = a[i * cols + c];
            if (lead == 0) continue;
            const std::uint64_t factor = f.mul(lead, inv_pivot);
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
        }
        ++r;
    }
    return r;
}

namespace {

// Reduce an integer matrix mod p. Fails (nullopt) when asked to guard
// against p dividing a scale factor; here entries are plain integers so the
// reduction always succeeds.
Matrix<std::uint64_t> reduce_mod(const IntMatrix& z, const PrimeField& f) {
    Matrix<std::uint64_t> m(z.rows(), z.cols());
    for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j) m.at(i, j) = f.from_int(z.at(i, j));
    return m;
}

}  // namespace

ModularRankReport rank_multimodular(const RatMatrix& m, unsigned num_primes, std::uint64_t seed) {
    if (num_primes < 1) throw std::invalid_argument("rank_multimodular: need at least one prime");
    // Row-wise lcm of denominators; a prime dividing one of these would zero
    // out a scaled row, so such primes are rejected and resampled.
    std::vector<Int> row_lcm(m.rows(), Int(1));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(row_lcm[i].get_mpz_t(), row_lcm[i].get_mpz_t(),
                    m.at(i, j).get_den().get_mpz_t());
    IntMatrix z = clear_denominators(m);

    ModularRankReport rep;
    unsigned index = 0;
    while (rep.primes.size() < num_primes) {
        if (index > num_primes + 64)
            throw std::runtime_error("rank_multimodular: prime pool exhausted");
        std::uint64_t p = sample_prime(seed, index++);
        if (std::find(rep.primes.begin(), rep.primes.end(), p) != rep.primes.end()) continue;
        bool divides_scale = false;
        for (const Int& l : row_lcm) {
            if (mpz_divisible_ui_p(l.get_mpz_t(), p)) {
                divides_scale = true;
                break;
            }
        }
        if (divides_scale) continue;
        PrimeField f(p);
        std::size_t r = rank_mod(f, reduce_mod(z, f));
        rep.primes.push_back(p);
        rep.ranks.push_back(r);
        rep.rank = std::max(rep.rank, r);
    }
    return rep;
}

std::vector<Int> canonical_integer_vector(const std::vector<Rat>& v) {
    Int l(1);
    for (const Rat& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> z(v.size());
    Int g(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        z[i] = v[i].get_num() * (l / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    if (g == 0) return z;  // zero vector
    int sign = 0;
    for (const Int& x : z) {
        if (x != 0) {
            sign = sgn(x);
            break;
        }
    }
    if (sign < 0) g = -g;
    for (Int& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return z;
}

std::vector<std::vector<Rat>> kernel_basis_rational(const RatMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    // Gauss-Jordan over Q; kernel sizes here are small, so plain rational
    // arithmetic is fine.
    std::vector<Rat> a = m.data();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = kNoPivot;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i * cols + c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == kNoPivot) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const Rat inv_pivot = 1 / a[r * cols + c];
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] *= inv_pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i * cols + c] == 0) continue;
            const Rat factor = a[i * cols + c];
            for (std::size_t j = c; j < cols; ++j) a[i * cols + j] -= factor * a[r * cols + j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i * cols + f];
        std::vector<Int> z = canonical_integer_vector(v);
        for (std::size_t j = 0; j < cols; ++j) v[j] = Rat(z[j]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<std::uint64_t>> kernel_basis_mod(const PrimeField& f,
                                                         Matrix<std::uint64_t> mm) {
    const std::size_t rows = mm.rows(), cols = mm.cols();
    std::vector<std::uint64_t>& a = mm.data();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = kNoPivot;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i * cols + c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == kNoPivot) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const std::uint64_t inv_pivot = f.inv(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv_pivot);
        const long rr = static_cast<long>(r);
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < static_cast<long>(rows); ++i) {
            if (i == rr) continue;
            const std::uint64_t factor = a[i * cols + c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t fr = 0; fr < cols; ++fr) {
        if (is_pivot[fr]) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[fr] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = f.neg(a[i * cols + fr]);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Rational reconstruction of x mod m: find n/d with |n|, d <= sqrt(m/2),
// gcd(d, m) = 1 and n == x*d (mod m). Standard half-extended Euclid.
std::optional<Rat> rational_reconstruct(const Int& x, const Int& m) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = x % m;
    if (r1 < 0) r1 += m;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (t1 > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1 && g != -1) {
        // permit common factor only if it still verifies; be strict instead
        return std::nullopt;
    }
    return make_rat(r1, t1);
}

struct ModularKernelSample {
    std::uint64_t p;
    std::size_t rank;
    std::vector<std::size_t> pivots;
    std::vector<std::uint64_t> v;  // kernel vector, first free column = 1
};

std::optional<ModularKernelSample> modular_kernel_sample(const IntMatrix& z, std::uint64_t p) {
    PrimeField f(p);
    Matrix<std::uint64_t> mm(z.rows(), z.cols());
    for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j) mm.at(i, j) = f.from_int(z.at(i, j));
    const std::size_t rows = mm.rows(), cols = mm.cols();
    std::vector<std::uint64_t>& a = mm.data();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = kNoPivot;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv == kNoPivot) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const std::uint64_t inv_pivot = f.inv(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv_pivot);
        const long rr = static_cast<long>(r);
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < static_cast<long>(rows); ++i) {
            if (i == rr) continue;
            const std::uint64_t factor = a[i * cols + c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r == cols) return std::nullopt;  // full column rank mod p
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<std::uint64_t> v(cols, 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = f.neg(a[i * cols + free_col]);
    return ModularKernelSample{p, r, std::move(pivot_col), std::move(v)};
}

bool verify_kernel_vector(const IntMatrix& z, const std::vector<Int>& v) {
    bool ok = true;
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : ok)
    for (long i = 0; i < static_cast<long>(z.rows()); ++i) {
        Int acc(0);
        for (std::size_t j = 0; j < z.cols(); ++j) acc += z.at(i, j) * v[j];
        ok = ok && (acc == 0);
    }
    return ok;
}

}  // namespace

std::optional<std::vector<Int>> kernel_witness(const RatMatrix& m, unsigned max_primes,
                                               std::uint64_t seed) {
    if (m.cols() == 0) return std::nullopt;
    IntMatrix z = clear_denominators(m);
    const std::size_t cols = z.cols();

    std::vector<ModularKernelSample> samples;
    std::size_t best_rank = 0;
    Int modulus(1);
    std::vector<Int> crt(cols, Int(0));

    for (unsigned index = 0; index < max_primes; ++index) {
        std::uint64_t p = sample_prime(seed ^ 0xD1FFULL, index);
        auto s = modular_kernel_sample(z, p);
        if (!s) return std::nullopt;  // full column rank mod p => full rank over Q
        if (s->rank > best_rank) {
            // higher rank invalidates earlier (unlucky) primes
            best_rank = s->rank;
            samples.clear();
            modulus = 1;
            std::fill(crt.begin(), crt.end(), Int(0));
        } else if (s->rank < best_rank || (!samples.empty() && s->pivots != samples.front().pivots)) {
            continue;  // bad prime, skip
        }
        // CRT-combine coordinates into crt mod (modulus * p)
        Int p_int(static_cast<unsigned long>(s->p));
        Int new_mod = modulus * p_int;
        if (samples.empty()) {
            for (std::size_t j = 0; j < cols; ++j) crt[j] = Int(static_cast<unsigned long>(s->v[j]));
        } else {
            Int inv_mod;
            if (mpz_invert(inv_mod.get_mpz_t(), modulus.get_mpz_t(), p_int.get_mpz_t()) == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j) {
                Int target(static_cast<unsigned long>(s->v[j]));
                Int delta = ((target - crt[j]) % p_int) * inv_mod % p_int;
                if (delta < 0) delta += p_int;
                crt[j] = crt[j] + modulus * delta;
            }
        }
        modulus = new_mod;
        samples.push_back(*s);

        // Try to reconstruct and verify; early termination keeps structured
        // kernels cheap.
        std::vector<Rat> cand(cols);
        bool reconstructed = true;
        for (std::size_t j = 0; j < cols; ++j) {
            auto q = rational_reconstruct(crt[j], modulus);
            if (!q) {
                reconstructed = false;
                break;
            }
            cand[j] = *q;
        }
        if (!reconstructed) continue;
        std::vector<Int> iv = canonical_integer_vector(cand);
        bool nonzero = false;
        for (const Int& x : iv)
            if (x != 0) nonzero = true;
        if (nonzero && verify_kernel_vector(z, iv)) return iv;
    }
    return std::nullopt;
}

}  // namespace fatpoints
