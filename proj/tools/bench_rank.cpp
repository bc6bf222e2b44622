// Benchmark: OpenMP elimination kernels against the serial reference on
// interpolation matrices of growing size. Run manually:
//   ./rank-bench [max_degree]

#include <chrono>
#include <iostream>

#include "fatpoints/kconfig.hpp"
#include "fatpoints/linsys.hpp"
#include "naive_rank.hpp"

using namespace fatpoints;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_degree = argc > 1 ? std::atoi(argv[1]) : 16;
    auto points = standard_k_config(KConfigType({1, 3, 6}));

    std::cout << "degree  cols  rows  naive(s)  bareiss(s)  mod-3-primes(s)  rank\n";
    for (int d = 8; d <= max_degree; d += 4) {
        int mult = d / 4 + 1;
        FatPointScheme z = FatPointScheme::uniform(points, mult);
        RatMatrix m = conditions_matrix_rational(z, d);

        auto t0 = std::chrono::steady_clock::now();
        std::size_t r_naive = reference::naive_rank(m);
        double naive_s = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        std::size_t r_bareiss = rank_rational(m);
        double bareiss_s = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        auto rep = rank_multimodular(m, 3);
        double mod_s = seconds_since(t0);

        if (r_naive != r_bareiss || r_bareiss != rep.rank) {
            std::cerr << "RANK DISAGREEMENT at degree " << d << ": " << r_naive << " "
                      << r_bareiss << " " << rep.rank << "\n";
            return 1;
        }
        std::printf("%5d %5zu %5zu  %8.3f  %9.3f  %14.3f  %4zu\n", d, m.cols(), m.rows(), naive_s,
                    bareiss_s, mod_s, r_naive);
    }
    return 0;
}
