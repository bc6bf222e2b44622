#include "naive_rank.hpp"

namespace fatpoints::reference {

std::size_t naive_rank(const RatMatrix& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t i = rank; i < m.rows(); ++i) {
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == m.rows()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (a[i][col] == 0) continue;
            Rat factor = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= factor * a[rank][j];
        }
        ++rank;
        if (rank == m.rows()) break;
    }
    return rank;
}

}  // namespace fatpoints::reference
