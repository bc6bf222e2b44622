#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fatpoints/primefield.hpp"
#include "fatpoints/rational.hpp"

namespace fatpoints {

// Dense row-major matrix over an exact scalar type (Rat, Int or uint64
// residues). Entries of a residue matrix all live in the field carried by
// FpMatrix below; rational and integer matrices need no context.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count mismatch");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T>& data() { return a_; }
    const std::vector<T>& data() const { return a_; }

    Matrix<T> transposed() const {
        Matrix<T> t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Int>;

// Residue matrix; the field object pins the modulus for every entry.
struct FpMatrix {
    PrimeField field;
    Matrix<std::uint64_t> m;
};

// Row-wise denominator clearing; preserves the row space, hence the rank.
IntMatrix clear_denominators(const RatMatrix& m);

}  // namespace fatpoints
