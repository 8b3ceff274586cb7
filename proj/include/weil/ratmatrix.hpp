#pragma once

#include <cstddef>
#include <vector>

#include "weil/rational.hpp"

namespace weil {

// Dense matrix over Q. Row counts here are tiny (<= 2g <= 12 after
// transposition), column counts can reach |W_12| = 46080.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix transposed() const;

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Exact rank over Q by fraction-free (Bareiss) elimination on the
// integerized matrix. Eliminates over min(rows, cols) pivots; callers with
// wide matrices should pass the short-side-as-rows orientation.
std::size_t rank(const RatMatrix& m);

// Basis of the right null space { v : M v = 0 }, cols - rank vectors.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// Multiply M * v exactly.
std::vector<Rational> apply(const RatMatrix& m, const std::vector<Rational>& v);

} // namespace weil
