#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "spancount/numeric.hpp"

namespace spancount {

/// Dense matrix of exact rationals, row-major, value semantics. The carrier
/// for Laplacians, the s×s counting matrices and their adjugates.
class exact_matrix {
public:
    exact_matrix() = default;
    exact_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    exact_matrix(std::initializer_list<std::initializer_list<big_rat>> rows);

    static exact_matrix identity(std::size_t n);
    static exact_matrix from_int_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool integral() const;

    big_rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const big_rat& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    exact_matrix transpose() const;
    // Copy with row i and column j removed.
    exact_matrix minor_matrix(std::size_t i, std::size_t j) const;
    big_rat trace() const;

    exact_matrix operator*(const exact_matrix& rhs) const;
    exact_matrix operator+(const exact_matrix& rhs) const;
    exact_matrix operator-(const exact_matrix& rhs) const;
    exact_matrix scaled(const big_rat& factor) const;

    bool operator==(const exact_matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<big_rat> entries_;
};

}  // namespace spancount
