#include "spancount/matrix.hpp"

#include "spancount/errors.hpp"

namespace spancount {

exact_matrix::exact_matrix(std::initializer_list<std::initializer_list<big_rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw dimension_error("exact_matrix: ragged initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

exact_matrix exact_matrix::identity(std::size_t n) {
    exact_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

exact_matrix exact_matrix::from_int_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    exact_matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
        if (rows[i].size() != m.cols_)
            throw dimension_error("exact_matrix: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

bool exact_matrix::integral() const {
    for (const auto& e : entries_)
        if (denominator(e) != 1)
            return false;
    return true;
}

exact_matrix exact_matrix::transpose() const {
    exact_matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

exact_matrix exact_matrix::minor_matrix(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw dimension_error("minor_matrix: index out of range");
    exact_matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, mr = 0; r < rows_; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < cols_; ++c) {
            if (c == j) continue;
            m(mr, mc) = (*this)(r, c);
            ++mc;
        }
        ++mr;
    }
    return m;
}

big_rat exact_matrix::trace() const {
    if (!square())
        throw dimension_error("trace: matrix must be square");
    big_rat t;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

exact_matrix exact_matrix::operator*(const exact_matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw dimension_error("matrix product: inner dimensions differ");
    exact_matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const big_rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

exact_matrix exact_matrix::operator+(const exact_matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw dimension_error("matrix sum: shapes differ");
    exact_matrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] += rhs.entries_[k];
    return out;
}

exact_matrix exact_matrix::operator-(const exact_matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw dimension_error("matrix difference: shapes differ");
    exact_matrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] -= rhs.entries_[k];
    return out;
}

exact_matrix exact_matrix::scaled(const big_rat& factor) const {
    exact_matrix out = *this;
    for (auto& e : out.entries_)
        e *= factor;
    return out;
}

}  // namespace spancount
