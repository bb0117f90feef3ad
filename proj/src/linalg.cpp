#include "spancount/linalg.hpp"

#include <utility>
#include <vector>

#include "spancount/errors.hpp"

namespace spancount {

namespace {

void require_square(const exact_matrix& m, const char* op) {
    if (!m.square())
        throw dimension_error(std::string(op) + ": matrix must be square, got " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

std::vector<big_int> integer_entries(const exact_matrix& m) {
    std::vector<big_int> out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.push_back(numerator(m(i, j)));
    return out;
}

big_int exact_div(const big_int& num, const big_int& den, const char* op) {
    big_int q, r;
    divide_qr(num, den, q, r);
    if (r != 0)
        throw internal_error(std::string(op) + ": inexact division");
    return q;
}

// Bareiss fraction-free elimination; intermediate entries stay integral
// because each is a minor of the (row-permuted) input.
big_int det_bareiss(std::vector<big_int> a, std::size_t n) {
    int sign = 1;
    big_int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot * n + k] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(a[k * n + j], a[pivot * n + j]);
            sign = -sign;
        }
        const big_int& piv = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] =
                    exact_div(a[i * n + j] * piv - a[i * n + k] * a[k * n + j], prev, "det");
            a[i * n + k] = 0;
        }
        prev = piv;
    }
    return sign < 0 ? big_int(-a[n * n - 1]) : a[n * n - 1];
}

big_rat det_rational(exact_matrix a) {
    const std::size_t n = a.rows();
    int sign = 1;
    big_rat result = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(a(k, j), a(pivot, j));
            sign = -sign;
        }
        result *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            big_rat factor = a(i, k) / a(k, k);
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) -= factor * a(k, j);
            a(i, k) = 0;
        }
    }
    return sign < 0 ? big_rat(-result) : result;
}

}  // namespace

big_rat det(const exact_matrix& m) {
    require_square(m, "det");
    if (m.rows() == 0)
        return 1;
    if (m.integral())
        return big_rat(det_bareiss(integer_entries(m), m.rows()));
    return det_rational(m);
}

big_rat cofactor(const exact_matrix& m, std::size_t i, std::size_t j) {
    require_square(m, "cofactor");
    if (i >= m.rows() || j >= m.cols())
        throw dimension_error("cofactor: index out of range");
    big_rat d = det(m.minor_matrix(i, j));
    return (i + j) % 2 == 0 ? d : big_rat(-d);
}

exact_matrix adjugate(const exact_matrix& m) {
    require_square(m, "adjugate");
    const std::size_t n = m.rows();
    if (n == 0)
        return exact_matrix();
    exact_matrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            adj(i, j) = cofactor(m, j, i);
    return adj;
}

std::size_t rank(const exact_matrix& m) {
    exact_matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(a(r, j), a(pivot, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            big_rat factor = a(i, c) / a(r, c);
            for (std::size_t j = c; j < cols; ++j)
                a(i, j) -= factor * a(r, j);
        }
        ++r;
    }
    return r;
}

int_polynomial char_poly(const exact_matrix& m) {
    require_square(m, "char_poly");
    if (!m.integral())
        throw input_error("char_poly: matrix must have integer entries");
    const std::size_t n = m.rows();
    std::vector<big_int> coeffs(n + 1);
    coeffs[n] = 1;
    if (n == 0)
        return int_polynomial(std::move(coeffs));

    const std::vector<big_int> a = integer_entries(m);
    // Faddeev–LeVerrier: M_k = A·M_{k−1} + c_{n−k+1} I, c_{n−k} = −tr(A·M_k)/k.
    // The M_k are integer matrices, so every division is exact.
    std::vector<big_int> mk(n * n);  // M_0 = 0
    std::vector<big_int> next(n * n);
    big_int c = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        for (auto& e : next)
            e = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                const big_int& f = a[i * n + l];
                if (f == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    next[i * n + j] += f * mk[l * n + j];
            }
        for (std::size_t i = 0; i < n; ++i)
            next[i * n + i] += c;
        mk.swap(next);

        big_int t = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t += a[i * n + j] * mk[j * n + i];
        c = exact_div(-t, big_int(k), "char_poly");
        coeffs[n - k] = c;
    }
    return int_polynomial(std::move(coeffs));
}

}  // namespace spancount
