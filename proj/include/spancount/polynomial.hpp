#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spancount/numeric.hpp"

namespace spancount {

/// Polynomial with exact integer coefficients, coeff(k) multiplying x^k.
class int_polynomial {
public:
    int_polynomial() = default;  // the zero polynomial
    explicit int_polynomial(std::vector<big_int> coefficients);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const big_int& coeff(std::size_t k) const;
    const std::vector<big_int>& coefficients() const noexcept { return coeffs_; }
    bool monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    big_int operator()(const big_int& x) const;
    big_rat operator()(const big_rat& x) const;

    bool operator==(const int_polynomial&) const = default;

    std::string str() const;

private:
    std::vector<big_int> coeffs_;  // empty == zero; otherwise back() != 0
};

}  // namespace spancount
