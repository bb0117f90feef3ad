#include "spancount/polynomial.hpp"

namespace spancount {

namespace {
const big_int k_zero = 0;
}

int_polynomial::int_polynomial(std::vector<big_int> coefficients)
    : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const big_int& int_polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : k_zero;
}

big_int int_polynomial::operator()(const big_int& x) const {
    big_int acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

big_rat int_polynomial::operator()(const big_rat& x) const {
    big_rat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + big_rat(*it);
    return acc;
}

std::string int_polynomial::str() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const big_int& c = coeffs_[k];
        if (c == 0) continue;
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        big_int mag = abs(c);
        if (mag != 1 || k == 0)
            out += mag.str();
        if (k > 0) {
            if (mag != 1) out += "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace spancount
