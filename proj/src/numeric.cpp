#include "spancount/numeric.hpp"

#include "spancount/errors.hpp"

namespace spancount {

big_rat make_rat(const big_int& num, const big_int& den) {
    if (den == 0)
        throw internal_error("make_rat: zero denominator");
    if (den < 0)
        return big_rat(-num, -den);
    return big_rat(num, den);
}

bool is_integer(const big_rat& q) {
    return denominator(q) == 1;
}

big_int require_integer(const big_rat& q, const char* what) {
    if (!is_integer(q))
        throw internal_error(std::string(what) + ": expected an integer, got " +
                             fraction_string(q));
    return numerator(q);
}

big_int int_pow(const big_int& base, std::uint64_t exp) {
    if (exp > static_cast<std::uint64_t>(~0u))
        throw input_error("int_pow: exponent too large");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

big_rat rat_pow(const big_rat& base, std::int64_t exp) {
    if (exp >= 0)
        return big_rat(int_pow(numerator(base), static_cast<std::uint64_t>(exp)),
                       int_pow(denominator(base), static_cast<std::uint64_t>(exp)));
    if (base == 0)
        throw input_error("rat_pow: negative power of zero");
    const auto e = static_cast<std::uint64_t>(-exp);
    return make_rat(int_pow(denominator(base), e), int_pow(numerator(base), e));
}

std::string fraction_string(const big_rat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace spancount
