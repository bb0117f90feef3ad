#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace spancount {

// All counting is exact: arbitrary-precision integers and reduced fractions.
// cpp_rational keeps lowest terms with a positive denominator on its own.
using big_int = boost::multiprecision::cpp_int;
using big_rat = boost::multiprecision::cpp_rational;

// num/den as a reduced fraction; den may be negative, never zero.
big_rat make_rat(const big_int& num, const big_int& den);

bool is_integer(const big_rat& q);

// Asserts q is an integer and returns it; a fractional value is a bug in the
// caller's algebra, not a data error.
big_int require_integer(const big_rat& q, const char* what);

big_int int_pow(const big_int& base, std::uint64_t exp);

// Exact power with negative exponents allowed (base must be nonzero then).
big_rat rat_pow(const big_rat& base, std::int64_t exp);

// Always renders an explicit denominator, e.g. "3/4", "7/1".
std::string fraction_string(const big_rat& q);

}  // namespace spancount
