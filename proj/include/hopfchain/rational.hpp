#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hopfchain {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// "p/q", or "p" when q == 1
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

Integer factorial(int n);
Integer binomial(int n, int k);
Integer multinomial(const std::vector<int>& parts);

// integer power; negative exponents allowed for nonzero base
Rational rational_pow(const Rational& base, int exponent);

}  // namespace hopfchain
