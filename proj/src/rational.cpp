#include "hopfchain/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace hopfchain {

std::string to_string(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
        const Integer num(std::string(text.substr(0, slash)));
        const Integer den(std::string(text.substr(slash + 1)));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: " + std::string(text));
    }
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

Integer factorial(int n)
{
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    Integer out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

Integer multinomial(const std::vector<int>& parts)
{
    Integer out = 1;
    int total = 0;
    for (int p : parts) {
        total += p;
        out *= binomial(total, p);
    }
    return out;
}

Rational rational_pow(const Rational& base, int exponent)
{
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return rational_pow(Rational(1) / base, -exponent);
    }
    Rational out = 1;
    Rational b = base;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) out *= b;
        b *= b;
    }
    return out;
}

}  // namespace hopfchain
