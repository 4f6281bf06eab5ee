#include "jacobi/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace jacobi {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!looks_like_integer(text))
            throw InputError("rational: cannot parse '" + text + "'");
        return Rational(BigInt(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!looks_like_integer(num) || !looks_like_integer(den))
        throw InputError("rational: cannot parse '" + text + "'");
    BigInt d(den);
    if (d == 0)
        throw InputError("rational: zero denominator in '" + text + "'");
    return Rational(BigInt(num), d);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << numerator();
    if (!is_integer())
        os << '/' << denominator();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base.is_zero())
            throw InputError("rational: negative power of zero");
        return pow(Rational(1) / base, -exponent);
    }
    Rational acc(1);
    Rational b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1)
            acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

BigInt factorial(int n) {
    BigInt acc = 1;
    for (int i = 2; i <= n; ++i)
        acc *= i;
    return acc;
}

BigInt double_factorial_odd(int n) {
    BigInt acc = 1;
    for (int i = 3; i <= 2 * n - 1; i += 2)
        acc *= i;
    return acc;
}

} // namespace jacobi
