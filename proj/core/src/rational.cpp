#include "hkspread/rational.hpp"

#include <sstream>

#include "hkspread/errors.hpp"

namespace hkspread {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

BigInt nearest_integer(const Rational& r) {
    // floor(r + 1/2)
    Rational shifted = r + Rational(1, 2);
    BigInt num = numerator(shifted);
    BigInt den = denominator(shifted);
    BigInt q = num / den;
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

Rational rational_pow(const Rational& base, int n) {
    Rational result(1);
    Rational b = n < 0 ? Rational(1) / base : base;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) result *= b;
    return result;
}

Number Number::exact(Rational r) {
    Number n;
    n.approx_ = to_double(r);
    n.exact_ = std::move(r);
    n.has_exact_ = true;
    return n;
}

Number Number::approximate(double v) {
    Number n;
    n.approx_ = v;
    n.has_exact_ = false;
    return n;
}

const Rational& Number::rational() const {
    if (!has_exact_) throw Error(ErrorKind::invalid_argument, "quantity is only known approximately");
    return exact_;
}

Number operator+(const Number& a, const Number& b) {
    if (a.is_exact() && b.is_exact()) return Number::exact(a.exact_ + b.exact_);
    return Number::approximate(a.approx_ + b.approx_);
}

Number operator-(const Number& a, const Number& b) {
    if (a.is_exact() && b.is_exact()) return Number::exact(a.exact_ - b.exact_);
    return Number::approximate(a.approx_ - b.approx_);
}

Number operator*(const Number& a, const Number& b) {
    if (a.is_exact() && b.is_exact()) return Number::exact(a.exact_ * b.exact_);
    return Number::approximate(a.approx_ * b.approx_);
}

Number operator/(const Number& a, const Number& b) {
    if (b.is_exact() ? b.exact_ == 0 : b.approx_ == 0.0)
        throw Error(ErrorKind::division_by_zero, "division by zero");
    if (a.is_exact() && b.is_exact()) return Number::exact(a.exact_ / b.exact_);
    return Number::approximate(a.approx_ / b.approx_);
}

std::string Number::to_string() const {
    if (has_exact_) return hkspread::to_string(exact_);
    std::ostringstream os;
    os << approx_;
    return os.str();
}

}  // namespace hkspread
