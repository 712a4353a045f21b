#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hkspread {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);
std::string to_string(const Rational& r);
/// Nearest integer, halves rounded up.
BigInt nearest_integer(const Rational& r);
Rational rational_pow(const Rational& base, int n);

/// A quantity that is either known exactly or only approximately.
class Number {
   public:
    Number() : exact_(Rational(0)), approx_(0.0) {}
    static Number exact(Rational r);
    static Number approximate(double v);

    bool is_exact() const noexcept { return has_exact_; }
    /// Throws unless exact.
    const Rational& rational() const;
    double value() const noexcept { return approx_; }

    friend Number operator+(const Number& a, const Number& b);
    friend Number operator-(const Number& a, const Number& b);
    friend Number operator*(const Number& a, const Number& b);
    friend Number operator/(const Number& a, const Number& b);

    std::string to_string() const;

   private:
    Rational exact_;
    double approx_;
    bool has_exact_ = true;
};

}  // namespace hkspread
