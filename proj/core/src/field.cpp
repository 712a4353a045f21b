#include "hkspread/field.hpp"

#include <string>

namespace hkspread {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_argument: return "invalid_argument";
        case ErrorKind::ring_mismatch: return "ring_mismatch";
        case ErrorKind::resource_limit: return "resource_limit";
        case ErrorKind::exponent_overflow: return "exponent_overflow";
        case ErrorKind::infinite_length: return "infinite_length";
        case ErrorKind::not_m_primary: return "not_m_primary";
        case ErrorKind::containment: return "containment";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::non_homogeneous: return "non_homogeneous";
        case ErrorKind::division_by_zero: return "division_by_zero";
        case ErrorKind::parse: return "parse";
    }
    return "unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw Error(ErrorKind::invalid_argument, "characteristic must be prime (got " + std::to_string(p) + ")");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t n) const noexcept {
    Coeff result = 1 % p_;
    Coeff base = a;
    while (n) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

Coeff PrimeField::inverse(Coeff a) const {
    if (a % p_ == 0) throw Error(ErrorKind::division_by_zero, "zero has no inverse in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t characteristic)
    : value_(PrimeField(characteristic).reduce(value)), p_(characteristic) {}

namespace {
void require_same(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    if (a.characteristic() != b.characteristic())
        throw Error(ErrorKind::ring_mismatch, "field elements of different characteristic");
}
}  // namespace

PrimeFieldElement PrimeFieldElement::inverse() const { return {PrimeField(p_).inverse(value_), p_}; }

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t n) const { return {PrimeField(p_).pow(value_, n), p_}; }

PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    require_same(a, b);
    return {static_cast<std::int64_t>(a.value_) + b.value_, a.p_};
}

PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    require_same(a, b);
    return {static_cast<std::int64_t>(a.value_) - b.value_, a.p_};
}

PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    require_same(a, b);
    return {static_cast<std::int64_t>(static_cast<std::uint64_t>(a.value_) * b.value_ % a.p_), a.p_};
}

PrimeFieldElement operator-(const PrimeFieldElement& a) { return {-static_cast<std::int64_t>(a.value_), a.p_}; }

std::uint64_t checked_pow(std::uint64_t base, unsigned n) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (base != 0 && result > UINT64_MAX / base)
            throw Error(ErrorKind::exponent_overflow, "power overflows 64 bits");
        result *= base;
    }
    return result;
}

FrobeniusExponent FrobeniusExponent::from_q(std::uint64_t q, std::uint32_t p) {
    if (p < 2 || q == 0) throw Error(ErrorKind::invalid_argument, "q must be a positive power of p");
    unsigned e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1)
        throw Error(ErrorKind::invalid_argument, "q is not a power of the characteristic " + std::to_string(p));
    return FrobeniusExponent(e);
}

std::uint64_t FrobeniusExponent::q(std::uint32_t p) const { return checked_pow(p, e_); }

}  // namespace hkspread
