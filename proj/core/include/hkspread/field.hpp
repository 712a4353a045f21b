#pragma once

#include <cstdint>
#include <ostream>

#include "hkspread/errors.hpp"

namespace hkspread {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic in F_p on raw residues. Characteristics up to 2^31 are accepted
/// so that products fit in 64 bits.
class PrimeField {
   public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const noexcept { return p_; }

    Coeff reduce(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<Coeff>(r < 0 ? r + p_ : r);
    }
    Coeff add(Coeff a, Coeff b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Coeff pow(Coeff a, std::uint64_t n) const noexcept;
    Coeff inverse(Coeff a) const;

   private:
    std::uint32_t p_;
};

/// A single element of F_p that remembers its characteristic.
class PrimeFieldElement {
   public:
    PrimeFieldElement(std::int64_t value, std::uint32_t characteristic);

    Coeff value() const noexcept { return value_; }
    std::uint32_t characteristic() const noexcept { return p_; }

    PrimeFieldElement inverse() const;
    PrimeFieldElement pow(std::uint64_t n) const;

    friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b);
    friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b);
    friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b);
    friend PrimeFieldElement operator-(const PrimeFieldElement& a);
    friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) noexcept {
        return a.p_ == b.p_ && a.value_ == b.value_;
    }
    friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a) { return os << a.value_; }

   private:
    Coeff value_;
    std::uint32_t p_;
};

/// q = p^e. Only the exponent is stored; the characteristic comes from context.
class FrobeniusExponent {
   public:
    constexpr FrobeniusExponent() = default;
    constexpr explicit FrobeniusExponent(unsigned e) : e_(e) {}

    /// Recovers e from q, failing unless q is a power of p.
    static FrobeniusExponent from_q(std::uint64_t q, std::uint32_t p);

    constexpr unsigned exponent() const noexcept { return e_; }
    /// p^e; throws when it does not fit in 64 bits.
    std::uint64_t q(std::uint32_t p) const;

    friend constexpr bool operator==(FrobeniusExponent, FrobeniusExponent) = default;

   private:
    unsigned e_ = 0;
};

/// Checked integer power; throws on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned n);

}  // namespace hkspread
