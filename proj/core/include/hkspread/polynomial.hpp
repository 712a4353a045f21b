#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hkspread/field.hpp"
#include "hkspread/monomial.hpp"
#include "hkspread/ring.hpp"

namespace hkspread {

/// Sparse polynomial over F_p. Terms are kept in decreasing order under the
/// ring's monomial order, with no zero coefficients.
class Polynomial {
   public:
    explicit Polynomial(RingPtr ring);
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial constant(RingPtr ring, std::int64_t c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, Monomial m, Coeff c = 1);

    const Ring& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    const Term& lead() const;
    const Monomial& lead_monomial() const { return lead().monomial; }
    Coeff lead_coeff() const { return lead().coeff; }

    /// Weighted degree when every term has the same one.
    bool is_homogeneous() const;
    std::uint64_t total_degree() const noexcept;

    Polynomial monic() const;
    Polynomial scaled(Coeff c) const;
    /// this + c * m * g
    Polynomial add_multiple(Coeff c, const Monomial& m, const Polynomial& g) const;
    /// Reinterprets the terms in another ring with the same variable count.
    Polynomial rebind(RingPtr target) const;

    std::string to_string() const;

    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial& operator*=(const Polynomial& g);

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f);
    /// Equal term maps; rings must match structurally.
    friend bool operator==(const Polynomial& f, const Polynomial& g);

   private:
    RingPtr ring_;
    std::vector<Term> terms_;

    struct Sorted {};
    Polynomial(RingPtr ring, std::vector<Term> terms, Sorted) : ring_(std::move(ring)), terms_(std::move(terms)) {}
};

/// f^n by repeated multiplication.
Polynomial power(const Polynomial& f, std::uint64_t n);

/// f^q through the Frobenius endomorphism: exponents scaled by q and each
/// coefficient raised to the q-th power.
Polynomial qth_power(const Polynomial& f, FrobeniusExponent q);

/// Same as qth_power, with q given as an integer that must be a power of p.
Polynomial qth_power(const Polynomial& f, std::uint64_t q);

/// Embeds f into a ring with extra variables, at the front or the back.
Polynomial embed(const Polynomial& f, const RingPtr& target, bool prepend);
/// Drops the first or last variables; they must not occur in f.
Polynomial contract(const Polynomial& f, const RingPtr& target, bool from_front);

}  // namespace hkspread
