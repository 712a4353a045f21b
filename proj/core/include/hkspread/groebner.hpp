#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hkspread/polynomial.hpp"

namespace hkspread {

/// A reduced Gröbner basis: monic, interreduced, sorted by increasing leading
/// monomial. Unique for a given ideal and monomial order.
class GroebnerBasis {
   public:
    explicit GroebnerBasis(RingPtr ring) : ring_(std::move(ring)) {}
    /// Takes elements that already form a reduced basis.
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements);

    const RingPtr& ring() const noexcept { return ring_; }
    const MonomialOrder& order() const noexcept { return ring_->order(); }
    std::span<const Polynomial> elements() const noexcept { return elements_; }
    std::span<const Monomial> leading_monomials() const noexcept { return leads_; }
    std::size_t size() const noexcept { return elements_.size(); }

    bool is_zero() const noexcept { return elements_.empty(); }
    bool is_unit() const noexcept;
    /// Every element is a single term, so the ideal is a monomial ideal.
    bool is_monomial() const noexcept;

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

   private:
    RingPtr ring_;
    std::vector<Polynomial> elements_;
    std::vector<Monomial> leads_;
};

/// Reduced Gröbner basis of (gens) + (relations of the ring), by Buchberger's
/// algorithm with the product and chain criteria and normal pair selection.
/// Throws ErrorKind::resource_limit when the ring's limits are exceeded.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring);

/// Same, under an explicit order: the generators are moved into a copy of
/// their ring carrying that order.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order);

/// Fully reduced remainder of f modulo the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Krull dimension of R/I from the leading-term ideal: the size of a largest
/// set of variables containing the support of no leading monomial. -1 for the
/// unit ideal.
int krull_dimension(const GroebnerBasis& basis);

bool is_zero_dimensional(const GroebnerBasis& basis);

/// Visits the monomials outside the leading-term ideal. Throws
/// ErrorKind::infinite_length when there are infinitely many.
void for_each_standard_monomial(const GroebnerBasis& basis, const std::function<void(const Monomial&)>& visit);
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis);
std::uint64_t count_standard_monomials(const GroebnerBasis& basis);

}  // namespace hkspread
