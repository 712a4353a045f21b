#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkspread/groebner.hpp"
#include "hkspread/polynomial.hpp"

namespace hkspread {

/// An ideal of a ring, given by generators. The reduced Gröbner basis is
/// computed on first use and cached; copies share the cache.
class Ideal {
   public:
    explicit Ideal(RingPtr ring);
    Ideal(RingPtr ring, std::vector<Polynomial> generators);
    Ideal(RingPtr ring, std::initializer_list<Polynomial> generators)
        : Ideal(std::move(ring), std::vector<Polynomial>(generators)) {}

    /// The ideal of all variables.
    static Ideal maximal(const RingPtr& ring);
    static Ideal unit(const RingPtr& ring);

    const RingPtr& ring() const noexcept { return ring_; }
    std::span<const Polynomial> generators() const noexcept { return generators_; }
    bool has_generators() const noexcept { return !generators_.empty(); }

    const GroebnerBasis& groebner() const;
    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& other) const;
    bool is_unit() const { return groebner().is_unit(); }
    /// Generated by monomials (checked on the generators, not the basis).
    bool has_monomial_generators() const noexcept;
    bool has_homogeneous_generators() const;

    std::string to_string() const;

    /// Equality of reduced Gröbner bases.
    friend bool operator==(const Ideal& a, const Ideal& b);

   private:
    struct Cache {
        std::once_flag once;
        std::optional<GroebnerBasis> basis;
    };

    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<Cache> cache_;
};

bool is_member(const Polynomial& f, const Ideal& ideal);
int krull_dimension(const Ideal& ideal);

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

/// I^[q]: generated by the q-th powers of the generators.
Ideal bracket_power(const Ideal& ideal, FrobeniusExponent q);
Ideal bracket_power(const Ideal& ideal, std::uint64_t q);

/// (I : f) = { r : r f in I }.
Ideal ideal_colon(const Ideal& ideal, const Polynomial& f);
/// (I : J), intersecting the colons by each generator of J.
Ideal ideal_colon(const Ideal& ideal, const Ideal& by);

Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// Minimal number of generators of a homogeneous ideal, as the length of I/mI.
std::uint64_t min_gens(const Ideal& ideal);

namespace detail {
/// Colon and intersection through the elimination construction only, without
/// the monomial shortcuts. Exposed for cross-checking.
Ideal colon_by_elimination(const Ideal& ideal, const Polynomial& f);
Ideal intersection_by_elimination(const Ideal& a, const Ideal& b);
}  // namespace detail

}  // namespace hkspread
