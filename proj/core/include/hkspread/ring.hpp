#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkspread/field.hpp"
#include "hkspread/monomial.hpp"

namespace hkspread {

class Polynomial;
class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Resource guards shared by every computation in a ring.
struct Limits {
    /// Reduction steps allowed in one Gröbner basis computation.
    std::uint64_t max_gb_steps = 20'000'000;
    std::size_t max_basis_size = 100'000;
    Exponent max_exponent = Exponent{1} << 20;

    friend bool operator==(const Limits&, const Limits&) = default;
};

/// R = F_p[x_1..x_n] / (relations), with a monomial order and grading.
///
/// Relations must be homogeneous for the grading. The Krull dimension is
/// computed from the relation ideal when the ring is built. Rings are
/// immutable and always handled through RingPtr.
class Ring : public std::enable_shared_from_this<Ring> {
    struct Token {};

   public:
    Ring(Token, std::uint32_t p, std::vector<std::string> variables, MonomialOrder order, Limits limits,
         std::vector<Exponent> weights);

    static RingPtr polynomial_ring(std::uint32_t p, std::vector<std::string> variables,
                                   OrderKind kind = OrderKind::degrevlex, Limits limits = {});
    static RingPtr polynomial_ring(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order,
                                   Limits limits, std::vector<Exponent> weights = {});
    /// Quotient of a relation-free ring by homogeneous relations.
    static RingPtr quotient(const RingPtr& ambient, std::span<const Polynomial> relations);

    std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
    const PrimeField& field() const noexcept { return field_; }
    std::span<const std::string> variables() const noexcept { return variables_; }
    std::size_t nvars() const noexcept { return variables_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;
    const MonomialOrder& order() const noexcept { return order_; }
    const Limits& limits() const noexcept { return limits_; }
    std::span<const Exponent> weights() const noexcept { return weights_; }

    bool has_relations() const noexcept { return !relations_.empty(); }
    std::vector<Polynomial> relations() const;
    /// The relation-free ring this one is a quotient of (itself when relation-free).
    RingPtr ambient() const;
    /// Krull dimension of the ring.
    int dimension() const noexcept { return dimension_; }

    RingPtr with_order(const MonomialOrder& order) const;
    RingPtr with_limits(const Limits& limits) const;
    /// Adds variables (unit weight) at the front or back; relations carry over.
    /// With prepend, `elimination_block` of the new variables lead the order.
    RingPtr extended(std::span<const std::string> names, bool prepend, std::size_t elimination_block = 0) const;

    /// Structural equality, ignoring limits.
    bool same_structure(const Ring& other) const;
    std::string describe() const;

   private:
    PrimeField field_;
    std::vector<std::string> variables_;
    MonomialOrder order_;
    Limits limits_;
    std::vector<Exponent> weights_;
    std::vector<std::vector<Term>> relations_;
    RingPtr ambient_owner_;
    int dimension_ = 0;

    static RingPtr finish(std::shared_ptr<Ring> ring, const RingPtr& ambient,
                          std::vector<std::vector<Term>> relations);
};

/// Throws ErrorKind::ring_mismatch unless the two rings are the same.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace hkspread
