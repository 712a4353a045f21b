#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "hkspread/field.hpp"

namespace hkspread {

using Exponent = std::uint32_t;

class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
    Exponent& operator[](std::size_t i) noexcept { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept;
    bool is_one() const noexcept;
    bool divides(const Monomial& other) const noexcept;
    /// Number of variables with a positive exponent.
    std::size_t support_size() const noexcept;

    friend bool operator==(const Monomial&, const Monomial&) = default;

   private:
    std::vector<Exponent> exps_;
};

/// Product with an upper bound on every resulting exponent.
Monomial multiply(const Monomial& a, const Monomial& b, Exponent max_exponent);
/// a / b; b must divide a.
Monomial divide(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b) noexcept;
/// Every exponent multiplied by q.
Monomial dilate(const Monomial& a, std::uint64_t q, Exponent max_exponent);

struct Term {
    Monomial monomial;
    Coeff coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

enum class OrderKind { degrevlex, lex, deglex };

std::string_view to_string(OrderKind kind) noexcept;
OrderKind order_kind_from_string(std::string_view name);

/// A global monomial order over a fixed number of variables.
///
/// `priority` lists variable indices from most to least significant. When
/// `elimination_block` is k > 0, the first k variables of `priority` are
/// compared by their total degree before anything else, which makes the
/// order an elimination order for that block.
class MonomialOrder {
   public:
    MonomialOrder() = default;
    MonomialOrder(OrderKind kind, std::size_t nvars);
    MonomialOrder(OrderKind kind, std::vector<std::size_t> priority, std::size_t elimination_block = 0);

    OrderKind kind() const noexcept { return kind_; }
    std::span<const std::size_t> priority() const noexcept { return priority_; }
    std::size_t elimination_block() const noexcept { return elimination_block_; }
    std::size_t size() const noexcept { return priority_.size(); }

    /// Negative, zero or positive as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const noexcept;
    bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

   private:
    OrderKind kind_ = OrderKind::degrevlex;
    std::vector<std::size_t> priority_;
    std::size_t elimination_block_ = 0;
};

}  // namespace hkspread
