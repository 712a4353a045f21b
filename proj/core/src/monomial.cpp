#include "hkspread/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hkspread/errors.hpp"

namespace hkspread {

std::uint64_t Monomial::degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

std::size_t Monomial::support_size() const noexcept {
    return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e != 0; }));
}

namespace {
[[noreturn]] void overflow(std::uint64_t value, Exponent max_exponent) {
    throw Error(ErrorKind::exponent_overflow, "exponent " + std::to_string(value) + " exceeds the limit " +
                                                  std::to_string(max_exponent));
}
}  // namespace

Monomial multiply(const Monomial& a, const Monomial& b, Exponent max_exponent) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t s = std::uint64_t{a[i]} + b[i];
        if (s > max_exponent) overflow(s, max_exponent);
        r[i] = static_cast<Exponent>(s);
    }
    return r;
}

Monomial divide(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) throw Error(ErrorKind::invalid_argument, "monomial does not divide");
        r[i] = a[i] - b[i];
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

Monomial dilate(const Monomial& a, std::uint64_t q, Exponent max_exponent) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && q > max_exponent / a[i]) overflow(q * a[i], max_exponent);
        r[i] = static_cast<Exponent>(a[i] * q);
    }
    return r;
}

std::string_view to_string(OrderKind kind) noexcept {
    switch (kind) {
        case OrderKind::degrevlex: return "degrevlex";
        case OrderKind::lex: return "lex";
        case OrderKind::deglex: return "deglex";
    }
    return "degrevlex";
}

OrderKind order_kind_from_string(std::string_view name) {
    if (name == "degrevlex") return OrderKind::degrevlex;
    if (name == "lex") return OrderKind::lex;
    if (name == "deglex") return OrderKind::deglex;
    throw Error(ErrorKind::invalid_argument, "unknown monomial order '" + std::string(name) + "'");
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), priority_(nvars) {
    std::iota(priority_.begin(), priority_.end(), std::size_t{0});
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority, std::size_t elimination_block)
    : kind_(kind), priority_(std::move(priority)), elimination_block_(elimination_block) {
    std::vector<std::size_t> sorted = priority_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw Error(ErrorKind::invalid_argument, "variable priority is not a permutation");
    if (elimination_block_ > priority_.size())
        throw Error(ErrorKind::invalid_argument, "elimination block larger than the variable count");
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
    if (elimination_block_ > 0) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t k = 0; k < elimination_block_; ++k) {
            da += a[priority_[k]];
            db += b[priority_[k]];
        }
        if (da != db) return da < db ? -1 : 1;
    }
    if (kind_ != OrderKind::lex) {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
    }
    if (kind_ == OrderKind::degrevlex) {
        for (std::size_t k = priority_.size(); k-- > 0;) {
            auto v = priority_[k];
            if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
        }
        return 0;
    }
    for (auto v : priority_)
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    return 0;
}

}  // namespace hkspread
