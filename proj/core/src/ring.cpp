#include "hkspread/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "hkspread/groebner.hpp"
#include "hkspread/polynomial.hpp"

namespace hkspread {

namespace {

bool valid_identifier(const std::string& name) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<Term> copy_terms(const Polynomial& f) { return {f.terms().begin(), f.terms().end()}; }

}  // namespace

Ring::Ring(Token, std::uint32_t p, std::vector<std::string> variables, MonomialOrder order, Limits limits,
           std::vector<Exponent> weights)
    : field_(p),
      variables_(std::move(variables)),
      order_(std::move(order)),
      limits_(limits),
      weights_(std::move(weights)) {
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        if (!valid_identifier(v)) throw Error(ErrorKind::invalid_argument, "invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw Error(ErrorKind::invalid_argument, "duplicate variable '" + v + "'");
    }
    if (order_.size() != variables_.size())
        throw Error(ErrorKind::invalid_argument, "monomial order does not match the variable count");
    if (weights_.empty()) weights_.assign(variables_.size(), 1);
    if (weights_.size() != variables_.size() ||
        std::any_of(weights_.begin(), weights_.end(), [](Exponent w) { return w == 0; }))
        throw Error(ErrorKind::invalid_argument, "weights must be positive, one per variable");
    dimension_ = static_cast<int>(variables_.size());
}

RingPtr Ring::polynomial_ring(std::uint32_t p, std::vector<std::string> variables, OrderKind kind, Limits limits) {
    MonomialOrder order(kind, variables.size());
    return polynomial_ring(p, std::move(variables), std::move(order), limits);
}

RingPtr Ring::polynomial_ring(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order,
                              Limits limits, std::vector<Exponent> weights) {
    return std::make_shared<Ring>(Token{}, p, std::move(variables), std::move(order), limits, std::move(weights));
}

RingPtr Ring::finish(std::shared_ptr<Ring> ring, const RingPtr& ambient, std::vector<std::vector<Term>> relations) {
    ring->relations_ = std::move(relations);
    if (ring->relations_.empty()) {
        ring->dimension_ = static_cast<int>(ring->nvars());
        return ring;
    }
    ring->ambient_owner_ = ambient;
    std::vector<Polynomial> rels;
    for (const auto& terms : ring->relations_) rels.emplace_back(ambient, terms);
    ring->dimension_ = krull_dimension(buchberger(rels, ambient));
    if (ring->dimension_ < 0) throw Error(ErrorKind::invalid_argument, "relations generate the unit ideal");
    return ring;
}

RingPtr Ring::quotient(const RingPtr& ambient, std::span<const Polynomial> relations) {
    if (ambient->has_relations())
        throw Error(ErrorKind::invalid_argument, "quotients are taken of relation-free rings");
    std::vector<std::vector<Term>> rels;
    for (const auto& r : relations) {
        require_same_ring(*ambient, r.ring());
        if (r.is_zero()) continue;
        if (!r.is_homogeneous())
            throw Error(ErrorKind::non_homogeneous, "quotient relation " + r.to_string() + " is not homogeneous");
        rels.push_back(copy_terms(r.rebind(ambient)));
    }
    auto ring = std::make_shared<Ring>(Token{}, ambient->characteristic(), ambient->variables_, ambient->order_,
                                       ambient->limits_, ambient->weights_);
    return finish(std::move(ring), ambient, std::move(rels));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name) return i;
    return std::nullopt;
}

std::vector<Polynomial> Ring::relations() const {
    std::vector<Polynomial> out;
    out.reserve(relations_.size());
    auto self = shared_from_this();
    for (const auto& terms : relations_) out.emplace_back(self, terms);
    return out;
}

RingPtr Ring::ambient() const { return ambient_owner_ ? ambient_owner_ : shared_from_this(); }

RingPtr Ring::with_order(const MonomialOrder& order) const {
    if (order == order_) return shared_from_this();
    auto base = std::make_shared<Ring>(Token{}, characteristic(), variables_, order, limits_, weights_);
    if (!has_relations()) return base;
    return finish(std::make_shared<Ring>(Token{}, characteristic(), variables_, order, limits_, weights_), base,
                  relations_);
}

RingPtr Ring::with_limits(const Limits& limits) const {
    auto base = std::make_shared<Ring>(Token{}, characteristic(), variables_, order_, limits, weights_);
    if (!has_relations()) return base;
    auto ring = std::make_shared<Ring>(Token{}, characteristic(), variables_, order_, limits, weights_);
    ring->relations_ = relations_;
    ring->ambient_owner_ = base;
    ring->dimension_ = dimension_;
    return ring;
}

RingPtr Ring::extended(std::span<const std::string> names, bool prepend, std::size_t elimination_block) const {
    const std::size_t extra = names.size();
    const std::size_t n = nvars();
    std::vector<std::string> vars;
    std::vector<Exponent> weights;
    std::vector<std::size_t> priority;
    if (prepend) {
        vars.assign(names.begin(), names.end());
        vars.insert(vars.end(), variables_.begin(), variables_.end());
        weights.assign(extra, 1);
        weights.insert(weights.end(), weights_.begin(), weights_.end());
        for (std::size_t k = 0; k < extra; ++k) priority.push_back(k);
        for (auto v : order_.priority()) priority.push_back(v + extra);
    } else {
        if (elimination_block != 0)
            throw Error(ErrorKind::invalid_argument, "elimination blocks must lead the variable order");
        vars = variables_;
        vars.insert(vars.end(), names.begin(), names.end());
        weights = weights_;
        weights.insert(weights.end(), extra, 1);
        priority.assign(order_.priority().begin(), order_.priority().end());
        for (std::size_t k = 0; k < extra; ++k) priority.push_back(n + k);
    }
    MonomialOrder order(order_.kind(), std::move(priority), elimination_block);
    auto make = [&] { return std::make_shared<Ring>(Token{}, characteristic(), vars, order, limits_, weights); };
    auto base = make();
    if (!has_relations()) return base;

    std::vector<std::vector<Term>> rels;
    auto self = shared_from_this();
    for (const auto& terms : relations_) rels.push_back(copy_terms(embed(Polynomial(self, terms), base, prepend)));
    return finish(make(), base, std::move(rels));
}

bool Ring::same_structure(const Ring& other) const {
    if (this == &other) return true;
    return characteristic() == other.characteristic() && variables_ == other.variables_ &&
           order_ == other.order_ && weights_ == other.weights_ && relations_ == other.relations_;
}

std::string Ring::describe() const {
    std::ostringstream os;
    os << "F_" << characteristic() << '[';
    for (std::size_t i = 0; i < variables_.size(); ++i) os << (i ? "," : "") << variables_[i];
    os << ']';
    if (has_relations()) {
        os << "/(";
        auto rels = relations();
        for (std::size_t i = 0; i < rels.size(); ++i) os << (i ? ", " : "") << rels[i].to_string();
        os << ')';
    }
    return os.str();
}

void require_same_ring(const Ring& a, const Ring& b) {
    if (!a.same_structure(b)) throw Error(ErrorKind::ring_mismatch, "operands live in different rings");
}

}  // namespace hkspread
