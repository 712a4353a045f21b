#include "hkspread/ideal.hpp"

#include <sstream>

#include "hkspread/length.hpp"

namespace hkspread {

Ideal::Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    generators_.reserve(generators.size());
    for (auto& g : generators) {
        require_same_ring(*ring_, g.ring());
        if (g.is_zero()) continue;
        generators_.push_back(g.ring_ptr() == ring_ ? std::move(g) : g.rebind(ring_));
    }
}

Ideal Ideal::maximal(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(gens));
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

const GroebnerBasis& Ideal::groebner() const {
    std::call_once(cache_->once, [this] { cache_->basis = buchberger(generators_, ring_); });
    return *cache_->basis;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, groebner()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
    require_same_ring(*ring_, *other.ring_);
    for (const auto& g : other.generators_)
        if (!contains(g)) return false;
    return true;
}

bool Ideal::has_monomial_generators() const noexcept {
    for (const auto& g : generators_)
        if (!g.is_monomial()) return false;
    return true;
}

bool Ideal::has_homogeneous_generators() const {
    for (const auto& g : generators_)
        if (!g.is_homogeneous()) return false;
    return true;
}

std::string Ideal::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? ", " : "") << generators_[i].to_string();
    os << ')';
    return os.str();
}

bool operator==(const Ideal& a, const Ideal& b) {
    if (!a.ring_->same_structure(*b.ring_)) return false;
    return a.groebner() == b.groebner();
}

bool is_member(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

int krull_dimension(const Ideal& ideal) { return krull_dimension(ideal.groebner()); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(*a.ring(), *b.ring());
    std::vector<Polynomial> gens(a.generators().begin(), a.generators().end());
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(*a.ring(), *b.ring());
    std::vector<Polynomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal operator+(const Ideal& a, const Ideal& b) { return ideal_sum(a, b); }
Ideal operator*(const Ideal& a, const Ideal& b) { return ideal_product(a, b); }

Ideal bracket_power(const Ideal& ideal, FrobeniusExponent q) {
    std::vector<Polynomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(qth_power(g, q));
    return Ideal(ideal.ring(), std::move(gens));
}

Ideal bracket_power(const Ideal& ideal, std::uint64_t q) {
    return bracket_power(ideal, FrobeniusExponent::from_q(q, ideal.ring()->characteristic()));
}

namespace {

// Colons and intersections in R = P/(relations) are computed in P on the
// preimages I + (relations), then mapped back.
std::vector<Polynomial> lift(const Ideal& ideal, const RingPtr& ambient) {
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.rebind(ambient));
    if (ideal.ring()->has_relations())
        for (const auto& r : ideal.ring()->relations()) gens.push_back(r.rebind(ambient));
    return gens;
}

Ideal descend(const std::vector<Polynomial>& gens, const RingPtr& ring) {
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.rebind(ring));
    return Ideal(ring, std::move(out));
}

std::vector<Polynomial> intersect_in_polynomial_ring(const Ideal& a, const Ideal& b) {
    const RingPtr& ring = a.ring();
    const std::string tname = "_elim_t";
    auto extended = ring->extended(std::span<const std::string>(&tname, 1), /*prepend=*/true, 1);
    auto t = Polynomial::variable(extended, 0);
    auto one_minus_t = Polynomial::constant(extended, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(t * embed(f, extended, true));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * embed(g, extended, true));
    auto basis = buchberger(gens, extended);
    std::vector<Polynomial> out;
    for (const auto& g : basis.elements())
        if (g.lead_monomial()[0] == 0) out.push_back(contract(g, ring, true));
    return out;
}

std::vector<Polynomial> monomial_intersection(const GroebnerBasis& a, const GroebnerBasis& b) {
    std::vector<Polynomial> out;
    for (const auto& m : a.leading_monomials())
        for (const auto& n : b.leading_monomials()) out.push_back(Polynomial::monomial(a.ring(), lcm(m, n)));
    return out;
}

Polynomial divide_exact(const Polynomial& h, const Polynomial& g) {
    const auto& field = h.ring().field();
    Polynomial quotient(h.ring_ptr());
    Polynomial rest = h;
    const Coeff inv = field.inverse(g.lead_coeff());
    while (!rest.is_zero()) {
        const auto& lt = rest.lead();
        if (!g.lead_monomial().divides(lt.monomial))
            throw Error(ErrorKind::invalid_argument, "internal: inexact division in colon computation");
        Monomial m = divide(lt.monomial, g.lead_monomial());
        Coeff c = field.mul(lt.coeff, inv);
        quotient = quotient.add_multiple(c, m, Polynomial::constant(h.ring_ptr(), 1));
        rest = rest.add_multiple(field.neg(c), m, g);
    }
    return quotient;
}

Ideal colon_impl(const Ideal& ideal, const Polynomial& f, bool shortcuts) {
    require_same_ring(*ideal.ring(), f.ring());
    if (f.is_zero()) throw Error(ErrorKind::division_by_zero, "colon by the zero polynomial");
    const RingPtr& ring = ideal.ring();
    const RingPtr ambient = ring->ambient();
    Ideal lifted(ambient, lift(ideal, ambient));
    Polynomial g = f.rebind(ambient);
    const auto& basis = lifted.groebner();
    if (basis.is_unit() || lifted.contains(g)) return Ideal::unit(ring);

    std::vector<Polynomial> quotients;
    if (shortcuts && basis.is_monomial() && g.is_monomial()) {
        for (const auto& m : basis.leading_monomials())
            quotients.push_back(Polynomial::monomial(ambient, divide(m, gcd(m, g.lead_monomial()))));
    } else {
        Ideal principal(ambient, {g});
        for (const auto& h : intersect_in_polynomial_ring(lifted, principal)) quotients.push_back(divide_exact(h, g));
    }
    return descend(quotients, ring);
}

Ideal intersection_impl(const Ideal& a, const Ideal& b, bool shortcuts) {
    require_same_ring(*a.ring(), *b.ring());
    const RingPtr& ring = a.ring();
    const RingPtr ambient = ring->ambient();
    Ideal la(ambient, lift(a, ambient));
    Ideal lb(ambient, lift(b, ambient));
    if (la.groebner().is_unit()) return b;
    if (lb.groebner().is_unit()) return a;
    if (shortcuts && la.groebner().is_monomial() && lb.groebner().is_monomial())
        return descend(monomial_intersection(la.groebner(), lb.groebner()), ring);
    return descend(intersect_in_polynomial_ring(la, lb), ring);
}

}  // namespace

Ideal ideal_colon(const Ideal& ideal, const Polynomial& f) { return colon_impl(ideal, f, true); }

Ideal ideal_colon(const Ideal& ideal, const Ideal& by) {
    require_same_ring(*ideal.ring(), *by.ring());
    for (const auto& g : by.generators())
        if (g.is_zero()) throw Error(ErrorKind::division_by_zero, "colon by the zero polynomial");
    if (!by.has_generators()) return Ideal::unit(ideal.ring());
    std::optional<Ideal> result;
    for (const auto& g : by.generators()) {
        Ideal c = ideal_colon(ideal, g);
        result = result ? ideal_intersection(*result, c) : c;
    }
    return *result;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) { return intersection_impl(a, b, true); }

namespace detail {
Ideal colon_by_elimination(const Ideal& ideal, const Polynomial& f) { return colon_impl(ideal, f, false); }
Ideal intersection_by_elimination(const Ideal& a, const Ideal& b) { return intersection_impl(a, b, false); }
}  // namespace detail

std::uint64_t min_gens(const Ideal& ideal) {
    if (!ideal.has_homogeneous_generators())
        throw Error(ErrorKind::non_homogeneous, "minimal generator count needs homogeneous generators");
    if (ideal.is_unit()) throw Error(ErrorKind::precondition, "minimal generator count of the unit ideal");
    auto length = length_subquotient(ideal, Ideal::maximal(ideal.ring()) * ideal);
    return length.value();
}

}  // namespace hkspread
