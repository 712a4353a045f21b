#include "hkspread/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hkspread {

namespace {

void normalize(const Ring& ring, std::vector<Term>& terms) {
    const auto& order = ring.order();
    const auto& field = ring.field();
    for (auto& t : terms) {
        if (t.monomial.size() != ring.nvars())
            throw Error(ErrorKind::invalid_argument, "monomial length does not match the ring");
        t.coeff = t.coeff % field.characteristic();
    }
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial)
            out.back().coeff = field.add(out.back().coeff, t.coeff);
        else
            out.push_back(std::move(t));
        if (out.back().coeff == 0) out.pop_back();
    }
    terms = std::move(out);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize(*ring_, terms_);
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
    Coeff v = ring->field().reduce(c);
    if (v == 0) return Polynomial(std::move(ring));
    Monomial one(ring->nvars());
    return Polynomial(ring, {{std::move(one), v}}, Sorted{});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) throw Error(ErrorKind::invalid_argument, "variable index out of range");
    Monomial m(ring->nvars());
    m[index] = 1;
    return Polynomial(ring, {{std::move(m), 1}}, Sorted{});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Coeff c) {
    return Polynomial(std::move(ring), {{std::move(m), c}});
}

bool Polynomial::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

const Term& Polynomial::lead() const {
    if (terms_.empty()) throw Error(ErrorKind::invalid_argument, "zero polynomial has no leading term");
    return terms_.front();
}

namespace {
std::uint64_t weighted_degree(const Monomial& m, std::span<const Exponent> weights) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += std::uint64_t{m[i]} * weights[i];
    return d;
}
}  // namespace

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    auto w = ring_->weights();
    auto d = weighted_degree(terms_.front().monomial, w);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return weighted_degree(t.monomial, w) == d; });
}

std::uint64_t Polynomial::total_degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty() || terms_.front().coeff == 1) return *this;
    return scaled(ring_->field().inverse(terms_.front().coeff));
}

Polynomial Polynomial::scaled(Coeff c) const {
    const auto& field = ring_->field();
    c %= field.characteristic();
    if (c == 0) return Polynomial(ring_);
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff = field.mul(t.coeff, c);
    return Polynomial(ring_, std::move(out), Sorted{});
}

Polynomial Polynomial::add_multiple(Coeff c, const Monomial& m, const Polynomial& g) const {
    require_same_ring(*ring_, *g.ring_);
    const auto& field = ring_->field();
    const auto& order = ring_->order();
    const auto max_exp = ring_->limits().max_exponent;
    c %= field.characteristic();
    if (c == 0 || g.is_zero()) return *this;

    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    Term pending;
    bool have_pending = false;
    auto next_b = [&] {
        pending = Term{multiply(b->monomial, m, max_exp), field.mul(b->coeff, c)};
        have_pending = true;
        ++b;
    };
    if (b != g.terms_.end()) next_b();
    while (a != terms_.end() || have_pending) {
        if (!have_pending) {
            out.push_back(*a++);
            continue;
        }
        if (a == terms_.end()) {
            out.push_back(std::move(pending));
            have_pending = false;
            if (b != g.terms_.end()) next_b();
            continue;
        }
        int cmp = order.compare(a->monomial, pending.monomial);
        if (cmp > 0) {
            out.push_back(*a++);
        } else if (cmp < 0) {
            out.push_back(std::move(pending));
            have_pending = false;
            if (b != g.terms_.end()) next_b();
        } else {
            Coeff s = field.add(a->coeff, pending.coeff);
            if (s != 0) out.push_back({a->monomial, s});
            ++a;
            have_pending = false;
            if (b != g.terms_.end()) next_b();
        }
    }
    return Polynomial(ring_, std::move(out), Sorted{});
}

Polynomial Polynomial::rebind(RingPtr target) const {
    if (target->nvars() != ring_->nvars() || target->characteristic() != ring_->characteristic())
        throw Error(ErrorKind::ring_mismatch, "cannot rebind polynomial into an incompatible ring");
    if (target->order() == ring_->order()) return Polynomial(std::move(target), terms_, Sorted{});
    return Polynomial(std::move(target), terms_);
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    auto names = ring_->variables();
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool one = t.monomial.is_one();
        if (one) {
            os << t.coeff;
            continue;
        }
        if (t.coeff != 1) os << t.coeff << '*';
        bool first_var = true;
        for (std::size_t i = 0; i < t.monomial.size(); ++i) {
            if (t.monomial[i] == 0) continue;
            if (!first_var) os << '*';
            first_var = false;
            os << names[i];
            if (t.monomial[i] != 1) os << '^' << t.monomial[i];
        }
    }
    return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    *this = add_multiple(1, Monomial(ring_->nvars()), g);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    *this = add_multiple(ring_->field().neg(1), Monomial(ring_->nvars()), g);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
    *this = *this * g;
    return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    const auto& field = f.ring().field();
    const auto max_exp = f.ring().limits().max_exponent;
    std::vector<Term> products;
    products.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
        for (const auto& b : g.terms_)
            products.push_back({multiply(a.monomial, b.monomial, max_exp), field.mul(a.coeff, b.coeff)});
    return Polynomial(f.ring_, std::move(products));
}

Polynomial operator-(const Polynomial& f) { return f.scaled(f.ring().field().neg(1)); }

bool operator==(const Polynomial& f, const Polynomial& g) {
    if (f.ring_ != g.ring_ && !f.ring_->same_structure(*g.ring_)) return false;
    return f.terms_ == g.terms_;
}

Polynomial power(const Polynomial& f, std::uint64_t n) {
    Polynomial result = Polynomial::constant(f.ring_ptr(), 1);
    for (std::uint64_t i = 0; i < n; ++i) result *= f;
    return result;
}

Polynomial qth_power(const Polynomial& f, FrobeniusExponent q) {
    const auto& ring = f.ring();
    const auto& field = ring.field();
    const std::uint64_t qv = q.q(ring.characteristic());
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms())
        out.push_back({dilate(t.monomial, qv, ring.limits().max_exponent), field.pow(t.coeff, qv)});
    // Dilation preserves the order of terms, so no resort is needed.
    return Polynomial(f.ring_ptr(), std::move(out));
}

Polynomial qth_power(const Polynomial& f, std::uint64_t q) {
    return qth_power(f, FrobeniusExponent::from_q(q, f.ring().characteristic()));
}

Polynomial embed(const Polynomial& f, const RingPtr& target, bool prepend) {
    const std::size_t n = f.ring().nvars();
    const std::size_t extra = target->nvars() - n;
    if (target->nvars() < n) throw Error(ErrorKind::ring_mismatch, "target ring has fewer variables");
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < n; ++i) m[prepend ? i + extra : i] = t.monomial[i];
        out.push_back({std::move(m), t.coeff});
    }
    return Polynomial(target, std::move(out));
}

Polynomial contract(const Polynomial& f, const RingPtr& target, bool from_front) {
    const std::size_t n = target->nvars();
    const std::size_t extra = f.ring().nvars() - n;
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m(n);
        for (std::size_t i = 0; i < f.ring().nvars(); ++i) {
            bool dropped = from_front ? i < extra : i >= n;
            if (dropped) {
                if (t.monomial[i] != 0)
                    throw Error(ErrorKind::invalid_argument, "polynomial involves a variable being dropped");
                continue;
            }
            m[from_front ? i - extra : i] = t.monomial[i];
        }
        out.push_back({std::move(m), t.coeff});
    }
    return Polynomial(target, std::move(out));
}

}  // namespace hkspread
