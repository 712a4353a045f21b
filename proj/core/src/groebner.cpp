#include "hkspread/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

namespace hkspread {

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {
    leads_.reserve(elements_.size());
    for (const auto& g : elements_) leads_.push_back(g.lead_monomial());
}

bool GroebnerBasis::is_unit() const noexcept {
    return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

bool GroebnerBasis::is_monomial() const noexcept {
    return std::all_of(elements_.begin(), elements_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.elements_.size() != b.elements_.size()) return false;
    for (std::size_t i = 0; i < a.elements_.size(); ++i)
        if (!(a.elements_[i] == b.elements_[i])) return false;
    return true;
}

namespace {

class StepBudget {
   public:
    explicit StepBudget(std::uint64_t limit) : limit_(limit) {}
    void charge() {
        if (++used_ > limit_)
            throw Error(ErrorKind::resource_limit,
                        "Groebner basis computation exceeded " + std::to_string(limit_) + " reduction steps");
    }

   private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

std::optional<std::size_t> find_reducer(const std::vector<Monomial>& leads, const Monomial& m) {
    for (std::size_t i = 0; i < leads.size(); ++i)
        if (leads[i].divides(m)) return i;
    return std::nullopt;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const std::vector<Monomial>& leads,
                  StepBudget& budget) {
    const auto& field = f.ring().field();
    std::vector<Term> remainder;
    Polynomial p = f;
    while (!p.is_zero()) {
        const Term lt = p.lead();
        if (auto i = find_reducer(leads, lt.monomial)) {
            budget.charge();
            const auto& g = basis[*i];
            Coeff c = field.neg(field.mul(lt.coeff, field.inverse(g.lead_coeff())));
            p = p.add_multiple(c, divide(lt.monomial, leads[*i]), g);
        } else {
            remainder.push_back(lt);
            // p minus its leading term
            p = p.add_multiple(field.neg(lt.coeff), Monomial(lt.monomial.size()),
                               Polynomial::monomial(p.ring_ptr(), lt.monomial, 1));
        }
    }
    return Polynomial(f.ring_ptr(), std::move(remainder));
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

class Buchberger {
   public:
    explicit Buchberger(RingPtr ring) : ring_(std::move(ring)), budget_(ring_->limits().max_gb_steps) {}

    void insert(const Polynomial& f) {
        if (unit_) return;
        Polynomial h = reduce(f, basis_, leads_, budget_);
        if (!h.is_zero()) add(h.monic());
    }

    void run() {
        while (!pending_.empty() && !unit_) {
            auto it = std::min_element(pending_.begin(), pending_.end(), [&](const Pair& a, const Pair& b) {
                auto da = a.lcm.degree(), db = b.lcm.degree();
                if (da != db) return da < db;
                int c = ring_->order().compare(a.lcm, b.lcm);
                if (c != 0) return c < 0;
                return std::tie(a.j, a.i) < std::tie(b.j, b.i);
            });
            Pair pair = std::move(*it);
            pending_.erase(it);
            pending_keys_.erase({pair.i, pair.j});
            if (chain_criterion(pair)) continue;
            insert(s_polynomial(pair));
        }
    }

    GroebnerBasis finish() {
        if (unit_) return GroebnerBasis(ring_, {Polynomial::constant(ring_, 1)});
        const auto& order = ring_->order();
        std::vector<std::size_t> idx(basis_.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return order.less(leads_[a], leads_[b]); });
        std::vector<Polynomial> minimal;
        std::vector<Monomial> minimal_leads;
        for (auto k : idx) {
            if (find_reducer(minimal_leads, leads_[k])) continue;
            minimal.push_back(basis_[k]);
            minimal_leads.push_back(leads_[k]);
        }
        std::vector<Polynomial> reduced;
        reduced.reserve(minimal.size());
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            std::vector<Polynomial> others;
            std::vector<Monomial> other_leads;
            for (std::size_t m = 0; m < minimal.size(); ++m) {
                if (m == k) continue;
                others.push_back(minimal[m]);
                other_leads.push_back(minimal_leads[m]);
            }
            reduced.push_back(reduce(minimal[k], others, other_leads, budget_).monic());
        }
        return GroebnerBasis(ring_, std::move(reduced));
    }

   private:
    RingPtr ring_;
    StepBudget budget_;
    std::vector<Polynomial> basis_;
    std::vector<Monomial> leads_;
    std::vector<Pair> pending_;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys_;
    bool unit_ = false;

    void add(Polynomial h) {
        if (h.is_constant()) {
            unit_ = true;
            return;
        }
        if (basis_.size() >= ring_->limits().max_basis_size)
            throw Error(ErrorKind::resource_limit, "Groebner basis exceeded " +
                                                       std::to_string(ring_->limits().max_basis_size) + " elements");
        const std::size_t n = basis_.size();
        leads_.push_back(h.lead_monomial());
        basis_.push_back(std::move(h));
        for (std::size_t i = 0; i < n; ++i) {
            // Product criterion: coprime leading monomials give an S-polynomial reducing to zero.
            if (coprime(leads_[i], leads_[n])) continue;
            pending_.push_back({i, n, lcm(leads_[i], leads_[n])});
            pending_keys_.insert({i, n});
        }
    }

    bool is_pending(std::size_t a, std::size_t b) const {
        return pending_keys_.count({std::min(a, b), std::max(a, b)}) != 0;
    }

    bool chain_criterion(const Pair& pair) const {
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!leads_[k].divides(pair.lcm)) continue;
            if (!is_pending(pair.i, k) && !is_pending(pair.j, k)) return true;
        }
        return false;
    }

    Polynomial s_polynomial(const Pair& pair) const {
        const auto& field = ring_->field();
        Polynomial s(ring_);
        s = s.add_multiple(1, divide(pair.lcm, leads_[pair.i]), basis_[pair.i]);
        s = s.add_multiple(field.neg(1), divide(pair.lcm, leads_[pair.j]), basis_[pair.j]);
        return s;
    }
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring) {
    Buchberger engine(ring);
    for (const auto& g : gens) {
        require_same_ring(*ring, g.ring());
        if (!g.is_zero()) engine.insert(g.ring_ptr() == ring ? g : g.rebind(ring));
    }
    for (const auto& r : ring->relations()) engine.insert(r);
    engine.run();
    return engine.finish();
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order) {
    if (gens.empty()) throw Error(ErrorKind::invalid_argument, "cannot infer the ring of an empty generator list");
    auto ring = gens.front().ring().with_order(order);
    std::vector<Polynomial> moved;
    moved.reserve(gens.size());
    for (const auto& g : gens) {
        require_same_ring(gens.front().ring(), g.ring());
        moved.push_back(g.rebind(ring));
    }
    return buchberger(moved, ring);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    require_same_ring(f.ring(), *basis.ring());
    std::vector<Polynomial> elements(basis.elements().begin(), basis.elements().end());
    std::vector<Monomial> leads(basis.leading_monomials().begin(), basis.leading_monomials().end());
    StepBudget budget(basis.ring()->limits().max_gb_steps);
    Polynomial g = f.ring_ptr() == basis.ring() ? f : f.rebind(basis.ring());
    return reduce(g, elements, leads, budget);
}

int krull_dimension(const GroebnerBasis& basis) {
    if (basis.is_unit()) return -1;
    const std::size_t n = basis.ring()->nvars();
    if (n > 24) throw Error(ErrorKind::resource_limit, "too many variables for the dimension search");
    std::vector<std::uint32_t> supports;
    for (const auto& m : basis.leading_monomials()) {
        std::uint32_t mask = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (m[v] != 0) mask |= 1u << v;
        supports.push_back(mask);
    }
    int best = 0;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        int size = std::popcount(subset);
        if (size <= best) continue;
        bool independent = std::none_of(supports.begin(), supports.end(),
                                        [&](std::uint32_t s) { return (s & ~subset) == 0; });
        if (independent) best = size;
    }
    return best;
}

bool is_zero_dimensional(const GroebnerBasis& basis) {
    if (basis.is_unit()) return true;
    const std::size_t n = basis.ring()->nvars();
    for (std::size_t v = 0; v < n; ++v) {
        bool pure = std::any_of(basis.leading_monomials().begin(), basis.leading_monomials().end(),
                                [&](const Monomial& m) { return m[v] != 0 && m.support_size() == 1; });
        if (!pure) return false;
    }
    return true;
}

void for_each_standard_monomial(const GroebnerBasis& basis, const std::function<void(const Monomial&)>& visit) {
    if (basis.is_unit()) return;
    if (!is_zero_dimensional(basis))
        throw Error(ErrorKind::infinite_length, "quotient has positive dimension; length is infinite");
    const std::size_t n = basis.ring()->nvars();
    auto leads = basis.leading_monomials();
    auto standard = [&](const Monomial& m) {
        return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    Monomial m(n);
    // Standard monomials form an order ideal, so each coordinate can be
    // increased until the first non-standard monomial is met.
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
        for (m[v] = 0;; ++m[v]) {
            if (!standard(m)) break;
            if (v + 1 == n)
                visit(m);
            else
                walk(v + 1);
        }
        m[v] = 0;
    };
    if (n == 0) {
        visit(m);
        return;
    }
    walk(0);
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis) {
    std::vector<Monomial> out;
    for_each_standard_monomial(basis, [&](const Monomial& m) { out.push_back(m); });
    return out;
}

std::uint64_t count_standard_monomials(const GroebnerBasis& basis) {
    std::uint64_t count = 0;
    for_each_standard_monomial(basis, [&](const Monomial&) { ++count; });
    return count;
}

}  // namespace hkspread
