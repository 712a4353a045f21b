#include "hkspread/spread.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hkspread {

const char* const kColonCriterionCaveat =
    "finite-q diagnostic only: tight closure is not computed; a pass is evidence consistent with "
    "*-independence, not a proof, while a unit colon proves dependence";

namespace {

struct Rounding {
    std::int64_t nearest = 0;
    double distance = 0.0;
    bool within_quarter = false;
};

Rounding round_ratio(const Number& ratio) {
    Rounding r;
    if (ratio.is_exact()) {
        BigInt n = nearest_integer(ratio.rational());
        Rational diff = ratio.rational() - Rational(n);
        if (diff < 0) diff = -diff;
        r.nearest = n.convert_to<std::int64_t>();
        r.distance = to_double(diff);
        r.within_quarter = diff < Rational(1, 4);
    } else {
        r.nearest = static_cast<std::int64_t>(std::floor(ratio.value() + 0.5));
        r.distance = std::fabs(ratio.value() - static_cast<double>(r.nearest));
        r.within_quarter = r.distance < 0.25;
    }
    return r;
}

Number q_power(std::uint64_t q, int d) { return Number::exact(rational_pow(Rational(q), d)); }

void require_m_primary(const Ideal& ideal, const char* what) {
    if (!length_quotient(ideal).is_finite())
        throw Error(ErrorKind::not_m_primary, std::string(what) + " must be m-primary");
}

std::vector<unsigned> next_q0(unsigned current, unsigned cap) {
    unsigned next = current == 0 ? 1 : 2 * current;
    if (next > cap || next == current) return {};
    return {next};
}

Number subquotient_ratio(const Ideal& m, const Ideal& n, std::uint64_t q, int d, std::uint64_t& length_out) {
    auto length = length_subquotient(m, n);
    if (!length.is_finite()) throw Error(ErrorKind::infinite_length, "subquotient has infinite length");
    length_out = length.value();
    return Number::exact(Rational(length_out)) / q_power(q, d);
}

IdentityCheck compare(std::string label, std::vector<std::uint64_t> q, Number lhs, Number rhs, double tolerance) {
    IdentityCheck check;
    check.label = std::move(label);
    check.q = std::move(q);
    check.residual = lhs - rhs;
    check.pass = check.residual.is_exact() ? check.residual.rational() == 0
                                           : std::fabs(check.residual.value()) < tolerance;
    check.lhs = std::move(lhs);
    check.rhs = std::move(rhs);
    return check;
}

void finalize(IdentityReport& report) {
    report.pass = !report.checks.empty() &&
                  std::all_of(report.checks.begin(), report.checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

Ideal extend_ideal(const Ideal& ideal, const RingPtr& target) {
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(embed(g, target, false));
    return Ideal(target, std::move(gens));
}

Ideal variable_powers(const RingPtr& ring, std::size_t from, std::size_t to, std::uint64_t q) {
    std::vector<Polynomial> gens;
    for (std::size_t v = from; v < to; ++v) gens.push_back(qth_power(Polynomial::variable(ring, v), q));
    return Ideal(ring, std::move(gens));
}

}  // namespace

unsigned reduction_q0_floor(const Ideal& a, unsigned cap) {
    const RingPtr& ring = a.ring();
    for (unsigned k = 0; k < cap; ++k)
        if (a.contains(variable_powers(ring, 0, ring->nvars(), FrobeniusExponent(k).q(ring->characteristic()))))
            return k;
    return cap;
}

SpreadReport star_spread_estimate(const Ideal& j, const Ideal& a, const SpreadOptions& options) {
    require_same_ring(*j.ring(), *a.ring());
    if (j.is_unit()) throw Error(ErrorKind::precondition, "J must be a proper ideal");
    if (options.e_max < 1) throw Error(ErrorKind::invalid_argument, "spread estimation needs e_max >= 1");
    require_m_primary(a, "the reduction ideal a");

    const auto& ring = *j.ring();
    const std::uint32_t p = ring.characteristic();
    const int d = ring.dimension();

    SpreadReport report;
    report.method = "length";
    report.ideal = j.to_string();
    report.reduction_ideal = a.to_string();
    report.ehk_reduction_ideal = ehk_estimate(a, options.ehk_e_max).value;

    std::vector<unsigned> schedule{std::max(options.q0_exponent, reduction_q0_floor(a, options.q0_exponent_cap))};
    while (!schedule.empty()) {
        const unsigned q0e = schedule.front();
        schedule.clear();
        report.q0_schedule.push_back(q0e);
        std::vector<Rounding> roundings;
        for (unsigned e = 0; e <= options.e_max; ++e) {
            const std::uint64_t q = FrobeniusExponent(e).q(p);
            auto jq = bracket_power(j, FrobeniusExponent(e + q0e));
            auto aq = bracket_power(a, FrobeniusExponent(e));
            SpreadEntry entry;
            entry.q0_exponent = q0e;
            entry.e = e;
            entry.q = q;
            std::uint64_t length = 0;
            entry.ratio = subquotient_ratio(jq, aq * jq, q, d, length) / report.ehk_reduction_ideal;
            entry.length = length;
            auto r = round_ratio(entry.ratio);
            entry.nearest = r.nearest;
            entry.rounding_distance = r.distance;
            roundings.push_back(r);
            report.entries.push_back(std::move(entry));
        }
        const auto& last = roundings[roundings.size() - 1];
        const auto& prev = roundings[roundings.size() - 2];
        report.q0_exponent_used = q0e;
        report.rounding_distance = last.distance;
        report.stabilized = last.within_quarter && prev.within_quarter && last.nearest == prev.nearest;
        if (report.stabilized) {
            report.estimate = last.nearest;
            break;
        }
        schedule = next_q0(q0e, options.q0_exponent_cap);
    }
    return report;
}

SpreadReport star_spread_hk_difference(const Ideal& j, const Ideal& a, const SpreadOptions& options) {
    require_same_ring(*j.ring(), *a.ring());
    require_m_primary(j, "J");
    require_m_primary(a, "the reduction ideal a");
    const auto& ring = *j.ring();

    SpreadReport report;
    report.method = "hk-difference";
    report.ideal = j.to_string();
    report.reduction_ideal = a.to_string();
    report.ehk_reduction_ideal = ehk_estimate(a, options.ehk_e_max).value;

    std::vector<unsigned> schedule{std::max(options.q0_exponent, reduction_q0_floor(a, options.q0_exponent_cap))};
    while (!schedule.empty()) {
        const unsigned q0e = schedule.front();
        schedule.clear();
        report.q0_schedule.push_back(q0e);
        auto jq0 = bracket_power(j, FrobeniusExponent(q0e));
        Number with_a = ehk_estimate(a * jq0, options.ehk_e_max).value;
        Number without = ehk_estimate(jq0, options.ehk_e_max).value;
        SpreadEntry entry;
        entry.q0_exponent = q0e;
        entry.q = FrobeniusExponent(q0e).q(ring.characteristic());
        entry.ratio = (with_a - without) / report.ehk_reduction_ideal;
        auto r = round_ratio(entry.ratio);
        entry.nearest = r.nearest;
        entry.rounding_distance = r.distance;
        report.entries.push_back(entry);
        report.q0_exponent_used = q0e;
        report.rounding_distance = r.distance;
        report.stabilized = r.within_quarter;
        if (report.stabilized) {
            report.estimate = r.nearest;
            break;
        }
        schedule = next_q0(q0e, options.q0_exponent_cap);
    }
    return report;
}

ColonCriterionReport colon_criterion_diagnostic(const Ideal& ideal, const Polynomial& x, unsigned q0_exponent_cap,
                                                unsigned e_max) {
    require_same_ring(*ideal.ring(), x.ring());
    const RingPtr& ring = ideal.ring();
    const std::uint32_t p = ring->characteristic();

    ColonCriterionReport report;
    report.ideal = ideal.to_string();
    report.candidate = x.to_string();
    report.caveat = kColonCriterionCaveat;
    bool all_found = true;
    unsigned required = 0;
    for (unsigned e = 0; e <= e_max; ++e) {
        ColonSample sample;
        sample.e = e;
        sample.q = FrobeniusExponent(e).q(p);
        auto colon = ideal_colon(bracket_power(ideal, FrobeniusExponent(e)), qth_power(x, FrobeniusExponent(e)));
        for (const auto& g : colon.groebner().elements()) sample.colon_generators.push_back(g.to_string());
        if (colon.is_unit()) {
            sample.unit_colon = true;
            report.dependent = true;
        } else {
            for (unsigned k = 0; k <= std::min(q0_exponent_cap, e); ++k) {
                auto target = variable_powers(ring, 0, ring->nvars(), FrobeniusExponent(e - k).q(p));
                if (target.contains(colon)) {
                    sample.q0_exponent = k;
                    break;
                }
            }
        }
        if (sample.q0_exponent)
            required = std::max(required, *sample.q0_exponent);
        else
            all_found = false;
        report.samples.push_back(std::move(sample));
    }
    report.pass = !report.dependent && all_found;
    if (report.pass) report.required_q0_exponent = required;
    return report;
}

IndependenceReport star_independence_diagnostic(std::span<const Polynomial> generators, unsigned q0_exponent_cap,
                                                unsigned e_max) {
    if (generators.size() < 2)
        throw Error(ErrorKind::precondition, "independence diagnostic needs at least two generators");
    const RingPtr& ring = generators.front().ring_ptr();
    IndependenceReport report;
    report.caveat = kColonCriterionCaveat;
    report.all_pass = true;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t k = 0; k < generators.size(); ++k)
            if (k != i) others.push_back(generators[k]);
        auto r = colon_criterion_diagnostic(Ideal(ring, std::move(others)), generators[i], q0_exponent_cap, e_max);
        report.all_pass = report.all_pass && r.pass;
        report.dependence_certified = report.dependence_certified || r.dependent;
        report.generators.push_back(std::move(r));
    }
    return report;
}

IdentityReport check_product_identity(const Ideal& i, const Ideal& j, std::int64_t ell, std::span<const unsigned> e_list,
                                      const IdentityOptions& options) {
    require_same_ring(*i.ring(), *j.ring());
    require_m_primary(i, "I");
    require_m_primary(j, "J");
    const auto& ring = *i.ring();
    const std::uint32_t p = ring.characteristic();
    const int d = ring.dimension();

    IdentityReport report;
    report.identity = "product";
    report.tolerance = options.tolerance;
    const Number ehk_i = ehk_estimate(i, options.ehk_e_max).value;
    const Number ehk_j = ehk_estimate(j, options.ehk_e_max).value;
    const Number l = Number::exact(Rational(ell));

    std::vector<unsigned> exps(e_list.begin(), e_list.end());
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<Number> ehk_products;
    for (unsigned e : exps) {
        const std::uint64_t q = FrobeniusExponent(e).q(p);
        ehk_products.push_back(ehk_estimate(i * bracket_power(j, FrobeniusExponent(e)), options.ehk_e_max).value);
        report.checks.push_back(compare("a", {q}, l * ehk_i + q_power(q, d) * ehk_j, ehk_products.back(),
                                        options.tolerance));
    }
    for (std::size_t s = 0; s < exps.size(); ++s) {
        for (std::size_t t = s + 1; t < exps.size(); ++t) {
            const std::uint64_t q = FrobeniusExponent(exps[s]).q(p);
            const std::uint64_t qq = FrobeniusExponent(exps[t]).q(p);
            const Number gap = q_power(qq, d) - q_power(q, d);
            report.checks.push_back(
                compare("J", {q, qq}, gap * ehk_j, ehk_products[t] - ehk_products[s], options.tolerance));
            report.checks.push_back(compare("I", {q, qq}, gap * l * ehk_i,
                                            q_power(qq, d) * ehk_products[s] - q_power(q, d) * ehk_products[t],
                                            options.tolerance));
        }
    }
    finalize(report);
    return report;
}

IdentityReport check_self_product(const Ideal& j, std::span<const unsigned> e_list, const IdentityOptions& options) {
    require_m_primary(j, "J");
    const auto& ring = *j.ring();
    const std::uint32_t p = ring.characteristic();
    const int d = ring.dimension();

    SpreadOptions spread_options;
    spread_options.ehk_e_max = options.ehk_e_max;
    auto spread = star_spread_estimate(j, Ideal::maximal(j.ring()), spread_options);
    if (!spread.estimate)
        throw Error(ErrorKind::precondition, "star-spread estimate did not stabilize; cannot check the identity");

    IdentityReport report;
    report.identity = "self";
    report.tolerance = options.tolerance;
    report.notes.push_back("star-spread estimate " + std::to_string(*spread.estimate) + " (q0 exponent " +
                           std::to_string(spread.q0_exponent_used) + ")");
    const Number ehk_j = ehk_estimate(j, options.ehk_e_max).value;
    const Number l = Number::exact(Rational(*spread.estimate));
    for (unsigned e : e_list) {
        const std::uint64_t q = FrobeniusExponent(e).q(p);
        Number lhs = ehk_estimate(j * bracket_power(j, FrobeniusExponent(e)), options.ehk_e_max).value;
        report.checks.push_back(compare("self", {q}, lhs, (l + q_power(q, d)) * ehk_j, options.tolerance));
    }
    finalize(report);
    return report;
}

IdentityReport check_lemma33_additivity(const Ideal& i, const Polynomial& z, const Ideal& a, unsigned q0_exponent,
                                        unsigned e_max, const IdentityOptions& options) {
    require_same_ring(*i.ring(), z.ring());
    require_same_ring(*i.ring(), *a.ring());
    if (z.is_zero()) throw Error(ErrorKind::precondition, "z must be a nonzerodivisor modulo I (got 0)");
    if (!i.contains(ideal_colon(i, z)))
        throw Error(ErrorKind::precondition, "z = " + z.to_string() + " is a zerodivisor modulo I");
    require_m_primary(a, "the reduction ideal a");

    const auto& ring = *i.ring();
    const std::uint32_t p = ring.characteristic();
    const int d = ring.dimension();

    IdentityReport report;
    report.identity = "lemma33";
    report.tolerance = options.tolerance;
    const Number ehk_a = ehk_estimate(a, options.ehk_e_max).value;
    const Ideal iz = i + Ideal(i.ring(), {z});
    for (unsigned e = 0; e <= e_max; ++e) {
        const std::uint64_t q = FrobeniusExponent(e).q(p);
        const FrobeniusExponent big(e + q0_exponent);
        auto aq = bracket_power(a, FrobeniusExponent(e));
        auto izq = bracket_power(iz, big);
        auto iq = bracket_power(i, big);
        std::uint64_t unused = 0;
        Number lhs = subquotient_ratio(izq, aq * izq, q, d, unused);
        Number rhs = ehk_a + subquotient_ratio(iq, aq * iq, q, d, unused);
        report.checks.push_back(compare("additivity", {q}, lhs, rhs, options.tolerance));
    }
    finalize(report);
    return report;
}

RingPtr polynomial_extension(const RingPtr& ring, unsigned s) {
    std::set<std::string> used(ring->variables().begin(), ring->variables().end());
    std::vector<std::string> names;
    for (unsigned k = 1; k <= s; ++k) {
        std::string name = s == 1 ? "z" : "z" + std::to_string(k);
        while (used.count(name)) name += "_";
        used.insert(name);
        names.push_back(name);
    }
    return ring->extended(names, /*prepend=*/false);
}

IdentityReport check_base_change(const Ideal& a, unsigned s, std::span<const unsigned> e_list,
                                 const IdentityOptions& options) {
    require_m_primary(a, "a");
    if (s == 0) throw Error(ErrorKind::invalid_argument, "base change needs s >= 1 new variables");
    const RingPtr& r = a.ring();
    const std::uint32_t p = r->characteristic();
    const RingPtr ext = polynomial_extension(r, s);
    const std::size_t n = r->nvars();
    const Ideal m_ext = extend_ideal(Ideal::maximal(r), ext);
    const Ideal a_ext = extend_ideal(a, ext);

    IdentityReport report;
    report.identity = "basechange";
    report.tolerance = options.tolerance;
    report.notes.push_back("S = " + ext->describe() + "; the new variables form a system of parameters of S/mS");
    for (unsigned e : e_list) {
        const std::uint64_t q = FrobeniusExponent(e).q(p);
        auto zq = variable_powers(ext, n, n + s, q);
        auto lhs = length_quotient(bracket_power(a_ext, FrobeniusExponent(e)) + zq);
        auto fibre = length_quotient(m_ext + zq);
        auto base = length_quotient(bracket_power(a, FrobeniusExponent(e)));
        if (!lhs.is_finite() || !fibre.is_finite() || !base.is_finite())
            throw Error(ErrorKind::infinite_length, "base change lengths must be finite");
        report.checks.push_back(compare("a", {q}, Number::exact(Rational(lhs.value())),
                                        Number::exact(Rational(fibre.value()) * Rational(base.value())),
                                        options.tolerance));
    }
    // e(z; S/mS) = 1: S/mS is a polynomial ring in z and z are its variables.
    const Number ehk_s = ehk_estimate(a_ext + variable_powers(ext, n, n + s, 1), options.ehk_e_max).value;
    const Number ehk_r = ehk_estimate(a, options.ehk_e_max).value;
    report.checks.push_back(compare("b", {}, ehk_s, Number::exact(Rational(1)) * ehk_r, options.tolerance));
    finalize(report);
    return report;
}

IdentityReport check_corollary_vanishing(const Ideal& i, unsigned q0_exponent, unsigned e_max,
                                         const IdentityOptions& options) {
    const RingPtr& r = i.ring();
    if (i.is_unit()) throw Error(ErrorKind::precondition, "I must be a proper ideal");
    const std::uint32_t p = r->characteristic();
    const RingPtr ext = polynomial_extension(r, 1);
    const std::size_t n = r->nvars();
    const Ideal i_ext = extend_ideal(i, ext);
    const Ideal m_ext = extend_ideal(Ideal::maximal(r), ext);

    IdentityReport report;
    report.identity = "corollary";
    report.tolerance = options.tolerance;
    report.notes.push_back("S = " + ext->describe());
    for (unsigned e = 0; e <= e_max; ++e) {
        const std::uint64_t q = FrobeniusExponent(e).q(p);
        auto iq = bracket_power(i_ext, FrobeniusExponent(e + q0_exponent));
        auto mq = bracket_power(m_ext, FrobeniusExponent(e));
        auto zq = variable_powers(ext, n, n + 1, q);
        Ideal numerator = mq * iq + ideal_intersection(zq, iq);
        Ideal denominator = (mq + zq) * iq;
        auto length = length_subquotient(numerator, denominator);
        if (!length.is_finite()) throw Error(ErrorKind::infinite_length, "corollary subquotient has infinite length");
        report.checks.push_back(
            compare("vanishing", {q}, Number::exact(Rational(length.value())), Number::exact(Rational(0)),
                    options.tolerance));
    }
    finalize(report);
    return report;
}

}  // namespace hkspread
