#include "hkspread/length.hpp"

#include <string>

namespace hkspread {

std::uint64_t LengthValue::value() const {
    if (!value_) throw Error(ErrorKind::infinite_length, "length is infinite");
    return *value_;
}

std::string LengthValue::to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

LengthValue length_quotient(const Ideal& ideal) {
    const auto& basis = ideal.groebner();
    if (!is_zero_dimensional(basis)) return LengthValue::infinite();
    return LengthValue::finite(count_standard_monomials(basis));
}

LengthValue length_subquotient(const Ideal& m, const Ideal& n) {
    require_same_ring(*m.ring(), *n.ring());
    if (!m.contains(n)) throw Error(ErrorKind::containment, "submodule is not contained in the module");
    std::uint64_t total = 0;
    Ideal current = n;
    for (const auto& g : m.generators()) {
        auto step = length_quotient(ideal_colon(current, g));
        if (!step.is_finite()) return LengthValue::infinite();
        total += step.value();
        current = current + Ideal(m.ring(), {g});
    }
    return LengthValue::finite(total);
}

std::vector<HKSample> hk_function(const Ideal& a, unsigned e_max) {
    const auto& ring = *a.ring();
    const int d = ring.dimension();
    std::vector<HKSample> samples;
    samples.reserve(e_max + 1);
    for (unsigned e = 0; e <= e_max; ++e) {
        FrobeniusExponent fe(e);
        const std::uint64_t q = fe.q(ring.characteristic());
        auto length = length_quotient(bracket_power(a, fe));
        if (!length.is_finite())
            throw Error(ErrorKind::not_m_primary, "Hilbert-Kunz function needs an m-primary ideal");
        Rational normalized = Rational(length.value()) / rational_pow(Rational(q), d);
        samples.push_back({e, q, length.value(), normalized});
    }
    return samples;
}

std::string_view to_string(EhkPath path) noexcept {
    switch (path) {
        case EhkPath::monomial_exact: return "monomial-exact";
        case EhkPath::regular_exact: return "regular-exact";
        case EhkPath::last_sample: return "last-sample";
        case EhkPath::linear_fit: return "linear-fit";
    }
    return "unknown";
}

EhkMethod ehk_method_from_string(std::string_view name) {
    if (name == "auto") return EhkMethod::automatic;
    if (name == "exact") return EhkMethod::exact;
    if (name == "last") return EhkMethod::last_sample;
    if (name == "fit") return EhkMethod::linear_fit;
    throw Error(ErrorKind::invalid_argument, "unknown method '" + std::string(name) + "' (expected fit, last or exact)");
}

HilbertKunzFit fit_hilbert_kunz(std::span<const HKSample> samples, int dimension) {
    if (samples.size() < 2) throw Error(ErrorKind::invalid_argument, "a fit needs at least two samples");
    // Normal equations for y ≈ a u + b v with u = q^d, v = q^(d-1).
    Rational suu(0), suv(0), svv(0), suy(0), svy(0);
    for (const auto& s : samples) {
        Rational u = rational_pow(Rational(s.q), dimension);
        Rational v = rational_pow(Rational(s.q), dimension - 1);
        Rational y(s.colength);
        suu += u * u;
        suv += u * v;
        svv += v * v;
        suy += u * y;
        svy += v * y;
    }
    Rational det = suu * svv - suv * suv;
    if (det == 0) throw Error(ErrorKind::invalid_argument, "samples do not determine the fit (repeated q)");
    HilbertKunzFit fit;
    fit.leading = (suy * svv - svy * suv) / det;
    fit.secondary = (suu * svy - suv * suy) / det;
    fit.residual = 0;
    for (const auto& s : samples) {
        Rational r = Rational(s.colength) - fit.leading * rational_pow(Rational(s.q), dimension) -
                     fit.secondary * rational_pow(Rational(s.q), dimension - 1);
        fit.residual += r * r;
    }
    return fit;
}

HKEstimate ehk_estimate(const Ideal& a, unsigned e_max, EhkMethod method) {
    const auto& ring = *a.ring();
    auto colength = length_quotient(a);
    if (!colength.is_finite())
        throw Error(ErrorKind::not_m_primary, "Hilbert-Kunz multiplicity needs an m-primary ideal");

    HKEstimate estimate;
    if (!ring.has_relations()) {
        estimate.method = a.has_monomial_generators() ? EhkPath::monomial_exact : EhkPath::regular_exact;
        estimate.value = Number::exact(Rational(colength.value()));
        estimate.error_bound = Rational(0);
        return estimate;
    }
    if (method == EhkMethod::exact)
        throw Error(ErrorKind::precondition, "exact Hilbert-Kunz multiplicity is only available without relations");
    if (e_max < 1) throw Error(ErrorKind::invalid_argument, "extrapolation needs e_max >= 1");

    estimate.samples = hk_function(a, e_max);
    if (method == EhkMethod::last_sample) {
        estimate.method = EhkPath::last_sample;
        estimate.extrapolated = estimate.samples.back().normalized;
    } else {
        estimate.method = EhkPath::linear_fit;
        estimate.fit = fit_hilbert_kunz(estimate.samples, ring.dimension());
        estimate.extrapolated = estimate.fit->leading;
    }
    estimate.value = Number::approximate(to_double(*estimate.extrapolated));
    return estimate;
}

}  // namespace hkspread
