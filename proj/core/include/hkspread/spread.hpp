#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkspread/ideal.hpp"
#include "hkspread/length.hpp"
#include "hkspread/rational.hpp"

namespace hkspread {

/// Printed with every independence diagnostic: tight closure is never computed here.
extern const char* const kColonCriterionCaveat;

struct SpreadOptions {
    /// Exponent of the first q0 tried.
    unsigned q0_exponent = 0;
    unsigned e_max = 3;
    /// Largest q0 exponent reached by automatic escalation.
    unsigned q0_exponent_cap = 3;
    /// Sample range for Hilbert–Kunz extrapolation in rings with relations.
    unsigned ehk_e_max = 3;
};

struct SpreadEntry {
    unsigned q0_exponent = 0;
    unsigned e = 0;
    std::uint64_t q = 1;
    /// λ(J^[q q0] / a^[q] J^[q q0]); absent for the Hilbert–Kunz difference form.
    std::optional<std::uint64_t> length;
    Number ratio;
    std::int64_t nearest = 0;
    double rounding_distance = 0.0;
};

/// Finite-q truncations of the *-spread length formula.
///
/// An integer estimate is reported only when the two largest sampled e for
/// the final q0 round to the same integer, each within 1/4 of it.
struct SpreadReport {
    std::string method;
    std::string ideal;
    std::string reduction_ideal;
    Number ehk_reduction_ideal;
    std::vector<unsigned> q0_schedule;
    std::vector<SpreadEntry> entries;
    std::optional<std::int64_t> estimate;
    bool stabilized = false;
    double rounding_distance = 0.0;
    unsigned q0_exponent_used = 0;
};

/// Least e' <= cap with m^[p^e'] ⊆ a. Starting q0 below this lets a fail to
/// absorb the syzygies of J^[q0], and the ratio then settles on a wrong value.
unsigned reduction_q0_floor(const Ideal& a, unsigned cap);

/// ℓ*(J) from (1/e_HK(a)) λ(J^[q q0] / a^[q] J^[q q0]) / q^d for e = 0..e_max,
/// doubling the q0 exponent (up to the cap) while the estimate is unstable.
/// The first q0 exponent is at least reduction_q0_floor(a, cap).
SpreadReport star_spread_estimate(const Ideal& j, const Ideal& a, const SpreadOptions& options = {});

/// ℓ*(J) = (e_HK(a J^[q0]) - e_HK(J^[q0])) / e_HK(a), for m-primary J.
SpreadReport star_spread_hk_difference(const Ideal& j, const Ideal& a, const SpreadOptions& options = {});

struct ColonSample {
    unsigned e = 0;
    std::uint64_t q = 1;
    /// x^q ∈ I^[q], which certifies x ∈ I^*.
    bool unit_colon = false;
    /// Least e' with (I^[q] : x^q) ⊆ m^[q / p^e'].
    std::optional<unsigned> q0_exponent;
    std::vector<std::string> colon_generators;
};

struct ColonCriterionReport {
    std::string ideal;
    std::string candidate;
    std::vector<ColonSample> samples;
    bool dependent = false;
    bool pass = false;
    /// Largest of the per-sample q0 exponents, when every sample passed.
    std::optional<unsigned> required_q0_exponent;
    std::string caveat;
};

/// Checks (I^[q] : x^q) ⊆ m^[q/q0] for q = p^0..p^e_max and q0 up to p^q0_exponent_cap.
ColonCriterionReport colon_criterion_diagnostic(const Ideal& ideal, const Polynomial& x, unsigned q0_exponent_cap,
                                                unsigned e_max);

struct IndependenceReport {
    std::vector<ColonCriterionReport> generators;
    bool all_pass = false;
    bool dependence_certified = false;
    std::string caveat;
};

/// Runs the colon criterion for each f_i against the ideal of the others.
IndependenceReport star_independence_diagnostic(std::span<const Polynomial> generators, unsigned q0_exponent_cap,
                                                unsigned e_max);

struct IdentityCheck {
    std::string label;
    std::vector<std::uint64_t> q;
    Number lhs;
    Number rhs;
    Number residual;
    bool pass = false;
};

struct IdentityReport {
    std::string identity;
    std::vector<IdentityCheck> checks;
    bool pass = false;
    double tolerance = 0.05;
    std::vector<std::string> notes;
};

struct IdentityOptions {
    /// Used when either side is only approximately known.
    double tolerance = 0.05;
    unsigned ehk_e_max = 3;
};

/// ℓ e_HK(I) + q^d e_HK(J) = e_HK(I J^[q]) for each q = p^e, e in e_list, plus
/// the two consequences obtained from pairs q < q'.
IdentityReport check_product_identity(const Ideal& i, const Ideal& j, std::int64_t ell, std::span<const unsigned> e_list,
                                      const IdentityOptions& options = {});

/// e_HK(J J^[q]) = (ℓ*(J) + q^d) e_HK(J), with ℓ*(J) from star_spread_estimate.
IdentityReport check_self_product(const Ideal& j, std::span<const unsigned> e_list, const IdentityOptions& options = {});

/// λ((I,z)^[q q0] / a^[q] (I,z)^[q q0]) / q^d = e_HK(a) + λ(I^[q q0] / a^[q] I^[q q0]) / q^d.
IdentityReport check_lemma33_additivity(const Ideal& i, const Polynomial& z, const Ideal& a, unsigned q0_exponent,
                                        unsigned e_max, const IdentityOptions& options = {});

/// Base change to S = R[z_1..z_s]:
///   λ_S(S/(a^[q] S, z^[q])) = λ_S(S/(m S, z^[q])) λ_R(R/a^[q])  and
///   e_HK(a S + (z)) = e_HK(a).
IdentityReport check_base_change(const Ideal& a, unsigned s, std::span<const unsigned> e_list,
                                 const IdentityOptions& options = {});

/// With S = R[z]: λ_S((m^[q] I^[q q0] S + (z^q) ∩ I^[q q0] S) / (m S, z)^[q] I^[q q0] S) = 0.
IdentityReport check_corollary_vanishing(const Ideal& i, unsigned q0_exponent, unsigned e_max,
                                         const IdentityOptions& options = {});

/// S = R[z_1..z_s] with fresh variable names.
RingPtr polynomial_extension(const RingPtr& ring, unsigned s);

}  // namespace hkspread
