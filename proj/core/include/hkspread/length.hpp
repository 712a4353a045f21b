#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hkspread/ideal.hpp"
#include "hkspread/rational.hpp"

namespace hkspread {

/// Length of a module: a nonnegative integer, or infinite.
class LengthValue {
   public:
    static LengthValue finite(std::uint64_t n) { return LengthValue(n); }
    static LengthValue infinite() { return LengthValue(); }

    bool is_finite() const noexcept { return value_.has_value(); }
    /// Throws ErrorKind::infinite_length when infinite.
    std::uint64_t value() const;
    std::string to_string() const;

    friend bool operator==(const LengthValue&, const LengthValue&) = default;

   private:
    LengthValue() = default;
    explicit LengthValue(std::uint64_t n) : value_(n) {}
    std::optional<std::uint64_t> value_;
};

/// λ(R/I), counted by standard monomials.
LengthValue length_quotient(const Ideal& ideal);

/// λ(M/N) for N ⊆ M, through the colon filtration
/// N ⊆ N + (g_1) ⊆ ... ⊆ M whose steps are cyclic modules R/((N + (g_1..g_{j-1})) : g_j).
/// Throws ErrorKind::containment when N is not inside M.
LengthValue length_subquotient(const Ideal& m, const Ideal& n);

struct HKSample {
    unsigned e = 0;
    std::uint64_t q = 1;
    std::uint64_t colength = 0;
    /// colength / q^d
    Rational normalized;
};

/// λ(R/a^[p^e]) for e = 0..e_max.
std::vector<HKSample> hk_function(const Ideal& a, unsigned e_max);

enum class EhkMethod { automatic, exact, last_sample, linear_fit };
enum class EhkPath { monomial_exact, regular_exact, last_sample, linear_fit };

std::string_view to_string(EhkPath path) noexcept;
EhkMethod ehk_method_from_string(std::string_view name);

/// Least-squares fit of λ(q) = leading * q^d + secondary * q^(d-1).
struct HilbertKunzFit {
    Rational leading;
    Rational secondary;
    /// Sum of squared residuals.
    Rational residual;
};

HilbertKunzFit fit_hilbert_kunz(std::span<const HKSample> samples, int dimension);

struct HKEstimate {
    Number value;
    EhkPath method = EhkPath::regular_exact;
    std::vector<HKSample> samples;
    /// The extrapolated value as an exact rational (for the fit and last-sample paths).
    std::optional<Rational> extrapolated;
    std::optional<HilbertKunzFit> fit;
    /// Zero on the exact paths; absent when no bound is known.
    std::optional<Rational> error_bound;
};

/// Hilbert–Kunz multiplicity of an m-primary ideal.
///
/// In a relation-free ring λ(R/a^[q]) = q^d λ(R/a) holds exactly, so the
/// colength itself is returned (monomial-exact for monomial generators,
/// regular-exact otherwise). With relations the value is extrapolated from
/// hk_function samples, by least squares unless last_sample is requested.
HKEstimate ehk_estimate(const Ideal& a, unsigned e_max = 3, EhkMethod method = EhkMethod::automatic);

}  // namespace hkspread
