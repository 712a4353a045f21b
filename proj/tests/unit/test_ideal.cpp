#include <catch_amalgamated.hpp>

#include <functional>

#include "helpers.hpp"
#include "hkspread/length.hpp"
#include "oracles.hpp"

using namespace hkspread;
using testing_helpers::ideal;
using testing_helpers::poly;
using testing_helpers::ring;

namespace {

bool in_monomial_ideal(const Ideal& i, const oracle::Exps& u) {
    for (const auto& g : i.generators()) {
        oracle::Exps e(g.lead_monomial().exponents().begin(), g.lead_monomial().exponents().end());
        if (oracle::divides(e, u)) return true;
    }
    return false;
}

/// Monomials in [0, box)^n satisfying `outside`.
std::uint64_t count_box(std::size_t n, unsigned box, const std::function<bool(const oracle::Exps&)>& outside) {
    std::uint64_t count = 0;
    oracle::Exps e(n, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == n) {
            count += outside(e) ? 1 : 0;
            return;
        }
        for (unsigned k = 0; k < box; ++k) {
            e[i] = k;
            walk(i + 1);
        }
    };
    walk(0);
    return count;
}

oracle::Exps exps_of(const Polynomial& f) {
    return oracle::Exps(f.lead_monomial().exponents().begin(), f.lead_monomial().exponents().end());
}

}  // namespace

TEST_CASE("membership, sums and products", "[ideal]") {
    auto r = ring(2, {"x", "y"});
    auto m = Ideal::maximal(r);
    CHECK(m.to_string() == "(x, y)");
    CHECK(m.contains(poly(r, "x*y + y^3")));
    CHECK_FALSE(m.contains(poly(r, "x + 1")));
    CHECK(is_member(poly(r, "x^2"), ideal(r, {"x^2", "y"})));
    CHECK(Ideal::unit(r).is_unit());
    auto i = ideal(r, {"x^2"}), j = ideal(r, {"y^3"});
    CHECK(i + j == ideal(r, {"x^2", "y^3"}));
    CHECK(ideal_sum(i, j) == i + j);
    CHECK(i * j == ideal(r, {"x^2*y^3"}));
    CHECK(ideal_product(m, m) == ideal(r, {"x^2", "x*y", "y^2"}));
    CHECK(ideal(r, {"x", "0"}).generators().size() == 1);
    CHECK(m.contains(ideal(r, {"x^2", "x*y"})));
    CHECK_FALSE(ideal(r, {"x"}).contains(m));
    CHECK(ideal(r, {"x^2", "y^2"}).has_monomial_generators());
    CHECK_FALSE(ideal(r, {"x^2 + y^2"}).has_monomial_generators());
}

TEST_CASE("bracket powers apply Frobenius to generators", "[ideal]") {
    auto r = ring(2, {"x", "y"});
    CHECK(bracket_power(ideal(r, {"x + y"}), std::uint64_t{2}) == ideal(r, {"x^2 + y^2"}));
    CHECK(bracket_power(Ideal::maximal(r), FrobeniusExponent(2)) == ideal(r, {"x^4", "y^4"}));
    CHECK_THROWS_AS(bracket_power(Ideal::maximal(r), std::uint64_t{3}), Error);
}

TEST_CASE("bracket powers commute with sums, products and composition", "[ideal][property]") {
    oracle::RandomIdeals gen(31);
    for (std::uint32_t p : {2u, 3u}) {
        auto r = ring(p, {"x", "y"});
        for (int trial = 0; trial < 8; ++trial) {
            auto i = gen.binomial(r, 3, 1), j = gen.binomial(r, 3, 1);
            const std::uint64_t q = p;
            CHECK(bracket_power(i + j, q) == bracket_power(i, q) + bracket_power(j, q));
            CHECK(bracket_power(i * j, q) == bracket_power(i, q) * bracket_power(j, q));
            CHECK(bracket_power(bracket_power(i, q), q) == bracket_power(i, q * q));
        }
    }
}

TEST_CASE("colon by an element", "[ideal]") {
    auto r = ring(2, {"x", "y"});
    auto i = ideal(r, {"x^2", "y^3"});
    CHECK(ideal_colon(i, poly(r, "x")) == ideal(r, {"x", "y^3"}));
    CHECK(ideal_colon(i, poly(r, "x^2")).is_unit());
    CHECK(ideal_colon(i, poly(r, "x*y^2")) == ideal(r, {"x", "y"}));
    try {
        ideal_colon(i, Polynomial(r));
        FAIL("expected division_by_zero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::division_by_zero);
    }
    // A non-monomial case: (x^2 + y^2, x y) : (x + y).
    auto k = ideal(r, {"x^2 + y^2", "x*y"});
    auto c = ideal_colon(k, poly(r, "x + y"));
    CHECK(c == detail::colon_by_elimination(k, poly(r, "x + y")));
    CHECK(c == ideal(r, {"x + y", "y^2"}));
}

TEST_CASE("colon by an ideal", "[ideal]") {
    auto r = ring(2, {"x", "y"});
    auto i = ideal(r, {"x^2", "y^3"});
    CHECK(ideal_colon(i, Ideal::maximal(r)) == ideal(r, {"x^2", "x*y^2", "y^3"}));
    CHECK(ideal_colon(i, Ideal(r)).is_unit());
}

TEST_CASE("monomial colons match a brute-force count", "[ideal][property]") {
    oracle::RandomIdeals gen(32);
    auto r = ring(2, {"x", "y", "z"});
    for (int trial = 0; trial < 25; ++trial) {
        auto i = gen.monomial(r, 4, 3);
        auto f = gen.random_monomial(r, 1 + trial % 3);
        auto c = ideal_colon(i, f);
        const auto fe = exps_of(f);
        auto expected = count_box(3, 5, [&](const oracle::Exps& u) {
            oracle::Exps s(3);
            for (std::size_t k = 0; k < 3; ++k) s[k] = u[k] + fe[k];
            return !in_monomial_ideal(i, s);
        });
        CHECK(length_quotient(c).value() == expected);
        CHECK(c == detail::colon_by_elimination(i, f));
        for (const auto& g : c.generators()) CHECK(i.contains(g * f));
    }
}

TEST_CASE("monomial intersections match a brute-force count", "[ideal][property]") {
    oracle::RandomIdeals gen(33);
    auto r = ring(3, {"x", "y"});
    for (int trial = 0; trial < 25; ++trial) {
        auto i = gen.monomial(r, 5, 2), j = gen.monomial(r, 5, 2);
        auto k = ideal_intersection(i, j);
        auto expected = count_box(2, 6, [&](const oracle::Exps& u) {
            return !(in_monomial_ideal(i, u) && in_monomial_ideal(j, u));
        });
        CHECK(length_quotient(k).value() == expected);
        CHECK(k == detail::intersection_by_elimination(i, j));
    }
}

TEST_CASE("general colons agree with elimination and contain I", "[ideal][property]") {
    oracle::RandomIdeals gen(34);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto r = ring(p, {"x", "y"});
        for (int trial = 0; trial < 10; ++trial) {
            auto i = gen.binomial(r, 4, 2);
            auto g = gen.binomial(r, 2, 1).generators().back();
            auto c = ideal_colon(i, g);
            CHECK(c == detail::colon_by_elimination(i, g));
            CHECK(c.contains(i));
            for (const auto& h : c.generators()) CHECK(i.contains(h * g));
            auto j = gen.binomial(r, 4, 1);
            auto k = ideal_intersection(i, j);
            CHECK(k == detail::intersection_by_elimination(i, j));
            CHECK(i.contains(k));
            CHECK(j.contains(k));
            CHECK(k.contains(i * j));
        }
    }
}

TEST_CASE("intersections in a quotient ring", "[ideal]") {
    auto r = testing_helpers::quotient(3, {"x", "y", "z"}, {"x^2 + y*z"});
    auto a = ideal(r, {"y"}), b = ideal(r, {"z"});
    auto k = ideal_intersection(a, b);
    // y z = -x^2 in R, so (y) ∩ (z) contains x^2.
    CHECK(k.contains(poly(r, "x^2")));
    CHECK(k == detail::intersection_by_elimination(a, b));
    CHECK(ideal_colon(ideal(r, {"y"}), poly(r, "x")) == ideal(r, {"y", "x"}));
}

TEST_CASE("minimal number of generators", "[ideal]") {
    auto r = ring(2, {"x", "y"});
    CHECK(min_gens(Ideal::maximal(r)) == 2);
    CHECK(min_gens(ideal(r, {"x^2", "x*y", "y^2", "x^3", "x^2 + x*y"})) == 3);
    CHECK(min_gens(ideal(r, {"x"})) == 1);
    CHECK(min_gens(Ideal(r)) == 0);
    auto a1 = testing_helpers::quotient(3, {"x", "y", "z"}, {"x^2 + y*z"});
    CHECK(min_gens(Ideal::maximal(a1)) == 3);
    try {
        min_gens(ideal(r, {"x + y^2"}));
        FAIL("expected non_homogeneous");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::non_homogeneous);
    }
    CHECK_THROWS_AS(min_gens(Ideal::unit(r)), Error);
}

TEST_CASE("Frobenius is flat on polynomial rings", "[ideal][property]") {
    oracle::RandomIdeals gen(35);
    for (std::uint32_t p : {2u, 3u}) {
        auto r = ring(p, {"x", "y"});
        for (int trial = 0; trial < 10; ++trial) {
            for (const auto& i : {gen.monomial(r, 4, 2), gen.binomial(r, 4, 2)}) {
                const auto base = length_quotient(i).value();
                CHECK(length_quotient(bracket_power(i, std::uint64_t{p})).value() == p * p * base);
            }
        }
    }
}
