#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "hkspread/groebner.hpp"
#include "oracles.hpp"

using namespace hkspread;
using testing_helpers::ideal;
using testing_helpers::poly;
using testing_helpers::ring;

namespace {

std::vector<std::string> strings(const GroebnerBasis& gb) {
    std::vector<std::string> out;
    for (const auto& g : gb.elements()) out.push_back(g.to_string());
    return out;
}

std::vector<oracle::Exps> exps(std::span<const Monomial> ms) {
    std::vector<oracle::Exps> out;
    for (const auto& m : ms) out.emplace_back(m.exponents().begin(), m.exponents().end());
    return out;
}

}  // namespace

TEST_CASE("reduced basis of a small binomial ideal", "[groebner]") {
    auto r = ring(7, {"x", "y"});
    std::vector<Polynomial> gens{poly(r, "x^2 - y^2"), poly(r, "x*y")};
    auto gb = buchberger(gens, r);
    CHECK(strings(gb) == std::vector<std::string>{"x*y", "x^2 + 6*y^2", "y^3"});
    CHECK(count_standard_monomials(gb) == 4);
    CHECK(krull_dimension(gb) == 0);
}

TEST_CASE("lex and grevlex bases of the same ideal", "[groebner]") {
    auto r = ring(5, {"x", "y", "z"});
    std::vector<Polynomial> gens{poly(r, "x - y"), poly(r, "y - z^2")};
    auto lex = buchberger(gens, MonomialOrder(OrderKind::lex, 3));
    CHECK(strings(lex) == std::vector<std::string>{"y + 4*z^2", "x + 4*z^2"});
    CHECK(lex.order().kind() == OrderKind::lex);
    auto grevlex = buchberger(gens, r);
    CHECK(grevlex.size() == 2);
    CHECK(krull_dimension(lex) == 1);
}

TEST_CASE("trivial bases", "[groebner]") {
    auto r = ring(3, {"x", "y"});
    std::vector<Polynomial> none;
    auto zero = buchberger(none, r);
    CHECK(zero.is_zero());
    CHECK(krull_dimension(zero) == 2);
    std::vector<Polynomial> unit{poly(r, "x"), poly(r, "x + 1")};
    auto one = buchberger(unit, r);
    CHECK(one.is_unit());
    CHECK(strings(one) == std::vector<std::string>{"1"});
    CHECK(krull_dimension(one) == -1);
    CHECK(count_standard_monomials(one) == 0);
}

TEST_CASE("dimension counts free variables", "[groebner]") {
    auto r = ring(2, {"x", "y", "z"});
    CHECK(krull_dimension(ideal(r, {"x"})) == 2);
    CHECK(krull_dimension(ideal(r, {"x*y"})) == 2);
    CHECK(krull_dimension(ideal(r, {"x*y", "z"})) == 1);
    CHECK(krull_dimension(ideal(r, {"x^2", "y^3", "z"})) == 0);
    CHECK_FALSE(is_zero_dimensional(ideal(r, {"x", "y"}).groebner()));
    try {
        count_standard_monomials(ideal(r, {"x", "y"}).groebner());
        FAIL("expected infinite_length");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::infinite_length);
    }
}

TEST_CASE("relations are part of every basis in a quotient ring", "[groebner]") {
    auto r = testing_helpers::quotient(3, {"x", "y", "z"}, {"x^2 + y*z"});
    auto i = ideal(r, {"y", "z"});
    CHECK(strings(i.groebner()) == std::vector<std::string>{"z", "y", "x^2"});
    CHECK(count_standard_monomials(i.groebner()) == 2);
}

TEST_CASE("step budget raises resource_limit", "[groebner]") {
    Limits limits;
    limits.max_gb_steps = 3;
    auto r = Ring::polynomial_ring(2, {"x", "y", "z"}, OrderKind::degrevlex, limits);
    std::vector<Polynomial> gens{poly(r, "x^3 + y*z^2"), poly(r, "y^3 + x*z^2"), poly(r, "z^3 + x^2*y")};
    try {
        buchberger(gens, r);
        FAIL("expected resource_limit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource_limit);
    }
}

TEST_CASE("standard monomial counts match a staircase count", "[groebner][property]") {
    oracle::RandomIdeals gen(21);
    for (std::uint32_t p : {2u, 3u}) {
        auto r = ring(p, {"x", "y", "z"});
        for (int trial = 0; trial < 25; ++trial) {
            auto i = gen.monomial(r, 5, 3);
            const auto& gb = i.groebner();
            CHECK(gb.is_monomial());
            CHECK(count_standard_monomials(gb) == oracle::monomial_colength(exps(gb.leading_monomials()), 3));
            CHECK(standard_monomials(gb).size() == count_standard_monomials(gb));
        }
    }
}

TEST_CASE("colength of binomial ideals matches linear algebra", "[groebner][property]") {
    oracle::RandomIdeals gen(22);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto r = ring(p, {"x", "y"});
        for (int trial = 0; trial < 15; ++trial) {
            auto i = gen.binomial(r, 5, 2);
            CHECK(count_standard_monomials(i.groebner()) == oracle::homogeneous_colength(i));
        }
    }
}

TEST_CASE("reduced bases do not depend on generator order", "[groebner][property]") {
    oracle::RandomIdeals gen(23);
    std::mt19937 shuffle_rng(5);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        auto r = ring(p, {"x", "y", "z"});
        for (int trial = 0; trial < 12; ++trial) {
            auto i = gen.binomial(r, 4, 3);
            std::vector<Polynomial> gens(i.generators().begin(), i.generators().end());
            auto reference = buchberger(gens, r);
            for (int k = 0; k < 4; ++k) {
                std::shuffle(gens.begin(), gens.end(), shuffle_rng);
                CHECK(buchberger(gens, r) == reference);
                CHECK(strings(buchberger(gens, r)) == strings(reference));
            }
        }
    }
}

TEST_CASE("normal forms are idempotent and differ from f by an ideal element", "[groebner][property]") {
    oracle::RandomIdeals gen(24);
    std::mt19937 rng(6);
    for (std::uint32_t p : {2u, 3u}) {
        auto r = ring(p, {"x", "y"});
        for (int trial = 0; trial < 20; ++trial) {
            auto i = gen.binomial(r, 4, 2);
            const auto& gb = i.groebner();
            // A random homogeneous polynomial of degree 4.
            Polynomial f(r);
            for (unsigned a = 0; a <= 4; ++a)
                f += Polynomial::monomial(r, Monomial{a, 4 - a}, std::uniform_int_distribution<Coeff>(0, p - 1)(rng));
            auto nf = normal_form(f, gb);
            CHECK(normal_form(nf, gb) == nf);
            CHECK(oracle::homogeneous_member(i, oracle::to_dense(f - nf)));
            for (const auto& t : nf.terms())
                for (const auto& lead : gb.leading_monomials()) CHECK_FALSE(lead.divides(t.monomial));
            for (const auto& g : gb.elements()) CHECK(normal_form(g, gb).is_zero());
            for (const auto& g : i.generators()) CHECK(normal_form(g, gb).is_zero());
        }
    }
}
