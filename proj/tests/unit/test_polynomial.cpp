#include <catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace hkspread;
using testing_helpers::poly;
using testing_helpers::ring;

namespace {

Polynomial random_poly(std::mt19937& rng, const RingPtr& r, unsigned terms, unsigned max_exp) {
    std::uniform_int_distribution<unsigned> e(0, max_exp);
    std::uniform_int_distribution<Coeff> c(0, r->characteristic() - 1);
    std::vector<Term> out;
    for (unsigned k = 0; k < terms; ++k) {
        std::vector<Exponent> exps(r->nvars());
        for (auto& v : exps) v = e(rng);
        out.push_back({Monomial(exps), c(rng)});
    }
    return Polynomial(r, std::move(out));
}

}  // namespace

TEST_CASE("rings describe themselves and validate input", "[ring]") {
    auto r = ring(3, {"x", "y", "z"});
    CHECK(r->describe() == "F_3[x,y,z]");
    CHECK(r->dimension() == 3);
    CHECK(r->index_of("y") == 1);
    CHECK_FALSE(r->index_of("w").has_value());
    CHECK_THROWS_AS(ring(4, {"x"}), Error);
    CHECK_THROWS_AS(ring(2, {"x", "x"}), Error);
    CHECK_THROWS_AS(ring(2, {"1x"}), Error);
}

TEST_CASE("quotient rings", "[ring]") {
    auto a1 = testing_helpers::quotient(3, {"x", "y", "z"}, {"x^2 + y*z"});
    CHECK(a1->dimension() == 2);
    CHECK(a1->has_relations());
    CHECK(a1->describe() == "F_3[x,y,z]/(x^2 + y*z)");
    CHECK_FALSE(a1->ambient()->has_relations());
    auto base = ring(2, {"x", "y"});
    try {
        std::vector<Polynomial> rels{poly(base, "x^2 + y")};
        Ring::quotient(base, rels);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::non_homogeneous);
    }
    // Two independent quadrics in three variables leave dimension 1.
    CHECK(testing_helpers::quotient(5, {"x", "y", "z"}, {"x^2 - y*z", "y^2 - x*z"})->dimension() == 1);
}

TEST_CASE("polynomial normalization and printing", "[polynomial]") {
    auto r = ring(5, {"x", "y"});
    CHECK(poly(r, "x^2 + 4*y^2").to_string() == "x^2 + 4*y^2");
    CHECK(poly(r, "y^2 - y^2").to_string() == "0");
    CHECK(poly(r, "3*x + 2*x").is_zero());
    CHECK(poly(r, "-1").to_string() == "4");
    CHECK(poly(r, "y + x^2 + x*y").to_string() == "x^2 + x*y + y");
    CHECK(poly(r, "(x + y)^5") == poly(r, "x^5 + y^5"));
    CHECK(poly(r, "x^3 + x*y").total_degree() == 3);
    CHECK(poly(r, "x^3 + x*y^2").is_homogeneous());
    CHECK_FALSE(poly(r, "x^3 + y").is_homogeneous());
    CHECK(poly(r, "2*x + 1").monic() == poly(r, "x + 3"));
    CHECK(poly(r, "7").is_constant());
}

TEST_CASE("lead terms follow the ring order", "[polynomial]") {
    auto lex = ring(2, {"x", "y"}, OrderKind::lex);
    auto grevlex = ring(2, {"x", "y"});
    auto f = poly(lex, "x + y^3");
    CHECK(f.lead_monomial() == Monomial{1, 0});
    CHECK(f.rebind(grevlex).lead_monomial() == Monomial{0, 3});
    CHECK_THROWS_AS(Polynomial(lex).lead(), Error);
}

TEST_CASE("arithmetic agrees with a dense reference", "[polynomial][property]") {
    std::mt19937 rng(11);
    for (std::uint32_t p : {2u, 3u, 7u, 65521u}) {
        auto r = ring(p, {"x", "y", "z"});
        for (int trial = 0; trial < 40; ++trial) {
            auto f = random_poly(rng, r, 5, 3), g = random_poly(rng, r, 4, 3);
            auto df = oracle::to_dense(f), dg = oracle::to_dense(g);
            CHECK(oracle::to_dense(f * g) == oracle::mul(df, dg, p));
            CHECK(oracle::to_dense(f + g) == oracle::add(df, dg, p));
            CHECK((f - f).is_zero());
            CHECK((f + (-f)).is_zero());
        }
    }
}

TEST_CASE("ring axioms hold on random polynomials", "[polynomial][property]") {
    std::mt19937 rng(12);
    auto r = ring(5, {"x", "y"});
    auto one = Polynomial::constant(r, 1);
    for (int trial = 0; trial < 60; ++trial) {
        auto f = random_poly(rng, r, 4, 3), g = random_poly(rng, r, 3, 3), h = random_poly(rng, r, 3, 2);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * one == f);
        CHECK((f * Polynomial(r)).is_zero());
    }
}

TEST_CASE("add_multiple matches the explicit expression", "[polynomial][property]") {
    std::mt19937 rng(13);
    auto r = ring(7, {"x", "y", "z"});
    for (int trial = 0; trial < 60; ++trial) {
        auto f = random_poly(rng, r, 5, 3), g = random_poly(rng, r, 4, 3);
        Monomial m{static_cast<Exponent>(trial % 3), 1, 0};
        Coeff c = 1 + trial % 6;
        CHECK(f.add_multiple(c, m, g) == f + Polynomial::monomial(r, m, c) * g);
    }
}

TEST_CASE("Frobenius powers equal repeated multiplication", "[polynomial][property]") {
    std::mt19937 rng(14);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto r = ring(p, {"x", "y", "z"});
        for (int trial = 0; trial < 15; ++trial) {
            auto f = random_poly(rng, r, 4, 2);
            for (unsigned e = 0; e <= 2; ++e) {
                const std::uint64_t q = FrobeniusExponent(e).q(p);
                CHECK(qth_power(f, FrobeniusExponent(e)) == power(f, q));
                CHECK(qth_power(f, q) == power(f, q));
            }
        }
    }
    auto r = ring(3, {"x"});
    CHECK_THROWS_AS(qth_power(poly(r, "x"), std::uint64_t{4}), Error);
}

TEST_CASE("Frobenius respects the exponent limit", "[polynomial]") {
    Limits limits;
    limits.max_exponent = 10;
    auto r = Ring::polynomial_ring(2, {"x", "y"}, OrderKind::degrevlex, limits);
    auto f = Polynomial::variable(r, 0) * Polynomial::variable(r, 0) * Polynomial::variable(r, 0);
    try {
        qth_power(f, std::uint64_t{4});
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::exponent_overflow);
    }
}

TEST_CASE("embedding and contracting variables", "[polynomial]") {
    auto r = ring(2, {"x", "y"});
    std::vector<std::string> extra{"t"};
    auto front = r->extended(extra, true);
    auto back = r->extended(extra, false);
    CHECK(front->describe() == "F_2[t,x,y]");
    CHECK(back->describe() == "F_2[x,y,t]");
    auto f = poly(r, "x^2 + x*y");
    auto ef = embed(f, front, true);
    CHECK(ef == poly(front, "x^2 + x*y"));
    CHECK(contract(ef, r, true) == f);
    CHECK(contract(embed(f, back, false), r, false) == f);
    CHECK_THROWS_AS(contract(poly(front, "t*x"), r, true), Error);
}

TEST_CASE("operands from different rings are rejected", "[polynomial]") {
    auto a = ring(2, {"x", "y"});
    auto b = ring(3, {"x", "y"});
    try {
        auto s = poly(a, "x") + poly(b, "x");
        FAIL("expected ring_mismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ring_mismatch);
    }
}
