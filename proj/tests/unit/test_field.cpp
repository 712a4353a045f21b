#include <catch_amalgamated.hpp>

#include "hkspread/field.hpp"
#include "oracles.hpp"

using namespace hkspread;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("primality agrees with trial division", "[field]") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
    CHECK(is_prime(2147483647ULL));
    CHECK_FALSE(is_prime(2147483649ULL));
}

TEST_CASE("inverses are exhaustively correct for small primes", "[field]") {
    for (std::uint32_t p = 2; p <= 97; ++p) {
        if (!trial_division_prime(p)) continue;
        PrimeField f(p);
        for (Coeff a = 1; a < p; ++a) {
            INFO("p = " << p << ", a = " << a);
            REQUIRE(f.inverse(a) == oracle::brute_inverse(a, p));
            REQUIRE(f.mul(a, f.inverse(a)) == 1);
        }
    }
}

TEST_CASE("field operations match integer arithmetic mod p", "[field]") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 31u, 65521u, 2147483647u}) {
        PrimeField f(p);
        for (std::int64_t a : {0LL, 1LL, 2LL, -1LL, -17LL, 123456789LL, 4000000000LL}) {
            const std::uint64_t ra = static_cast<std::uint64_t>(((a % (std::int64_t)p) + p) % p);
            CHECK(f.reduce(a) == ra);
            for (std::int64_t b : {0LL, 5LL, -3LL, 987654321LL}) {
                const std::uint64_t rb = static_cast<std::uint64_t>(((b % (std::int64_t)p) + p) % p);
                CHECK(f.add(f.reduce(a), f.reduce(b)) == (ra + rb) % p);
                CHECK(f.sub(f.reduce(a), f.reduce(b)) == (ra + p - rb) % p);
                CHECK(f.mul(f.reduce(a), f.reduce(b)) == ra * rb % p);
            }
            CHECK(f.add(f.neg(f.reduce(a)), f.reduce(a)) == 0);
        }
    }
}

TEST_CASE("Fermat's little theorem holds for pow", "[field]") {
    for (std::uint32_t p : {2u, 3u, 5u, 13u, 101u, 7919u}) {
        PrimeField f(p);
        for (Coeff a = 0; a < std::min<Coeff>(p, 200); ++a) {
            CHECK(f.pow(a, p) == a);
            CHECK(f.pow(a, 0) == 1);
            CHECK(f.pow(a, 3) == oracle::mod_pow(a, 3, p));
        }
    }
}

TEST_CASE("element wrapper arithmetic", "[field]") {
    PrimeFieldElement a(5, 7), b(-3, 7);
    CHECK(b.value() == 4);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 1);
    CHECK((a * b).value() == 6);
    CHECK((-a).value() == 2);
    CHECK((a * a.inverse()).value() == 1);
    CHECK(a.pow(6).value() == 1);
    CHECK_THROWS_AS(a + PrimeFieldElement(1, 5), Error);
}

TEST_CASE("errors carry their kind", "[field]") {
    try {
        PrimeField f(4);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_argument);
        CHECK(std::string(e.what()).find("prime") != std::string::npos);
    }
    try {
        PrimeField(11).inverse(0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::division_by_zero);
    }
    CHECK(to_string(ErrorKind::resource_limit) == std::string_view("resource_limit"));
}

TEST_CASE("Frobenius exponents", "[field]") {
    CHECK(FrobeniusExponent(3).q(2) == 8);
    CHECK(FrobeniusExponent(0).q(5) == 1);
    CHECK(FrobeniusExponent::from_q(27, 3).exponent() == 3);
    CHECK(FrobeniusExponent::from_q(1, 3).exponent() == 0);
    CHECK_THROWS_AS(FrobeniusExponent::from_q(6, 2), Error);
    CHECK_THROWS_AS(FrobeniusExponent::from_q(0, 2), Error);
    CHECK(checked_pow(3, 4) == 81);
    CHECK_THROWS_AS(checked_pow(2, 64), Error);
    CHECK_THROWS_AS(FrobeniusExponent(70).q(2), Error);
}
