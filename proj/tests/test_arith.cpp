#include "doctest.h"
#include "oracles.hpp"
#include "zdbox/arith.hpp"

using namespace zdbox;

TEST_CASE("factorize small values") {
    CHECK(factorize(12).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(factorize(54).factors == std::vector<PrimePower>{{2, 1}, {3, 3}});
    CHECK(factorize(9973).factors == std::vector<PrimePower>{{9973, 1}});
    CHECK(factorize(2).factors == std::vector<PrimePower>{{2, 1}});
    CHECK(factorize(1024).factors == std::vector<PrimePower>{{2, 10}});
    CHECK(to_string(factorize(360)) == "2^3 * 3^2 * 5");
    CHECK_THROWS_AS(factorize(1), InvalidInput);
    CHECK_THROWS_AS(factorize(0), InvalidInput);
}

TEST_CASE("factorize is a left inverse of multiplying out") {
    // primality of each reported factor is checked against a sieve
    const Nat limit = 1'000'000;
    const auto composite = test_oracle::composite_sieve(limit);
    std::size_t bad = 0;
    for (Nat N = 2; N <= limit; ++N) {
        const auto f = factorize(N);
        Nat prod = 1, prev = 0;
        for (const auto& pp : f.factors) {
            if (pp.p <= prev || composite[pp.p] || pp.n == 0) ++bad;
            prev = pp.p;
            for (unsigned e = 0; e < pp.n; ++e) prod *= pp.p;
        }
        if (prod != N || f.N != N) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("factorize handles large primes and semiprimes") {
    CHECK(factorize(1'000'000'007ULL).factors == std::vector<PrimePower>{{1'000'000'007ULL, 1}});
    const Nat big = 4'294'967'291ULL;  // largest prime below 2^32
    CHECK(factorize(big * 3).factors == std::vector<PrimePower>{{3, 1}, {big, 1}});
    CHECK(factorize(big * big).factors == std::vector<PrimePower>{{big, 2}});
}

TEST_CASE("Factorization::index_of") {
    const auto f = factorize(2 * 9 * 125);
    CHECK(f.size() == 3);
    CHECK(f.index_of(5) == 2);
    CHECK(f.index_of(7) == f.size());
}

TEST_CASE("prime_valuation") {
    CHECK(prime_valuation(2, 12) == 2);
    CHECK(prime_valuation(3, 14) == 0);
    CHECK(prime_valuation(3, 54) == 3);
    CHECK(prime_valuation(2, 1) == 0);
    CHECK_THROWS_AS(prime_valuation(2, 0), InvalidInput);
    for (Nat q : {2, 3, 5, 7}) {
        for (Nat x = 1; x < 5000; ++x) {
            const unsigned f = prime_valuation(q, x);
            Nat qf = 1;
            for (unsigned e = 0; e < f; ++e) qf *= q;
            REQUIRE(x % qf == 0);
            REQUIRE(x % (qf * q) != 0);
        }
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(8, 12) == 4);
    CHECK(gcd(7, 12) == 1);
    CHECK(gcd(54, 54) == 54);
    CHECK(gcd(0, 5) == 5);
    CHECK_THROWS_AS(gcd(0, 0), InvalidInput);
}

TEST_CASE("ceil_log2 and isqrt") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(30) == 5);
    CHECK(ceil_log2(32) == 5);
    CHECK(ceil_log2(100) == 7);
    for (Nat x = 0; x < 100000; ++x) {
        const Nat r = isqrt(x);
        REQUIRE(r * r <= x);
        REQUIRE((r + 1) * (r + 1) > x);
    }
    CHECK(isqrt(~Nat{0}) == 4294967295ULL);
}
