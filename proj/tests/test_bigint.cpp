#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ezcat/bigint.hpp"

using ezcat::BigInt;

TEST_CASE("small arithmetic matches long long") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        long long a = dist(rng), b = dist(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q == BigInt(a / b));
            CHECK(r == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("large values survive a multiply/divide round trip") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> dist(-1000000000000LL, 1000000000000LL);
    for (int i = 0; i < 300; ++i) {
        BigInt a = dist(rng), b = dist(rng), c = dist(rng);
        if (b.is_zero()) continue;
        BigInt n = a * b + c % b;
        BigInt q, r;
        BigInt::divmod(n, b, q, r);
        CHECK(q * b + r == n);
        CHECK(r.abs() < b.abs());
    }
    // distributivity on wide products
    BigInt x = 123456789123456789LL, y = -987654321987654321LL, z = 555555555555LL;
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y).str() == "-121932631356500531347203169112635269");
}

TEST_CASE("decimal printing") {
    CHECK(BigInt(0).str() == "0");
    CHECK(BigInt(-1).str() == "-1");
    CHECK(BigInt(1000000000).str() == "1000000000");
    BigInt big = 1;
    for (int i = 0; i < 5; ++i) big = big * BigInt(1234567891011LL);
    CHECK(big.str() ==
          "2867971872042772413918775593726044940678375862067148570816051");
    CHECK(BigInt::gcd(BigInt(12 * 35), BigInt(18 * 35)) == BigInt(6 * 35));
}
