#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ezcat/linalg.hpp"

using namespace ezcat;

namespace {

MatZ random_matrix(std::mt19937_64& rng, int m, int n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    MatZ a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = dist(rng);
    return a;
}

// Independent oracle for the first invariant factors: d1...dk = gcd of all
// k x k minors (computed here only for k = 1, 2 on small matrices).
BigInt gcd_of_minors(const MatZ& a, int k) {
    BigInt g = 0;
    if (k == 1) {
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) g = BigInt::gcd(g, a.at(i, j));
    } else {
        for (int i1 = 0; i1 < a.rows(); ++i1)
            for (int i2 = i1 + 1; i2 < a.rows(); ++i2)
                for (int j1 = 0; j1 < a.cols(); ++j1)
                    for (int j2 = j1 + 1; j2 < a.cols(); ++j2)
                        g = BigInt::gcd(g, a.at(i1, j1) * a.at(i2, j2) -
                                               a.at(i1, j2) * a.at(i2, j1));
    }
    return g;
}

}  // namespace

TEST_CASE("smith normal form basics") {
    CHECK(smith_normal_form(MatZ(3, 4)).rank == 0);
    SmithResult id3 = smith_normal_form(MatZ::identity(3));
    CHECK(id3.rank == 3);
    CHECK(id3.factors == std::vector<BigInt>{1, 1, 1});
}

TEST_CASE("invariant factors of [[2,4],[6,8]] cross-checked") {
    MatZ a = MatZ::from(2, 2, {2, 4, 6, 8});
    SmithResult s = smith_normal_form(a);
    CHECK(s.rank == 2);
    // determinant is -8; |det| = product of factors, d1 = gcd of entries
    CHECK(s.factors[0] == BigInt(2));
    CHECK(s.factors[1] == BigInt(4));
    CHECK(s.factors[0] == gcd_of_minors(a, 1));
    CHECK(s.factors[0] * s.factors[1] == gcd_of_minors(a, 2));
    CHECK(s.p * a * s.q == s.d);
}

TEST_CASE("randomized SNF: transforms, divisibility, minor oracle") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        int m = 1 + static_cast<int>(rng() % 5), n = 1 + static_cast<int>(rng() % 5);
        MatZ a = random_matrix(rng, m, n, -9, 9);
        SmithResult s = smith_normal_form(a);
        CHECK(s.p * a * s.q == s.d);
        for (int i = 0; i + 1 < s.rank; ++i)
            CHECK((s.factors[i + 1] % s.factors[i]).is_zero());
        for (int i = 0; i < s.d.rows(); ++i)
            for (int j = 0; j < s.d.cols(); ++j)
                if (i != j) CHECK(s.d.at(i, j).is_zero());
        if (s.rank >= 1) CHECK(s.factors[0] == gcd_of_minors(a, 1));
        if (s.rank >= 2) CHECK(s.factors[0] * s.factors[1] == gcd_of_minors(a, 2));
    }
}

TEST_CASE("kernel basis spans the kernel lattice") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 40; ++iter) {
        int m = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 4);
        MatZ a = random_matrix(rng, m, n, -4, 4);
        MatZ k = kernel_basis(a);
        CHECK((a * k).is_zero());
        CHECK(rank(k) == k.cols());
        CHECK(rank(a) + k.cols() == n);
        // every kernel vector found by scanning small coordinates solves in k
        if (k.cols() > 0) {
            MatZ v(n, 1);
            for (int i = 0; i < n; ++i) v.at(i, 0) = k.at(i, 0) * BigInt(3);
            CHECK(solve(k, v).has_value());
        }
    }
}

TEST_CASE("exact solve") {
    MatZ a = MatZ::from(2, 2, {2, 0, 0, 3});
    CHECK(solve(a, MatZ::from(2, 1, {4, 9})).has_value());
    CHECK_FALSE(solve(a, MatZ::from(2, 1, {1, 3})).has_value());
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 40; ++iter) {
        int m = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 4);
        MatZ a2 = random_matrix(rng, m, n, -5, 5);
        MatZ x = random_matrix(rng, n, 2, -5, 5);
        MatZ b = a2 * x;
        auto sol = solve(a2, b);
        REQUIRE(sol.has_value());
        CHECK(a2 * *sol == b);
    }
}

TEST_CASE("cokernel triviality") {
    CHECK(coker_trivial(MatZ::identity(3)));
    CHECK(coker_trivial(MatZ::from(2, 3, {1, 0, 5, 0, 1, -2})));
    CHECK_FALSE(coker_trivial(MatZ::from(2, 2, {2, 0, 0, 1})));  // index 2 sublattice
    CHECK_FALSE(coker_trivial(MatZ::from(2, 1, {1, 0})));        // not full rank
}
