#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "blt/gl.hpp"
#include "blt/matrix.hpp"
#include "oracles.hpp"

using namespace blt;

TEST_CASE("prime field construction") {
    CHECK(PrimeField(3).p() == 3);
    CHECK(PrimeField(65521).p() == 65521);
    CHECK_THROWS_AS(PrimeField(2), bad_prime);
    CHECK_THROWS_AS(PrimeField(1), bad_prime);
    CHECK_THROWS_AS(PrimeField(9), bad_prime);
    CHECK_THROWS_AS(PrimeField(91), bad_prime); // 7*13
}

TEST_CASE("inverses") {
    CHECK(PrimeField(3).inv(2) == 2);
    CHECK(PrimeField(5).inv(1) == 1);
    SECTION("scan oracle for inv(3) mod 7") {
        const PrimeField F(7);
        Res expected = 0;
        for (Res x = 0; x < 7; ++x)
            if (F.mul(3, x) == 1) expected = x;
        CHECK(expected == 5);
        CHECK(F.inv(3) == expected);
    }
    CHECK_THROWS_AS(PrimeField(5).inv(0), zero_inverse);
    SECTION("a * inv(a) = 1 for every nonzero a, several p") {
        for (Res p : {3u, 5u, 7u, 11u}) {
            const PrimeField F(p);
            for (Res a = 1; a < p; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }
    SECTION("half really is 1/2") {
        for (Res p : {3u, 5u, 7u, 13u}) {
            const PrimeField F(p);
            CHECK(F.mul(2, F.half()) == 1);
        }
    }
}

TEST_CASE("signed reduction") {
    const PrimeField F(7);
    CHECK(F.from_int(-1) == 6);
    CHECK(F.from_int(-7) == 0);
    CHECK(F.from_int(15) == 1);
}

TEST_CASE("determinants, frozen cases") {
    const PrimeField F3(3), F5(5);
    CHECK(det(FpMatrix::identity(F5, 3)) == 1);
    CHECK(det(FpMatrix(F3, {{0, 1}, {2, 0}})) == 1); // -(1 * -1) = 1
    CHECK(det(FpMatrix(F3, 0, 0)) == 1);
    CHECK_THROWS_AS(det(FpMatrix(F3, 2, 3)), non_square);
}

TEST_CASE("determinant matches the signed permutation sum") {
    SECTION("exhaustive over all 3x3 matrices mod 3") {
        const PrimeField F(3);
        for (std::uint32_t code = 0; code < 19683; ++code) {
            FpMatrix M(F, 3, 3);
            std::uint32_t c = code;
            for (std::size_t k = 0; k < 9; ++k) {
                M.set(k / 3, k % 3, c % 3);
                c /= 3;
            }
            REQUIRE(det(M) == oracles::leibniz_det(M));
        }
    }
    SECTION("sampled 4x4 and 5x5") {
        std::mt19937 rng(20240901);
        for (Res p : {3u, 5u}) {
            const PrimeField F(p);
            for (int t = 0; t < 200; ++t) {
                const auto M = oracles::random_matrix(F, 4, 4, rng);
                REQUIRE(det(M) == oracles::leibniz_det(M));
            }
            for (int t = 0; t < 50; ++t) {
                const auto M = oracles::random_matrix(F, 5, 5, rng);
                REQUIRE(det(M) == oracles::leibniz_det(M));
            }
        }
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(7);
    for (Res p : {3u, 5u}) {
        const PrimeField F(p);
        for (std::size_t n : {2u, 3u, 4u}) {
            for (int t = 0; t < 50; ++t) {
                const auto A = oracles::random_matrix(F, n, n, rng);
                const auto B = oracles::random_matrix(F, n, n, rng);
                CHECK(det(mul(A, B)) == F.mul(det(A), det(B)));
            }
        }
    }
}

TEST_CASE("rank") {
    const PrimeField F3(3), F5(5);
    CHECK(rank(FpMatrix(F3, 3, 3)) == 0);
    SECTION("elementary alternating matrix has rank 2") {
        FpMatrix A(F3, 3, 3);
        A.set(0, 1, 1);
        A.set(1, 0, 2);
        CHECK(rank(A) == 2);
    }
    SECTION("outer product w w^t has rank 1, also by minor enumeration") {
        const FpVector w(F5, {1, 2, 0, 3});
        FpMatrix M(F5, 4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) M.set(i, j, F5.mul(w[i], w[j]));
        CHECK(rank(M) == 1);
        CHECK(oracles::rank_by_minors(M) == 1);
        // masked to a submatrix keeps rank 1
        FpMatrix S(F5, 2, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) S.set(i, j, M(i, j + 1));
        CHECK(rank(S) <= 1);
        CHECK(rank(S) == oracles::rank_by_minors(S));
    }
    SECTION("rank agrees with minor oracle on random matrices") {
        std::mt19937 rng(99);
        const PrimeField F(3);
        for (int t = 0; t < 100; ++t) {
            const auto M = oracles::random_matrix(F, 3, 4, rng);
            CHECK(rank(M) == oracles::rank_by_minors(M));
        }
    }
}

TEST_CASE("invertibility is full rank, exhaustively for 2x2 mod 3") {
    const PrimeField F(3);
    for (std::uint32_t code = 0; code < 81; ++code) {
        FpMatrix M(F, 2, 2);
        std::uint32_t c = code;
        for (std::size_t k = 0; k < 4; ++k) {
            M.set(k / 2, k % 2, c % 3);
            c /= 3;
        }
        CHECK((det(M) != 0) == (rank(M) == 2));
    }
}

TEST_CASE("minor2") {
    const PrimeField F(5);
    const FpMatrix I4 = FpMatrix::identity(F, 4);
    CHECK(minor2(I4, 0, 1, 0, 1) == 1);
    CHECK(minor2(I4, 0, 1, 2, 3) == 0);
    FpMatrix ones(F, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ones.set(i, j, 1);
    CHECK(minor2(ones, 0, 2, 1, 2) == 0);
    CHECK_THROWS_AS(minor2(I4, 0, 0, 1, 2), index_out_of_range);
    CHECK_THROWS_AS(minor2(I4, 0, 4, 1, 2), index_out_of_range);
}

TEST_CASE("matrix inverse") {
    std::mt19937 rng(5);
    const PrimeField F(7);
    for (int t = 0; t < 50; ++t) {
        const auto M = oracles::random_matrix(F, 3, 3, rng);
        const auto inv = inverse(M);
        if (det(M) == 0) {
            CHECK(!inv);
        } else {
            REQUIRE(inv);
            CHECK(mul(M, *inv) == FpMatrix::identity(F, 3));
        }
    }
}

TEST_CASE("GL enumeration counts and validity") {
    const PrimeField F3(3);
    CHECK(gl_order(1, F3) == 2);
    CHECK(gl_order(2, F3) == 48);
    CHECK(gl_order(3, F3) == 11232);

    SECTION("n = 1") {
        auto all = enumerate_gl(1, F3);
        REQUIRE(all.size() == 2);
        CHECK(all[0](0, 0) == 1);
        CHECK(all[1](0, 0) == 2);
    }
    SECTION("n = 2 matches the filter-all oracle") {
        auto all = enumerate_gl(2, F3);
        CHECK(all.size() == 48);
        std::set<std::vector<Res>> seen;
        for (const auto& M : all) {
            CHECK(det(M) != 0);
            seen.insert(M.entries());
        }
        CHECK(seen.size() == 48); // no duplicates
        std::size_t oracle = 0;
        for (std::uint32_t code = 0; code < 81; ++code) {
            FpMatrix M(F3, 2, 2);
            std::uint32_t c = code;
            for (std::size_t k = 0; k < 4; ++k) {
                M.set(k / 2, k % 2, c % 3);
                c /= 3;
            }
            if (det(M) != 0) ++oracle;
        }
        CHECK(oracle == 48);
    }
    SECTION("n = 3 count, all invertible, no duplicates") {
        std::set<std::vector<Res>> seen;
        std::size_t count = 0;
        for_each_gl(3, F3, [&](const FpMatrix& M) {
            ++count;
            REQUIRE(det(M) != 0);
            seen.insert(M.entries());
        });
        CHECK(count == 11232);
        CHECK(seen.size() == 11232);
    }
    SECTION("guard") { CHECK_THROWS_AS(enumerate_gl(4, PrimeField(3)), guard_exceeded); }
    SECTION("GL(2,5) count") {
        const PrimeField F5(5);
        CHECK(gl_order(2, F5) == 480); // (25-1)(25-5)
        std::size_t count = 0;
        for_each_gl(2, F5, [&](const FpMatrix&) { ++count; });
        CHECK(count == 480);
    }
}
