#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sqc/latin.hpp"

#include <stdexcept>
#include <vector>

using namespace sqc;

TEST_CASE("order three family matches the worked example") {
    const auto fam = mols_family(3);
    REQUIRE(fam.size() == 2);
    CHECK(fam[0].rows() ==
          std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    CHECK(fam[1].rows() ==
          std::vector<std::vector<int>>{{1, 3, 2}, {2, 1, 3}, {3, 2, 1}});
    CHECK(fam[0].value(2, 3) == 1);
    CHECK(fam[1].value(3, 1) == 3);
    CHECK(are_orthogonal(fam[0], fam[1]));
}

TEST_CASE("prime orders give pairwise orthogonal Latin families") {
    for (int n : {3, 5, 7, 11, 13}) {
        const auto fam = mols_family(n);
        REQUIRE(static_cast<int>(fam.size()) == n - 1);
        for (const auto& s : fam) {
            CHECK(s.order() == n);
            CHECK(is_latin(s));
        }
        for (size_t a = 0; a < fam.size(); ++a)
            for (size_t b = a + 1; b < fam.size(); ++b)
                CHECK(are_orthogonal(fam[a], fam[b]));
    }
}

TEST_CASE("first row of each member steps by the family index") {
    const int n = 7;
    const auto fam = mols_family(n);
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 1; k <= n; ++k)
            CHECK(fam[i - 1].value(1, k) == 1 + (i * (k - 1)) % n);
}

TEST_CASE("non-prime and tiny orders are rejected") {
    for (int n : {-1, 0, 1, 2, 4, 6, 9, 15}) CHECK_THROWS_AS(mols_family(n), std::domain_error);
}

TEST_CASE("the cyclic formula fails to be Latin at a composite order") {
    // Entries 1 + ((j-1) + 2*(k-1) mod 4): row one repeats 1,3,1,3.
    const int n = 4, i = 2;
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) rows[j - 1][k - 1] = 1 + ((j - 1) + i * (k - 1)) % n;
    const LatinSquare s(n, rows);
    CHECK(s.rows()[0] == std::vector<int>{1, 3, 1, 3});
    CHECK_FALSE(is_latin(s));
}

TEST_CASE("constructor checks shape and range, not Latinness") {
    CHECK_THROWS_AS(LatinSquare(2, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(LatinSquare(2, {{1, 2}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(LatinSquare(2, {{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(LatinSquare(2, {{1, 2}, {0, 1}}), std::invalid_argument);
    const LatinSquare constant(2, {{1, 1}, {1, 1}});
    CHECK_FALSE(is_latin(constant));
}

TEST_CASE("a square is never orthogonal to itself past order one") {
    const auto fam = mols_family(5);
    CHECK_FALSE(are_orthogonal(fam[0], fam[0]));
    const auto other = mols_family(3);
    CHECK_THROWS_AS(are_orthogonal(fam[0], other[0]), std::invalid_argument);
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(91));
}
