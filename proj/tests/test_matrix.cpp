#include <doctest.h>

#include <gmpxx.h>

#include <vector>

#include "drckit/error.hpp"
#include "drckit/matrix.hpp"

using namespace drckit;

TEST_CASE("rational literals parse exactly and reject junk") {
    CHECK(rational_of("3/6") == mpq_class(1, 2));
    CHECK(rational_of("-4/2") == mpq_class(-2));
    CHECK(rational_of("0") == 0);
    CHECK(string_of(rational_of("10/4")) == "5/2");
    CHECK_THROWS_AS(rational_of("1/0"), Error);
    CHECK_THROWS_AS(rational_of("a"), Error);
    CHECK_THROWS_AS(rational_of(""), Error);
    CHECK_THROWS_AS(rational_of("1.5"), Error);
}

TEST_CASE("row reduction finds the pivots exactly") {
    RationalMatrix a = from_rows({{"1", "2", "3"},
                                  {"2", "4", "6"},
                                  {"1", "0", "1"}});
    std::vector<int> pivots;
    RationalMatrix r = rref(a, &pivots);
    CHECK(pivots == std::vector<int>{0, 1});
    CHECK(r == from_rows({{"1", "0", "1"},
                          {"0", "1", "1"},
                          {"0", "0", "0"}}));
}

TEST_CASE("inversion is exact and refuses singular input") {
    RationalMatrix a = from_rows({{"1", "2"}, {"3", "5"}});
    RationalMatrix b = inverse(a);
    CHECK(a * b == identity_matrix(2));
    CHECK(b * a == identity_matrix(2));
    CHECK(b == from_rows({{"-5", "2"}, {"3", "-1"}}));
    CHECK_THROWS_AS(inverse(from_rows({{"1", "2"}, {"2", "4"}})), Error);
}

TEST_CASE("pseudoinversion satisfies all four defining identities") {
    std::vector<RationalMatrix> samples = {
        identity_matrix(3),
        zero_matrix(2, 3),
        from_rows({{"1", "1"}, {"0", "0"}}),
        from_rows({{"1", "2", "3"}, {"4", "5", "6"}}),
        from_rows({{"1/2", "1/2", "0"},
                   {"1/2", "1/2", "0"},
                   {"0", "0", "1"}}),
    };
    for (const RationalMatrix& a : samples) {
        RationalMatrix x = pseudoinverse(a);
        CHECK(a * x * a == a);
        CHECK(x * a * x == x);
        CHECK(transpose(a * x) == a * x);
        CHECK(transpose(x * a) == x * a);
    }
}

TEST_CASE("pseudoinversion has its classical closed forms") {
    // A rank one matrix divides its transpose by the squared norm.
    CHECK(pseudoinverse(from_rows({{"1", "1"}, {"0", "0"}})) ==
          from_rows({{"1/2", "0"}, {"1/2", "0"}}));
    CHECK(pseudoinverse(identity_matrix(4)) == identity_matrix(4));
    CHECK(pseudoinverse(zero_matrix(2, 3)) == zero_matrix(3, 2));
    // On invertible input it is the inverse.
    RationalMatrix a = from_rows({{"1", "2"}, {"3", "5"}});
    CHECK(pseudoinverse(a) == inverse(a));
}

TEST_CASE("pseudoinversion is an involution commuting with transpose") {
    std::vector<RationalMatrix> samples = {
        from_rows({{"1", "1"}, {"0", "0"}}),
        from_rows({{"1", "2", "3"}, {"4", "5", "6"}}),
        from_rows({{"2"}}),
    };
    for (const RationalMatrix& a : samples) {
        CHECK(pseudoinverse(pseudoinverse(a)) == a);
        CHECK(pseudoinverse(transpose(a)) == transpose(pseudoinverse(a)));
    }
}

TEST_CASE("projection matrices are the symmetric idempotents") {
    RationalMatrix half = from_rows({{"1/2", "1/2"}, {"1/2", "1/2"}});
    CHECK(is_projection_matrix(half));
    CHECK(is_projection_matrix(identity_matrix(3)));
    // Idempotent but skew: a genuine oblique projector.
    RationalMatrix oblique = from_rows({{"1", "1"}, {"0", "0"}});
    CHECK(is_idempotent(oblique));
    CHECK_FALSE(is_projection_matrix(oblique));
    CHECK_FALSE(is_projection_matrix(from_rows({{"2"}})));
}
