#include <doctest.h>

#include "coloreul/binomial.hpp"
#include "oracles.hpp"

using namespace coloreul;

TEST_SUITE("binomial") {

TEST_CASE("integer binomials follow Pascal's triangle") {
    std::vector<std::vector<BigInt>> row{{1}};
    for (long top = 1; top <= 40; ++top) {
        std::vector<BigInt> next(static_cast<std::size_t>(top) + 1, 1);
        for (long k = 1; k < top; ++k) next[static_cast<std::size_t>(k)] = row.back()[k - 1] + row.back()[k];
        row.push_back(next);
    }
    for (long top = 0; top <= 40; ++top) {
        for (long k = 0; k <= top; ++k) REQUIRE(binomial(top, k) == row[top][k]);
    }
}

TEST_CASE("binomial with top below k vanishes") {
    CHECK(binomial(2L, 3) == 0);
    CHECK(binomial(-1L, 2) == 0);
    CHECK(binomial(0L, 0) == 1);
    CHECK(binomial(BigInt(-5), 0) == 0);
}

TEST_CASE("rational binomials") {
    CHECK(binomial(Rational(5), 2) == 10);
    CHECK(binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
    CHECK(binomial(Rational(-1), 3) == -1);
    CHECK(binomial(make_rational(7, 3), 0) == 1);
    // Pascal's rule holds as a polynomial identity.
    for (int num = -9; num <= 9; ++num) {
        const auto y = make_rational(num, 4);
        for (unsigned long k = 1; k <= 5; ++k) {
            CHECK(binomial(y, k) == binomial(y - 1, k) + binomial(y - 1, k - 1));
        }
    }
    // Agrees with the integer version where both apply.
    for (long top = 0; top <= 12; ++top) {
        for (unsigned long k = 0; k <= 6; ++k) CHECK(binomial(Rational(top), k) == Rational(binomial(top, k)));
    }
}

TEST_CASE("rational formatting") {
    CHECK(to_string(make_rational(504, 750)) == "84/125");
    CHECK(to_string(make_rational(-6, 3)) == "-2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("-36/750") == make_rational(-6, 125));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("polynomials") {
    const auto p = RationalPolynomial::linear(2, -1);  // 2x - 1
    CHECK(p.degree() == 1);
    CHECK(p(Rational(3)) == 5);
    const auto sq = p * p;
    CHECK(sq.coefficients() == std::vector<Rational>{1, -4, 4});
    CHECK((p + RationalPolynomial::linear(-2, 1)).coefficients().empty());
    CHECK(RationalPolynomial().degree() == -1);
    CHECK((Rational(0) * p).coefficients().empty());

    // C(x/5 + 2, 3) expanded, then evaluated at sample points.
    const auto b = RationalPolynomial::binomial_in(make_rational(1, 5), 2, 3);
    CHECK(b.degree() == 3);
    CHECK(b.coefficient(3) == make_rational(1, 750));
    for (int x = -6; x <= 6; ++x) CHECK(b(Rational(x)) == binomial(make_rational(x, 5) + 2, 3));
}

TEST_CASE("truncated series division by (1-t)^m") {
    TruncatedSeries one(std::vector<BigInt>{1});
    const auto s = one.truncated(5).divided_by_one_minus_t(3);
    for (std::size_t j = 0; j <= 5; ++j) CHECK(s[j] == oracle::choose(static_cast<long>(j) + 2, 2));
    TruncatedSeries e(std::vector<BigInt>{1, 6, 1});
    const auto q = e.truncated(3).divided_by_one_minus_t(3);
    CHECK(q.coefficients() == std::vector<BigInt>{1, 9, 25, 49});
}

TEST_CASE("powers and factorials") {
    CHECK(power(BigInt(3), 4) == 81);
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(factorial(25) == BigInt("15511210043330985984000000"));
}

}  // TEST_SUITE
