#include <doctest.h>

#include <random>

#include "coloreul/group_algebra.hpp"
#include "oracles.hpp"

using namespace coloreul;

namespace {

ColoredPermutation P(int r, const char* text) { return ColoredPermutation::parse(r, text); }

GroupAlgebraElement random_element(std::mt19937_64& rng, int r, int n, int terms) {
    GroupAlgebraElement out(r, n);
    for (int t = 0; t < terms; ++t) {
        const auto pi = oracle::random_permutation(rng, r, n);
        const long num = static_cast<long>(rng() % 11) - 5;
        const long den = 1 + static_cast<long>(rng() % 4);
        out += GroupAlgebraElement::basis(pi, make_rational(num, den));
    }
    return out;
}

// Sum over all pairs by the bijection oracle.
GroupAlgebraElement oracle_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement out(a.r(), a.n());
    for (const auto& [i, x] : a.terms()) {
        for (const auto& [k, y] : b.terms()) {
            const auto product = oracle::compose(unrank(a.r(), a.n(), i), unrank(b.r(), b.n(), k));
            out.accumulate(rank(product), x * y);
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("group_algebra") {

TEST_CASE("no zero coefficients are stored") {
    auto a = GroupAlgebraElement::basis(P(2, "2_1 1_0"), 3);
    a += GroupAlgebraElement::basis(P(2, "2_1 1_0"), -3);
    CHECK(a.is_zero());
    CHECK(GroupAlgebraElement::basis(P(2, "1_0 2_0"), 0).is_zero());
    CHECK(algebra_scale(GroupAlgebraElement::unit(2, 2), 0).is_zero());
}

TEST_CASE("addition and scaling") {
    std::mt19937_64 rng(5);
    const auto a = random_element(rng, 3, 3, 6);
    CHECK(algebra_add(a, GroupAlgebraElement(3, 3)) == a);
    CHECK((a - a).is_zero());
    const auto x = GroupAlgebraElement::basis(P(2, "1_0 2_0")) + GroupAlgebraElement::basis(P(2, "2_1 1_1"));
    const auto scaled = algebra_scale(x, make_rational(1, 750));
    CHECK(scaled.support_size() == 2);
    CHECK(scaled.coefficient(P(2, "2_1 1_1")) == make_rational(1, 750));
    CHECK_THROWS_AS(algebra_add(a, GroupAlgebraElement(2, 3)), std::invalid_argument);
}

TEST_CASE("products of basis elements follow composition") {
    const char* sigma = "3_1 1_1 5_0 2_1 4_3";
    const char* pi = "2_0 1_3 3_1 5_2 4_2";
    for (int r : {4, 5}) {
        const auto product =
            algebra_multiply(GroupAlgebraElement::basis(P(r, sigma)), GroupAlgebraElement::basis(P(r, pi)));
        CHECK(product == GroupAlgebraElement::basis(compose(P(r, sigma), P(r, pi))));
    }
    CHECK(algebra_multiply(GroupAlgebraElement::basis(P(4, sigma)), GroupAlgebraElement::basis(P(4, pi)))
              .coefficient(P(4, "1_1 3_0 5_1 4_1 2_3")) == 1);
}

TEST_CASE("unit law") {
    std::mt19937_64 rng(9);
    const auto a = random_element(rng, 2, 4, 10);
    const auto e = GroupAlgebraElement::unit(2, 4);
    CHECK(algebra_multiply(e, a) == a);
    CHECK(algebra_multiply(a, e) == a);
}

TEST_CASE("classical descent classes of S_2") {
    const auto e = GroupAlgebraElement::basis(identity(1, 2));
    const auto s = GroupAlgebraElement::basis(P(1, "2_0 1_0"));
    // C_0 is the identity alone, so C_0 C_0 = C_0; the full group sum squares to twice itself.
    CHECK(algebra_multiply(e, e) == e);
    const auto all = e + s;
    const auto square = algebra_multiply(all, all);
    CHECK(square.coefficient(identity(1, 2)) == 2);
    CHECK(square.coefficient(P(1, "2_0 1_0")) == 2);
}

TEST_CASE("convolution matches the oracle") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 20; ++t) {
        const int r = 1 + static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto a = random_element(rng, r, n, 5);
        const auto b = random_element(rng, r, n, 5);
        CHECK(algebra_multiply(a, b) == oracle_multiply(a, b));
        CHECK(algebra_multiply(a, b, {}, 4) == algebra_multiply(a, b));
    }
}

TEST_CASE("associativity and distributivity") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_element(rng, 3, 3, 6);
        const auto b = random_element(rng, 3, 3, 6);
        const auto c = random_element(rng, 3, 3, 6);
        CHECK(algebra_multiply(algebra_multiply(a, b), c) == algebra_multiply(a, algebra_multiply(b, c)));
        CHECK(algebra_multiply(a, b + c) == algebra_multiply(a, b) + algebra_multiply(a, c));
    }
}

TEST_CASE("product cap") {
    Limits limits;
    limits.max_product_terms = 10;
    GroupAlgebraElement a(2, 3);
    for (const auto& pi : enumerate_group(2, 3)) a += GroupAlgebraElement::basis(pi);
    CHECK_THROWS_AS(algebra_multiply(a, a, limits), CapExceeded);
    CHECK_THROWS_AS(algebra_multiply(a, GroupAlgebraElement(2, 2)), std::invalid_argument);
}

TEST_CASE("printing") {
    CHECK(to_string(GroupAlgebraElement(2, 2)) == "0");
    CHECK(to_string(GroupAlgebraElement::basis(P(2, "2_1 1_0"), make_rational(-1, 2))) == "(-1/2)[2_1 1_0]");
}

}  // TEST_SUITE
