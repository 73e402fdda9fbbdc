// Seeded randomized checks of invariants across the library. Each case draws
// from its own generator so failures reproduce from the seed alone.

#include <doctest.h>

#include <random>

#include "coloreul/descent_algebra.hpp"
#include "coloreul/json_io.hpp"
#include "coloreul/ppartition.hpp"
#include "oracles.hpp"

using namespace coloreul;

namespace {

constexpr int kCases = 200;

struct Draw {
    int r;
    int n;
};

Draw draw_shape(std::mt19937_64& rng, int max_r, int max_n) {
    return {1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_r)),
            static_cast<int>(rng() % static_cast<std::uint64_t>(max_n + 1))};
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("group axioms") {
    std::mt19937_64 rng(1001);
    for (int t = 0; t < kCases; ++t) {
        const auto [r, n] = draw_shape(rng, 5, 7);
        const auto a = oracle::random_permutation(rng, r, n);
        const auto b = oracle::random_permutation(rng, r, n);
        const auto c = oracle::random_permutation(rng, r, n);
        REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
        REQUIRE(compose(a, inverse(a)) == identity(r, n));
        REQUIRE(compose(inverse(a), a) == identity(r, n));
        REQUIRE(compose(a, b) == oracle::compose(a, b));
        REQUIRE(inverse(compose(a, b)) == compose(inverse(b), inverse(a)));
    }
}

TEST_CASE("rank round trip") {
    std::mt19937_64 rng(1002);
    for (int t = 0; t < kCases; ++t) {
        const auto [r, n] = draw_shape(rng, 6, 9);
        const auto pi = oracle::random_permutation(rng, r, n);
        REQUIRE(unrank(r, n, rank(pi)) == pi);
        REQUIRE(rank(pi) < group_order(r, n));
    }
}

TEST_CASE("descent statistics") {
    std::mt19937_64 rng(1003);
    for (int t = 0; t < kCases; ++t) {
        const auto [r, n] = draw_shape(rng, 5, 8);
        const auto pi = oracle::random_permutation(rng, r, n);
        const auto p = descent_profile(pi);
        REQUIRE(p.des == p.descent_set.size());
        REQUIRE(p.intdes == p.internal_descent_set.size());
        REQUIRE(p.internal_descent_set.is_subset_of(p.descent_set));
        REQUIRE_FALSE(p.internal_descent_set.contains(n));
        REQUIRE(p.descent_set.elements() == oracle::descents(pi.letters()));
        // n is a descent exactly when the last letter is colored.
        if (n > 0) REQUIRE(p.descent_set.contains(n) == (pi(n).color != 0));
        if (r > 1) {
            const auto variant = descent_set_variant(pi, 0, 1);
            REQUIRE_FALSE(variant.contains(0));
            REQUIRE(variant == p.descent_set);
        }
        int total = 0;
        for (const auto& part : mr_key(pi).parts) total += part.length;
        REQUIRE(total == n);
    }
}

TEST_CASE("descent number is a function of the colored composition") {
    std::mt19937_64 rng(1004);
    for (int t = 0; t < kCases; ++t) {
        const auto [r, n] = draw_shape(rng, 4, 6);
        const auto a = oracle::random_permutation(rng, r, n);
        const auto b = oracle::random_permutation(rng, r, n);
        if (mr_key(a) == mr_key(b)) REQUIRE(des(a) == des(b));
        // Every permutation shares its key with its own standardization.
        REQUIRE(mr_key(standardize(r, a.letters())) == mr_key(a));
    }
}

TEST_CASE("text and JSON round trips") {
    std::mt19937_64 rng(1005);
    for (int t = 0; t < kCases; ++t) {
        const auto [r, n] = draw_shape(rng, 6, 9);
        const auto pi = oracle::random_permutation(rng, r, n);
        REQUIRE(ColoredPermutation::parse(r, to_string(pi)) == pi);
        REQUIRE(permutation_from_json(Json::parse(to_json(pi).dump())) == pi);
    }
    for (int t = 0; t < 60; ++t) {
        const int r = 1 + static_cast<int>(rng() % 4);
        const int size = static_cast<int>(rng() % 6);
        const auto p = random_poset(rng, r, size, size + 2, 0.3);
        REQUIRE(poset_from_json(Json::parse(to_json(p).dump())) == p);
    }
}

TEST_CASE("fundamental theorem on random posets") {
    std::mt19937_64 rng(1006);
    for (int t = 0; t < 60; ++t) {
        const int r = 1 + static_cast<int>(rng() % 3);
        const int size = 1 + static_cast<int>(rng() % 3);
        const auto p = random_poset(rng, r, size, size + 1, 0.4);
        for (int j = 0; j <= 2; ++j) REQUIRE(count_ppartitions_bruteforce(p, j) == omega_via_extensions(p, j));
    }
}

TEST_CASE("colored linear extensions are distinct and standardized") {
    std::mt19937_64 rng(1007);
    for (int t = 0; t < 60; ++t) {
        const int r = 1 + static_cast<int>(rng() % 3);
        const int size = 1 + static_cast<int>(rng() % 4);
        const auto p = random_poset(rng, r, size, size, 0.3);
        auto ext = colored_linear_extensions(p);
        const auto words = colored_linear_extension_words(p);
        REQUIRE(ext.size() == words.size());
        for (const auto& sigma : ext) REQUIRE(sigma.n() == size);
    }
}

TEST_CASE("main coefficient identity on random permutations") {
    std::mt19937_64 rng(1008);
    for (int t = 0; t < 40; ++t) {
        const auto [r, n] = draw_shape(rng, 3, 3);
        const auto pi = oracle::random_permutation(rng, r, n);
        const int j = static_cast<int>(rng() % 3);
        const int k = static_cast<int>(rng() % 3);
        BigInt sum = 0;
        for (const auto& sigma : enumerate_group(r, n)) {
            const auto tau = compose(inverse(sigma), pi);
            sum += oracle::choose(j + n - des(sigma), n) * oracle::choose(k + n - des(tau), n);
        }
        REQUIRE(sum == oracle::choose(static_cast<long>(r) * j * k + j + k + n - des(pi), n));
        REQUIRE(barred_chain_total(pi, j, k) == sum);
    }
}

TEST_CASE("structure polynomial at random rationals") {
    std::mt19937_64 rng(1009);
    for (int t = 0; t < 20; ++t) {
        const auto [r, n] = draw_shape(rng, 3, 3);
        const auto x = make_rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 5));
        const auto y = make_rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 5));
        REQUIRE(verify_phi_identity(r, n, {{x, y}}));
    }
}

}  // TEST_SUITE
