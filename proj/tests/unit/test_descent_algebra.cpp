#include <doctest.h>

#include <random>

#include "coloreul/descent_algebra.hpp"
#include "oracles.hpp"

using namespace coloreul;

namespace {

ColoredPermutation P(int r, const char* text) { return ColoredPermutation::parse(r, text); }

std::vector<std::uint64_t> sizes(const ClassPartition& partition) {
    std::vector<std::uint64_t> out;
    for (const auto& info : partition.classes()) out.push_back(info.size);
    return out;
}

Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace

TEST_SUITE("descent_algebra") {

TEST_CASE("descent classes") {
    const auto [partition, sums] = class_sums_des(5, 3);
    CHECK(partition.class_count() == 4);
    std::uint64_t total = 0;
    for (auto s : sizes(partition)) total += s;
    CHECK(total == 750);
    CHECK(sums.size() == 4);

    const auto [classical, csums] = class_sums_des(1, 2);
    REQUIRE(csums.size() == 3);
    CHECK(csums[0] == GroupAlgebraElement::basis(identity(1, 2)));
    CHECK(csums[1] == GroupAlgebraElement::basis(P(1, "2_0 1_0")));
    CHECK(csums[2].is_zero());
    CHECK(classical.class_count() == 2);

    CHECK(sizes(des_partition(2, 2)) == std::vector<std::uint64_t>{1, 6, 1});
}

TEST_CASE("colored composition classes") {
    CHECK(mr_partition(1, 2).class_count() == 2);
    CHECK(mr_partition(2, 1).class_count() == 2);
    // Runs of length two come in two colors, and each ordered pair of single
    // runs in four color choices: 2 + 4 = 6 realized compositions.
    CHECK(mr_partition(2, 2).class_count() == 6);
    const auto [partition, sums] = class_sums_mr(2, 2);
    CHECK(sums.size() == 6);
    CHECK(sizes(partition) == std::vector<std::uint64_t>{1, 2, 2, 1, 1, 1});
}

TEST_CASE("descent number is constant on composition classes") {
    for (auto [r, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}}) {
        const auto mr = mr_partition(r, n);
        const auto des_classes = des_partition(r, n);
        for (std::size_t id = 0; id < des_classes.class_count(); ++id) {
            const auto sum = des_classes.class_sum(id);
            const auto span = is_in_span(sum, mr);
            REQUIRE(span.in_span());
            for (const auto& c : *span.coefficients) CHECK((c == 0 || c == 1));
        }
    }
}

TEST_CASE("span membership") {
    const auto partition = des_partition(2, 2);
    const auto c1 = partition.class_sum(1);
    const auto span = is_in_span(c1, partition);
    REQUIRE(span.in_span());
    CHECK(*span.coefficients == std::vector<Rational>{0, 1, 0});

    const auto single = GroupAlgebraElement::basis(P(2, "1_0 2_1"));
    const auto miss = is_in_span(single, partition);
    CHECK_FALSE(miss.in_span());
    REQUIRE(miss.witness);
    CHECK(miss.witness->class_id == 1);
    CHECK(miss.witness->first_coefficient != miss.witness->second_coefficient);
}

TEST_CASE("products of descent classes stay in the span") {
    for (int r = 1; r <= 3; ++r) {
        for (int n = 1; n <= 3; ++n) {
            const auto [partition, sums] = class_sums_des(r, n);
            for (const auto& a : sums) {
                for (const auto& b : sums) CHECK(is_in_span(algebra_multiply(a, b), partition).in_span());
            }
        }
    }
}

TEST_CASE("closure reports") {
    const auto report = verify_closure(des_partition(2, 2));
    CHECK(report.closed());
    CHECK(report.pairs.size() == 9);
    CHECK(report.first_failure() == nullptr);
    CHECK(verify_closure(mr_partition(2, 2)).closed());
    CHECK(verify_closure(mr_partition(3, 2)).closed());

    const auto failing = verify_closure(descent_set_partition(2, 2));
    CHECK_FALSE(failing.closed());
    const auto* failure = failing.first_failure();
    REQUIRE(failure != nullptr);
    REQUIRE(failure->witness);
    const auto& w = *failure->witness;
    // The witness is checked against a direct convolution.
    const auto partition = descent_set_partition(2, 2);
    const auto product = algebra_multiply(partition.class_sum(failure->left), partition.class_sum(failure->right));
    CHECK(product.coefficient(w.first) == w.first_coefficient);
    CHECK(product.coefficient(w.second) == w.second_coefficient);
    CHECK(w.first_coefficient != w.second_coefficient);
    CHECK(partition.class_of(rank(w.first)) == partition.class_of(rank(w.second)));
}

TEST_CASE("structure constants") {
    const auto trivial = verify_closure(des_partition(1, 1));
    REQUIRE(trivial.closed());
    CHECK(structure_constants(*trivial.closed_partition) == StructureTensor{{{1}}});

    const auto report = verify_closure(des_partition(2, 2), {}, 3);
    REQUIRE(report.closed());
    const auto& closed = *report.closed_partition;
    const auto m = structure_constants(closed);
    const auto& partition = closed.partition();
    // C_0 C_0 = C_0 because C_0 is the identity.
    CHECK(m[0][0] == std::vector<BigInt>{1, 0, 0});
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
            BigInt total = 0;
            for (std::size_t i = 0; i < 3; ++i) total += m[j][k][i] * BigInt(partition.classes()[i].size);
            CHECK(total == BigInt(partition.classes()[j].size * partition.classes()[k].size));
            const auto product = algebra_multiply(partition.class_sum(j), partition.class_sum(k));
            for (std::size_t i = 0; i < 3; ++i) {
                CHECK(product.coefficient_at(partition.classes()[i].representative) == Rational(m[j][k][i]));
            }
        }
    }
    CHECK(representative_structure_constants(partition) == m);
}

TEST_CASE("descent pair counts give the structure constants") {
    const auto report = verify_closure(des_partition(2, 3));
    REQUIRE(report.closed());
    const auto& m = report.closed_partition->structure_constants();
    const auto& partition = report.closed_partition->partition();
    for (std::size_t i = 0; i < partition.class_count(); ++i) {
        const auto pi = unrank(2, 3, partition.classes()[i].representative);
        const auto counts = descent_pair_counts(pi);
        for (std::size_t j = 0; j < partition.class_count(); ++j) {
            for (std::size_t k = 0; k < partition.class_count(); ++k) CHECK(m[j][k][i] == BigInt(counts[j][k]));
        }
    }
}

TEST_CASE("collapsed multiplication agrees with convolution") {
    const auto report = verify_closure(des_partition(3, 3));
    REQUIRE(report.closed());
    const auto& closed = *report.closed_partition;
    const auto& partition = closed.partition();
    std::mt19937_64 rng(4);
    for (int t = 0; t < 5; ++t) {
        std::vector<Rational> a, b;
        for (std::size_t i = 0; i < partition.class_count(); ++i) {
            a.push_back(q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
            b.push_back(q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
        }
        const auto x = partition.combine(a);
        const auto y = partition.combine(b);
        CHECK(multiply_in_span(closed, x, y) == algebra_multiply(x, y));
    }
    CHECK_THROWS_AS(multiply_in_span(closed, GroupAlgebraElement::basis(P(3, "2_0 1_0 3_0")),
                                     GroupAlgebraElement::unit(3, 3)),
                    std::invalid_argument);
}

TEST_CASE("structure polynomial") {
    CHECK(structure_poly_eval(3, 3, 0) == GroupAlgebraElement::unit(3, 3));
    const auto phi2 = structure_poly_eval(2, 3, 2);
    for (const auto& pi : enumerate_group(2, 3)) CHECK(phi2.coefficient(pi) == Rational(oracle::choose(2 + 3 - oracle::des(pi.letters()), 3)));
    CHECK(structure_poly_coefficients(3, q(1, 2)) ==
          std::vector<Rational>{binomial(q(7, 2), 3), binomial(q(5, 2), 3), binomial(q(3, 2), 3), binomial(q(1, 2), 3)});
    CHECK(structure_poly_eval(4, 0, q(5, 3)) == GroupAlgebraElement::unit(4, 0));
}

TEST_CASE("functional equation") {
    std::vector<std::pair<Rational, Rational>> pairs;
    for (int j = 0; j <= 2; ++j) {
        for (int k = 0; k <= 2; ++k) pairs.emplace_back(j, k);
    }
    CHECK(verify_phi_identity(1, 3, pairs));
    CHECK(verify_phi_identity(2, 3, pairs, {}, Multiplication::naive));
    CHECK(verify_phi_identity(5, 3, {{0, 1}, {1, 2}, {2, 2}}));
    // Holds for rational arguments too, being a polynomial identity.
    CHECK(verify_phi_identity(3, 2, {{q(1, 2), q(-2, 3)}, {q(5, 7), 0}}));
    CHECK(verify_phi_identity(2, 3, {{0, q(7, 3)}}));
}

TEST_CASE("idempotent table for r = 5, n = 3") {
    const auto table = eulerian_idempotent_table(5, 3);
    const std::vector<std::vector<long>> scaled{
        {504, -36, 24, -66}, {218, 23, -22, 83}, {27, 12, -3, -18}, {1, 1, 1, 1}};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t d = 0; d < 4; ++d) CHECK(table.alpha[i][d] == make_rational(scaled[i][d], 750));
    }
    CHECK(table.common_denominator() == 750);
    CHECK(table.alpha[0][0] == make_rational(84, 125));
    CHECK(render_idempotent(table, 0) == "c_0 = 1/750 (504 C_0 - 36 C_1 + 24 C_2 - 66 C_3)");
    CHECK(render_idempotent(table, 2) == "c_2 = 1/750 (27 C_0 + 12 C_1 - 3 C_2 - 18 C_3)");
    CHECK(render_idempotent(table, 3) == "c_3 = 1/750 (C_0 + C_1 + C_2 + C_3)");
}

TEST_CASE("idempotent table entries are polynomial coefficients") {
    for (int r = 1; r <= 4; ++r) {
        for (int n = 0; n <= 4; ++n) {
            const auto table = eulerian_idempotent_table(r, n);
            for (int d = 0; d <= n; ++d) {
                for (int x = -3; x <= 3; ++x) {
                    Rational value = 0;
                    Rational xp = 1;
                    for (int i = 0; i <= n; ++i) {
                        value += table.alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] * xp;
                        xp *= x;
                    }
                    CHECK(value == binomial(make_rational(x - 1, r) + (n - d), static_cast<unsigned long>(n)));
                }
            }
        }
    }
}

TEST_CASE("idempotents are orthogonal and sum to one") {
    for (auto [r, n] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 0}}) {
        const auto c = eulerian_idempotents(r, n);
        GroupAlgebraElement sum(r, n);
        for (std::size_t i = 0; i < c.size(); ++i) {
            sum += c[i];
            for (std::size_t j = 0; j < c.size(); ++j) {
                const auto product = algebra_multiply(c[i], c[j]);
                CHECK(product == (i == j ? c[i] : GroupAlgebraElement(r, n)));
            }
        }
        CHECK(sum == GroupAlgebraElement::unit(r, n));
        const Rational weight(1, group_order(r, n));
        for (const auto& pi : enumerate_group(r, n)) CHECK(c.back().coefficient(pi) == weight);
    }
    // With one color the top class is empty but the idempotents still work.
    CHECK(eulerian_idempotents(1, 3).size() == 4);
}

TEST_CASE("boundary variant scan") {
    const auto scan = scan_boundary_variants(2, 2);
    REQUIRE(scan.size() == 4);
    for (const auto& e : scan) {
        CHECK(e.closed == e.same_as_standard);
        CHECK(e.closed == (e.a == 0 && e.b == 1));
        if (!e.closed) CHECK(e.witness.has_value());
    }
    CHECK(variant_des_partition(2, 2, 0, 1).same_partition_as(des_partition(2, 2)));
    CHECK_FALSE(variant_des_partition(2, 2, 1, 1).same_partition_as(des_partition(2, 2)));
    CHECK_THROWS_AS(variant_des_partition(2, 2, 2, 0), std::invalid_argument);
}

}  // TEST_SUITE
