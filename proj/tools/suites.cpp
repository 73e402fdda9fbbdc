#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "coloreul/descent_algebra.hpp"
#include "coloreul/group_algebra.hpp"
#include "coloreul/poset.hpp"
#include "coloreul/ppartition.hpp"

namespace coloreul::cli {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

class Recorder {
public:
    explicit Recorder(SuiteOutcome& outcome) : outcome_(outcome) {}

    void check(bool ok, const std::function<Json()>& witness) {
        ++outcome_.checks;
        if (ok) return;
        ++outcome_.failure_count;
        if (outcome_.failures.size() < kMaxWitnesses) outcome_.failures.push_back(witness());
    }

private:
    SuiteOutcome& outcome_;
};

int max_of(const std::vector<int>& values) { return values.empty() ? 0 : *std::max_element(values.begin(), values.end()); }

std::vector<std::uint64_t> ranks_of(const std::vector<ColoredPermutation>& perms) {
    std::vector<std::uint64_t> out;
    for (const auto& p : perms) out.push_back(rank(p));
    return out;
}

// Every subset of [n] as a set of positions 1..n.
std::vector<PositionSet> subsets_of(int n) {
    std::vector<PositionSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) out.emplace_back(mask << 1);
    return out;
}

SuiteOutcome lemma_suite(const SuiteConfig& c, bool zigzag) {
    SuiteOutcome outcome;
    Recorder rec(outcome);
    const auto group = enumerate_group(c.r, c.n, c.limits);
    for (const auto& pi : group) {
        for (auto descents : subsets_of(c.n)) {
            std::vector<std::uint64_t> expected;
            for (const auto& sigma : group) {
                const auto set = descent_profile(compose(inverse(sigma), pi)).descent_set;
                if (zigzag ? set == descents : set.is_subset_of(descents)) expected.push_back(rank(sigma));
            }
            std::vector<std::uint64_t> got;
            if (!(zigzag && c.r == 1 && descents.contains(c.n))) {
                const auto poset = zigzag ? zigzag_poset(descents, pi) : chain_poset(descents, pi);
                got = ranks_of(colored_linear_extensions(poset, c.limits));
            }
            auto sorted = got;
            std::sort(sorted.begin(), sorted.end());
            const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
            std::sort(expected.begin(), expected.end());
            rec.check(distinct && sorted == expected, [&] {
                return Json{{"pi", to_string(pi)},
                            {"I", to_string(descents)},
                            {"extensions", got.size()},
                            {"expected", expected.size()},
                            {"distinct", distinct}};
            });
        }
    }
    return outcome;
}

SuiteOutcome ftcpp_suite(const SuiteConfig& c) {
    SuiteOutcome outcome;
    Recorder rec(outcome);
    std::mt19937_64 rng(c.seed);
    const int max_size = std::max(1, c.n);
    for (int t = 0; t < c.cases; ++t) {
        const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size));
        const int r = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(c.r));
        const auto poset = random_poset(rng, r, size, size, 0.4);
        for (int j : c.j_values) {
            const auto brute = count_ppartitions_bruteforce(poset, j, c.limits);
            const auto via = omega_via_extensions(poset, j, c.limits);
            rec.check(brute == via, [&] {
                return Json{{"case", t},
                            {"poset", to_json(poset)},
                            {"j", j},
                            {"bruteforce", to_string(brute)},
                            {"via_extensions", to_string(via)}};
            });
        }
        const auto sides = order_series_sides(poset, max_of(c.j_values), c.limits);
        rec.check(sides.equal(), [&] {
            return Json{{"case", t}, {"poset", to_json(poset)}, {"direct", to_json(sides.direct)},
                        {"via_descents", to_json(sides.via_descents)}};
        });
    }
    return outcome;
}

SuiteOutcome order_poly_suite(const SuiteConfig& c) {
    SuiteOutcome outcome;
    Recorder rec(outcome);
    for_each_element(c.r, c.n, [&](const ColoredPermutation& pi) {
        const auto floating = floating_chain_poset(pi);
        const auto anchored = anchored_chain_poset(pi);
        for (int j : c.j_values) {
            const auto brute_floating = count_ppartitions_bruteforce(floating, j, c.limits);
            const auto closed_floating = omega_floating_chain(pi, j);
            rec.check(brute_floating == closed_floating, [&] {
                return Json{{"poset", "floating"}, {"pi", to_string(pi)}, {"j", j},
                            {"bruteforce", to_string(brute_floating)}, {"closed_form", to_string(closed_floating)}};
            });
            const auto brute_anchored = count_ppartitions_bruteforce(anchored, j, c.limits);
            const auto closed_anchored = omega_pi(pi, j);
            rec.check(brute_anchored == closed_anchored, [&] {
                return Json{{"poset", "anchored"}, {"pi", to_string(pi)}, {"j", j},
                            {"bruteforce", to_string(brute_anchored)}, {"closed_form", to_string(closed_anchored)}};
            });
        }
    }, c.limits);
    return outcome;
}

SuiteOutcome barred_suite(const SuiteConfig& c) {
    SuiteOutcome outcome;
    Recorder rec(outcome);
    const auto group = enumerate_group(c.r, c.n, c.limits);
    const auto n = static_cast<unsigned long>(c.n);
    for (const auto& pi : group) {
        for (int j : c.j_values) {
            for (int k : c.k_values) {
                const BigInt closed = binomial(static_cast<long>(c.r) * j * k + j + k + c.n - des(pi), n);
                BigInt convolution = 0;
                for (const auto& sigma : group) {
                    convolution += omega_pi(sigma, j) *
                                   binomial(static_cast<long>(k) + c.n - des(compose(inverse(sigma), pi)), n);
                }
                BigInt zigzags = 0;
                for (auto descents : subsets_of(c.n)) zigzags += barred_zigzag_count(descents, pi, j, k, c.limits);
                const BigInt placements = barred_chain_sum(pi, j, k);
                rec.check(closed == convolution && closed == zigzags && closed == placements, [&] {
                    return Json{{"pi", to_string(pi)},         {"j", j},
                                {"k", k},                      {"closed_form", to_string(closed)},
                                {"convolution", to_string(convolution)}, {"zigzag_sum", to_string(zigzags)},
                                {"bar_placements", to_string(placements)}};
                });
            }
        }
    }
    return outcome;
}

SuiteOutcome steingrimsson_suite(const SuiteConfig& c) {
    SuiteOutcome outcome;
    Recorder rec(outcome);
    const auto sides = steingrimsson_sides(c.r, c.n, max_of(c.j_values), c.limits);
    rec.check(sides.equal(), [&] {
        return Json{{"direct", to_json(sides.direct)}, {"via_descents", to_json(sides.via_descents)}};
    });
    outcome.details["eulerian_polynomial"] = to_json(eulerian_polynomial(c.r, c.n, c.limits));
    outcome.details["values"] = to_json(sides.direct);
    return outcome;
}

Json describe_classes(const ClassPartition& partition) {
    Json classes = Json::array();
    for (const auto& info : partition.classes()) {
        classes.push_back({{"label", info.label},
                           {"size", info.size},
                           {"representative", to_string(unrank(partition.r(), partition.n(), info.representative))}});
    }
    return classes;
}

SuiteOutcome closure_suite(const SuiteConfig& c, const ClassPartition& partition) {
    SuiteOutcome outcome;
    Recorder rec(outcome);
    const auto report = verify_closure(partition, c.limits, c.jobs);
    const auto& classes = partition.classes();
    for (const auto& pair : report.pairs) {
        rec.check(pair.in_span, [&] {
            Json out{{"left", classes[pair.left].label}, {"right", classes[pair.right].label}};
            if (pair.witness) out["witness"] = to_json(*pair.witness);
            return out;
        });
    }
    outcome.details["partition"] = partition.name();
    outcome.details["classes"] = describe_classes(partition);
    if (!report.closed()) return outcome;

    const auto& tensor = report.closed_partition->structure_constants();
    const std::size_t count = partition.class_count();
    for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t k = 0; k < count; ++k) {
            BigInt total = 0;
            for (std::size_t i = 0; i < count; ++i) total += tensor[j][k][i] * BigInt(classes[i].size);
            rec.check(total == BigInt(classes[j].size) * BigInt(classes[k].size), [&] {
                return Json{{"tensor_row", {classes[j].label, classes[k].label}}, {"weighted_sum", to_string(total)}};
            });
        }
    }
    rec.check(representative_structure_constants(partition) == tensor,
              [] { return Json{{"structure_constants", "representative route disagrees with convolution"}}; });
    outcome.details["structure_constants"] = tensor_to_json(tensor);
    return outcome;
}

std::vector<std::pair<Rational, Rational>> grid_pairs(const SuiteConfig& c) {
    std::vector<std::pair<Rational, Rational>> out;
    for (int j : c.j_values) {
        for (int k : c.k_values) out.emplace_back(j, k);
    }
    return out;
}

SuiteOutcome phi_suite(const SuiteConfig& c) {
    SuiteOutcome outcome;
    Recorder rec(outcome);
    for (const auto& pair : grid_pairs(c)) {
        const bool ok = verify_phi_identity(c.r, c.n, {pair}, c.limits, Multiplication::collapsed, c.jobs);
        rec.check(ok, [&] { return Json{{"x", to_string(pair.first)}, {"y", to_string(pair.second)}}; });
    }
    return outcome;
}

SuiteOutcome idempotent_suite(const SuiteConfig& c) {
    SuiteOutcome outcome;
    Recorder rec(outcome);
    const auto table = eulerian_idempotent_table(c.r, c.n);
    const auto idempotents = eulerian_idempotents(c.r, c.n, c.limits);
    auto report = verify_closure(des_partition(c.r, c.n, c.limits), c.limits, c.jobs);
    rec.check(report.closed(), [] { return Json{{"closure", "descent classes not closed"}}; });
    if (report.closed()) {
        const auto& closed = *report.closed_partition;
        for (std::size_t i = 0; i < idempotents.size(); ++i) {
            for (std::size_t j = 0; j < idempotents.size(); ++j) {
                const auto product = multiply_in_span(closed, idempotents[i], idempotents[j]);
                const bool ok = i == j ? product == idempotents[i] : product.is_zero();
                rec.check(ok, [&] { return Json{{"product", {i, j}}}; });
            }
        }
    }
    GroupAlgebraElement sum(c.r, c.n);
    for (const auto& e : idempotents) sum += e;
    rec.check(sum == GroupAlgebraElement::unit(c.r, c.n), [] { return Json{{"sum", "sum of idempotents is not 1"}}; });

    GroupAlgebraElement uniform(c.r, c.n);
    const Rational weight(1, group_order(c.r, c.n));
    for (std::uint64_t index = 0; index < group_order(c.r, c.n); ++index) uniform.accumulate(index, weight);
    rec.check(idempotents.back() == uniform, [] { return Json{{"top", "top idempotent is not the uniform average"}}; });

    outcome.details["table"] = to_json(table);
    Json lines = Json::array();
    for (std::size_t i = 0; i < table.alpha.size(); ++i) lines.push_back(render_idempotent(table, i));
    outcome.details["rendered"] = std::move(lines);
    return outcome;
}

SuiteOutcome variants_suite(const SuiteConfig& c) {
    SuiteOutcome outcome;
    Recorder rec(outcome);
    // The claim is only made for G_{2,2}; larger scans are reported as data.
    const bool asserted = c.r <= 2 && c.n <= 2;
    Json entries = Json::array();
    for (const auto& e : scan_boundary_variants(c.r, c.n, c.limits, c.jobs)) {
        Json entry{{"a", e.a},
                   {"b", e.b},
                   {"closed", e.closed},
                   {"same_as_standard", e.same_as_standard},
                   {"classes", e.class_count}};
        if (e.witness) {
            entry["witness"] = to_json(*e.witness);
            entry["witness_pair"] = {e.witness_left, e.witness_right};
        }
        if (asserted) {
            rec.check(e.closed == e.same_as_standard, [&] { return entry; });
        }
        entries.push_back(std::move(entry));
    }
    outcome.details["asserted"] = asserted;
    outcome.details["variants"] = std::move(entries);
    return outcome;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ftcpp",         "order-poly",  "zigzag",         "chain",
                                                "barred",        "steingrimsson", "closure-des",  "closure-mr",
                                                "closure-desset", "phi",         "idempotents",    "variants"};
    return names;
}

SuiteOutcome run_suite(const std::string& name, const SuiteConfig& config) {
    if (name == "ftcpp") return ftcpp_suite(config);
    if (name == "order-poly") return order_poly_suite(config);
    if (name == "zigzag") return lemma_suite(config, true);
    if (name == "chain") return lemma_suite(config, false);
    if (name == "barred") return barred_suite(config);
    if (name == "steingrimsson") return steingrimsson_suite(config);
    if (name == "closure-des") return closure_suite(config, des_partition(config.r, config.n, config.limits));
    if (name == "closure-mr") return closure_suite(config, mr_partition(config.r, config.n, config.limits));
    if (name == "closure-desset") {
        return closure_suite(config, descent_set_partition(config.r, config.n, config.limits));
    }
    if (name == "phi") return phi_suite(config);
    if (name == "idempotents") return idempotent_suite(config);
    if (name == "variants") return variants_suite(config);
    throw std::invalid_argument("unknown suite " + name);
}

}  // namespace coloreul::cli
