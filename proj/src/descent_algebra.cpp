#include "coloreul/descent_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "coloreul/parallel.hpp"

namespace coloreul {

ClassPartition ClassPartition::from_key(int r, int n, std::string name, const KeyFn& key, const LabelFn& label,
                                        const Limits& limits) {
    check_group_size(r, n, limits);
    ClassPartition out;
    out.r_ = r;
    out.n_ = n;
    out.name_ = std::move(name);

    std::map<std::vector<int>, ClassInfo> found;
    std::vector<std::vector<int>> keys;
    keys.reserve(group_order(r, n));
    std::uint64_t index = 0;
    for_each_element(r, n, [&](const ColoredPermutation& pi) {
        auto k = key(pi);
        auto [it, inserted] = found.try_emplace(k);
        if (inserted) {
            it->second.key = k;
            it->second.label = label(pi);
            it->second.representative = index;
        }
        ++it->second.size;
        keys.push_back(std::move(k));
        ++index;
    }, limits);

    std::map<std::vector<int>, std::size_t> ids;
    for (auto& [k, info] : found) {
        ids.emplace(k, out.classes_.size());
        out.classes_.push_back(std::move(info));
    }
    out.labels_.reserve(keys.size());
    for (const auto& k : keys) out.labels_.push_back(ids.at(k));
    return out;
}

std::optional<std::size_t> ClassPartition::find(const std::vector<int>& key) const {
    for (std::size_t id = 0; id < classes_.size(); ++id) {
        if (classes_[id].key == key) return id;
    }
    return std::nullopt;
}

GroupAlgebraElement ClassPartition::class_sum(std::size_t id) const {
    if (id >= classes_.size()) throw std::out_of_range("class id out of range");
    GroupAlgebraElement out(r_, n_);
    for (std::uint64_t index = 0; index < labels_.size(); ++index) {
        if (labels_[index] == id) out.accumulate(index, 1);
    }
    return out;
}

GroupAlgebraElement ClassPartition::combine(const std::vector<Rational>& coefficients) const {
    if (coefficients.size() != classes_.size()) throw std::invalid_argument("one coefficient per class expected");
    GroupAlgebraElement out(r_, n_);
    for (std::uint64_t index = 0; index < labels_.size(); ++index) out.accumulate(index, coefficients[labels_[index]]);
    return out;
}

bool ClassPartition::same_partition_as(const ClassPartition& other) const {
    if (r_ != other.r_ || n_ != other.n_ || classes_.size() != other.classes_.size()) return false;
    // Both label vectors are indexed by rank, so equal partitions means a
    // consistent bijection between class ids.
    std::vector<std::size_t> mapping(classes_.size(), classes_.size());
    for (std::size_t index = 0; index < labels_.size(); ++index) {
        auto& target = mapping[labels_[index]];
        if (target == classes_.size()) target = other.labels_[index];
        else if (target != other.labels_[index]) return false;
    }
    return true;
}

ClassPartition des_partition(int r, int n, const Limits& limits) {
    return ClassPartition::from_key(
        r, n, "des", [](const ColoredPermutation& pi) { return std::vector<int>{des(pi)}; },
        [](const ColoredPermutation& pi) { return "des=" + std::to_string(des(pi)); }, limits);
}

ClassPartition mr_partition(int r, int n, const Limits& limits) {
    return ClassPartition::from_key(
        r, n, "mr",
        [](const ColoredPermutation& pi) {
            std::vector<int> key;
            for (const auto& part : mr_key(pi).parts) {
                key.push_back(part.length);
                key.push_back(part.color);
            }
            return key;
        },
        [](const ColoredPermutation& pi) { return to_string(mr_key(pi)); }, limits);
}

ClassPartition descent_set_partition(int r, int n, const Limits& limits) {
    return ClassPartition::from_key(
        r, n, "desset",
        [](const ColoredPermutation& pi) {
            return std::vector<int>{static_cast<int>(descent_profile(pi).descent_set.bits())};
        },
        [](const ColoredPermutation& pi) { return to_string(descent_profile(pi).descent_set); }, limits);
}

ClassPartition variant_des_partition(int r, int n, int a, int b, const Limits& limits) {
    if (a < 0 || a >= r || b < 0 || b >= r) throw std::invalid_argument("boundary colors must lie in [0, r-1]");
    return ClassPartition::from_key(
        r, n, "variant-" + std::to_string(a) + "-" + std::to_string(b),
        [a, b](const ColoredPermutation& pi) { return std::vector<int>{descent_set_variant(pi, a, b).size()}; },
        [a, b](const ColoredPermutation& pi) {
            return "des" + std::to_string(a) + std::to_string(b) + "=" +
                   std::to_string(descent_set_variant(pi, a, b).size());
        },
        limits);
}

std::pair<ClassPartition, std::vector<GroupAlgebraElement>> class_sums_des(int r, int n, const Limits& limits) {
    auto partition = des_partition(r, n, limits);
    std::vector<GroupAlgebraElement> sums;
    for (int d = 0; d <= n; ++d) {
        auto id = partition.find({d});
        sums.push_back(id ? partition.class_sum(*id) : GroupAlgebraElement(r, n));
    }
    return {std::move(partition), std::move(sums)};
}

std::pair<ClassPartition, std::vector<GroupAlgebraElement>> class_sums_mr(int r, int n, const Limits& limits) {
    auto partition = mr_partition(r, n, limits);
    std::vector<GroupAlgebraElement> sums;
    for (std::size_t id = 0; id < partition.class_count(); ++id) sums.push_back(partition.class_sum(id));
    return {std::move(partition), std::move(sums)};
}

SpanResult is_in_span(const GroupAlgebraElement& a, const ClassPartition& partition) {
    if (a.r() != partition.r() || a.n() != partition.n()) throw std::invalid_argument("is_in_span: different groups");
    const auto& classes = partition.classes();
    std::vector<Rational> coefficients;
    coefficients.reserve(classes.size());
    for (const auto& info : classes) coefficients.push_back(a.coefficient_at(info.representative));

    const auto& labels = partition.labels();
    for (std::uint64_t index = 0; index < labels.size(); ++index) {
        const auto id = labels[index];
        const Rational value = a.coefficient_at(index);
        if (value != coefficients[id]) {
            SpanWitness witness{id, unrank(a.r(), a.n(), classes[id].representative), unrank(a.r(), a.n(), index),
                                coefficients[id], value};
            return {std::nullopt, std::move(witness)};
        }
    }
    return {std::move(coefficients), std::nullopt};
}

const PairResult* ClosureReport::first_failure() const {
    for (const auto& pair : pairs) {
        if (!pair.in_span) return &pair;
    }
    return nullptr;
}

ClosureReport verify_closure(const ClassPartition& partition, const Limits& limits, unsigned jobs) {
    const int r = partition.r();
    const int n = partition.n();
    check_group_size(r, n, limits);
    const std::uint64_t order = group_order(r, n);
    if (static_cast<long double>(order) * static_cast<long double>(order) >
        static_cast<long double>(limits.max_product_terms)) {
        throw CapExceeded("closure check needs |G|^2 = " + std::to_string(order) + "^2 products, over cap " +
                          std::to_string(limits.max_product_terms));
    }

    const auto elements = enumerate_group(r, n, limits);
    const auto& labels = partition.labels();
    const std::size_t classes = partition.class_count();
    std::vector<std::vector<std::uint64_t>> members(classes);
    for (std::uint64_t index = 0; index < order; ++index) members[labels[index]].push_back(index);

    ClosureReport report;
    report.pairs.resize(classes * classes);
    parallel_for(classes * classes, jobs, [&](std::size_t slot) {
        PairResult& result = report.pairs[slot];
        result.left = slot / classes;
        result.right = slot % classes;
        // Class sums have 0/1 coefficients, so the product counts factorizations.
        std::vector<std::uint64_t> counts(order, 0);
        for (auto s : members[result.left]) {
            for (auto t : members[result.right]) ++counts[rank(compose(elements[s], elements[t]))];
        }
        std::vector<std::uint64_t> expected(classes);
        for (std::size_t id = 0; id < classes; ++id) expected[id] = counts[partition.classes()[id].representative];
        for (std::uint64_t index = 0; index < order; ++index) {
            const auto id = labels[index];
            if (counts[index] != expected[id]) {
                result.in_span = false;
                result.witness = SpanWitness{id, elements[partition.classes()[id].representative], elements[index],
                                             Rational(expected[id]), Rational(counts[index])};
                return;
            }
        }
        result.in_span = true;
        for (auto value : expected) result.class_coefficients.emplace_back(value);
    });

    if (report.first_failure() == nullptr) {
        StructureTensor tensor(classes, std::vector<std::vector<BigInt>>(classes));
        for (const auto& pair : report.pairs) tensor[pair.left][pair.right] = pair.class_coefficients;
        report.closed_partition = ClosedPartition(partition, std::move(tensor));
    }
    return report;
}

StructureTensor structure_constants(const ClosedPartition& closed) { return closed.structure_constants(); }

StructureTensor representative_structure_constants(const ClassPartition& partition) {
    const int r = partition.r();
    const int n = partition.n();
    const auto elements = enumerate_group(r, n);
    const std::size_t classes = partition.class_count();
    std::vector<std::vector<std::vector<std::uint64_t>>> counts(
        classes, std::vector<std::vector<std::uint64_t>>(classes, std::vector<std::uint64_t>(classes, 0)));
    for (std::size_t i = 0; i < classes; ++i) {
        const auto& pi = elements[partition.classes()[i].representative];
        for (std::uint64_t s = 0; s < elements.size(); ++s) {
            const auto tau = compose(inverse(elements[s]), pi);
            ++counts[partition.class_of(s)][partition.class_of(rank(tau))][i];
        }
    }
    StructureTensor tensor(classes, std::vector<std::vector<BigInt>>(classes, std::vector<BigInt>(classes)));
    for (std::size_t j = 0; j < classes; ++j) {
        for (std::size_t k = 0; k < classes; ++k) {
            for (std::size_t i = 0; i < classes; ++i) tensor[j][k][i] = counts[j][k][i];
        }
    }
    return tensor;
}

GroupAlgebraElement multiply_in_span(const ClosedPartition& closed, const GroupAlgebraElement& a,
                                     const GroupAlgebraElement& b) {
    const auto& partition = closed.partition();
    auto left = is_in_span(a, partition);
    auto right = is_in_span(b, partition);
    if (!left.in_span() || !right.in_span()) throw std::invalid_argument("factor is not in the span of the class sums");
    const auto& m = closed.structure_constants();
    const std::size_t classes = partition.class_count();
    std::vector<Rational> product(classes, 0);
    for (std::size_t j = 0; j < classes; ++j) {
        if ((*left.coefficients)[j] == 0) continue;
        for (std::size_t k = 0; k < classes; ++k) {
            const Rational weight = (*left.coefficients)[j] * (*right.coefficients)[k];
            if (weight == 0) continue;
            for (std::size_t i = 0; i < classes; ++i) product[i] += weight * Rational(m[j][k][i]);
        }
    }
    return partition.combine(product);
}

std::vector<Rational> structure_poly_coefficients(int n, const Rational& x) {
    std::vector<Rational> out;
    for (int d = 0; d <= n; ++d) out.push_back(binomial(x + Rational(n - d), static_cast<unsigned long>(n)));
    return out;
}

namespace {

std::vector<Rational> des_class_coefficients(const ClassPartition& partition, const std::vector<Rational>& by_des) {
    std::vector<Rational> out;
    for (const auto& info : partition.classes()) out.push_back(by_des[static_cast<std::size_t>(info.key.at(0))]);
    return out;
}

}  // namespace

GroupAlgebraElement structure_poly_eval(int r, int n, const Rational& x, const Limits& limits) {
    const auto partition = des_partition(r, n, limits);
    return partition.combine(des_class_coefficients(partition, structure_poly_coefficients(n, x)));
}

bool verify_phi_identity(int r, int n, const std::vector<std::pair<Rational, Rational>>& pairs, const Limits& limits,
                         Multiplication mode, unsigned jobs) {
    const auto partition = des_partition(r, n, limits);
    auto phi = [&](const Rational& x) {
        return partition.combine(des_class_coefficients(partition, structure_poly_coefficients(n, x)));
    };
    std::optional<ClosedPartition> closed;
    if (mode == Multiplication::collapsed) {
        auto report = verify_closure(partition, limits, jobs);
        if (!report.closed()) return false;
        closed = std::move(report.closed_partition);
    }
    for (const auto& [x, y] : pairs) {
        const auto left = phi(x);
        const auto right = phi(y);
        const auto product =
            closed ? multiply_in_span(*closed, left, right) : algebra_multiply(left, right, limits, jobs);
        if (product != phi(Rational(r) * x * y + x + y)) return false;
    }
    return true;
}

BigInt IdempotentTable::common_denominator() const {
    BigInt out = 1;
    for (const auto& row : alpha) {
        for (const auto& value : row) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), value.get_den_mpz_t());
    }
    return out;
}

IdempotentTable eulerian_idempotent_table(int r, int n) {
    if (r < 1 || n < 0) throw std::invalid_argument("idempotents need r >= 1 and n >= 0");
    IdempotentTable table;
    table.r = r;
    table.n = n;
    table.alpha.assign(static_cast<std::size_t>(n) + 1, std::vector<Rational>(static_cast<std::size_t>(n) + 1));
    const Rational slope(1, r);
    for (int d = 0; d <= n; ++d) {
        const auto p = RationalPolynomial::binomial_in(slope, Rational(n - d) - slope, static_cast<unsigned long>(n));
        for (int i = 0; i <= n; ++i) {
            table.alpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] =
                p.coefficient(static_cast<std::size_t>(i));
        }
    }
    return table;
}

std::vector<GroupAlgebraElement> eulerian_idempotents(int r, int n, const Limits& limits) {
    const auto table = eulerian_idempotent_table(r, n);
    const auto partition = des_partition(r, n, limits);
    std::vector<GroupAlgebraElement> out;
    for (const auto& row : table.alpha) out.push_back(partition.combine(des_class_coefficients(partition, row)));
    return out;
}

std::string render_idempotent(const IdempotentTable& table, std::size_t i) {
    const BigInt denominator = table.common_denominator();
    std::string out = "c_" + std::to_string(i) + " = ";
    if (denominator != 1) out += "1/" + to_string(denominator) + " ";
    out += "(";
    bool first = true;
    for (std::size_t d = 0; d < table.alpha[i].size(); ++d) {
        const Rational scaled = table.alpha[i][d] * Rational(denominator);
        const BigInt numerator = scaled.get_num();
        if (numerator == 0) continue;
        if (first) {
            if (numerator < 0) out += "-";
        } else {
            out += numerator < 0 ? " - " : " + ";
        }
        const BigInt magnitude = abs(numerator);
        if (magnitude != 1) out += to_string(magnitude) + " ";
        out += "C_" + std::to_string(d);
        first = false;
    }
    if (first) out += "0";
    return out + ")";
}

std::vector<std::vector<std::uint64_t>> descent_pair_counts(const ColoredPermutation& pi, const Limits& limits) {
    const auto size = static_cast<std::size_t>(pi.n()) + 1;
    std::vector<std::vector<std::uint64_t>> counts(size, std::vector<std::uint64_t>(size, 0));
    for_each_element(pi.r(), pi.n(), [&](const ColoredPermutation& sigma) {
        const auto tau = compose(inverse(sigma), pi);
        ++counts[static_cast<std::size_t>(des(sigma))][static_cast<std::size_t>(des(tau))];
    }, limits);
    return counts;
}

std::vector<VariantScanEntry> scan_boundary_variants(int r, int n, const Limits& limits, unsigned jobs) {
    const auto standard = des_partition(r, n, limits);
    std::vector<VariantScanEntry> out;
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            const auto partition = variant_des_partition(r, n, a, b, limits);
            const auto report = verify_closure(partition, limits, jobs);
            VariantScanEntry entry;
            entry.a = a;
            entry.b = b;
            entry.closed = report.closed();
            entry.same_as_standard = partition.same_partition_as(standard);
            entry.class_count = partition.class_count();
            if (const auto* failure = report.first_failure()) {
                entry.witness = failure->witness;
                entry.witness_left = failure->left;
                entry.witness_right = failure->right;
            }
            out.push_back(std::move(entry));
        }
    }
    return out;
}

}  // namespace coloreul
