#include "coloreul/ppartition.hpp"

#include <functional>
#include <stdexcept>

namespace coloreul {

namespace {

void check_j(int j) {
    if (j < 0) throw std::invalid_argument("j must be nonnegative");
}

}  // namespace

BigInt count_ppartitions_bruteforce(const ColoredPoset& poset, int j, const Limits& limits) {
    check_j(j);
    const int r = poset.r();
    const auto& elements = poset.elements();
    const std::size_t m = elements.size();
    const long width = static_cast<long>(j) + 1;
    const long codes = static_cast<long>(r) * width;

    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < m; ++i) {
        if (!elements[i].is_zero()) free.push_back(i);
    }
    BigInt space = power(BigInt(codes), free.size());
    if (space > BigInt(std::to_string(limits.max_bruteforce_maps))) {
        throw CapExceeded("brute-force map count " + to_string(space) + " exceeds cap " +
                          std::to_string(limits.max_bruteforce_maps));
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t hi = 0; hi < m; ++hi) {
        for (std::size_t lo = 0; lo < m; ++lo) {
            if ((poset.predecessors(hi) >> lo) & 1u) pairs.emplace_back(lo, hi);
        }
    }

    // Condition (i): zero letters are pinned to (k, 0).
    // A value (k, x) is encoded as k*(j+1) + x, which preserves the order.
    std::vector<long> code(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (elements[i].is_zero()) code[i] = elements[i].color * width;
    }

    auto satisfies = [&]() {
        for (std::size_t idx : free) {
            const long block = code[idx] / width;
            const long level = code[idx] % width;
            if (level == j && elements[idx].color != block) return false;  // (iv)
        }
        for (const auto& [lo, hi] : pairs) {
            if (code[lo] > code[hi]) return false;  // (ii)
            const long block = code[lo] / width;
            if (code[lo] == code[hi]) {
                // Same value, so same block: (iii) demands a strict inequality
                // whenever the shifted letters are out of order.
                const auto shifted_lo = shift_color(elements[lo], static_cast<int>(-block), r);
                const auto shifted_hi = shift_color(elements[hi], static_cast<int>(-block), r);
                if (shifted_lo > shifted_hi) return false;
            }
        }
        return true;
    };

    unsigned long count = 0;
    std::function<void(std::size_t)> assign = [&](std::size_t pos) {
        if (pos == free.size()) {
            if (satisfies()) ++count;
            return;
        }
        for (long c = 0; c < codes; ++c) {
            code[free[pos]] = c;
            assign(pos + 1);
        }
    };
    assign(0);
    return BigInt(count);
}

BigInt omega_word(std::span<const ColoredLetter> word, int j) {
    check_j(j);
    const long n = static_cast<long>(word.size());
    return binomial(static_cast<long>(j) + n - descent_profile(word).des, static_cast<unsigned long>(n));
}

BigInt omega_pi(const ColoredPermutation& pi, int j) { return omega_word(pi.letters(), j); }

BigInt omega_via_extensions(const ColoredPoset& poset, int j, const Limits& limits) {
    check_j(j);
    BigInt total = 0;
    for (const auto& word : colored_linear_extension_words(poset, limits)) total += omega_word(word, j);
    return total;
}

BigInt omega_floating_word(int r, std::span<const ColoredLetter> word, int j) {
    check_j(j);
    const long n = static_cast<long>(word.size());
    return binomial(static_cast<long>(r) * j + n - descent_profile(word).intdes, static_cast<unsigned long>(n));
}

BigInt omega_floating_chain(const ColoredPermutation& pi, int j) { return omega_floating_word(pi.r(), pi.letters(), j); }

TruncatedSeries eulerian_polynomial(int r, int n, const Limits& limits) {
    TruncatedSeries series(static_cast<std::size_t>(n));
    for_each_element(r, n, [&](const ColoredPermutation& pi) { series[static_cast<std::size_t>(des(pi))] += 1; },
                     limits);
    return series;
}

SeriesComparison steingrimsson_sides(int r, int n, int max_j, const Limits& limits) {
    check_j(max_j);
    const auto order = static_cast<std::size_t>(max_j);
    TruncatedSeries direct(order);
    for (std::size_t j = 0; j <= order; ++j) {
        direct[j] = power(BigInt(static_cast<long>(r) * static_cast<long>(j) + 1), static_cast<unsigned long>(n));
    }
    const auto numerator = eulerian_polynomial(r, n, limits).truncated(order);
    return {direct, numerator.divided_by_one_minus_t(static_cast<unsigned long>(n) + 1)};
}

bool verify_steingrimsson(int r, int n, int max_j, const Limits& limits) {
    return steingrimsson_sides(r, n, max_j, limits).equal();
}

SeriesComparison order_series_sides(const ColoredPoset& poset, int max_j, const Limits& limits) {
    check_j(max_j);
    const auto order = static_cast<std::size_t>(max_j);
    TruncatedSeries direct(order);
    for (std::size_t j = 0; j <= order; ++j) {
        direct[j] = count_ppartitions_bruteforce(poset, static_cast<int>(j), limits);
    }
    const std::size_t letters = poset.nonzero_elements().size();
    TruncatedSeries numerator(std::max(order, letters));
    for (const auto& word : colored_linear_extension_words(poset, limits)) {
        numerator[static_cast<std::size_t>(descent_profile(word).des)] += 1;
    }
    return {direct, numerator.truncated(order).divided_by_one_minus_t(letters + 1)};
}

BigInt barred_zigzag_count(PositionSet descents, const ColoredPermutation& pi, int j, int k, const Limits& limits) {
    check_j(j);
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    const int n = pi.n();
    // With one color no tau has a descent at n, so CL(Z(I,pi)) is empty.
    if (pi.r() == 1 && n > 0 && descents.contains(n)) return 0;
    BigInt total = 0;
    for (const auto& sigma : colored_linear_extensions(zigzag_poset(descents, pi), limits)) {
        const auto tau = compose(inverse(sigma), pi);
        total += omega_pi(sigma, j) * binomial(static_cast<long>(k) + n - des(tau), static_cast<unsigned long>(n));
    }
    return total;
}

std::vector<BarPlacement> barred_chain_placements(PositionSet descents, int n, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    std::vector<int> spaces{0};
    for (int i : descents.elements()) {
        if (i < 1 || i > n) throw std::invalid_argument("descent position outside [n]");
        spaces.push_back(i);
    }
    std::vector<BarPlacement> out;
    BarPlacement bars(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(std::size_t, int)> place = [&](std::size_t slot, int remaining) {
        if (slot == spaces.size()) {
            if (remaining == 0) out.push_back(bars);
            return;
        }
        const int minimum = spaces[slot] == 0 ? 0 : 1;
        for (int count = minimum; count <= remaining; ++count) {
            bars[static_cast<std::size_t>(spaces[slot])] = count;
            place(slot + 1, remaining - count);
        }
        bars[static_cast<std::size_t>(spaces[slot])] = 0;
    };
    place(0, k);
    return out;
}

std::vector<ColoredWord> compartments(const ColoredPermutation& pi, const BarPlacement& bars) {
    int k = 0;
    for (int b : bars) k += b;
    std::vector<ColoredWord> parts(static_cast<std::size_t>(k) + 1);
    std::size_t current = static_cast<std::size_t>(bars[0]);
    for (int i = 1; i <= pi.n(); ++i) {
        parts[current].push_back(pi(i));
        current += static_cast<std::size_t>(bars[static_cast<std::size_t>(i)]);
    }
    return parts;
}

BigInt compartment_product(const ColoredPermutation& pi, const std::vector<ColoredWord>& parts, int j) {
    BigInt product = 1;
    for (std::size_t c = 0; c + 1 < parts.size(); ++c) {
        if (!parts[c].empty()) product *= omega_floating_word(pi.r(), parts[c], j);
    }
    product *= omega_word(parts.back(), j);
    return product;
}

BigInt barred_chain_sum(const ColoredPermutation& pi, int j, int k) {
    check_j(j);
    const int n = pi.n();
    BigInt total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const PositionSet descents(mask << 1);
        for (const auto& bars : barred_chain_placements(descents, n, k)) {
            total += compartment_product(pi, compartments(pi, bars), j);
        }
    }
    return total;
}

BigInt barred_chain_total(const ColoredPermutation& pi, int j, int k) {
    const BigInt total = barred_chain_sum(pi, j, k);
    const long r = pi.r();
    const long n = pi.n();
    const BigInt expected = binomial(r * j * k + j + k + n - des(pi), static_cast<unsigned long>(n));
    if (total != expected) {
        throw VerificationError("barred chain total " + to_string(total) + " != " + to_string(expected) + " for pi=" +
                                to_string(pi) + ", j=" + std::to_string(j) + ", k=" + std::to_string(k));
    }
    return total;
}

}  // namespace coloreul
