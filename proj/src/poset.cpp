#include "coloreul/poset.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coloreul {

namespace {

std::vector<ColoredLetter> zero_chain(int r) {
    std::vector<ColoredLetter> out;
    for (int k = 1; k < r; ++k) out.push_back({0, k});
    return out;
}

void check_letter(const ColoredLetter& letter, int r, int n) {
    const bool ok = letter.is_zero() ? (letter.color >= 1 && letter.color < r)
                                     : (letter.value >= 1 && letter.value <= n && letter.color >= 0 && letter.color < r);
    if (!ok) {
        throw std::invalid_argument("illegal letter " + to_string(letter) + " for r=" + std::to_string(r) +
                                    ", n=" + std::to_string(n));
    }
}

// Draws from [0, bound) using only the engine's standardized output.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

ColoredPoset ColoredPoset::make(int r, int n, std::vector<ColoredLetter> elements, std::vector<Relation> covers) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");

    std::set<int> values;
    std::set<ColoredLetter> letters;
    for (const auto& letter : elements) {
        check_letter(letter, r, n);
        if (letter.is_zero()) {
            letters.insert(letter);
            continue;
        }
        if (!values.insert(letter.value).second) {
            throw std::invalid_argument("repeated absolute value " + std::to_string(letter.value));
        }
        letters.insert(letter);
    }
    for (const auto& zero : zero_chain(r)) letters.insert(zero);
    if (letters.size() > static_cast<std::size_t>(kMaxElements)) {
        throw std::invalid_argument("colored posets are limited to 64 elements");
    }

    ColoredPoset poset;
    poset.r_ = r;
    poset.n_ = n;
    poset.elements_.assign(letters.begin(), letters.end());
    poset.below_.assign(poset.elements_.size(), 0);

    for (const auto& [low, high] : covers) {
        if (!poset.index_of(low) || !poset.index_of(high)) {
            throw std::invalid_argument("relation " + to_string(low) + " < " + to_string(high) +
                                        " mentions an unlisted letter");
        }
    }
    for (int k = 1; k + 1 < r; ++k) covers.push_back({{0, k}, {0, k + 1}});
    poset.covers_ = covers;

    for (const auto& [low, high] : covers) {
        poset.below_[*poset.index_of(high)] |= std::uint64_t{1} << *poset.index_of(low);
    }
    // Warshall closure on predecessor masks.
    const std::size_t m = poset.elements_.size();
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            if ((poset.below_[i] >> k) & 1u) poset.below_[i] |= poset.below_[k];
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if ((poset.below_[i] >> i) & 1u) {
            throw std::invalid_argument("cycle through " + to_string(poset.elements_[i]));
        }
    }
    return poset;
}

std::vector<ColoredLetter> ColoredPoset::nonzero_elements() const {
    std::vector<ColoredLetter> out;
    for (const auto& letter : elements_) {
        if (!letter.is_zero()) out.push_back(letter);
    }
    return out;
}

std::vector<Relation> ColoredPoset::relations() const {
    std::vector<Relation> out;
    for (std::size_t hi = 0; hi < elements_.size(); ++hi) {
        for (std::size_t lo = 0; lo < elements_.size(); ++lo) {
            if ((below_[hi] >> lo) & 1u) out.push_back({elements_[lo], elements_[hi]});
        }
    }
    return out;
}

std::optional<std::size_t> ColoredPoset::index_of(ColoredLetter letter) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), letter);
    if (it == elements_.end() || *it != letter) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

bool ColoredPoset::less(ColoredLetter a, ColoredLetter b) const {
    auto ia = index_of(a);
    auto ib = index_of(b);
    return ia && ib && ((below_[*ib] >> *ia) & 1u);
}

std::string ColoredPoset::dump() const {
    std::ostringstream os;
    os << "r=" << r_ << " n=" << n_ << "\n";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        os << to_string(elements_[i]) << " <";
        for (const auto& [low, high] : covers_) {
            if (low == elements_[i]) os << ' ' << to_string(high);
        }
        os << "\n";
    }
    return os.str();
}

std::vector<ColoredWord> linear_extensions(const ColoredPoset& poset, const Limits& limits) {
    std::vector<ColoredWord> out;
    const auto& elements = poset.elements();
    const std::size_t m = elements.size();
    ColoredWord prefix;
    prefix.reserve(m);

    std::function<void(std::uint64_t)> extend = [&](std::uint64_t placed) {
        if (prefix.size() == m) {
            if (out.size() >= limits.max_extensions) {
                throw CapExceeded("linear extension count exceeds cap " + std::to_string(limits.max_extensions));
            }
            out.push_back(prefix);
            return;
        }
        // Minimal remaining elements, tried in increasing letter order.
        for (std::size_t i = 0; i < m; ++i) {
            if ((placed >> i) & 1u) continue;
            if ((poset.predecessors(i) & ~placed) != 0) continue;
            prefix.push_back(elements[i]);
            extend(placed | (std::uint64_t{1} << i));
            prefix.pop_back();
        }
    };
    extend(0);
    return out;
}

std::vector<ColoredWord> decompose_anchored(const ColoredWord& word, int r) {
    std::vector<ColoredWord> parts(static_cast<std::size_t>(r));
    int block = 0;
    for (const auto& letter : word) {
        if (letter.is_zero()) {
            if (letter.color != block + 1) {
                throw std::invalid_argument("zero letters of " + to_string(word) + " are not 0_1 ... 0_{r-1} in order");
            }
            ++block;
            continue;
        }
        parts[static_cast<std::size_t>(block)].push_back(shift_color(letter, -block, r));
    }
    if (block != r - 1) {
        throw std::invalid_argument("anchored word " + to_string(word) + " lacks some zero letters");
    }
    return parts;
}

std::vector<ColoredWord> shuffles(const std::vector<ColoredWord>& words, const Limits& limits) {
    std::vector<ColoredWord> out;
    std::size_t total = 0;
    for (const auto& w : words) total += w.size();
    std::vector<std::size_t> cursor(words.size(), 0);
    ColoredWord current;
    current.reserve(total);

    std::function<void()> step = [&] {
        if (current.size() == total) {
            if (out.size() >= limits.max_extensions) {
                throw CapExceeded("shuffle count exceeds cap " + std::to_string(limits.max_extensions));
            }
            out.push_back(current);
            return;
        }
        // Visit candidate heads in increasing letter order so output is lexicographic.
        std::vector<std::size_t> order;
        for (std::size_t w = 0; w < words.size(); ++w) {
            if (cursor[w] < words[w].size()) order.push_back(w);
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return words[a][cursor[a]] < words[b][cursor[b]];
        });
        for (std::size_t w : order) {
            current.push_back(words[w][cursor[w]]);
            ++cursor[w];
            step();
            --cursor[w];
            current.pop_back();
        }
    };
    step();
    return out;
}

std::vector<ColoredWord> colored_linear_extension_words(const ColoredPoset& poset, const Limits& limits) {
    std::vector<ColoredWord> out;
    for (const auto& word : linear_extensions(poset, limits)) {
        auto batch = shuffles(decompose_anchored(word, poset.r()), limits);
        if (out.size() + batch.size() > limits.max_extensions) {
            throw CapExceeded("colored linear extension count exceeds cap " + std::to_string(limits.max_extensions));
        }
        out.insert(out.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    }
    return out;
}

std::vector<ColoredPermutation> colored_linear_extensions(const ColoredPoset& poset, const Limits& limits) {
    std::vector<ColoredPermutation> out;
    for (const auto& word : colored_linear_extension_words(poset, limits)) {
        out.push_back(standardize(poset.r(), word));
    }
    return out;
}

namespace {

ColoredPoset successive_poset(PositionSet reversed, PositionSet dropped, const ColoredPermutation& pi) {
    const int n = pi.n();
    const int r = pi.r();
    std::vector<Relation> covers;
    for (int i = 1; i <= n; ++i) {
        if (dropped.contains(i)) continue;
        const ColoredLetter here = pi(i);
        if (i == n && r == 1) {
            if (reversed.contains(n)) {
                throw std::invalid_argument("r = 1 has no letter 0_1 to place below pi(n)");
            }
            continue;
        }
        const ColoredLetter next = i < n ? pi(i + 1) : ColoredLetter{0, 1};
        if (reversed.contains(i)) {
            covers.push_back({next, here});
        } else {
            covers.push_back({here, next});
        }
    }
    return ColoredPoset::make(r, n, pi.letters(), std::move(covers));
}

void check_subset(PositionSet set, int n) {
    if (set.contains(0) || (n < 63 && (set.bits() >> (n + 1)) != 0)) {
        throw std::invalid_argument("position set " + to_string(set) + " is not a subset of [" + std::to_string(n) + "]");
    }
}

}  // namespace

ColoredPoset zigzag_poset(PositionSet descents, const ColoredPermutation& pi) {
    check_subset(descents, pi.n());
    return successive_poset(descents, PositionSet{}, pi);
}

ColoredPoset chain_poset(PositionSet descents, const ColoredPermutation& pi) {
    check_subset(descents, pi.n());
    return successive_poset(PositionSet{}, descents, pi);
}

ColoredPoset anchored_chain_poset(int r, const ColoredWord& word) {
    std::vector<Relation> covers;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) covers.push_back({word[i], word[i + 1]});
    if (!word.empty() && r > 1) covers.push_back({word.back(), {0, 1}});
    int n = 0;
    for (const auto& letter : word) n = std::max(n, letter.value);
    return ColoredPoset::make(r, n, word, std::move(covers));
}

ColoredPoset anchored_chain_poset(const ColoredPermutation& pi) { return anchored_chain_poset(pi.r(), pi.letters()); }

ColoredPoset floating_chain_poset(int r, const ColoredWord& word) {
    std::vector<Relation> covers;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) covers.push_back({word[i], word[i + 1]});
    int n = 0;
    for (const auto& letter : word) n = std::max(n, letter.value);
    return ColoredPoset::make(r, n, word, std::move(covers));
}

ColoredPoset floating_chain_poset(const ColoredPermutation& pi) { return floating_chain_poset(pi.r(), pi.letters()); }

ColoredPoset antichain_poset(int r, int n) { return ColoredPoset::make(r, n, identity(r, n).letters(), {}); }

ColoredPoset disjoint_union(const ColoredPoset& a, const ColoredPoset& b) {
    if (a.r() != b.r()) throw std::invalid_argument("disjoint_union: posets have different r");
    std::vector<ColoredLetter> elements = a.elements();
    const auto& more = b.elements();
    elements.insert(elements.end(), more.begin(), more.end());
    std::vector<Relation> covers = a.covers();
    const auto& more_covers = b.covers();
    covers.insert(covers.end(), more_covers.begin(), more_covers.end());
    // make() rejects overlapping absolute values and dedupes the zero chain.
    return ColoredPoset::make(a.r(), std::max(a.n(), b.n()), std::move(elements), std::move(covers));
}

ColoredPoset random_poset(std::mt19937_64& rng, int r, int size, int max_value, double edge_probability) {
    if (size > max_value) throw std::invalid_argument("random_poset: not enough distinct values");
    std::vector<int> pool(static_cast<std::size_t>(max_value));
    for (int v = 1; v <= max_value; ++v) pool[static_cast<std::size_t>(v - 1)] = v;
    std::vector<ColoredLetter> chosen;
    for (int i = 0; i < size; ++i) {
        const auto pick = static_cast<std::size_t>(draw(rng, pool.size()));
        chosen.push_back({pool[pick], static_cast<int>(draw(rng, static_cast<std::uint64_t>(r)))});
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    // Insert the nonzero letters one by one at random slots of the zero chain.
    std::vector<ColoredLetter> arrangement = zero_chain(r);
    for (const auto& letter : chosen) {
        const auto slot = static_cast<std::ptrdiff_t>(draw(rng, arrangement.size() + 1));
        arrangement.insert(arrangement.begin() + slot, letter);
    }
    std::vector<Relation> covers;
    for (std::size_t i = 0; i < arrangement.size(); ++i) {
        for (std::size_t k = i + 1; k < arrangement.size(); ++k) {
            if (arrangement[i].is_zero() && arrangement[k].is_zero()) continue;
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < edge_probability) covers.push_back({arrangement[i], arrangement[k]});
        }
    }
    int n = 0;
    for (const auto& letter : chosen) n = std::max(n, letter.value);
    return ColoredPoset::make(r, n, std::move(chosen), std::move(covers));
}

}  // namespace coloreul
