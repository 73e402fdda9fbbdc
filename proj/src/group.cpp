#include "coloreul/group.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coloreul {

namespace {

int parse_int(std::string_view s, std::string_view context) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("bad integer '" + std::string(s) + "' in " + std::string(context));
    }
    return value;
}

int mod(int a, int r) {
    int m = a % r;
    return m < 0 ? m + r : m;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f = saturating_mul(f, static_cast<std::uint64_t>(i));
    return f;
}

std::uint64_t power(std::uint64_t base, int e) {
    std::uint64_t p = 1;
    for (int i = 0; i < e; ++i) p = saturating_mul(p, base);
    return p;
}

}  // namespace

std::string to_string(const ColoredLetter& letter) {
    return std::to_string(letter.value) + "_" + std::to_string(letter.color);
}

std::ostream& operator<<(std::ostream& os, const ColoredLetter& letter) {
    return os << to_string(letter);
}

ColoredLetter parse_letter(std::string_view token) {
    auto sep = token.find('_');
    if (sep == std::string_view::npos) {
        throw std::invalid_argument("letter '" + std::string(token) + "' is not of the form v_c");
    }
    return ColoredLetter{parse_int(token.substr(0, sep), token), parse_int(token.substr(sep + 1), token)};
}

std::string to_string(const ColoredWord& word) {
    std::string out;
    for (const auto& letter : word) {
        if (!out.empty()) out += ' ';
        out += to_string(letter);
    }
    return out;
}

ColoredLetter shift_color(ColoredLetter letter, int delta, int r) {
    return ColoredLetter{letter.value, mod(letter.color + delta, r)};
}

PositionSet PositionSet::of(std::initializer_list<int> positions) {
    PositionSet s;
    for (int p : positions) s.insert(p);
    return s;
}

std::vector<int> PositionSet::elements() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

std::string to_string(PositionSet set) {
    std::string out = "{";
    bool first = true;
    for (int i : set.elements()) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

ColoredPermutation::ColoredPermutation(int r, ColoredWord letters) : r_(r), letters_(std::move(letters)) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    const int n = static_cast<int>(letters_.size());
    if (n > 62) throw std::invalid_argument("n must be at most 62");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& letter : letters_) {
        if (letter.value < 1 || letter.value > n) {
            throw std::invalid_argument("value out of range in " + to_string(letters_));
        }
        if (letter.color < 0 || letter.color >= r) {
            throw std::invalid_argument("color out of range in " + to_string(letters_));
        }
        if (seen[static_cast<std::size_t>(letter.value)]) {
            throw std::invalid_argument("repeated value in " + to_string(letters_));
        }
        seen[static_cast<std::size_t>(letter.value)] = true;
    }
}

ColoredPermutation ColoredPermutation::parse(int r, std::string_view text) {
    ColoredWord letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
        if (end > pos) letters.push_back(parse_letter(text.substr(pos, end - pos)));
        pos = end;
    }
    return ColoredPermutation(r, std::move(letters));
}

std::vector<int> ColoredPermutation::underlying() const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (const auto& letter : letters_) out.push_back(letter.value);
    return out;
}

std::string to_string(const ColoredPermutation& pi) { return to_string(pi.letters()); }

std::ostream& operator<<(std::ostream& os, const ColoredPermutation& pi) { return os << to_string(pi); }

ColoredPermutation identity(int r, int n) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    ColoredWord letters;
    for (int i = 1; i <= n; ++i) letters.push_back({i, 0});
    return ColoredPermutation(r, std::move(letters));
}

ColoredPermutation compose(const ColoredPermutation& sigma, const ColoredPermutation& pi) {
    if (sigma.r() != pi.r() || sigma.n() != pi.n()) {
        throw std::invalid_argument("compose: permutations belong to different groups");
    }
    const int r = pi.r();
    ColoredWord out;
    out.reserve(pi.letters().size());
    for (const auto& image : pi.letters()) {
        const ColoredLetter& outer = sigma(image.value);
        out.push_back({outer.value, (image.color + outer.color) % r});
    }
    return ColoredPermutation(r, std::move(out));
}

ColoredPermutation inverse(const ColoredPermutation& pi) {
    ColoredWord out(pi.letters().size());
    for (int i = 1; i <= pi.n(); ++i) {
        const auto& image = pi(i);
        out[static_cast<std::size_t>(image.value - 1)] = {i, mod(-image.color, pi.r())};
    }
    return ColoredPermutation(pi.r(), std::move(out));
}

std::uint64_t group_order(int r, int n) {
    return saturating_mul(power(static_cast<std::uint64_t>(r), n), factorial(n));
}

void check_group_size(int r, int n, const Limits& limits) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const auto order = group_order(r, n);
    if (order > limits.max_group_size) {
        throw CapExceeded("|G_{" + std::to_string(r) + "," + std::to_string(n) + "}| = " +
                          std::to_string(order) + " exceeds the group size cap " +
                          std::to_string(limits.max_group_size));
    }
}

std::uint64_t rank(const ColoredPermutation& pi) {
    const int n = pi.n();
    std::uint64_t perm_rank = 0;
    for (int i = 1; i <= n; ++i) {
        std::uint64_t smaller_after = 0;
        for (int k = i + 1; k <= n; ++k) {
            if (pi(k).value < pi(i).value) ++smaller_after;
        }
        perm_rank += smaller_after * factorial(n - i);
    }
    std::uint64_t color_rank = 0;
    for (int i = 1; i <= n; ++i) {
        color_rank = color_rank * static_cast<std::uint64_t>(pi.r()) + static_cast<std::uint64_t>(pi(i).color);
    }
    return perm_rank * power(static_cast<std::uint64_t>(pi.r()), n) + color_rank;
}

ColoredPermutation unrank(int r, int n, std::uint64_t index) {
    if (index >= group_order(r, n)) throw std::out_of_range("unrank: index outside the group");
    const std::uint64_t colorings = power(static_cast<std::uint64_t>(r), n);
    std::uint64_t perm_rank = index / colorings;
    std::uint64_t color_rank = index % colorings;

    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    ColoredWord letters(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::uint64_t block = factorial(n - 1 - i);
        const auto pick = static_cast<std::size_t>(perm_rank / block);
        perm_rank %= block;
        letters[static_cast<std::size_t>(i)].value = pool[pick];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    for (int i = n - 1; i >= 0; --i) {
        letters[static_cast<std::size_t>(i)].color = static_cast<int>(color_rank % static_cast<std::uint64_t>(r));
        color_rank /= static_cast<std::uint64_t>(r);
    }
    return ColoredPermutation(r, std::move(letters));
}

void for_each_element(int r, int n, const std::function<void(const ColoredPermutation&)>& visit,
                      const Limits& limits) {
    check_group_size(r, n, limits);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    do {
        std::fill(colors.begin(), colors.end(), 0);
        while (true) {
            ColoredWord letters(static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < letters.size(); ++i) letters[i] = {perm[i], colors[i]};
            visit(ColoredPermutation(r, std::move(letters)));
            // base-r increment, least significant digit at position n
            int pos = n - 1;
            while (pos >= 0 && colors[static_cast<std::size_t>(pos)] == r - 1) {
                colors[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++colors[static_cast<std::size_t>(pos)];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<ColoredPermutation> enumerate_group(int r, int n, const Limits& limits) {
    std::vector<ColoredPermutation> out;
    check_group_size(r, n, limits);
    out.reserve(static_cast<std::size_t>(group_order(r, n)));
    for_each_element(r, n, [&](const ColoredPermutation& pi) { out.push_back(pi); }, limits);
    return out;
}

DescentProfile descent_profile(std::span<const ColoredLetter> word) {
    DescentProfile profile;
    const int n = static_cast<int>(word.size());
    for (int i = 1; i < n; ++i) {
        if (word[static_cast<std::size_t>(i - 1)] > word[static_cast<std::size_t>(i)]) {
            profile.descent_set.insert(i);
            profile.internal_descent_set.insert(i);
        }
    }
    profile.intdes = profile.internal_descent_set.size();
    // pi(n) > 0_1 exactly when pi(n) has a nonzero color
    if (n > 0 && word.back().color != 0) profile.descent_set.insert(n);
    profile.des = profile.descent_set.size();
    return profile;
}

DescentProfile descent_profile(const ColoredPermutation& pi) { return descent_profile(pi.letters()); }

int des(const ColoredPermutation& pi) { return descent_profile(pi).des; }

int intdes(const ColoredPermutation& pi) { return descent_profile(pi).intdes; }

PositionSet descent_set_variant(const ColoredPermutation& pi, int a, int b) {
    if (a < 0 || a >= pi.r() || b < 0 || b >= pi.r()) {
        throw std::invalid_argument("boundary colors must lie in [0, r-1]");
    }
    const int n = pi.n();
    PositionSet out;
    if (n == 0) return out;
    if (ColoredLetter{0, a} > pi(1)) out.insert(0);
    for (int i = 1; i < n; ++i) {
        if (pi(i) > pi(i + 1)) out.insert(i);
    }
    if (pi(n) > ColoredLetter{0, b}) out.insert(n);
    return out;
}

int ColoredComposition::total() const {
    int sum = 0;
    for (const auto& part : parts) sum += part.length;
    return sum;
}

std::string to_string(const ColoredComposition& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(c.parts[i].length) + "," + std::to_string(c.parts[i].color) + ")";
    }
    return out + "]";
}

ColoredComposition mr_key(const ColoredPermutation& pi) {
    ColoredComposition key;
    for (int i = 1; i <= pi.n(); ++i) {
        const bool cut_before = i > 1 && (pi(i - 1).color != pi(i).color || pi(i - 1).value > pi(i).value);
        if (i == 1 || cut_before) {
            key.parts.push_back({1, pi(i).color});
        } else {
            ++key.parts.back().length;
        }
    }
    return key;
}

ColoredPermutation standardize(int r, std::span<const ColoredLetter> word) {
    std::vector<int> values;
    values.reserve(word.size());
    for (const auto& letter : word) values.push_back(letter.value);
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("standardize: repeated value in " + to_string(ColoredWord(word.begin(), word.end())));
    }
    ColoredWord out;
    out.reserve(word.size());
    for (const auto& letter : word) {
        if (letter.value < 1) throw std::invalid_argument("standardize: zero letter in word");
        const auto relabeled = std::lower_bound(sorted.begin(), sorted.end(), letter.value) - sorted.begin() + 1;
        out.push_back({static_cast<int>(relabeled), letter.color});
    }
    return ColoredPermutation(r, std::move(out));
}

}  // namespace coloreul
