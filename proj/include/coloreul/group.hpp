#pragma once

// Colored permutation groups G_{r,n} = Z_r wr S_n in one-line notation,
// together with their descent statistics.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coloreul/limits.hpp"

namespace coloreul {

/// A letter v_c. Value 0 is reserved for the zero letters 0_1 ... 0_{r-1}.
struct ColoredLetter {
    int value = 0;
    int color = 0;

    friend constexpr bool operator==(const ColoredLetter&, const ColoredLetter&) = default;

    // Lexicographic on [0,n]_(r): color first, then value.
    friend constexpr std::strong_ordering operator<=>(const ColoredLetter& a,
                                                      const ColoredLetter& b) {
        if (auto c = a.color <=> b.color; c != 0) return c;
        return a.value <=> b.value;
    }

    constexpr bool is_zero() const { return value == 0; }
};

std::string to_string(const ColoredLetter& letter);
std::ostream& operator<<(std::ostream& os, const ColoredLetter& letter);

/// Parses `v_c`, e.g. "3_1" or "0_2".
ColoredLetter parse_letter(std::string_view token);

using ColoredWord = std::vector<ColoredLetter>;

std::string to_string(const ColoredWord& word);

/// Letter with its color shifted by `delta` modulo r.
ColoredLetter shift_color(ColoredLetter letter, int delta, int r);

/// Subset of {0, 1, ..., 63} stored as a bitmask; positions are 1-based for
/// ordinary descents and position 0 only appears for the boundary variants.
class PositionSet {
public:
    constexpr PositionSet() = default;
    constexpr explicit PositionSet(std::uint64_t bits) : bits_(bits) {}
    static PositionSet of(std::initializer_list<int> positions);

    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    void insert(int i) { bits_ |= std::uint64_t{1} << i; }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }
    std::vector<int> elements() const;
    bool is_subset_of(PositionSet other) const { return (bits_ & ~other.bits_) == 0; }
    PositionSet intersect(PositionSet other) const { return PositionSet(bits_ & other.bits_); }

    friend constexpr bool operator==(PositionSet, PositionSet) = default;
    friend constexpr auto operator<=>(PositionSet, PositionSet) = default;

private:
    std::uint64_t bits_ = 0;
};

std::string to_string(PositionSet set);

/// Element of G_{r,n}: the images pi(1_0) ... pi(n_0).
class ColoredPermutation {
public:
    ColoredPermutation() = default;
    /// Validates that |letters| is a permutation of 1..n and colors lie in [0, r).
    ColoredPermutation(int r, ColoredWord letters);

    /// Parses space-separated `v_c` tokens; empty text is the empty permutation.
    static ColoredPermutation parse(int r, std::string_view text);

    int r() const { return r_; }
    int n() const { return static_cast<int>(letters_.size()); }
    const ColoredWord& letters() const { return letters_; }
    /// 1-based access, matching one-line notation pi(i).
    const ColoredLetter& operator()(int i) const { return letters_[static_cast<std::size_t>(i - 1)]; }

    std::vector<int> underlying() const;

    friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

private:
    int r_ = 1;
    ColoredWord letters_;
};

std::string to_string(const ColoredPermutation& pi);
std::ostream& operator<<(std::ostream& os, const ColoredPermutation& pi);

ColoredPermutation identity(int r, int n);

/// sigma * pi: if pi(i) = j_k and sigma(j) = l_p then (sigma pi)(i) = l_{k+p mod r}.
ColoredPermutation compose(const ColoredPermutation& sigma, const ColoredPermutation& pi);

ColoredPermutation inverse(const ColoredPermutation& pi);

/// r^n * n!, saturating at UINT64_MAX.
std::uint64_t group_order(int r, int n);

/// Throws CapExceeded when |G_{r,n}| exceeds limits.max_group_size.
void check_group_size(int r, int n, const Limits& limits);

/// Position in the canonical enumeration: lexicographic rank of |pi| times
/// r^n plus the color vector read as a base-r number (position n least
/// significant).
std::uint64_t rank(const ColoredPermutation& pi);
ColoredPermutation unrank(int r, int n, std::uint64_t index);

/// Calls `visit` on every element in canonical order.
void for_each_element(int r, int n, const std::function<void(const ColoredPermutation&)>& visit,
                      const Limits& limits = {});
std::vector<ColoredPermutation> enumerate_group(int r, int n, const Limits& limits = {});

struct DescentProfile {
    PositionSet descent_set;
    int des = 0;
    PositionSet internal_descent_set;
    int intdes = 0;

    friend bool operator==(const DescentProfile&, const DescentProfile&) = default;
};

/// Descents of a word on distinct letters with the sentinel 0_1 after the
/// last letter. Relabeling values order-preservingly does not change it.
DescentProfile descent_profile(std::span<const ColoredLetter> word);
DescentProfile descent_profile(const ColoredPermutation& pi);
int des(const ColoredPermutation& pi);
int intdes(const ColoredPermutation& pi);

/// Boundary variant with pi(0) = 0_a and pi(n+1) = 0_b; may contain 0 and n.
PositionSet descent_set_variant(const ColoredPermutation& pi, int a, int b);

struct CompositionPart {
    int length = 0;
    int color = 0;
    friend constexpr bool operator==(const CompositionPart&, const CompositionPart&) = default;
    friend constexpr auto operator<=>(const CompositionPart&, const CompositionPart&) = default;
};

/// Colored composition: maximal increasing monochromatic runs.
struct ColoredComposition {
    std::vector<CompositionPart> parts;
    int total() const;
    friend bool operator==(const ColoredComposition&, const ColoredComposition&) = default;
    friend auto operator<=>(const ColoredComposition&, const ColoredComposition&) = default;
};

std::string to_string(const ColoredComposition& c);

/// Mantaci-Reutenauer class key: cut after i when the color changes or a
/// same-color value descent occurs.
ColoredComposition mr_key(const ColoredPermutation& pi);

/// Relabels the values of a word of distinct nonzero letters to 1..m,
/// preserving their relative order.
ColoredPermutation standardize(int r, std::span<const ColoredLetter> word);

}  // namespace coloreul
