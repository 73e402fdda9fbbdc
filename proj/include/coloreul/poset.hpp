#pragma once

// Colored posets: strict partial orders on the zero letters 0_1 ... 0_{r-1}
// (always a chain) plus colored letters with distinct absolute values.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coloreul/group.hpp"
#include "coloreul/limits.hpp"

namespace coloreul {

using Relation = std::pair<ColoredLetter, ColoredLetter>;  // first < second

class ColoredPoset {
public:
    static constexpr int kMaxElements = 64;

    /// Adjoins the zero chain 0_1 < ... < 0_{r-1} and takes the transitive
    /// closure. Throws std::invalid_argument on an illegal letter, a repeated
    /// absolute value, a relation on an unlisted letter, or a cycle.
    static ColoredPoset make(int r, int n, std::vector<ColoredLetter> elements,
                             std::vector<Relation> covers);

    int r() const { return r_; }
    int n() const { return n_; }

    /// All elements, zero letters included, in increasing letter order.
    const std::vector<ColoredLetter>& elements() const { return elements_; }
    std::vector<ColoredLetter> nonzero_elements() const;
    std::size_t size() const { return elements_.size(); }

    /// Relations as supplied, plus the zero chain covers.
    const std::vector<Relation>& covers() const { return covers_; }
    /// Every pair of the strict order (transitive closure).
    std::vector<Relation> relations() const;

    std::optional<std::size_t> index_of(ColoredLetter letter) const;
    bool less(ColoredLetter a, ColoredLetter b) const;
    /// Bit i set when elements()[i] precedes elements()[index].
    std::uint64_t predecessors(std::size_t index) const { return below_[index]; }

    /// Plain-text adjacency dump, one line per element.
    std::string dump() const;

    friend bool operator==(const ColoredPoset& a, const ColoredPoset& b) {
        return a.r_ == b.r_ && a.elements_ == b.elements_ && a.below_ == b.below_;
    }

private:
    int r_ = 1;
    int n_ = 0;
    std::vector<ColoredLetter> elements_;
    std::vector<Relation> covers_;
    std::vector<std::uint64_t> below_;  // cached closure, one mask per element
};

/// Every anchored word on P's letters that respects the order, in
/// lexicographic order (letters compared color first).
std::vector<ColoredWord> linear_extensions(const ColoredPoset& poset, const Limits& limits = {});

/// Splits an anchored word at its zero letters into r subwords and shifts the
/// colors of subword i down by i (mod r).
std::vector<ColoredWord> decompose_anchored(const ColoredWord& word, int r);

/// All shuffles of the given words on disjoint letters, lexicographically.
std::vector<ColoredWord> shuffles(const std::vector<ColoredWord>& words, const Limits& limits = {});

/// CL(P) as raw words on P's own values, with multiplicity across extensions.
std::vector<ColoredWord> colored_linear_extension_words(const ColoredPoset& poset, const Limits& limits = {});

/// CL(P) with values relabeled to 1..m so every entry is a group element.
std::vector<ColoredPermutation> colored_linear_extensions(const ColoredPoset& poset, const Limits& limits = {});

/// pi(i) < pi(i+1) for i not in I and pi(i) > pi(i+1) for i in I, with
/// pi(n+1) = 0_1. For r = 1 there is no 0_1, so n in I is rejected.
ColoredPoset zigzag_poset(PositionSet descents, const ColoredPermutation& pi);

/// Only the relations pi(i) < pi(i+1) for i not in I, with pi(n+1) = 0_1.
ColoredPoset chain_poset(PositionSet descents, const ColoredPermutation& pi);

/// pi(1) < ... < pi(n) < 0_1 < ... < 0_{r-1}; pi is its only colored extension.
ColoredPoset anchored_chain_poset(const ColoredPermutation& pi);
ColoredPoset anchored_chain_poset(int r, const ColoredWord& word);

/// The chain pi(1) < ... < pi(n) disjoint from the zero chain.
ColoredPoset floating_chain_poset(const ColoredPermutation& pi);
ColoredPoset floating_chain_poset(int r, const ColoredWord& word);

/// Antichain on 1_0 ... n_0 next to the zero chain.
ColoredPoset antichain_poset(int r, int n);

/// Union of elements and relations; throws when absolute values overlap.
ColoredPoset disjoint_union(const ColoredPoset& a, const ColoredPoset& b);

/// Random poset: `size` distinct values drawn from [1, max_value] with random
/// colors, placed in a random order that keeps the zero chain in order; each
/// ordered pair of that arrangement becomes a relation with probability
/// `edge_probability`. Deterministic given the engine state.
ColoredPoset random_poset(std::mt19937_64& rng, int r, int size, int max_value, double edge_probability);

}  // namespace coloreul
