#pragma once

// Colored P-partitions with parts in [0,j]_(r): a brute-force counter that
// checks the defining conditions directly, and the closed forms it is
// compared against.

#include <optional>
#include <vector>

#include "coloreul/binomial.hpp"
#include "coloreul/group.hpp"
#include "coloreul/limits.hpp"
#include "coloreul/poset.hpp"

namespace coloreul {

/// A counted value together with the parameters that produced it.
struct OrderPolyValue {
    BigInt count;
    int j = 0;
    std::optional<int> k;
};

/// Counts maps f : P -> [0,r-1] x [0,j] (ordered color first) such that
///   (i)   f(0_k) = (k, 0);
///   (ii)  a < b implies f(a) <= f(b);
///   (iii) if f(a), f(b) lie in block k, a < b and a shifted down by k
///         exceeds b shifted down by k, then f(a) < f(b);
///   (iv)  f(a) = (k, j) implies color(a) = k.
/// Throws CapExceeded when (r(j+1))^#nonzero exceeds the brute-force cap.
BigInt count_ppartitions_bruteforce(const ColoredPoset& poset, int j, const Limits& limits = {});

/// C(j + n - des, n): the count for the chain poset of pi.
BigInt omega_pi(const ColoredPermutation& pi, int j);
/// Same count for any word of distinct letters (values need not be 1..n).
BigInt omega_word(std::span<const ColoredLetter> word, int j);

/// Sum of omega_pi over CL(P), with multiplicity.
BigInt omega_via_extensions(const ColoredPoset& poset, int j, const Limits& limits = {});

/// C(rj + n - intdes, n): the count for pi's chain floating beside the zero chain.
BigInt omega_floating_chain(const ColoredPermutation& pi, int j);
BigInt omega_floating_word(int r, std::span<const ColoredLetter> word, int j);

/// Coefficient of t^d is #{pi in G_{r,n} : des(pi) = d}.
TruncatedSeries eulerian_polynomial(int r, int n, const Limits& limits = {});

/// Both sides of sum_j (rj+1)^n t^j = E(t) / (1-t)^{n+1}, truncated at t^J.
struct SeriesComparison {
    TruncatedSeries direct;
    TruncatedSeries via_descents;
    bool equal() const { return direct == via_descents; }
};
SeriesComparison steingrimsson_sides(int r, int n, int max_j, const Limits& limits = {});
bool verify_steingrimsson(int r, int n, int max_j, const Limits& limits = {});

/// sum_{j <= J} Omega_P(j) t^j by brute force, against
/// (sum_{pi in CL(P)} t^des(pi)) / (1-t)^{l+1} with l = #nonzero elements.
SeriesComparison order_series_sides(const ColoredPoset& poset, int max_j, const Limits& limits = {});

/// Omega_{Z(I,pi)}(j,k): sum over sigma in CL(Z(I,pi)) of
/// Omega_sigma(j) * C(k + n - des(sigma^-1 pi), n).
BigInt barred_zigzag_count(PositionSet descents, const ColoredPermutation& pi, int j, int k,
                           const Limits& limits = {});

/// Bar counts for one barred chain poset: entry 0 is the left end, entry i
/// (1 <= i <= n) the space right of pi(i).
using BarPlacement = std::vector<int>;

/// All placements of k bars on C(I,pi): at least one bar in each space of I,
/// any number at the left end, none elsewhere.
std::vector<BarPlacement> barred_chain_placements(PositionSet descents, int n, int k);

/// Splits pi into the compartments of a placement; the last compartment is the
/// one sharing its chain with 0_1.
std::vector<ColoredWord> compartments(const ColoredPermutation& pi, const BarPlacement& bars);

/// Omega of C(I,pi) at j as a product of compartment closed forms.
BigInt compartment_product(const ColoredPermutation& pi, const std::vector<ColoredWord>& parts, int j);

/// Sum over I and every barred C(I,pi) with k bars of the compartment products.
BigInt barred_chain_sum(const ColoredPermutation& pi, int j, int k);

/// barred_chain_sum, checked against C(rjk + j + k + n - des(pi), n).
/// Throws VerificationError naming (pi, j, k) on mismatch.
BigInt barred_chain_total(const ColoredPermutation& pi, int j, int k);

}  // namespace coloreul
