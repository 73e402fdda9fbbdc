#pragma once

// Group algebra Q[G_{r,n}] with exact rational coefficients, keyed by the
// canonical rank of each group element.

#include <cstdint>
#include <map>
#include <vector>

#include "coloreul/binomial.hpp"
#include "coloreul/group.hpp"
#include "coloreul/limits.hpp"

namespace coloreul {

class GroupAlgebraElement {
public:
    GroupAlgebraElement(int r, int n);

    static GroupAlgebraElement unit(int r, int n);
    static GroupAlgebraElement basis(const ColoredPermutation& pi, const Rational& coefficient = 1);

    int r() const { return r_; }
    int n() const { return n_; }
    /// Nonzero coefficients ordered by canonical rank.
    const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const ColoredPermutation& pi) const;
    Rational coefficient_at(std::uint64_t index) const;
    /// Adds `value` to the coefficient at `index`, dropping it if it cancels.
    void accumulate(std::uint64_t index, const Rational& value);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const Rational& q, const GroupAlgebraElement& a);
    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    void check_same_group(const GroupAlgebraElement& other) const;

    int r_;
    int n_;
    std::map<std::uint64_t, Rational> terms_;
};

GroupAlgebraElement algebra_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement algebra_scale(const GroupAlgebraElement& a, const Rational& q);

/// Convolution: (AB)[pi] = sum over sigma in supp(A) of A[sigma] B[sigma^-1 pi].
/// Throws CapExceeded when |supp A| * |supp B| exceeds limits.max_product_terms.
GroupAlgebraElement algebra_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                                     const Limits& limits = {}, unsigned jobs = 1);

std::string to_string(const GroupAlgebraElement& a);

}  // namespace coloreul
