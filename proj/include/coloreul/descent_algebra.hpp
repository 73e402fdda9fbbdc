#pragma once

// Class-sum subalgebras of Q[G_{r,n}]: descent-number classes, colored
// composition classes, closure checks with witnesses, the structure
// polynomial phi(x) and the orthogonal idempotents it yields.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coloreul/binomial.hpp"
#include "coloreul/group.hpp"
#include "coloreul/group_algebra.hpp"
#include "coloreul/limits.hpp"

namespace coloreul {

struct ClassInfo {
    std::string label;
    std::vector<int> key;
    std::uint64_t representative = 0;  // smallest rank in the class
    std::uint64_t size = 0;
};

/// Partition of G_{r,n} into nonempty classes, numbered by increasing key.
class ClassPartition {
public:
    using KeyFn = std::function<std::vector<int>(const ColoredPermutation&)>;
    using LabelFn = std::function<std::string(const ColoredPermutation&)>;

    static ClassPartition from_key(int r, int n, std::string name, const KeyFn& key, const LabelFn& label,
                                   const Limits& limits = {});

    int r() const { return r_; }
    int n() const { return n_; }
    const std::string& name() const { return name_; }
    const std::vector<ClassInfo>& classes() const { return classes_; }
    std::size_t class_count() const { return classes_.size(); }
    std::size_t class_of(std::uint64_t index) const { return labels_[index]; }
    const std::vector<std::size_t>& labels() const { return labels_; }
    /// Class id whose key equals `key`, if that class is realized.
    std::optional<std::size_t> find(const std::vector<int>& key) const;

    GroupAlgebraElement class_sum(std::size_t id) const;
    /// sum_i coefficients[i] * (class sum i)
    GroupAlgebraElement combine(const std::vector<Rational>& coefficients) const;

    /// True when both induce the same set partition of the group.
    bool same_partition_as(const ClassPartition& other) const;

private:
    int r_ = 1;
    int n_ = 0;
    std::string name_;
    std::vector<ClassInfo> classes_;
    std::vector<std::size_t> labels_;  // by canonical rank
};

ClassPartition des_partition(int r, int n, const Limits& limits = {});
ClassPartition mr_partition(int r, int n, const Limits& limits = {});
ClassPartition descent_set_partition(int r, int n, const Limits& limits = {});
/// Classes by the size of the boundary-variant descent set for (a, b).
ClassPartition variant_des_partition(int r, int n, int a, int b, const Limits& limits = {});

/// C_0 ... C_n indexed by descent number; unrealized values give the zero element.
std::pair<ClassPartition, std::vector<GroupAlgebraElement>> class_sums_des(int r, int n, const Limits& limits = {});
/// One class sum per realized colored composition.
std::pair<ClassPartition, std::vector<GroupAlgebraElement>> class_sums_mr(int r, int n, const Limits& limits = {});

struct SpanWitness {
    std::size_t class_id = 0;
    ColoredPermutation first;
    ColoredPermutation second;
    Rational first_coefficient;
    Rational second_coefficient;
};

struct SpanResult {
    std::optional<std::vector<Rational>> coefficients;  // per class id
    std::optional<SpanWitness> witness;
    bool in_span() const { return coefficients.has_value(); }
};

/// Coefficient vector when `a` is constant on every class, otherwise a witness
/// pair of permutations in one class with different coefficients.
SpanResult is_in_span(const GroupAlgebraElement& a, const ClassPartition& partition);

/// m[j][k][i]: coefficient of class sum i in (class sum j)(class sum k).
using StructureTensor = std::vector<std::vector<std::vector<BigInt>>>;

struct ClosureReport;

/// A partition whose class sums were shown to span a subalgebra. Only
/// verify_closure creates one.
class ClosedPartition {
public:
    const ClassPartition& partition() const { return partition_; }
    const StructureTensor& structure_constants() const { return constants_; }

private:
    friend ClosureReport verify_closure(const ClassPartition&, const Limits&, unsigned);
    ClosedPartition(ClassPartition partition, StructureTensor constants)
        : partition_(std::move(partition)), constants_(std::move(constants)) {}

    ClassPartition partition_;
    StructureTensor constants_;
};

struct PairResult {
    std::size_t left = 0;
    std::size_t right = 0;
    bool in_span = false;
    std::vector<BigInt> class_coefficients;  // when in_span
    std::optional<SpanWitness> witness;      // when not
};

struct ClosureReport {
    std::vector<PairResult> pairs;  // row-major over (left, right)
    std::optional<ClosedPartition> closed_partition;
    bool closed() const { return closed_partition.has_value(); }
    const PairResult* first_failure() const;
};

/// Multiplies every pair of class sums by direct convolution and checks that
/// each product is constant on classes.
ClosureReport verify_closure(const ClassPartition& partition, const Limits& limits = {}, unsigned jobs = 1);

StructureTensor structure_constants(const ClosedPartition& closed);

/// The same tensor from one representative per class: for each class i and
/// every sigma, count (class of sigma, class of sigma^-1 pi_i). Only
/// meaningful for a closed partition.
StructureTensor representative_structure_constants(const ClassPartition& partition);

/// Product of two elements of the span of a closed partition, computed on
/// class coefficients. Throws std::invalid_argument if either factor is not
/// in the span.
GroupAlgebraElement multiply_in_span(const ClosedPartition& closed, const GroupAlgebraElement& a,
                                     const GroupAlgebraElement& b);

/// Coefficients C(x + n - d, n) of phi(x) on C_d, for d = 0..n.
std::vector<Rational> structure_poly_coefficients(int n, const Rational& x);
/// phi(x) = sum_pi C(x + n - des(pi), n) pi
GroupAlgebraElement structure_poly_eval(int r, int n, const Rational& x, const Limits& limits = {});

enum class Multiplication { naive, collapsed };

/// phi(x) phi(y) == phi(rxy + x + y) for every supplied pair.
bool verify_phi_identity(int r, int n, const std::vector<std::pair<Rational, Rational>>& pairs,
                         const Limits& limits = {}, Multiplication mode = Multiplication::collapsed,
                         unsigned jobs = 1);

/// alpha[i][d]: coefficient of x^i in C((x-1)/r + n - d, n).
struct IdempotentTable {
    int r = 1;
    int n = 0;
    std::vector<std::vector<Rational>> alpha;
    /// lcm of every denominator in alpha
    BigInt common_denominator() const;
};

IdempotentTable eulerian_idempotent_table(int r, int n);
/// c_i = sum_d alpha[i][d] C_d for i = 0..n.
std::vector<GroupAlgebraElement> eulerian_idempotents(int r, int n, const Limits& limits = {});

/// "c_i = 1/D (a C_0 + b C_1 ...)" with D the common denominator.
std::string render_idempotent(const IdempotentTable& table, std::size_t i);

/// Pairs (sigma, tau) with sigma tau = pi counted by (des sigma, des tau):
/// the coefficient table of sum s^des(sigma) t^des(tau).
std::vector<std::vector<std::uint64_t>> descent_pair_counts(const ColoredPermutation& pi, const Limits& limits = {});

struct VariantScanEntry {
    int a = 0;
    int b = 0;
    bool closed = false;
    bool same_as_standard = false;
    std::size_t class_count = 0;
    std::optional<SpanWitness> witness;
    std::size_t witness_left = 0;
    std::size_t witness_right = 0;
};

/// Closure of the variant descent-number partition for every (a, b) in
/// [0, r-1]^2, compared with the partition by ordinary descent number.
std::vector<VariantScanEntry> scan_boundary_variants(int r, int n, const Limits& limits = {}, unsigned jobs = 1);

}  // namespace coloreul
