#include "coloreul/group_algebra.hpp"

#include <stdexcept>
#include <unordered_map>

#include "coloreul/parallel.hpp"

namespace coloreul {

GroupAlgebraElement::GroupAlgebraElement(int r, int n) : r_(r), n_(n) {
    if (r < 1 || n < 0) throw std::invalid_argument("group algebra needs r >= 1 and n >= 0");
}

GroupAlgebraElement GroupAlgebraElement::unit(int r, int n) { return basis(identity(r, n)); }

GroupAlgebraElement GroupAlgebraElement::basis(const ColoredPermutation& pi, const Rational& coefficient) {
    GroupAlgebraElement out(pi.r(), pi.n());
    out.accumulate(rank(pi), coefficient);
    return out;
}

Rational GroupAlgebraElement::coefficient(const ColoredPermutation& pi) const {
    if (pi.r() != r_ || pi.n() != n_) throw std::invalid_argument("coefficient: permutation from another group");
    return coefficient_at(rank(pi));
}

Rational GroupAlgebraElement::coefficient_at(std::uint64_t index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::accumulate(std::uint64_t index, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(index, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

void GroupAlgebraElement::check_same_group(const GroupAlgebraElement& other) const {
    if (r_ != other.r_ || n_ != other.n_) {
        throw std::invalid_argument("group algebra elements from G_{" + std::to_string(r_) + "," + std::to_string(n_) +
                                    "} and G_{" + std::to_string(other.r_) + "," + std::to_string(other.n_) + "}");
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
    check_same_group(other);
    for (const auto& [index, value] : other.terms_) accumulate(index, value);
    return *this;
}

GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a.check_same_group(b);
    for (const auto& [index, value] : b.terms_) a.accumulate(index, -value);
    return a;
}

GroupAlgebraElement operator*(const Rational& q, const GroupAlgebraElement& a) {
    GroupAlgebraElement out(a.r_, a.n_);
    if (q == 0) return out;
    for (const auto& [index, value] : a.terms_) out.terms_.emplace(index, q * value);
    return out;
}

GroupAlgebraElement algebra_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a + b; }

GroupAlgebraElement algebra_scale(const GroupAlgebraElement& a, const Rational& q) { return q * a; }

GroupAlgebraElement algebra_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b, const Limits& limits,
                                     unsigned jobs) {
    if (a.r() != b.r() || a.n() != b.n()) throw std::invalid_argument("algebra_multiply: elements from different groups");
    const auto terms = static_cast<long double>(a.support_size()) * static_cast<long double>(b.support_size());
    if (terms > static_cast<long double>(limits.max_product_terms)) {
        throw CapExceeded("product of supports " + std::to_string(a.support_size()) + " x " +
                          std::to_string(b.support_size()) + " exceeds cap " + std::to_string(limits.max_product_terms));
    }

    struct Term {
        ColoredPermutation element;
        Rational coefficient;
    };
    auto expand = [&](const GroupAlgebraElement& x) {
        std::vector<Term> out;
        out.reserve(x.support_size());
        for (const auto& [index, value] : x.terms()) out.push_back({unrank(x.r(), x.n(), index), value});
        return out;
    };
    const auto left = expand(a);
    const auto right = expand(b);

    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(jobs, left.size()));
    std::vector<std::unordered_map<std::uint64_t, Rational>> partial(chunks);
    parallel_for(chunks, jobs, [&](std::size_t chunk) {
        auto& acc = partial[chunk];
        Rational product;
        for (std::size_t i = chunk; i < left.size(); i += chunks) {
            for (const auto& term : right) {
                product = left[i].coefficient * term.coefficient;
                acc[rank(compose(left[i].element, term.element))] += product;
            }
        }
    });

    GroupAlgebraElement out(a.r(), a.n());
    for (const auto& acc : partial) {
        for (const auto& [index, value] : acc) out.accumulate(index, value);
    }
    return out;
}

std::string to_string(const GroupAlgebraElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [index, value] : a.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(value) + ")[" + to_string(unrank(a.r(), a.n(), index)) + "]";
    }
    return out;
}

}  // namespace coloreul
