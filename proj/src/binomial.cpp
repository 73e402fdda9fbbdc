#include "coloreul/binomial.hpp"

#include <stdexcept>

namespace coloreul {

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("bad rational '" + text + "'");
    }
    q.canonicalize();
    return q;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt binomial(const BigInt& top, unsigned long k) {
    if (top < k) return 0;
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
    return out;
}

BigInt binomial(long top, unsigned long k) { return binomial(BigInt(top), k); }

Rational binomial(const Rational& y, unsigned long k) {
    Rational out = 1;
    for (unsigned long m = 0; m < k; ++m) out *= (y - Rational(static_cast<long>(m))) / Rational(static_cast<long>(m + 1));
    return out;
}

BigInt power(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::linear(const Rational& slope, const Rational& intercept) {
    return RationalPolynomial({intercept, slope});
}

RationalPolynomial RationalPolynomial::binomial_in(const Rational& slope, const Rational& intercept, unsigned long k) {
    RationalPolynomial out = constant(1);
    for (unsigned long m = 0; m < k; ++m) {
        const Rational denominator(static_cast<long>(m + 1));
        out = out * linear(slope / denominator, (intercept - Rational(static_cast<long>(m))) / denominator);
    }
    return out;
}

Rational RationalPolynomial::coefficient(std::size_t i) const {
    return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
    if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size(), 0);
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.coefficients_.empty() || b.coefficients_.empty()) return {};
    std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (std::size_t k = 0; k < b.coefficients_.size(); ++k) out[i + k] += a.coefficients_[i] * b.coefficients_[k];
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p) {
    std::vector<Rational> out = p.coefficients_;
    for (auto& coefficient : out) coefficient *= c;
    return RationalPolynomial(std::move(out));
}

void RationalPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::string to_string(const RationalPolynomial& p) {
    if (p.coefficients().empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        const auto& c = p.coefficients()[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (i > 0) out += "x^" + std::to_string(i);
    }
    return out;
}

TruncatedSeries TruncatedSeries::divided_by_one_minus_t(unsigned long exponent) const {
    TruncatedSeries out = *this;
    // Multiplying by 1/(1-t) is a running prefix sum.
    for (unsigned long e = 0; e < exponent; ++e) {
        for (std::size_t i = 1; i < out.coefficients_.size(); ++i) out.coefficients_[i] += out.coefficients_[i - 1];
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    std::vector<BigInt> out(order + 1, 0);
    for (std::size_t i = 0; i <= order && i < coefficients_.size(); ++i) out[i] = coefficients_[i];
    return TruncatedSeries(std::move(out));
}

}  // namespace coloreul
