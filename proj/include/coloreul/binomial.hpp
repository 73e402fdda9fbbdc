#pragma once

// Exact integers, rationals, binomials and dense rational polynomials.

#include <string>
#include <vector>

#include <gmpxx.h>

namespace coloreul {

using BigInt = mpz_class;
/// Always canonical: positive denominator, lowest terms, zero is 0/1.
using Rational = mpq_class;

std::string to_string(const BigInt& value);
/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);
Rational parse_rational(const std::string& text);
/// num/den in lowest terms. Throws std::invalid_argument when den is 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// C(top, k) for integer top, with C(top, k) = 0 whenever top < k.
BigInt binomial(const BigInt& top, unsigned long k);
BigInt binomial(long top, unsigned long k);

/// Falling-factorial binomial y(y-1)...(y-k+1)/k! for rational y.
Rational binomial(const Rational& y, unsigned long k);

BigInt power(const BigInt& base, unsigned long exponent);
BigInt factorial(unsigned long n);

class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);
    static RationalPolynomial constant(const Rational& c);
    /// slope * x + intercept
    static RationalPolynomial linear(const Rational& slope, const Rational& intercept);
    /// C(slope * x + intercept, k) expanded in powers of x.
    static RationalPolynomial binomial_in(const Rational& slope, const Rational& intercept, unsigned long k);

    /// Empty for the zero polynomial.
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    /// Coefficient of x^i; zero beyond the degree.
    Rational coefficient(std::size_t i) const;
    Rational operator()(const Rational& x) const;

    RationalPolynomial& operator+=(const RationalPolynomial& other);
    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    void trim();
    std::vector<Rational> coefficients_;
};

std::string to_string(const RationalPolynomial& p);

/// Power series truncated at t^order; coefficients().size() == order + 1.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coefficients_(order + 1, 0) {}
    explicit TruncatedSeries(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {}

    std::size_t order() const { return coefficients_.size() - 1; }
    const std::vector<BigInt>& coefficients() const { return coefficients_; }
    BigInt& operator[](std::size_t i) { return coefficients_[i]; }
    const BigInt& operator[](std::size_t i) const { return coefficients_[i]; }

    /// This series times 1/(1-t)^exponent, kept to the same order.
    TruncatedSeries divided_by_one_minus_t(unsigned long exponent) const;
    /// Copy padded with zeros or cut to the given order.
    TruncatedSeries truncated(std::size_t order) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<BigInt> coefficients_;
};

}  // namespace coloreul
