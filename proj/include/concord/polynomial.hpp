#pragma once

#include "concord/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace concord {

/// Integer Laurent polynomial, stored sparsely as exponent -> coefficient.
/// Zero coefficients are never stored. Normalization shifts the lowest
/// exponent to 0 and makes the leading coefficient positive, which gives a
/// canonical representative for equality up to units.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const Int& constant);
    static LaurentPolynomial monomial(std::int64_t exponent, const Int& coefficient);
    static LaurentPolynomial one() { return LaurentPolynomial(Int(1)); }

    const std::map<std::int64_t, Int>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Int coefficient(std::int64_t exponent) const;
    std::int64_t lowest_exponent() const;   // DomainError on the zero polynomial
    std::int64_t highest_exponent() const;  // DomainError on the zero polynomial

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    /// Exact division; throws DomainError when the divisor does not divide.
    LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

    /// Canonical form: lowest exponent 0, positive leading coefficient.
    LaurentPolynomial normalized() const;

    /// Substitution t -> 1/t.
    LaurentPolynomial reciprocal() const;

    /// Equality up to multiplication by units (+-t^k).
    bool equals_up_to_units(const LaurentPolynomial& other) const;

    /// Evaluation at an integer argument; requires a genuine polynomial
    /// (no negative exponents), which normalized() guarantees.
    Int evaluate(const Int& t) const;

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    std::string to_string() const;             // "2t^2 - 3t + 2"
    std::string symmetric_string() const;      // balanced form "2t - 3 + 2t^-1" when the span is even

private:
    void trim();
    std::map<std::int64_t, Int> coeffs_;
};

} // namespace concord
