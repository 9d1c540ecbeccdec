#include "concord/polynomial.hpp"

#include "concord/errors.hpp"

namespace concord {

LaurentPolynomial::LaurentPolynomial(const Int& constant) {
    if (constant != 0) coeffs_[0] = constant;
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t exponent, const Int& coefficient) {
    LaurentPolynomial p;
    if (coefficient != 0) p.coeffs_[exponent] = coefficient;
    return p;
}

Int LaurentPolynomial::coefficient(std::int64_t exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
}

std::int64_t LaurentPolynomial::lowest_exponent() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no exponents");
    return coeffs_.begin()->first;
}

std::int64_t LaurentPolynomial::highest_exponent() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no exponents");
    return coeffs_.rbegin()->first;
}

void LaurentPolynomial::trim() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) coeffs_[e] += c;
    trim();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) coeffs_[e] -= c;
    trim();
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) r.coeffs_[ea + eb] += ca * cb;
    r.trim();
    return r;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
    if (is_zero()) return {};
    LaurentPolynomial rem = *this;
    LaurentPolynomial quot;
    const std::int64_t dhi = divisor.highest_exponent();
    const Int& dlead = divisor.coeffs_.rbegin()->second;
    while (!rem.is_zero() && rem.highest_exponent() - rem.lowest_exponent() >=
                                 dhi - divisor.lowest_exponent()) {
        const std::int64_t e = rem.highest_exponent() - dhi;
        const Int& rlead = rem.coeffs_.rbegin()->second;
        if (rlead % dlead != 0) throw DomainError("polynomial division is not exact");
        LaurentPolynomial term = monomial(e, rlead / dlead);
        quot += term;
        rem -= term * divisor;
    }
    if (!rem.is_zero()) throw DomainError("polynomial division is not exact");
    return quot;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
    if (is_zero()) return {};
    LaurentPolynomial r;
    const std::int64_t lo = lowest_exponent();
    const bool flip = coeffs_.rbegin()->second < 0;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e - lo] = flip ? -c : c;
    return r;
}

LaurentPolynomial LaurentPolynomial::reciprocal() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

bool LaurentPolynomial::equals_up_to_units(const LaurentPolynomial& other) const {
    return normalized() == other.normalized();
}

Int LaurentPolynomial::evaluate(const Int& t) const {
    if (is_zero()) return 0;
    if (lowest_exponent() < 0)
        throw DomainError("evaluate requires nonnegative exponents; normalize first");
    // Horner over the sparse support
    Int acc = 0;
    std::int64_t prev = highest_exponent();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        for (std::int64_t e = prev; e > it->first; --e) acc *= t;
        acc += it->second;
        prev = it->first;
    }
    for (std::int64_t e = prev; e > 0; --e) acc *= t;
    return acc;
}

namespace {

std::string term_string(std::int64_t e, const Int& c, bool first) {
    std::string s;
    Int a = c < 0 ? Int(-c) : c;
    if (first)
        s += (c < 0 ? "-" : "");
    else
        s += (c < 0 ? " - " : " + ");
    if (a != 1 || e == 0) s += a.str();
    if (e != 0) {
        s += "t";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace

std::string LaurentPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        s += term_string(it->first, it->second, first);
        first = false;
    }
    return s;
}

std::string LaurentPolynomial::symmetric_string() const {
    if (is_zero()) return "0";
    const std::int64_t span = highest_exponent() - lowest_exponent();
    if (span % 2 != 0) return normalized().to_string();
    const std::int64_t shift = lowest_exponent() + span / 2;
    LaurentPolynomial centered;
    for (const auto& [e, c] : coeffs_) centered.coeffs_[e - shift] = c;
    if (centered.coeffs_.rbegin()->second < 0) centered = -centered;
    return centered.to_string();
}

} // namespace concord
