#include "concord/seifert.hpp"

#include "concord/errors.hpp"

#include <algorithm>
#include <numeric>

namespace concord {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

} // namespace

TorusKnotParams::TorusKnotParams(std::int64_t p, std::int64_t q, Unknot policy) {
    if (p < 1 || q < 1) throw DomainError("TorusKnotParams: p, q must be positive");
    if (p > q) std::swap(p, q);
    if (gcd64(p, q) != 1)
        throw CoprimalityError("TorusKnotParams: gcd(" + std::to_string(p) + "," +
                               std::to_string(q) + ") != 1");
    if (p == 1 && policy == Unknot::reject)
        throw DomainError("TorusKnotParams: T(1,q) is the unknot; pass Unknot::allow to permit it");
    p_ = p;
    q_ = q;
}

std::string TorusKnotParams::label() const {
    return "T(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

SurgerySlope::SurgerySlope(std::int64_t m_in, std::int64_t n_in) : m(m_in), n(n_in) {
    if (n == 0) throw DomainError("SurgerySlope: denominator must be nonzero");
    if (n < 0) { m = -m; n = -n; }
    std::int64_t g = gcd64(m < 0 ? -m : m, n);
    if (g == 0) throw DomainError("SurgerySlope: 0/0 is not a slope");
    if (g != 1) throw CoprimalityError("SurgerySlope: " + std::to_string(m) + "/" +
                                       std::to_string(n) + " is not reduced");
}

std::string SurgerySlope::label() const {
    if (n == 1) return std::to_string(m);
    return std::to_string(m) + "/" + std::to_string(n);
}

SeifertSphere::SeifertSphere(std::int64_t a1, std::int64_t a2, std::int64_t a3, int sign)
    : fibers_{a1, a2, a3}, sign_(sign) {
    if (sign != 1 && sign != -1) throw DomainError("SeifertSphere: sign must be +1 or -1");
    for (auto a : fibers_)
        if (a < 1) throw DomainError("SeifertSphere: fiber orders must be positive");
    std::sort(fibers_.begin(), fibers_.end());
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (gcd64(fibers_[i], fibers_[j]) != 1)
                throw CoprimalityError("SeifertSphere: fibers " + std::to_string(fibers_[i]) +
                                       " and " + std::to_string(fibers_[j]) + " share a factor");
}

std::string SeifertSphere::label() const {
    std::string s = sign_ < 0 ? "-" : "";
    return s + "Sigma(" + std::to_string(fibers_[0]) + "," + std::to_string(fibers_[1]) + "," +
           std::to_string(fibers_[2]) + ")";
}

SeifertSphere normalize_seifert(std::int64_t a1, std::int64_t a2, std::int64_t a3, int sign) {
    return SeifertSphere(a1, a2, a3, sign);
}

SeifertSphere moser_surgery(const TorusKnotParams& knot, const SurgerySlope& slope) {
    if (!slope.is_one_over() || slope.n < 1)
        throw UnsupportedSlope("moser_surgery: only slopes 1/n with n >= 1 are supported, got " +
                               slope.label());
    const std::int64_t p = knot.p(), q = knot.q(), n = slope.n;
    // s = npq - 1 is automatically coprime to p and q.
    return SeifertSphere(p, q, n * p * q - 1, -1);
}

} // namespace concord
