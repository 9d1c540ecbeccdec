#include "concord/moduli.hpp"

#include "concord/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace concord {

namespace {

// One summand block of s(b,c): sum_{k} (2k-c)(2m_k-c) with m_k = bk mod c,
// accumulated in 128-bit chunks and flushed into an Int.
Rational dedekind_sum_small(std::int64_t b, std::int64_t c) {
    Int total = 0;
    __int128 acc = 0;
    std::int64_t m = 0;
    const std::int64_t step = b % c;
    int flush = 0;
    for (std::int64_t k = 1; k < c; ++k) {
        m += step;
        if (m >= c) m -= c;
        acc += static_cast<__int128>(2 * k - c) * static_cast<__int128>(2 * m - c);
        if (++flush == (1 << 20)) {
            total += Int(acc);
            acc = 0;
            flush = 0;
        }
    }
    total += Int(acc);
    return Rational(total, Int(4) * c * c);
}

Rational dedekind_sum_general(const Int& b, const Int& c) {
    Rational s = 0;
    Int m = 0;
    const Int step = mod_floor(b, c);
    for (Int k = 1; k < c; ++k) {
        m += step;
        if (m >= c) m -= c;
        s += Rational(2 * k - c, 2 * c) * Rational(2 * m - c, 2 * c);
    }
    return s;
}

} // namespace

Rational dedekind_sum(const Int& b, const Int& c) {
    if (c < 1) throw DomainError("dedekind_sum: c must be >= 1");
    if (gcd(mod_floor(b, c), c) != 1 && c != 1)
        throw CoprimalityError("dedekind_sum: gcd(b,c) != 1");
    if (c == 1) return Rational(0);
    if (c < (Int(1) << 31)) {
        const std::int64_t c64 = c.convert_to<std::int64_t>();
        const std::int64_t b64 = mod_floor(b, c).convert_to<std::int64_t>();
        return dedekind_sum_small(b64, c64);
    }
    return dedekind_sum_general(b, c);
}

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// Floating path: (2/ai) * sum_{k=1}^{ai-1} cot(pi a k / ai^2) cot(pi k / ai) sin^2(pi k / ai),
// with the first argument reduced mod 1 in exact integer arithmetic first.
long double fiber_trig_sum(const Int& a, std::int64_t ai) {
    if (ai > (std::int64_t(1) << 30))
        throw DomainError("moduli_dimension: fiber order too large for the floating path");
    const std::int64_t ai2 = ai * ai;
    const std::int64_t step = mod_floor(a, Int(ai2)).convert_to<std::int64_t>();
    const long double inv_ai2 = 1.0L / static_cast<long double>(ai2);
    const long double inv_ai = 1.0L / static_cast<long double>(ai);
    long double sum = 0.0L;
    std::int64_t m = 0;
    for (std::int64_t k = 1; k < ai; ++k) {
        m += step;
        if (m >= ai2) m -= ai2;
        const long double t1 = kPi * (static_cast<long double>(m) * inv_ai2);
        const long double t2 = kPi * (static_cast<long double>(k) * inv_ai);
        const long double s2 = sinl(t2);
        sum += (cosl(t1) / sinl(t1)) * (cosl(t2) / s2) * s2 * s2;
    }
    return 2.0L * inv_ai * sum;
}

// Exact path: 2/a - 2 * sum_i (( inv(a/ai mod ai) / ai )).
Rational dimension_exact(const std::array<std::int64_t, 3>& fibers, const Int& a) {
    Rational r = Rational(2, a);
    for (auto ai : fibers) {
        if (ai == 1) continue;
        const Int b = mod_floor(a / ai, Int(ai));
        const Int binv = mod_inverse(b, Int(ai));
        r -= 2 * sawtooth(Rational(binv, ai));
    }
    return r;
}

} // namespace

ModuliReport moduli_dimension(const SeifertSphere& sphere, const ModuliOptions& opts) {
    if (!(opts.tolerance > 0.0L && opts.tolerance <= ModuliOptions::hard_limit))
        throw DomainError("moduli_dimension: tolerance must lie in (0, 1e-3]");

    const auto& fibers = sphere.fibers();
    const Int a = Int(fibers[0]) * fibers[1] * fibers[2];

    const Rational exact = dimension_exact(fibers, a);
    if (!is_integer(exact))
        throw EvaluationDisagreement("moduli_dimension: exact path is non-integral: " +
                                     to_string(exact));
    const Int dim = num(exact);

    long double floating = 2.0L / a.convert_to<long double>();
    for (auto ai : fibers) {
        if (ai == 1) continue;
        floating += fiber_trig_sum(a, ai);
    }
    const long double nearest = roundl(floating);
    const long double residual = fabsl(floating - nearest);

    if (residual > opts.tolerance)
        throw EvaluationDisagreement("moduli_dimension: floating residual " +
                                     std::to_string(static_cast<double>(residual)) +
                                     " exceeds tolerance");
    if (Int(static_cast<long long>(nearest)) != dim)
        throw EvaluationDisagreement("moduli_dimension: paths disagree (" +
                                     std::to_string(static_cast<long long>(nearest)) + " vs " +
                                     dim.str() + ") on " + sphere.label());

    return ModuliReport{sphere, dim.convert_to<std::int64_t>(), residual};
}

namespace {

void validate_pqk(std::int64_t p, std::int64_t q, std::int64_t k) {
    if (p < 2 || q < 2) throw DomainError("p, q must be >= 2");
    if (k < 1) throw DomainError("k must be >= 1");
    if (std::gcd(p, q) != 1)
        throw DomainError("gcd(" + std::to_string(p) + "," + std::to_string(q) + ") != 1");
}

} // namespace

Int ordering_key(std::int64_t p, std::int64_t q, std::int64_t k) {
    validate_pqk(p, q, k);
    const Int pq = Int(p) * q;
    return pq * (k * pq - 1);
}

bool bubbling_bound_holds(std::int64_t p, std::int64_t q, std::int64_t k) {
    return 4 * ordering_key(p, q, k) > 1;
}

} // namespace concord
