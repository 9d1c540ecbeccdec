#pragma once

#include "concord/numeric.hpp"
#include "concord/seifert.hpp"

#include <cstdint>

namespace concord {

/// Exact Dedekind sum s(b,c) = sum_{k=1}^{c-1} ((k/c)) ((kb/c)).
/// Requires c >= 1 and gcd(b,c) = 1; throws CoprimalityError otherwise.
Rational dedekind_sum(const Int& b, const Int& c);

struct ModuliOptions {
    // Accepted distance of the floating path from the nearest integer.
    long double tolerance = 1e-6L;
    // Above this the evaluation is rejected outright.
    static constexpr long double hard_limit = 1e-3L;
};

/// Result of the instanton moduli dimension evaluation. `dimension` is the
/// common value of the two evaluation paths; `residual` is how far the
/// floating trigonometric sum landed from that integer.
struct ModuliReport {
    SeifertSphere sphere;
    std::int64_t dimension;
    long double residual;
};

/// Virtual dimension of the instanton moduli space over the Seifert
/// fibration with fiber orders (a1,a2,a3). Evaluated twice: a floating
/// cotangent-sum path and an exact sawtooth-sum path; the two are required
/// to agree. The value is attached to the fibration data, so the sphere's
/// orientation sign is carried through but does not enter the computation.
ModuliReport moduli_dimension(const SeifertSphere& sphere, const ModuliOptions& opts = {});

/// The ordering quantity p*q*(k*p*q - 1) that governs the leaking condition.
Int ordering_key(std::int64_t p, std::int64_t q, std::int64_t k);

/// Compactness bound: 1/4 < p*q*(k*p*q - 1).
bool bubbling_bound_holds(std::int64_t p, std::int64_t q, std::int64_t k);

} // namespace concord
