#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace concord {

/// A positive torus knot T(p,q). The constructor sorts the pair so that
/// p < q and rejects p = 1 unless the unknot is explicitly allowed.
class TorusKnotParams {
public:
    enum class Unknot { reject, allow };

    TorusKnotParams(std::int64_t p, std::int64_t q, Unknot policy = Unknot::reject);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }

    std::string label() const;  // "T(2,3)"

    friend bool operator==(const TorusKnotParams&, const TorusKnotParams&) = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

/// A surgery slope m/n in lowest terms with n >= 1.
struct SurgerySlope {
    SurgerySlope(std::int64_t m, std::int64_t n);

    std::int64_t m;
    std::int64_t n;

    // True when the slope has the form 1/n.
    bool is_one_over() const { return m == 1; }

    std::string label() const;  // "1/4", "-5", ...

    friend bool operator==(const SurgerySlope&, const SurgerySlope&) = default;
};

/// An oriented Seifert fibered homology sphere Sigma(a1,a2,a3) with pairwise
/// coprime fiber orders a1 <= a2 <= a3 and an orientation sign. Reversing
/// orientation keeps the multiplicities and flips the sign.
class SeifertSphere {
public:
    SeifertSphere(std::int64_t a1, std::int64_t a2, std::int64_t a3, int sign);

    std::int64_t a1() const { return fibers_[0]; }
    std::int64_t a2() const { return fibers_[1]; }
    std::int64_t a3() const { return fibers_[2]; }
    const std::array<std::int64_t, 3>& fibers() const { return fibers_; }
    int sign() const { return sign_; }

    SeifertSphere negated() const { return SeifertSphere(fibers_[0], fibers_[1], fibers_[2], -sign_); }

    std::string label() const;  // "Sigma(2,3,5)" / "-Sigma(2,3,5)"

    friend bool operator==(const SeifertSphere&, const SeifertSphere&) = default;

private:
    std::array<std::int64_t, 3> fibers_;
    int sign_;
};

/// Sorts and validates a fiber triple. Throws CoprimalityError when two
/// multiplicities share a factor, DomainError on non-positive input.
SeifertSphere normalize_seifert(std::int64_t a1, std::int64_t a2, std::int64_t a3, int sign);

/// Moser's identification of 1/n surgery on a torus knot:
/// S^3_{1/n}(T(p,q)) = -Sigma(p,q,npq-1) for n >= 1.
/// Slopes not of the form 1/n throw UnsupportedSlope.
SeifertSphere moser_surgery(const TorusKnotParams& knot, const SurgerySlope& slope);

} // namespace concord
