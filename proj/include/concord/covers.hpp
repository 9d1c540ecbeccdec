#pragma once

#include "concord/matrix.hpp"
#include "concord/polynomial.hpp"
#include "concord/seifert.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace concord {

/// Seifert matrix of a knot; any square integer matrix qualifies.
struct SeifertMatrix {
    IntMatrix entries;
};

/// Alexander polynomial of the torus knot T(p,q) from the closed form
/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), by exact division.
LaurentPolynomial alexander_torus(const TorusKnotParams& knot);

/// Genus-1 Seifert matrix [[-1, 1], [0, n]] of the positively clasped
/// n-twisted double of any companion.
SeifertMatrix double_seifert_matrix(std::int64_t twist);

/// Normalized Alexander polynomial det(V - t V^T).
LaurentPolynomial alexander_from_seifert(const SeifertMatrix& v);

/// |det(V + V^T)|: the order of H_1 of the double branched cover
/// (0 encodes an infinite group).
Int determinant_from_seifert(const SeifertMatrix& v);

/// Which coordinate the first entry of a curve pair on a boundary torus
/// refers to. The default reads "(a,b)" as a*meridian + b*longitude.
enum class CurveOrder { meridian_longitude, longitude_meridian };

/// Homological descriptor of the two-component pattern piece: the
/// complement of an iterated (-2)-twisted double of the (2,4) torus link.
struct PatternPiece {
    std::string label;
    int components = 2;
    std::int64_t mutual_linking = 0;
    // Offset of the stored longitude from the 0-framed one, per component.
    // The construction always glues along the 0-framed longitude.
    std::array<std::int64_t, 2> framing_offsets{0, 0};
    std::int64_t twist = -2;

    friend bool operator==(const PatternPiece&, const PatternPiece&) = default;
};

struct CompanionPiece {
    std::string label;  // "E(T(p,q))"

    friend bool operator==(const CompanionPiece&, const CompanionPiece&) = default;
};

/// Unimodular gluing in (meridian, longitude) coordinates of the pattern
/// boundary torus: column 0 is the image of the companion meridian mu_K,
/// column 1 the image of the companion longitude lambda_K.
struct GluingMatrix {
    std::array<std::array<std::int64_t, 2>, 2> m{{{0, 0}, {0, 0}}};

    std::int64_t det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;
};

/// Torus-glued piece graph of the double branched cover of an iterated
/// Whitehead double: one pattern piece and two companion knot exteriors.
struct CoverDecomposition {
    PatternPiece pattern;
    std::array<CompanionPiece, 2> companions;
    std::array<GluingMatrix, 2> gluings;
    CurveOrder curve_order = CurveOrder::meridian_longitude;
};

/// Decomposition of the double branched cover of D^r(T(p,q)). For r = 1 the
/// pattern piece is the (2,4) torus link complement and the companion
/// meridian is glued to the (-2,1) curve; for r >= 2 the gluing is the
/// splice form, exchanging meridian and longitude. Throws DepthError for r < 1.
CoverDecomposition decompose_cover(const TorusKnotParams& knot, int r,
                                   CurveOrder order = CurveOrder::meridian_longitude);

/// Order of H_1 of the glued manifold (0 = infinite): assembles the
/// Mayer-Vietoris presentation over the meridian generators and reduces it
/// by Smith normal form.
Int h1_order(const CoverDecomposition& decomposition);

} // namespace concord
