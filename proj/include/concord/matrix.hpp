#pragma once

#include "concord/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace concord {

/// Dense matrix over arbitrary-precision integers. Small sizes only; all
/// consumers here are handle ledgers and homology presentations.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix scaled_identity(std::size_t n, const Int& value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    IntMatrix leading_submatrix(std::size_t k) const;
    IntMatrix negated() const;

    /// Block-diagonal sum: diag(this, other).
    IntMatrix block_sum(const IntMatrix& other) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Exact determinant (Bareiss fraction-free elimination). det of the empty
/// matrix is 1. Throws ShapeError on non-square input.
Int determinant(const IntMatrix& m);

/// Determinants of the k x k leading principal submatrices, k = 1..n.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

/// Diagonal of the Smith normal form, as nonnegative elementary divisors
/// d_1 | d_2 | ... (zeros last). Input is consumed by value.
std::vector<Int> smith_normal_form(IntMatrix m);

/// Order of the abelian group presented by the relation matrix `m` acting on
/// `generators` generators: product of elementary divisors, with 0 meaning
/// an infinite group (free rank left over).
Int presentation_order(const IntMatrix& m, std::size_t generators);

} // namespace concord
