#include "concord/matrix.hpp"

#include "concord/errors.hpp"

#include <algorithm>

namespace concord {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeError("IntMatrix: ragged initializer");
        for (const auto& v : row) data_.push_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) { return scaled_identity(n, 1); }

IntMatrix IntMatrix::scaled_identity(std::size_t n, const Int& value) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = value;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::leading_submatrix(std::size_t k) const {
    if (k > rows_ || k > cols_) throw ShapeError("leading_submatrix: k too large");
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m.at(i, j) = at(i, j);
    return m;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix m = *this;
    for (auto& v : m.data_) v = -v;
    return m;
}

IntMatrix IntMatrix::block_sum(const IntMatrix& other) const {
    IntMatrix m(rows_ + other.rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j)
            m.at(rows_ + i, cols_ + j) = other.at(i, j);
    return m;
}

Int determinant(const IntMatrix& input) {
    if (!input.is_square()) throw ShapeError("determinant: matrix is not square");
    const std::size_t n = input.rows();
    if (n == 0) return 1;

    IntMatrix m = input;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

std::vector<Int> leading_principal_minors(const IntMatrix& m) {
    if (!m.is_square()) throw ShapeError("leading_principal_minors: matrix is not square");
    std::vector<Int> minors;
    minors.reserve(m.rows());
    for (std::size_t k = 1; k <= m.rows(); ++k)
        minors.push_back(determinant(m.leading_submatrix(k)));
    return minors;
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

} // namespace

std::vector<Int> smith_normal_form(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate the smallest nonzero entry in the trailing block
        std::size_t pr = t, pc = t;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Int a = abs_int(m.at(i, j));
                if (a != 0 && (best == 0 || a < best)) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (best == 0) break;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(pr, j));
        for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pc));

        bool clean = true;
        for (std::size_t i = t + 1; i < rows && clean; ++i)
            if (m.at(i, t) != 0) clean = false;
        for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (m.at(t, j) != 0) clean = false;

        if (!clean) {
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m.at(i, t) == 0) continue;
                const Int f = floor_div(m.at(i, t), m.at(t, t));
                for (std::size_t j = t; j < cols; ++j) m.at(i, j) -= f * m.at(t, j);
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m.at(t, j) == 0) continue;
                const Int f = floor_div(m.at(t, j), m.at(t, t));
                for (std::size_t i = t; i < rows; ++i) m.at(i, j) -= f * m.at(i, t);
            }
            continue;  // re-select a pivot; entries shrank
        }

        // ensure the pivot divides the rest of the block
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (std::size_t jj = t; jj < cols; ++jj) m.at(t, jj) += m.at(i, jj);
                    divides = false;
                }
        if (!divides) continue;

        diag.push_back(abs_int(m.at(t, t)));
        ++t;
    }
    while (diag.size() < std::min(rows, cols)) diag.push_back(0);
    return diag;
}

Int presentation_order(const IntMatrix& m, std::size_t generators) {
    if (m.cols() != generators)
        throw ShapeError("presentation_order: column count must equal generator count");
    const auto diag = smith_normal_form(m);
    std::size_t nonzero = 0;
    Int order = 1;
    for (const auto& d : diag)
        if (d != 0) {
            ++nonzero;
            order *= d;
        }
    if (nonzero < generators) return 0;  // positive free rank
    return order;
}

} // namespace concord
