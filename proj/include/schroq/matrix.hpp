#pragma once

#include <vector>

#include "schroq/scalar.hpp"

namespace schroq {

using Vec = std::vector<Scalar>;

/// Dense matrix over the Scalar field. Depth slices of the modules here are
/// tiny (a handful of rows), so dense exact arithmetic is the simple choice.
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Mat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat&) const = default;
    bool is_zero() const;

    Mat operator-() const;
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const Scalar& c, const Mat& a);
    Vec apply(const Vec& v) const;

    /// Reduced row echelon form (in place copy); returns pivot columns.
    std::vector<size_t> rref();
    size_t rank() const;
    /// Basis of the right null space.
    std::vector<Vec> kernel() const;
    /// One solution x of Ax = b, if any.
    std::optional<Vec> solve(const Vec& b) const;
    /// Stack vertically: [this; below]. Column counts must agree.
    Mat vstack(const Mat& below) const;

    std::string str() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// Row-reduce a list of row vectors to an independent spanning set.
std::vector<Vec> row_basis(std::vector<Vec> rows);

/// Rank of the span of a list of row vectors.
size_t span_rank(const std::vector<Vec>& rows);

/// True if v lies in the span of basis (basis need not be reduced).
bool in_span(const std::vector<Vec>& basis, const Vec& v);

} // namespace schroq
