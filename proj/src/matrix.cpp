#include "schroq/matrix.hpp"

#include <sstream>

namespace schroq {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

bool Mat::is_zero() const {
    for (auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& s : r.data_) s = -s;
    return r;
}

Mat operator+(const Mat& a, const Mat& b) {
    Mat r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat operator*(const Mat& a, const Mat& b) {
    Mat r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Mat operator*(const Scalar& c, const Mat& a) {
    Mat r = a;
    for (auto& s : r.data_) s = c * s;
    return r;
}

Vec Mat::apply(const Vec& v) const {
    Vec r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<size_t> Mat::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        // pivot: lowest-complexity nonzero entry, to limit expression swell
        size_t best = rows_;
        int best_c = 0;
        for (size_t i = row; i < rows_; ++i) {
            if (at(i, col).is_zero()) continue;
            int c = at(i, col).complexity();
            if (best == rows_ || c < best_c) { best = i; best_c = c; }
        }
        if (best == rows_) continue;
        if (best != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(row, j), at(best, j));
        Scalar inv = at(row, col).inverse();
        for (size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Scalar f = at(i, col);
            for (size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t Mat::rank() const {
    Mat m = *this;
    return m.rref().size();
}

std::vector<Vec> Mat::kernel() const {
    Mat m = *this;
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t freec = 0; freec < cols_; ++freec) {
        if (is_pivot[freec]) continue;
        Vec v(cols_);
        v[freec] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> Mat::solve(const Vec& b) const {
    Mat aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    Vec x(cols_);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

Mat Mat::vstack(const Mat& below) const {
    Mat r(rows_ + below.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t i = 0; i < below.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
    return r;
}

std::string Mat::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).str();
        }
        out << "]\n";
    }
    return out.str();
}

std::vector<Vec> row_basis(std::vector<Vec> rows) {
    if (rows.empty()) return {};
    Mat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    size_t nr = m.rref().size();
    std::vector<Vec> out;
    for (size_t i = 0; i < nr; ++i) {
        Vec v(m.cols());
        for (size_t j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

size_t span_rank(const std::vector<Vec>& rows) { return row_basis(rows).size(); }

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    std::vector<Vec> with = basis;
    with.push_back(v);
    return span_rank(with) == span_rank(basis);
}

} // namespace schroq
