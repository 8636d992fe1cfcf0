#include "wpalg/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace wpalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix::*: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::+: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::-: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

RatVec Matrix::apply(const RatVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: shape mismatch");
    RatVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

void Matrix::append_row(const RatVec& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

Echelon reduce_rows(std::vector<RatVec> rows, const std::vector<std::size_t>& col_order) {
    Echelon ech;
    for (auto& row : rows) {
        // reduce against existing pivots
        for (std::size_t k = 0; k < ech.rows.size(); ++k) {
            const Rational& c = row[ech.pivot_cols[k]];
            if (c.is_zero()) continue;
            Rational f = c;  // pivot entries are 1
            const RatVec& pr = ech.rows[k];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (!pr[j].is_zero()) row[j] -= f * pr[j];
        }
        // find pivot in the requested order
        std::size_t pivot = row.size();
        for (std::size_t c : col_order)
            if (!row[c].is_zero()) { pivot = c; break; }
        if (pivot == row.size()) continue;  // dependent row
        Rational inv = row[pivot].inverse();
        for (auto& x : row)
            if (!x.is_zero()) x *= inv;
        // clear this column in earlier rows
        for (std::size_t k = 0; k < ech.rows.size(); ++k) {
            Rational c = ech.rows[k][pivot];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < row.size(); ++j)
                if (!row[j].is_zero()) ech.rows[k][j] -= c * row[j];
        }
        ech.rows.push_back(std::move(row));
        ech.pivot_cols.push_back(pivot);
    }
    return ech;
}

Echelon reduce_rows(std::vector<RatVec> rows, std::size_t cols) {
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), 0);
    return reduce_rows(std::move(rows), order);
}

std::size_t rank(const Matrix& m) {
    std::vector<RatVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        RatVec r(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m.at(i, j);
        rows.push_back(std::move(r));
    }
    return reduce_rows(std::move(rows), m.cols()).rows.size();
}

std::vector<RatVec> null_space(const Matrix& m) {
    // Reduce the rows of M; free columns parameterize the kernel.
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        RatVec r(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m.at(i, j);
        rows.push_back(std::move(r));
    }
    Echelon ech = reduce_rows(std::move(rows), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec v(m.cols());
        v[f] = Rational(1);
        for (std::size_t k = 0; k < ech.rows.size(); ++k)
            v[ech.pivot_cols[k]] = -ech.rows[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve(const Matrix& m, const RatVec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        RatVec r(m.cols() + 1);
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m.at(i, j);
        r[m.cols()] = b[i];
        rows.push_back(std::move(r));
    }
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    Echelon ech = reduce_rows(std::move(rows), order);
    RatVec x(m.cols());
    for (std::size_t k = 0; k < ech.rows.size(); ++k) {
        if (ech.pivot_cols[k] >= m.cols()) return std::nullopt;  // 0 = 1 row
        x[ech.pivot_cols[k]] = ech.rows[k][m.cols()];
    }
    return x;
}

RatVec eliminate(const Echelon& ech, RatVec v) {
    for (std::size_t k = 0; k < ech.rows.size(); ++k) {
        const Rational& c = v[ech.pivot_cols[k]];
        if (c.is_zero()) continue;
        Rational f = c;
        const RatVec& pr = ech.rows[k];
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!pr[j].is_zero()) v[j] -= f * pr[j];
    }
    return v;
}

bool in_span(const Echelon& ech, const RatVec& v) {
    RatVec r = eliminate(ech, v);
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

bool same_row_span(const std::vector<RatVec>& a, const std::vector<RatVec>& b, std::size_t cols) {
    Echelon ea = reduce_rows(a, cols);
    Echelon eb = reduce_rows(b, cols);
    if (ea.rows.size() != eb.rows.size()) return false;
    for (const auto& r : b)
        if (!in_span(ea, r)) return false;
    return true;
}

}  // namespace wpalg
