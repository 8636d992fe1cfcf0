#pragma once

#include "wpalg/rational.hpp"

#include <optional>
#include <vector>

namespace wpalg {

using RatVec = std::vector<Rational>;

/// Dense matrix over Rational. Row-major, value semantics. All eliminations
/// are exact; no pivoting heuristics beyond the documented column orders.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const = default;

    RatVec apply(const RatVec& v) const;  // matrix * column vector
    Matrix transposed() const;
    bool is_zero() const;

    void append_row(const RatVec& row);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Result of row reduction: reduced rows (pivot entries 1, pivot columns
/// cleared elsewhere) plus the pivot column of each surviving row.
struct Echelon {
    std::vector<RatVec> rows;
    std::vector<std::size_t> pivot_cols;  // parallel to rows
};

/// Gaussian elimination over a caller-supplied column order. Pivots are
/// chosen as the first nonzero entry in `col_order`; rows fully reduced.
Echelon reduce_rows(std::vector<RatVec> rows, const std::vector<std::size_t>& col_order);

/// reduce_rows with the natural order 0,1,...,cols-1 (least-index pivoting).
Echelon reduce_rows(std::vector<RatVec> rows, std::size_t cols);

std::size_t rank(const Matrix& m);

/// Basis of {x : M x = 0} as rows.
std::vector<RatVec> null_space(const Matrix& m);

/// Any exact solution of M x = b (least-index pivoting), or nullopt.
std::optional<RatVec> solve(const Matrix& m, const RatVec& b);

/// Reduces v against echelon rows; the result has zero entries in all pivot
/// columns. Used for normal forms against a frozen relation span.
RatVec eliminate(const Echelon& ech, RatVec v);

/// True if v lies in the row span described by `ech`.
bool in_span(const Echelon& ech, const RatVec& v);

/// Span equality of two row sets (same column convention).
bool same_row_span(const std::vector<RatVec>& a, const std::vector<RatVec>& b, std::size_t cols);

}  // namespace wpalg
