#pragma once

#include "cutcalc/rational.hpp"

#include <cstddef>
#include <vector>

namespace cutcalc::la {

/// Dense matrix of exact rationals, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static QMatrix identity(std::size_t n);
    /// Stacks the given rows; every row must have length `cols`.
    static QMatrix from_rows(const std::vector<QVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QVec row(std::size_t r) const;
    void set_row(std::size_t r, const QVec& v);
    QMatrix transposed() const;

    /// Row-vector times matrix: result has length cols().
    QVec apply_row(const QVec& x) const;

    bool operator==(const QMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

struct Echelon {
    QMatrix mat;                      // reduced row echelon form, zero rows kept
    std::vector<std::size_t> pivots;  // pivot columns, strictly increasing
};

/// Unique reduced row echelon form: pivots 1, zeros above and below each pivot.
Echelon rref(QMatrix m);

std::size_t rank(const QMatrix& m);

}  // namespace cutcalc::la
