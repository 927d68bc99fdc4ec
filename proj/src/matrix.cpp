#include "cutcalc/matrix.hpp"

#include "cutcalc/errors.hpp"

#include <utility>

namespace cutcalc::la {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

QVec QMatrix::row(std::size_t r) const {
    QVec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        v[c] = at(r, c);
    return v;
}

void QMatrix::set_row(std::size_t r, const QVec& v) {
    if (v.size() != cols_)
        throw AlgebraError("row length does not match column count");
    for (std::size_t c = 0; c < cols_; ++c)
        at(r, c) = v[c];
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

QVec QMatrix::apply_row(const QVec& x) const {
    if (x.size() != rows_)
        throw AlgebraError("vector length does not match row count");
    QVec out(cols_, Rat(0));
    for (std::size_t r = 0; r < rows_; ++r) {
        if (x[r] == 0)
            continue;
        for (std::size_t c = 0; c < cols_; ++c)
            out[c] += x[r] * at(r, c);
    }
    return out;
}

Echelon rref(QMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        // First nonzero entry at or below `lead`; RREF is unique, so the
        // search order only affects intermediate states.
        std::size_t sel = lead;
        while (sel < rows && m.at(sel, col) == 0)
            ++sel;
        if (sel == rows)
            continue;
        if (sel != lead)
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(m.at(sel, c), m.at(lead, c));
        const Rat inv_pivot = Rat(1) / m.at(lead, col);
        for (std::size_t c = col; c < cols; ++c)
            m.at(lead, c) *= inv_pivot;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m.at(r, col) == 0)
                continue;
            const Rat factor = m.at(r, col);
            for (std::size_t c = col; c < cols; ++c)
                m.at(r, c) -= factor * m.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) {
    return rref(m).pivots.size();
}

}  // namespace cutcalc::la
