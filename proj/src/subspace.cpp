#include "cutcalc/subspace.hpp"

#include "cutcalc/errors.hpp"

namespace cutcalc::la {

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = QMatrix(0, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = QMatrix::identity(ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        s.pivots_[i] = i;
    return s;
}

Subspace Subspace::row_space(const QMatrix& m) {
    Echelon e = rref(m);
    Subspace s;
    s.ambient_ = m.cols();
    s.pivots_ = e.pivots;
    s.basis_ = QMatrix(e.pivots.size(), m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        s.basis_.set_row(r, e.mat.row(r));
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<QVec>& gens) {
    for (const QVec& g : gens)
        if (g.size() != ambient)
            throw AlgebraError("generator length does not match ambient dimension");
    return row_space(QMatrix::from_rows(gens, ambient));
}

Subspace Subspace::kernel(const QMatrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots)
        is_pivot[p] = true;
    std::vector<QVec> gens;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j])
            continue;
        QVec v(m.cols(), Rat(0));
        v[j] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.mat.at(i, j);
        gens.push_back(std::move(v));
    }
    return span(m.cols(), gens);
}

Subspace Subspace::left_kernel(const QMatrix& m) {
    return kernel(m.transposed());
}

QVec Subspace::reduce(QVec v) const {
    if (v.size() != ambient_)
        throw AlgebraError("vector length does not match ambient dimension");
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Rat c = v[pivots_[i]];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            v[j] -= c * basis_.at(i, j);
    }
    return v;
}

bool Subspace::contains(const QVec& v) const {
    return is_zero_vec(reduce(v));
}

bool Subspace::contains_subspace(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        return false;
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r)))
            return false;
    return true;
}

std::optional<QVec> Subspace::coordinates(const QVec& v) const {
    if (v.size() != ambient_)
        throw AlgebraError("vector length does not match ambient dimension");
    // Basis rows are in rref, so the candidate coefficients can be read off
    // at the pivot columns; membership is then a direct check.
    QVec coeffs(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        coeffs[i] = v[pivots_[i]];
    QVec residual = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (coeffs[i] == 0)
            continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            residual[j] -= coeffs[i] * basis_.at(i, j);
    }
    if (!is_zero_vec(residual))
        return std::nullopt;
    return coeffs;
}

std::vector<QVec> quotient_basis(const Subspace& ambient, const Subspace& sub) {
    if (ambient.ambient_dim() != sub.ambient_dim())
        throw AlgebraError("quotient_basis: ambient dimensions differ");
    // Express sub inside ambient coordinates; this also checks containment.
    std::vector<QVec> sub_in_ambient;
    for (std::size_t r = 0; r < sub.dim(); ++r) {
        auto coords = ambient.coordinates(sub.basis().row(r));
        if (!coords)
            throw AlgebraError("quotient_basis: subspace is not contained in ambient");
        sub_in_ambient.push_back(std::move(*coords));
    }
    Subspace inner = Subspace::span(ambient.dim(), sub_in_ambient);
    std::vector<bool> is_pivot(ambient.dim(), false);
    for (std::size_t p : inner.pivots())
        is_pivot[p] = true;
    std::vector<QVec> reps;
    for (std::size_t i = 0; i < ambient.dim(); ++i)
        if (!is_pivot[i])
            reps.push_back(ambient.basis().row(i));
    return reps;
}

}  // namespace cutcalc::la
