#include "cutcalc/quotient.hpp"

#include "cutcalc/errors.hpp"

namespace cutcalc {

Element QuotientAlgebra::project(const Element& parent_element) const {
    const int d = parent_element.degree;
    if (d < 0 || d > parent->top_degree())
        throw AlgebraError("degree out of range");
    if (parent_element.coords.size() != parent->dim(d))
        throw AlgebraError("element does not live in the parent algebra");
    QVec residual = ideal_pieces[static_cast<std::size_t>(d)].reduce(parent_element.coords);
    const auto& reps = rep_indices[static_cast<std::size_t>(d)];
    QVec coords(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        coords[i] = residual[reps[i]];
    return Element{d, std::move(coords)};
}

Element QuotientAlgebra::lift(const Element& quotient_element) const {
    const int d = quotient_element.degree;
    if (d < 0 || d > parent->top_degree())
        throw AlgebraError("degree out of range");
    const auto& reps = rep_indices[static_cast<std::size_t>(d)];
    if (quotient_element.coords.size() != reps.size())
        throw AlgebraError("element does not live in the quotient algebra");
    QVec coords = zero_vec(parent->dim(d));
    for (std::size_t i = 0; i < reps.size(); ++i)
        coords[reps[i]] = quotient_element.coords[i];
    return Element{d, std::move(coords)};
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& parent, const Ideal& ideal) {
    if (!parent)
        throw AlgebraError("quotient_algebra: null parent");
    if (ideal.parent != parent)
        throw AlgebraError("quotient_algebra: ideal belongs to a different algebra");
    check_ideal_closure(ideal);

    const int top = parent->top_degree();
    QuotientAlgebra q;
    q.parent = parent;
    q.ideal_pieces = ideal.pieces;
    q.rep_indices.resize(static_cast<std::size_t>(top) + 1);

    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        const la::Subspace& piece = ideal.pieces[static_cast<std::size_t>(d)];
        std::vector<bool> is_pivot(parent->dim(d), false);
        for (std::size_t p : piece.pivots())
            is_pivot[p] = true;
        for (std::size_t i = 0; i < parent->dim(d); ++i) {
            if (!is_pivot[i]) {
                q.rep_indices[static_cast<std::size_t>(d)].push_back(i);
                labels[static_cast<std::size_t>(d)].push_back("[" + parent->labels(d)[i] + "]");
            }
        }
    }

    std::vector<std::vector<QVec>> mult(
        (static_cast<std::size_t>(top) + 1) * (static_cast<std::size_t>(top) + 1));
    for (int d1 = 0; d1 <= top; ++d1) {
        for (int d2 = 0; d1 + d2 <= top; ++d2) {
            const auto& reps1 = q.rep_indices[static_cast<std::size_t>(d1)];
            const auto& reps2 = q.rep_indices[static_cast<std::size_t>(d2)];
            std::vector<QVec> table;
            table.reserve(reps1.size() * reps2.size());
            for (std::size_t i : reps1)
                for (std::size_t j : reps2)
                    table.push_back(
                        q.project(Element{d1 + d2, parent->product_row(d1, d2, i, j)}).coords);
            mult[static_cast<std::size_t>(d1) * (static_cast<std::size_t>(top) + 1) +
                 static_cast<std::size_t>(d2)] = std::move(table);
        }
    }

    QVec unit = q.rep_indices[0].empty()
                    ? QVec{}
                    : [&] {
                          Element u{0, parent->unit_coords()};
                          QVec residual = ideal.pieces[0].reduce(u.coords);
                          QVec coords(q.rep_indices[0].size());
                          for (std::size_t i = 0; i < q.rep_indices[0].size(); ++i)
                              coords[i] = residual[q.rep_indices[0][i]];
                          return coords;
                      }();

    q.algebra = std::make_shared<GradedAlgebra>(top, std::move(labels), std::move(unit),
                                                std::move(mult));

    // Representative independence: ideal elements must project to zero after
    // multiplying by any basis element, in every degree pair within the bound.
    for (int d1 = 0; d1 <= top; ++d1) {
        const la::Subspace& piece = ideal.pieces[static_cast<std::size_t>(d1)];
        for (std::size_t r = 0; r < piece.dim(); ++r) {
            const Element w{d1, piece.basis().row(r)};
            for (int d2 = 0; d1 + d2 <= top; ++d2) {
                for (std::size_t i = 0; i < parent->dim(d2); ++i) {
                    const Element prod = parent->multiply(w, parent->basis_element(d2, i));
                    if (!q.project(prod).is_zero())
                        throw AlgebraError("quotient product depends on representatives in "
                                           "degrees (" + std::to_string(d1) + "," +
                                           std::to_string(d2) + ")");
                }
            }
        }
    }
    return q;
}

}  // namespace cutcalc
