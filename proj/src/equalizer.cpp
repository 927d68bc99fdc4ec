#include "cutcalc/equalizer.hpp"

#include "cutcalc/errors.hpp"

namespace cutcalc {

Element SubalgebraWithEmbedding::to_ambient(const Element& x) const {
    const int d = x.degree;
    if (d < 0 || d > algebra->top_degree())
        throw AlgebraError("degree out of range");
    const la::Subspace& piece = pieces[static_cast<std::size_t>(d)];
    if (x.coords.size() != piece.dim())
        throw AlgebraError("element does not live in the subalgebra");
    return Element{d, piece.basis().apply_row(x.coords)};
}

std::optional<Element> SubalgebraWithEmbedding::from_ambient(const Element& x) const {
    const int d = x.degree;
    if (d < 0 || d > algebra->top_degree())
        throw AlgebraError("degree out of range");
    auto coords = pieces[static_cast<std::size_t>(d)].coordinates(x.coords);
    if (!coords)
        return std::nullopt;
    return Element{d, std::move(*coords)};
}

const la::QMatrix& SubalgebraWithEmbedding::embedding(int d) const {
    if (d < 0 || d > algebra->top_degree())
        throw AlgebraError("degree out of range");
    return pieces[static_cast<std::size_t>(d)].basis();
}

SubalgebraWithEmbedding equalizer_subring(const GradedHom& f, const GradedHom& g) {
    if (f.target() != g.target())
        throw AlgebraError("equalizer requires a common target algebra");
    const AlgebraPtr& a = f.source();
    const AlgebraPtr& b = g.source();
    if (a->top_degree() != b->top_degree())
        throw AlgebraError("equalizer sources must share one top degree");
    const int top = a->top_degree();
    const AlgebraPtr ambient = direct_sum(a, b);

    SubalgebraWithEmbedding sub;
    sub.ambient = ambient;
    sub.pieces.reserve(static_cast<std::size_t>(top) + 1);

    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        // Difference map on A ⊕ B in the row convention: f stacked over -g.
        const std::size_t na = a->dim(d), nb = b->dim(d);
        la::QMatrix diff(na + nb, f.target()->dim(d));
        for (std::size_t i = 0; i < na; ++i)
            diff.set_row(i, f.matrix(d).row(i));
        for (std::size_t i = 0; i < nb; ++i)
            diff.set_row(na + i, scaled(g.matrix(d).row(i), Rat(-1)));
        la::Subspace kernel = la::Subspace::left_kernel(diff);
        for (std::size_t r = 0; r < kernel.dim(); ++r) {
            const QVec row = kernel.basis().row(r);
            const QVec left(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(na));
            const QVec right(row.begin() + static_cast<std::ptrdiff_t>(na), row.end());
            labels[static_cast<std::size_t>(d)].push_back(
                "(" + vec_str(left, a->labels(d)) + " | " + vec_str(right, b->labels(d)) + ")");
        }
        sub.pieces.push_back(std::move(kernel));
    }

    std::vector<std::vector<QVec>> mult(
        (static_cast<std::size_t>(top) + 1) * (static_cast<std::size_t>(top) + 1));
    for (int d1 = 0; d1 <= top; ++d1) {
        for (int d2 = 0; d1 + d2 <= top; ++d2) {
            const la::Subspace& p1 = sub.pieces[static_cast<std::size_t>(d1)];
            const la::Subspace& p2 = sub.pieces[static_cast<std::size_t>(d2)];
            const la::Subspace& pp = sub.pieces[static_cast<std::size_t>(d1 + d2)];
            std::vector<QVec> table;
            table.reserve(p1.dim() * p2.dim());
            for (std::size_t i = 0; i < p1.dim(); ++i) {
                const Element x{d1, p1.basis().row(i)};
                for (std::size_t j = 0; j < p2.dim(); ++j) {
                    const Element y{d2, p2.basis().row(j)};
                    const Element prod = ambient->multiply(x, y);
                    auto coords = pp.coordinates(prod.coords);
                    if (!coords)
                        throw AlgebraError("equalizer is not closed under products; "
                                           "the inputs are not both ring maps");
                    table.push_back(std::move(*coords));
                }
            }
            mult[static_cast<std::size_t>(d1) * (static_cast<std::size_t>(top) + 1) +
                 static_cast<std::size_t>(d2)] = std::move(table);
        }
    }

    auto unit_coords = sub.pieces[0].coordinates(ambient->unit_coords());
    if (!unit_coords)
        throw AlgebraError("equalizer does not contain the unit; "
                           "the inputs are not both unital maps");

    sub.algebra = std::make_shared<GradedAlgebra>(top, std::move(labels),
                                                  std::move(*unit_coords), std::move(mult));
    return sub;
}

}  // namespace cutcalc
