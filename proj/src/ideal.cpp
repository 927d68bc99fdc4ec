#include "cutcalc/ideal.hpp"

#include "cutcalc/errors.hpp"

namespace cutcalc {

const la::Subspace& Ideal::piece(int d) const {
    if (!parent || d < 0 || d > parent->top_degree())
        throw AlgebraError("ideal degree out of range");
    return pieces[static_cast<std::size_t>(d)];
}

std::vector<std::size_t> Ideal::dims() const {
    std::vector<std::size_t> out;
    out.reserve(pieces.size());
    for (const la::Subspace& s : pieces)
        out.push_back(s.dim());
    return out;
}

Ideal ideal_span(const AlgebraPtr& parent, const std::vector<Element>& gens) {
    if (!parent)
        throw AlgebraError("ideal_span: null parent");
    const int top = parent->top_degree();
    for (const Element& g : gens) {
        if (g.degree < 0 || g.degree > top)
            throw AlgebraError("ideal generator degree " + std::to_string(g.degree) +
                               " outside 0.." + std::to_string(top));
        if (g.coords.size() != parent->dim(g.degree))
            throw AlgebraError("ideal generator is not an element of the parent algebra "
                               "(wrong coordinate length in degree " +
                               std::to_string(g.degree) + ")");
    }

    Ideal ideal;
    ideal.parent = parent;
    ideal.pieces.reserve(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        std::vector<QVec> rows;
        for (const Element& g : gens) {
            if (g.degree > d)
                continue;
            const int ds = d - g.degree;  // degree of the multiplying basis element
            for (std::size_t i = 0; i < parent->dim(ds); ++i) {
                const Element prod = parent->multiply(parent->basis_element(ds, i), g);
                rows.push_back(prod.coords);
            }
        }
        ideal.pieces.push_back(la::Subspace::span(parent->dim(d), rows));
    }
    return ideal;
}

Ideal annihilator(const AlgebraPtr& parent, const Element& e) {
    if (!parent)
        throw AlgebraError("annihilator: null parent");
    const int top = parent->top_degree();
    if (e.degree < 0 || e.degree > top || e.coords.size() != parent->dim(e.degree))
        throw AlgebraError("annihilator: element does not live in the algebra");

    Ideal ideal;
    ideal.parent = parent;
    ideal.pieces.reserve(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        if (d + e.degree > top) {
            // Multiplication lands above the manifold dimension: everything dies.
            ideal.pieces.push_back(la::Subspace::full(parent->dim(d)));
            continue;
        }
        la::QMatrix m(parent->dim(d), parent->dim(d + e.degree));
        for (std::size_t i = 0; i < parent->dim(d); ++i)
            m.set_row(i, parent->multiply(parent->basis_element(d, i), e).coords);
        ideal.pieces.push_back(la::Subspace::left_kernel(m));
    }
    return ideal;
}

void check_ideal_closure(const Ideal& ideal) {
    const AlgebraPtr& parent = ideal.parent;
    if (!parent)
        throw AlgebraError("ideal with null parent");
    const int top = parent->top_degree();
    if (ideal.pieces.size() != static_cast<std::size_t>(top) + 1)
        throw AlgebraError("ideal does not cover degrees 0..top");
    for (int d1 = 0; d1 <= top; ++d1) {
        const la::Subspace& piece = ideal.pieces[static_cast<std::size_t>(d1)];
        if (piece.ambient_dim() != parent->dim(d1))
            throw AlgebraError("ideal piece in degree " + std::to_string(d1) +
                               " has wrong ambient dimension");
        for (int d2 = 0; d1 + d2 <= top; ++d2) {
            const la::Subspace& target = ideal.pieces[static_cast<std::size_t>(d1 + d2)];
            for (std::size_t r = 0; r < piece.dim(); ++r) {
                const Element v{d1, piece.basis().row(r)};
                for (std::size_t i = 0; i < parent->dim(d2); ++i) {
                    const Element prod = parent->multiply(v, parent->basis_element(d2, i));
                    if (!target.contains(prod.coords))
                        throw AlgebraError("ideal is not closed: degree-" + std::to_string(d1) +
                                           " element times basis element " + std::to_string(i) +
                                           " of degree " + std::to_string(d2) +
                                           " leaves the ideal");
                }
            }
        }
    }
}

}  // namespace cutcalc
