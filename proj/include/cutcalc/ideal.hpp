#pragma once

#include "cutcalc/algebra.hpp"
#include "cutcalc/subspace.hpp"

#include <vector>

namespace cutcalc {

/// Degreewise subspaces of a graded algebra, closed under multiplication by
/// the whole algebra.
struct Ideal {
    AlgebraPtr parent;
    std::vector<la::Subspace> pieces;  // per degree 0..top

    const la::Subspace& piece(int d) const;
    std::vector<std::size_t> dims() const;
};

/// Smallest ideal containing the generators, computed degreewise as the span
/// of (basis element)·(generator) products. The parent is unital, so this is
/// the full two-sided span. Generators must be homogeneous elements of S.
Ideal ideal_span(const AlgebraPtr& parent, const std::vector<Element>& gens);

/// Kernel of multiplication by e, degree by degree. Degrees whose product
/// with deg e would exceed the top degree multiply into the zero space and so
/// lie wholly in the annihilator; the top degree is the ambient manifold
/// dimension, where that vanishing is genuine.
Ideal annihilator(const AlgebraPtr& parent, const Element& e);

/// Verifies closure under multiplication by every basis element; throws
/// AlgebraError with the offending degree pair.
void check_ideal_closure(const Ideal& ideal);

}  // namespace cutcalc
