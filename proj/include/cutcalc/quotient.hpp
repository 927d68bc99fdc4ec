#pragma once

#include "cutcalc/ideal.hpp"

#include <vector>

namespace cutcalc {

/// Quotient of a graded algebra by an ideal, with the projection and a
/// deterministic section. Representatives are the parent basis elements at
/// the earliest coordinates not hit by the ideal's pivots.
struct QuotientAlgebra {
    AlgebraPtr algebra;
    AlgebraPtr parent;
    std::vector<la::Subspace> ideal_pieces;            // per degree
    std::vector<std::vector<std::size_t>> rep_indices; // per degree, parent basis indices

    Element project(const Element& parent_element) const;
    Element lift(const Element& quotient_element) const;
};

/// Verifies the closure invariant (throws AlgebraError("ideal is not closed...")
/// otherwise), then builds per-degree quotient bases with induced structure
/// constants. Well-definedness of the induced product is re-checked:
/// representative products are reduced and ideal times parent must project to
/// zero.
QuotientAlgebra quotient_algebra(const AlgebraPtr& parent, const Ideal& ideal);

}  // namespace cutcalc
