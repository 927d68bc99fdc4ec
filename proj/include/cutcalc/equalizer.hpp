#pragma once

#include "cutcalc/hom.hpp"
#include "cutcalc/subspace.hpp"

#include <optional>

namespace cutcalc {

/// A graded algebra together with a degreewise embedding into an ambient
/// algebra. Embedding rows are in reduced echelon form, so the basis is
/// canonical; the embedding is injective per degree and intertwines products.
struct SubalgebraWithEmbedding {
    AlgebraPtr algebra;
    AlgebraPtr ambient;
    std::vector<la::Subspace> pieces;  // per degree; basis rows = embedding matrix

    Element to_ambient(const Element& x) const;
    std::optional<Element> from_ambient(const Element& x) const;
    const la::QMatrix& embedding(int d) const;
};

/// ker(f - g) inside source(f) ⊕ source(g) for two homs with a common target:
/// the subring on which both maps agree, with structure constants inherited
/// from the direct sum and re-expressed in the kernel basis. Degree 0 is the
/// diagonal copy of Q when the inputs are connected.
SubalgebraWithEmbedding equalizer_subring(const GradedHom& f, const GradedHom& g);

}  // namespace cutcalc
