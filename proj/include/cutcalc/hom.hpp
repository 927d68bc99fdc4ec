#pragma once

#include "cutcalc/algebra.hpp"
#include "cutcalc/realize.hpp"

#include <vector>

namespace cutcalc {

/// Degree-preserving unital algebra map, stored as one matrix per degree.
/// Row convention: apply(x).coords = x.coords * matrix(deg x).
class GradedHom {
public:
    GradedHom() = default;
    GradedHom(AlgebraPtr source, AlgebraPtr target, std::vector<la::QMatrix> mats);

    const AlgebraPtr& source() const { return src_; }
    const AlgebraPtr& target() const { return tgt_; }
    const la::QMatrix& matrix(int d) const;

    Element apply(const Element& x) const;

private:
    AlgebraPtr src_;
    AlgebraPtr tgt_;
    std::vector<la::QMatrix> mats_;  // per degree 0..top
};

/// Multiplicative extension of generator images. Every image must be
/// homogeneous of its generator's degree; every relation must map to zero,
/// otherwise a ValidationError names the relation and its image.
GradedHom build_hom(const Realization& source, const AlgebraPtr& target,
                    const std::vector<Element>& images);

GradedHom identity_hom(const Realization& a);

/// Per-degree verdicts, index = degree.
std::vector<bool> is_surjective_degreewise(const GradedHom& h);
std::vector<int> non_surjective_degrees(const GradedHom& h);

/// Exhaustive h(x*y) = h(x)*h(y) on basis pairs; throws AlgebraError on failure.
void check_hom_multiplicative(const GradedHom& h);

}  // namespace cutcalc
