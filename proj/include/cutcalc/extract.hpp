#pragma once

#include "cutcalc/algebra.hpp"
#include "cutcalc/presentation.hpp"
#include "cutcalc/realize.hpp"

#include <string>
#include <vector>

namespace cutcalc {

/// Representatives of a basis of A^d / (A⁺·A⁺)^d for every degree, chosen
/// deterministically. Requires a connected algebra (degree-0 dimension 1).
std::vector<std::vector<Element>> minimal_generators(const GradedAlgebra& a);

struct ExtractedPresentation {
    Presentation presentation;
    /// Where each extracted generator sits in the source algebra, in the
    /// presentation's generator order.
    std::vector<Element> generator_images;
};

/// Generators from minimal_generators (named x1, x2, ... by degree then basis
/// position) and, per degree, minimal generators of the kernel of the free
/// graded-commutative algebra mapping onto A. The result is a truncated
/// presentation: realizing it reproduces A in every degree within the bound.
ExtractedPresentation extract_presentation(const GradedAlgebra& a);

struct IsoVerdict {
    bool ok = false;
    std::string failure;  // empty when ok
};

/// Certifies a graded ring isomorphism realize(p) ≅ a: every relation of p
/// must map to zero under the generator images, the induced map must be
/// surjective in every degree, and the per-degree dimensions must agree.
/// Degree mismatches in the images throw AlgebraError; a failed certificate
/// is a verdict, not an exception.
IsoVerdict verify_presentation_iso(const Presentation& p, const AlgebraPtr& a,
                                   const std::vector<Element>& images);

}  // namespace cutcalc
