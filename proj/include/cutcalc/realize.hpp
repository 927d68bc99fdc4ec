#pragma once

#include "cutcalc/algebra.hpp"
#include "cutcalc/presentation.hpp"
#include "cutcalc/subspace.hpp"

#include <optional>
#include <vector>

namespace cutcalc {

/// A presentation together with its realized algebra and the degreewise
/// normal-form data needed to evaluate polynomials in the generators.
class Realization {
public:
    Realization() = default;

    const Presentation& presentation() const { return pres_; }
    const AlgebraPtr& algebra() const { return alg_; }

    const std::vector<Monomial>& monomials(int d) const;
    const la::Subspace& relation_span(int d) const;
    /// Monomial indices (into monomials(d)) whose classes form the chosen basis.
    const std::vector<std::size_t>& basis_monomials(int d) const;

    /// Class of a homogeneous polynomial in the generators. The degree of the
    /// zero polynomial cannot be inferred, so an expected degree may be given;
    /// when both are present they must agree.
    Element eval(const Poly& p, std::optional<int> expected_degree = {}) const;

    Element generator_class(std::size_t i) const;
    Element monomial_class(const Monomial& m) const;

private:
    friend Realization realize(const Presentation& p);

    Presentation pres_;
    AlgebraPtr alg_;
    std::vector<std::vector<Monomial>> monomials_;       // per degree
    std::vector<la::Subspace> relation_spans_;           // per degree, in monomial coordinates
    std::vector<std::vector<std::size_t>> basis_cols_;   // per degree, non-pivot monomial indices
};

/// Degreewise normal form: the degree-d piece is the span of the monomials of
/// degree d modulo the span of all monomial multiples of the relations. The
/// basis is the set of non-pivot monomials under graded-lex order with
/// leftmost-pivot reduction, so outputs are reproducible.
///
/// Relations of degree above the truncation bound are vacuous and ignored.
/// Throws AlgebraError for invalid presentations and for presentations whose
/// relations annihilate the unit (degree-0 dimension would be 0).
Realization realize(const Presentation& p);

}  // namespace cutcalc
