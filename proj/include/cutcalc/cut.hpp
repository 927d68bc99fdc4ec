#pragma once

#include "cutcalc/equalizer.hpp"
#include "cutcalc/extract.hpp"
#include "cutcalc/laurent.hpp"
#include "cutcalc/quotient.hpp"
#include "cutcalc/scenario.hpp"

#include <optional>

namespace cutcalc {

struct CutReport {
    HypothesisReport hypotheses;
    SubalgebraWithEmbedding c;  // the glued ring, a subring of minus ⊕ total
    Ideal delta_ideal;
    QuotientAlgebra c_plus;
    LaurentPoly p_c;
    LaurentPoly p_c_plus;
    LaurentPoly p_m_minus;
    /// P_{c_plus} == P_c - t^n * P_{m_minus}(1/t); reported, not assumed.
    bool poincare_consistent = false;
    std::optional<ExtractedPresentation> c_presentation;
    std::optional<ExtractedPresentation> c_plus_presentation;
    std::vector<std::string> warnings;
};

/// The full pipeline: validate hypotheses, form the equalizer subring of
/// (p*, i*), span the ideal on the delta generators inside it, and take the
/// quotient. Throws ValidationError when a hypothesis fails, with the failing
/// degree or the offending residual in the message.
CutReport compute_cut_plus(const Scenario& s);

struct ReductionReport {
    Ideal annihilator_ideal;
    QuotientAlgebra c0;
    LaurentPoly p_c0;
    /// P_{c_minus} == t^n * P_{m_minus}(1/t) + P_{c0}, when P_{m_minus} is given.
    std::optional<bool> ses_holds;
    LaurentPoly ses_difference;
    std::optional<ExtractedPresentation> c0_presentation;
    std::vector<std::string> warnings;
};

/// Reduced-space ring: the quotient of the lower cut piece by the annihilator
/// of the degree-2 dual class. A zero dual class is degenerate and reported
/// as a warning, not an error.
ReductionReport compute_reduction(const AlgebraPtr& c_minus, const Element& pd,
                                  std::optional<LaurentPoly> p_m_minus = {});

struct IdentityVerdict {
    bool holds = false;
    LaurentPoly difference;  // lhs - rhs
};

struct BettiReport {
    IdentityVerdict c0;       // (1 - t^2) P_{C0} = P_{M-}(t) - t^n     P_{M-}(1/t)
    IdentityVerdict c_minus;  // (1 - t^2) P_{C-} = P_{M-}(t) - t^(n+2) P_{M-}(1/t)
};

BettiReport betti_identities(const LaurentPoly& p_m_minus, int n, const LaurentPoly& p_c0,
                             const LaurentPoly& p_c_minus);

/// P_{C-} = t^2 P_{C0} + P_{M-}, exactly.
IdentityVerdict ses_dimension_check(const LaurentPoly& p_c0, const LaurentPoly& p_c_minus,
                                    const LaurentPoly& p_m_minus);

/// Scenario with every piece truncated to max_degree (even, >= 2); delta
/// generators above the bound are dropped. A debugging aid for the CLI.
Scenario truncated_scenario(const Scenario& s, int max_degree);

}  // namespace cutcalc
