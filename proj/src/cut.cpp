#include "cutcalc/cut.hpp"

#include "cutcalc/errors.hpp"

namespace cutcalc {

CutReport compute_cut_plus(const Scenario& s) {
    CutReport report;
    report.hypotheses = validate_scenario(s);
    if (!report.hypotheses.ok()) {
        std::string msg = report.hypotheses.failure_message();
        for (const DeltaVerdict& v : report.hypotheses.delta) {
            if (!v.in_kernel) {
                msg += ": " + delta_residual_str(s, v);
                break;
            }
        }
        throw ValidationError(msg);
    }
    report.warnings = report.hypotheses.warnings;

    report.c = equalizer_subring(s.p_star, s.i_star);

    std::vector<Element> gens_in_c;
    gens_in_c.reserve(s.delta.size());
    for (std::size_t k = 0; k < s.delta.size(); ++k) {
        const DeltaGen& pair = s.delta[k];
        const Element ambient =
            direct_sum_element(*s.c_minus.algebra(), *s.total.algebra(), pair.c_minus, pair.m);
        auto in_c = report.c.from_ambient(ambient);
        if (!in_c)
            throw ValidationError("delta pair #" + std::to_string(k + 1) +
                                  " lies outside ker(p* - i*)");
        gens_in_c.push_back(std::move(*in_c));
    }
    report.delta_ideal = ideal_span(report.c.algebra, gens_in_c);
    report.c_plus = quotient_algebra(report.c.algebra, report.delta_ideal);

    report.p_c = poincare(*report.c.algebra);
    report.p_c_plus = poincare(*report.c_plus.algebra);
    report.p_m_minus = poincare(*s.m_minus.algebra());
    const LaurentPoly expected = report.p_c - report.p_m_minus.reversed().shifted(s.n);
    report.poincare_consistent = (report.p_c_plus == expected);
    if (!report.poincare_consistent)
        report.warnings.push_back(
            "cut Poincare polynomial differs from P_C - t^n P_common(1/t) by " +
            (report.p_c_plus - expected).str() +
            "; the delta ideal does not have the dimensions of a relative class group");

    report.c_presentation = extract_presentation(*report.c.algebra);
    if (report.c_plus.algebra->dim(0) == 1)
        report.c_plus_presentation = extract_presentation(*report.c_plus.algebra);
    else
        report.warnings.push_back("cut ring is not connected; presentation extraction skipped");
    return report;
}

ReductionReport compute_reduction(const AlgebraPtr& c_minus, const Element& pd,
                                  std::optional<LaurentPoly> p_m_minus) {
    if (pd.degree != 2)
        throw AlgebraError("dual class must have degree 2, got " + std::to_string(pd.degree));
    ReductionReport report;
    if (pd.is_zero())
        report.warnings.push_back(
            "dual class is zero; the reduced ring degenerates to the zero ring");

    report.annihilator_ideal = annihilator(c_minus, pd);
    report.c0 = quotient_algebra(c_minus, report.annihilator_ideal);
    report.p_c0 = poincare(*report.c0.algebra);

    if (p_m_minus) {
        const LaurentPoly lhs = poincare(*c_minus);
        const LaurentPoly rhs =
            p_m_minus->reversed().shifted(c_minus->top_degree()) + report.p_c0;
        report.ses_difference = lhs - rhs;
        report.ses_holds = report.ses_difference.is_zero();
    }
    if (report.c0.algebra->dim(0) == 1)
        report.c0_presentation = extract_presentation(*report.c0.algebra);
    return report;
}

BettiReport betti_identities(const LaurentPoly& p_m_minus, int n, const LaurentPoly& p_c0,
                             const LaurentPoly& p_c_minus) {
    const LaurentPoly one_minus_t2 = LaurentPoly::one() - LaurentPoly::term(1, 2);
    auto check = [&](const LaurentPoly& poly, int shift) {
        IdentityVerdict v;
        const LaurentPoly lhs = one_minus_t2 * poly;
        const LaurentPoly rhs = p_m_minus - p_m_minus.reversed().shifted(shift);
        v.difference = lhs - rhs;
        v.holds = v.difference.is_zero();
        return v;
    };
    BettiReport report;
    report.c0 = check(p_c0, n);
    report.c_minus = check(p_c_minus, n + 2);
    return report;
}

IdentityVerdict ses_dimension_check(const LaurentPoly& p_c0, const LaurentPoly& p_c_minus,
                                    const LaurentPoly& p_m_minus) {
    IdentityVerdict v;
    v.difference = p_c_minus - (p_c0.shifted(2) + p_m_minus);
    v.holds = v.difference.is_zero();
    return v;
}

namespace {

Realization truncated_realization(const Realization& r, int max_degree) {
    Presentation pres = r.presentation();
    pres.top_degree = max_degree;
    return realize(pres);
}

}  // namespace

Scenario truncated_scenario(const Scenario& s, int max_degree) {
    if (max_degree < 2 || max_degree % 2 != 0)
        throw ValidationError("max degree must be an even integer >= 2");
    if (max_degree > s.n)
        throw ValidationError("max degree " + std::to_string(max_degree) +
                              " exceeds the scenario dimension " + std::to_string(s.n));
    Scenario out;
    out.name = s.name;
    out.n = max_degree;
    out.c_minus = truncated_realization(s.c_minus, max_degree);
    out.total = truncated_realization(s.total, max_degree);
    out.m_minus = truncated_realization(s.m_minus, max_degree);

    // The per-degree bases below the cutoff agree with the originals, so the
    // hom matrices restrict verbatim.
    auto restrict_hom = [&](const GradedHom& h, const Realization& src, const Realization& dst) {
        std::vector<la::QMatrix> mats;
        mats.reserve(static_cast<std::size_t>(max_degree) + 1);
        for (int d = 0; d <= max_degree; ++d)
            mats.push_back(h.matrix(d));
        return GradedHom(src.algebra(), dst.algebra(), std::move(mats));
    };
    out.p_star = restrict_hom(s.p_star, out.c_minus, out.m_minus);
    out.i_star = restrict_hom(s.i_star, out.total, out.m_minus);

    for (const DeltaGen& gen : s.delta)
        if (gen.c_minus.degree <= max_degree)
            out.delta.push_back(gen);
    if (s.pd)
        out.pd = s.pd;
    return out;
}

}  // namespace cutcalc
