#include "cutcalc/scenario.hpp"

#include "cutcalc/errors.hpp"

#include <sstream>

namespace cutcalc {

bool HypothesisReport::ok() const {
    if (!structural_failures.empty() || !i_star_failing_degrees.empty())
        return false;
    for (const DeltaVerdict& v : delta)
        if (!v.in_kernel)
            return false;
    return true;
}

std::string HypothesisReport::failure_message() const {
    if (!structural_failures.empty())
        return structural_failures.front();
    if (!i_star_failing_degrees.empty())
        return "perfection hypothesis violated: i* is not surjective in degree " +
               std::to_string(i_star_failing_degrees.front());
    for (const DeltaVerdict& v : delta)
        if (!v.in_kernel)
            return "delta pair #" + std::to_string(v.index + 1) +
                   " lies outside ker(p* - i*)";
    return "";
}

HypothesisReport validate_scenario(const Scenario& s) {
    HypothesisReport report;

    const int n = s.n;
    if (n <= 0 || n % 2 != 0)
        report.structural_failures.push_back("n must be an even positive integer, got " +
                                             std::to_string(n));
    auto check_top = [&](const char* which, const AlgebraPtr& a) {
        if (a->top_degree() != n)
            report.structural_failures.push_back(std::string(which) + " has top degree " +
                                                 std::to_string(a->top_degree()) +
                                                 ", expected n = " + std::to_string(n));
    };
    check_top("minus", s.c_minus.algebra());
    check_top("total", s.total.algebra());
    check_top("common", s.m_minus.algebra());
    if (s.p_star.source() != s.c_minus.algebra() || s.p_star.target() != s.m_minus.algebra())
        report.structural_failures.push_back("p* does not map minus into common");
    if (s.i_star.source() != s.total.algebra() || s.i_star.target() != s.m_minus.algebra())
        report.structural_failures.push_back("i* does not map total into common");
    if (s.pd && s.pd->degree != 2)
        report.structural_failures.push_back("pd class must have degree 2, got " +
                                             std::to_string(s.pd->degree));
    if (!report.structural_failures.empty())
        return report;

    report.i_star_failing_degrees = non_surjective_degrees(s.i_star);

    for (std::size_t k = 0; k < s.delta.size(); ++k) {
        const DeltaGen& pair = s.delta[k];
        DeltaVerdict v;
        v.index = k;
        if (pair.c_minus.degree != pair.m.degree) {
            report.structural_failures.push_back(
                "delta pair #" + std::to_string(k + 1) + " mixes degrees " +
                std::to_string(pair.c_minus.degree) + " and " + std::to_string(pair.m.degree));
            continue;
        }
        v.degree = pair.c_minus.degree;
        v.residual = element_diff(s.p_star.apply(pair.c_minus), s.i_star.apply(pair.m));
        v.in_kernel = v.residual.is_zero();
        report.delta.push_back(std::move(v));
    }

    if (s.pd && s.pd->is_zero())
        report.warnings.push_back("pd class is zero; the reduced space would be degenerate");

    return report;
}

std::string delta_residual_str(const Scenario& s, const DeltaVerdict& v) {
    std::ostringstream out;
    out << "p*(c) - i*(m) = " << s.m_minus.algebra()->element_str(v.residual)
        << " in degree " << v.degree;
    return out.str();
}

}  // namespace cutcalc
