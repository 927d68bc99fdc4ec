#include "cutcalc/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace cutcalc {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json dims_json(const std::vector<std::size_t>& dims) {
    ordered_json out = ordered_json::array();
    for (std::size_t d : dims)
        out.push_back(d);
    return out;
}

ordered_json presentation_json(const Presentation& p) {
    ordered_json gens = ordered_json::array();
    for (const Generator& g : p.generators)
        gens.push_back({{"name", g.name}, {"degree", g.degree}});
    ordered_json rels = ordered_json::array();
    for (const Poly& r : p.relations)
        rels.push_back(poly_str(r, p.generators));
    return {{"generators", gens}, {"relations", rels}, {"top_degree", p.top_degree}};
}

ordered_json basis_json(const GradedAlgebra& a) {
    ordered_json out = ordered_json::array();
    for (int d = 0; d <= a.top_degree(); ++d) {
        ordered_json level = ordered_json::array();
        for (const std::string& label : a.labels(d))
            level.push_back(label);
        out.push_back(level);
    }
    return out;
}

ordered_json structure_constants_json(const GradedAlgebra& a) {
    ordered_json out = ordered_json::object();
    for (int d1 = 0; d1 <= a.top_degree(); ++d1) {
        for (int d2 = 0; d1 + d2 <= a.top_degree(); ++d2) {
            if (a.dim(d1) == 0 || a.dim(d2) == 0)
                continue;
            ordered_json rows = ordered_json::array();
            for (std::size_t i = 0; i < a.dim(d1); ++i) {
                ordered_json per_i = ordered_json::array();
                for (std::size_t j = 0; j < a.dim(d2); ++j) {
                    ordered_json coords = ordered_json::array();
                    for (const Rat& c : a.product_row(d1, d2, i, j))
                        coords.push_back(rat_str(c));
                    per_i.push_back(coords);
                }
                rows.push_back(per_i);
            }
            out[std::to_string(d1) + "," + std::to_string(d2)] = rows;
        }
    }
    return out;
}

ordered_json algebra_json(const GradedAlgebra& a,
                          const std::optional<ExtractedPresentation>& pres,
                          bool with_structure) {
    ordered_json out;
    out["dims"] = dims_json(a.dims());
    out["poincare"] = poincare(a).str();
    out["basis"] = basis_json(a);
    if (pres)
        out["presentation"] = presentation_json(pres->presentation);
    if (with_structure)
        out["structure_constants"] = structure_constants_json(a);
    return out;
}

ordered_json hypotheses_json(const HypothesisReport& h, const Scenario& s) {
    ordered_json delta = ordered_json::array();
    for (const DeltaVerdict& v : h.delta) {
        delta.push_back({{"index", v.index + 1},
                         {"degree", v.degree},
                         {"in_kernel", v.in_kernel},
                         {"residual", s.m_minus.algebra()->element_str(v.residual)}});
    }
    ordered_json failing = ordered_json::array();
    for (int d : h.i_star_failing_degrees)
        failing.push_back(d);
    ordered_json structural = ordered_json::array();
    for (const std::string& f : h.structural_failures)
        structural.push_back(f);
    return {{"ok", h.ok()},
            {"i_star_surjective", h.i_star_failing_degrees.empty()},
            {"i_star_failing_degrees", failing},
            {"delta_pairs", delta},
            {"structural_failures", structural}};
}

ordered_json warnings_json(const std::vector<std::string>& warnings) {
    ordered_json out = ordered_json::array();
    for (const std::string& w : warnings)
        out.push_back(w);
    return out;
}

std::string json_str(const ordered_json& doc) {
    return doc.dump(2) + "\n";
}

// ---- text helpers ----------------------------------------------------------

void text_dims_row(std::ostream& out, const std::string& label,
                   const std::vector<std::size_t>& dims) {
    out << std::left << std::setw(16) << label;
    for (std::size_t d : dims)
        out << std::right << std::setw(4) << d;
    out << "\n";
}

void text_degree_header(std::ostream& out, int top) {
    out << std::left << std::setw(16) << "degree";
    for (int d = 0; d <= top; ++d)
        out << std::right << std::setw(4) << d;
    out << "\n";
}

void text_hypotheses(std::ostream& out, const HypothesisReport& h, const Scenario& s) {
    out << "hypotheses:\n";
    for (const std::string& f : h.structural_failures)
        out << "  structural: " << f << "\n";
    if (h.i_star_failing_degrees.empty()) {
        out << "  i* surjective in every degree: yes\n";
    } else {
        out << "  i* surjective in every degree: NO (fails in degree";
        for (int d : h.i_star_failing_degrees)
            out << " " << d;
        out << ")\n";
    }
    for (const DeltaVerdict& v : h.delta) {
        out << "  delta pair " << (v.index + 1) << " (degree " << v.degree << "): ";
        if (v.in_kernel)
            out << "inside ker(p* - i*)\n";
        else
            out << "OUTSIDE ker(p* - i*), " << delta_residual_str(s, v) << "\n";
    }
}

void text_presentation(std::ostream& out, const std::string& label,
                       const std::optional<ExtractedPresentation>& pres) {
    if (pres)
        out << label << " = " << presentation_str(pres->presentation) << "\n";
}

void text_warnings(std::ostream& out, const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings)
        out << "warning: " << w << "\n";
}

std::string scenario_name(const Scenario& s) {
    return s.name.empty() ? "(unnamed)" : s.name;
}

}  // namespace

std::vector<std::string> expect_mismatches(const Scenario& s, const CutReport& report) {
    std::vector<std::string> out;
    if (!s.expect)
        return out;
    auto compare = [&](const char* which, const std::optional<std::vector<std::size_t>>& want,
                       const std::vector<std::size_t>& got) {
        if (!want || *want == got)
            return;
        std::ostringstream msg;
        msg << "expected " << which << " dimensions";
        for (std::size_t d : *want)
            msg << " " << d;
        msg << ", computed";
        for (std::size_t d : got)
            msg << " " << d;
        out.push_back(msg.str());
    };
    compare("cplus", s.expect->c_plus, report.c_plus.algebra->dims());
    compare("c", s.expect->c, report.c.algebra->dims());
    return out;
}

std::vector<std::string> expect_mismatches_reduction(const Scenario& s,
                                                     const ReductionReport& report) {
    std::vector<std::string> out;
    if (!s.expect || !s.expect->c0)
        return out;
    const std::vector<std::size_t> got = report.c0.algebra->dims();
    if (*s.expect->c0 != got) {
        std::ostringstream msg;
        msg << "expected c0 dimensions";
        for (std::size_t d : *s.expect->c0)
            msg << " " << d;
        msg << ", computed";
        for (std::size_t d : got)
            msg << " " << d;
        out.push_back(msg.str());
    }
    return out;
}

std::string emit_report(const CutReport& report, const Scenario& s, ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json doc;
        doc["schema"] = 1;
        doc["scenario"] = s.name;
        doc["n"] = s.n;
        doc["hypotheses"] = hypotheses_json(report.hypotheses, s);
        doc["c"] = algebra_json(*report.c.algebra, report.c_presentation, false);
        doc["delta_ideal"] = {{"dims", dims_json(report.delta_ideal.dims())}};
        doc["c_plus"] = algebra_json(*report.c_plus.algebra, report.c_plus_presentation, true);
        doc["poincare_identity"] = {
            {"holds", report.poincare_consistent},
            {"lhs", report.p_c_plus.str()},
            {"rhs", (report.p_c - report.p_m_minus.reversed().shifted(s.n)).str()}};
        doc["warnings"] = warnings_json(report.warnings);
        return json_str(doc);
    }
    std::ostringstream out;
    out << "scenario: " << scenario_name(s) << "\n";
    out << "n = " << s.n << "\n";
    text_hypotheses(out, report.hypotheses, s);
    text_degree_header(out, s.n);
    text_dims_row(out, "dim C", report.c.algebra->dims());
    text_dims_row(out, "dim Im(delta)", report.delta_ideal.dims());
    text_dims_row(out, "dim C+", report.c_plus.algebra->dims());
    out << "P_C(t)  = " << report.p_c.str() << "\n";
    out << "P_C+(t) = " << report.p_c_plus.str() << "\n";
    text_presentation(out, "C ", report.c_presentation);
    text_presentation(out, "C+", report.c_plus_presentation);
    out << "poincare identity P_C+ = P_C - t^n*P_common(1/t): "
        << (report.poincare_consistent ? "holds" : "FAILS") << "\n";
    text_warnings(out, report.warnings);
    return out.str();
}

std::string emit_validation_report(const HypothesisReport& report, const Scenario& s,
                                   ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json doc;
        doc["schema"] = 1;
        doc["scenario"] = s.name;
        doc["n"] = s.n;
        doc["hypotheses"] = hypotheses_json(report, s);
        doc["warnings"] = warnings_json(report.warnings);
        return json_str(doc);
    }
    std::ostringstream out;
    out << "scenario: " << scenario_name(s) << "\n";
    text_hypotheses(out, report, s);
    out << "result: " << (report.ok() ? "valid" : "INVALID") << "\n";
    text_warnings(out, report.warnings);
    return out.str();
}

std::string emit_reduction_report(const ReductionReport& report, const Scenario& s,
                                  ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json doc;
        doc["schema"] = 1;
        doc["scenario"] = s.name;
        doc["annihilator"] = {{"dims", dims_json(report.annihilator_ideal.dims())}};
        doc["c0"] = algebra_json(*report.c0.algebra, report.c0_presentation, false);
        if (report.ses_holds)
            doc["ses_identity"] = {{"holds", *report.ses_holds},
                                   {"difference", report.ses_difference.str()}};
        doc["warnings"] = warnings_json(report.warnings);
        return json_str(doc);
    }
    std::ostringstream out;
    out << "scenario: " << scenario_name(s) << "\n";
    text_degree_header(out, report.c0.parent->top_degree());
    text_dims_row(out, "dim Ann(pd)", report.annihilator_ideal.dims());
    text_dims_row(out, "dim C0", report.c0.algebra->dims());
    out << "P_C0(t) = " << report.p_c0.str() << "\n";
    text_presentation(out, "C0", report.c0_presentation);
    if (report.ses_holds)
        out << "dimension identity P_C- = t^n*P_common(1/t) + P_C0: "
            << (*report.ses_holds ? "holds" : "FAILS") << "\n";
    text_warnings(out, report.warnings);
    return out.str();
}

bool BettiDocument::all_hold() const {
    if (!c_minus_identity.holds)
        return false;
    if (c0_identity && !c0_identity->holds)
        return false;
    if (ses && !ses->holds)
        return false;
    return true;
}

std::string emit_betti_report(const BettiDocument& doc, const Scenario& s, ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json j;
        j["schema"] = 1;
        j["scenario"] = s.name;
        j["n"] = s.n;
        j["p_m_minus"] = doc.p_m_minus.str();
        j["p_c_minus"] = doc.p_c_minus.str();
        if (doc.p_c0)
            j["p_c0"] = doc.p_c0->str();
        ordered_json identities;
        if (doc.c0_identity)
            identities["c0"] = {{"holds", doc.c0_identity->holds},
                                {"difference", doc.c0_identity->difference.str()}};
        identities["c_minus"] = {{"holds", doc.c_minus_identity.holds},
                                 {"difference", doc.c_minus_identity.difference.str()}};
        if (doc.ses)
            identities["ses"] = {{"holds", doc.ses->holds},
                                 {"difference", doc.ses->difference.str()}};
        j["identities"] = identities;
        return json_str(j);
    }
    std::ostringstream out;
    out << "scenario: " << scenario_name(s) << "\n";
    out << "P_common(t) = " << doc.p_m_minus.str() << "\n";
    out << "P_C-(t)     = " << doc.p_c_minus.str() << "\n";
    if (doc.p_c0)
        out << "P_C0(t)     = " << doc.p_c0->str() << "\n";
    if (doc.c0_identity)
        out << "(1 - t^2)*P_C0 = P_common(t) - t^n*P_common(1/t): "
            << (doc.c0_identity->holds ? "holds" : "FAILS") << "\n";
    out << "(1 - t^2)*P_C- = P_common(t) - t^(n+2)*P_common(1/t): "
        << (doc.c_minus_identity.holds ? "holds" : "FAILS") << "\n";
    if (doc.ses)
        out << "P_C- = t^2*P_C0 + P_common: " << (doc.ses->holds ? "holds" : "FAILS") << "\n";
    if (!doc.c0_identity)
        out << "C0 identities skipped: no pd class in the scenario\n";
    return out.str();
}

std::string emit_present_report(const CutReport& report, const Scenario& s, ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json doc;
        doc["schema"] = 1;
        doc["scenario"] = s.name;
        ordered_json c;
        c["dims"] = dims_json(report.c.algebra->dims());
        if (report.c_presentation)
            c["presentation"] = presentation_json(report.c_presentation->presentation);
        doc["c"] = c;
        ordered_json cp;
        cp["dims"] = dims_json(report.c_plus.algebra->dims());
        if (report.c_plus_presentation)
            cp["presentation"] = presentation_json(report.c_plus_presentation->presentation);
        doc["c_plus"] = cp;
        return json_str(doc);
    }
    std::ostringstream out;
    out << "scenario: " << scenario_name(s) << "\n";
    text_presentation(out, "C ", report.c_presentation);
    text_presentation(out, "C+", report.c_plus_presentation);
    return out.str();
}

std::string emit_iso_report(const IsoDocument& doc, const Scenario& s, ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json j;
        j["schema"] = 1;
        j["scenario"] = s.name;
        j["target"] = doc.target_name;
        j["confirmed"] = doc.verdict.ok;
        j["failure"] = doc.verdict.failure;
        return json_str(j);
    }
    std::ostringstream out;
    out << "scenario: " << scenario_name(s) << "\n";
    out << "target presentation: " << doc.target_name << "\n";
    if (doc.verdict.ok)
        out << "isomorphism with C+: confirmed\n";
    else
        out << "isomorphism with C+: REJECTED (" << doc.verdict.failure << ")\n";
    return out.str();
}

}  // namespace cutcalc
