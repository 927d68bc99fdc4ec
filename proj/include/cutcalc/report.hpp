#pragma once

#include "cutcalc/cut.hpp"
#include "cutcalc/extract.hpp"
#include "cutcalc/scenario.hpp"

#include <string>
#include <vector>

namespace cutcalc {

enum class ReportFormat { text, json };

/// All emitters are deterministic: stable key order, canonical "p/q" rationals,
/// identical input gives byte-identical output. JSON documents carry
/// "schema": 1.
std::string emit_report(const CutReport& report, const Scenario& s, ReportFormat format);
std::string emit_validation_report(const HypothesisReport& report, const Scenario& s,
                                   ReportFormat format);
std::string emit_reduction_report(const ReductionReport& report, const Scenario& s,
                                  ReportFormat format);

struct BettiDocument {
    LaurentPoly p_m_minus;
    LaurentPoly p_c_minus;
    std::optional<LaurentPoly> p_c0;  // absent without a dual class
    IdentityVerdict c_minus_identity;
    std::optional<IdentityVerdict> c0_identity;  // needs P_C0
    std::optional<IdentityVerdict> ses;          // needs P_C0

    bool all_hold() const;
};

std::string emit_betti_report(const BettiDocument& doc, const Scenario& s, ReportFormat format);

std::string emit_present_report(const CutReport& report, const Scenario& s, ReportFormat format);

struct IsoDocument {
    std::string target_name;
    IsoVerdict verdict;
};

std::string emit_iso_report(const IsoDocument& doc, const Scenario& s, ReportFormat format);

/// Mismatches between the scenario's expect block and computed dimensions;
/// empty when everything matches or no expectations were given.
std::vector<std::string> expect_mismatches(const Scenario& s, const CutReport& report);
std::vector<std::string> expect_mismatches_reduction(const Scenario& s,
                                                     const ReductionReport& report);

}  // namespace cutcalc
