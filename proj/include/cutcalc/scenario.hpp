#pragma once

#include "cutcalc/algebra.hpp"
#include "cutcalc/hom.hpp"
#include "cutcalc/realize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cutcalc {

/// One generator of the relative class ideal: a pair of homogeneous elements
/// of one common degree, the first in the lower cut piece, the second in the
/// total space. Valid pairs agree in the common boundary ring.
struct DeltaGen {
    Element c_minus;
    Element m;
};

struct ExpectBlock {
    std::optional<std::vector<std::size_t>> c_plus;  // per-degree dims 0..n
    std::optional<std::vector<std::size_t>> c;
    std::optional<std::vector<std::size_t>> c0;

    bool operator==(const ExpectBlock&) const = default;
};

/// Full input bundle of the pipeline. The three rings share top degree n,
/// the real dimension of the manifold being cut.
struct Scenario {
    std::string name;
    Realization c_minus;  // lower cut piece
    Realization total;    // the manifold being cut
    Realization m_minus;  // boundary retract the two maps land in
    GradedHom p_star;     // c_minus -> m_minus
    GradedHom i_star;     // total -> m_minus
    int n = 0;
    std::vector<DeltaGen> delta;
    std::optional<Element> pd;  // degree-2 class dual to the reduced space
    std::optional<ExpectBlock> expect;
};

struct DeltaVerdict {
    std::size_t index = 0;
    int degree = 0;
    bool in_kernel = false;
    Element residual;  // p*(c) - i*(m) in the common ring
};

struct HypothesisReport {
    std::vector<std::string> structural_failures;  // top-degree / shape problems
    std::vector<int> i_star_failing_degrees;
    std::vector<DeltaVerdict> delta;
    std::vector<std::string> warnings;

    bool ok() const;
    /// First failure, rendered for diagnostics; empty when ok().
    std::string failure_message() const;
};

/// Checks every scenario hypothesis without throwing: matching top degrees,
/// degreewise surjectivity of i*, and every delta pair lying in ker(p* - i*).
/// Residuals are recorded so diagnostics can quote them.
HypothesisReport validate_scenario(const Scenario& s);

/// Renders delta verdicts with the common ring's labels, e.g. for diagnostics.
std::string delta_residual_str(const Scenario& s, const DeltaVerdict& v);

}  // namespace cutcalc
