#pragma once

#include "cutcalc/cut.hpp"
#include "cutcalc/presentation.hpp"
#include "cutcalc/scenario.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cutcalc::dsl {

struct AlgebraDef {
    std::string name;
    Presentation pres;

    bool operator==(const AlgebraDef&) const = default;
};

struct MapImage {
    std::string gen;  // source generator name
    Poly poly;        // over the target algebra's generators

    bool operator==(const MapImage&) const = default;
};

struct MapDef {
    std::string name;
    std::string src;
    std::string dst;
    std::vector<MapImage> images;  // one per source generator, declaration order

    bool operator==(const MapDef&) const = default;
};

struct DeltaPairSrc {
    Poly c_minus;  // over the minus algebra's generators
    Poly m;        // over the total algebra's generators
    int degree = 0;

    bool operator==(const DeltaPairSrc&) const = default;
};

struct CutDef {
    std::string minus;
    std::string total;
    std::string common;
    std::string p;  // map minus -> common
    std::string i;  // map total -> common
    int n = 0;
    std::vector<DeltaPairSrc> delta;
    std::optional<Poly> pd;  // over the minus algebra's generators
    std::optional<ExpectBlock> expect;

    bool operator==(const CutDef&) const = default;
};

struct IsoImageSrc {
    std::string gen;  // target-presentation generator name
    Poly c_minus;
    Poly m;

    bool operator==(const IsoImageSrc&) const = default;
};

struct IsoDef {
    std::string target;  // algebra name; its presentation is the candidate
    std::vector<IsoImageSrc> images;

    bool operator==(const IsoDef&) const = default;
};

struct ScenarioDoc {
    std::vector<AlgebraDef> algebras;
    std::vector<MapDef> maps;
    CutDef cut;
    std::optional<IsoDef> iso;

    const AlgebraDef& algebra(const std::string& name) const;
    const MapDef& map(const std::string& name) const;

    bool operator==(const ScenarioDoc&) const = default;
};

/// Parses and validates a scenario source. Throws ParseError with 1-based
/// line/column for every rejected input: syntax errors, unknown identifiers,
/// inhomogeneous relations, degree mismatches in map images or delta pairs,
/// and duplicate definitions.
ScenarioDoc parse_document(std::string_view text);

/// Realizes the three rings, builds both maps (rejecting any that fails to
/// kill a relation), and evaluates delta generators and the dual class.
Scenario realize_scenario(const ScenarioDoc& doc, const std::string& name = "");

/// parse_document followed by realize_scenario.
Scenario parse_scenario(std::string_view text, const std::string& name = "");

/// Canonical rendering; parse_document(print_scenario(doc)) == doc.
std::string print_scenario(const ScenarioDoc& doc);

struct IsoCheckInput {
    Presentation target;
    std::vector<Element> images;  // in the cut ring c_plus
};

/// Evaluates the iso block against a computed cut report: each labeled pair
/// must lie in ker(p* - i*) and is then projected to the quotient.
IsoCheckInput realize_iso(const ScenarioDoc& doc, const Scenario& s, const CutReport& report);

}  // namespace cutcalc::dsl
