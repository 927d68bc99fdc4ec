#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutcalc/bundled.hpp"
#include "cutcalc/cut.hpp"
#include "cutcalc/dsl.hpp"
#include "cutcalc/errors.hpp"
#include "cutcalc/report.hpp"

#include <random>
#include <string>

using namespace cutcalc;
using dsl::parse_document;
using dsl::parse_scenario;
using dsl::print_scenario;
using dsl::ScenarioDoc;

namespace {

ParseError capture_parse_error(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a ParseError");
    return ParseError(0, 0, "unreachable");
}

const std::string kTinyScenario = R"(algebra A { gen a:2; rel a^3; top 4; }
algebra B { top 4; }
map p: A -> B { a -> 0; }
map i: A -> B { a -> 0; }
cut { minus = A; total = A; common = B; p = p; i = i; n = 4; }
)";

}  // namespace

TEST_CASE("parse: bundled flag scenario") {
    const ScenarioDoc doc = parse_document(flag_u3_source());
    CHECK(doc.algebras.size() == 4);  // three rings plus the iso target
    CHECK(doc.maps.size() == 2);
    CHECK(doc.cut.n == 6);
    CHECK(doc.cut.delta.size() == 2);
    CHECK(doc.cut.delta[0].degree == 4);
    CHECK(doc.cut.delta[1].degree == 6);
    CHECK(doc.cut.pd.has_value());
    REQUIRE(doc.iso.has_value());
    CHECK(doc.iso->target == "bott_samelson");
    CHECK(doc.iso->images.size() == 3);

    const Scenario s = dsl::realize_scenario(doc, "flag_u3");
    CHECK(s.n == 6);
    CHECK(s.c_minus.algebra()->dims() == std::vector<std::size_t>{1, 0, 2, 0, 2, 0, 1});
    CHECK(s.total.algebra()->dims() == std::vector<std::size_t>{1, 0, 2, 0, 2, 0, 1});
    CHECK(s.m_minus.algebra()->dims() == std::vector<std::size_t>{1, 0, 1, 0, 0, 0, 0});
    CHECK(s.delta.size() == 2);
    CHECK(validate_scenario(s).ok());
}

TEST_CASE("parse: bundled blowup scenario") {
    const Scenario s = parse_scenario(blowup_cp2_source(), "blowup_cp2");
    CHECK(s.n == 4);
    CHECK(s.delta.size() == 1);
    CHECK(s.pd.has_value());
    REQUIRE(s.expect.has_value());
    CHECK(s.expect->c_plus == std::vector<std::size_t>{1, 0, 2, 0, 1});
    CHECK(validate_scenario(s).ok());
}

TEST_CASE("parse errors carry positions: syntax error") {
    const ParseError e = capture_parse_error("algebra A { gen a:2; top 4 }\n");
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("expected ';'") != std::string::npos);
}

TEST_CASE("parse errors: unexpected character") {
    const ParseError e = capture_parse_error("algebra A { gen a:2; rel a$b; top 4; }");
    CHECK(std::string(e.what()).find("unexpected character") != std::string::npos);
    CHECK(e.col() == 27);
}

TEST_CASE("parse errors: unknown identifier in a relation") {
    const ParseError e =
        capture_parse_error("algebra A { gen u:2; rel u*w; top 4; }\n"
                            "algebra B { top 4; }\n"
                            "map p: A -> B { u -> 0; }\n"
                            "cut { minus = A; total = A; common = B; p = p; i = p; n = 4; }\n");
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("unknown identifier 'w'") != std::string::npos);
}

TEST_CASE("parse errors: inhomogeneous relation") {
    const ParseError e = capture_parse_error("algebra A { gen u:2, v:4; rel u*v - u; top 8; }");
    CHECK(std::string(e.what()).find("not homogeneous") != std::string::npos);
}

TEST_CASE("parse errors: degree mismatch in a map image") {
    const ParseError e =
        capture_parse_error("algebra A { gen a:2; top 4; }\n"
                            "algebra B { gen b:2; top 4; }\n"
                            "map p: A -> B { a -> b^2; }\n");
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("degree 4, expected 2") != std::string::npos);
}

TEST_CASE("parse errors: delta pair referencing an undefined generator") {
    const ParseError e = capture_parse_error(
        "algebra A { gen a:2; rel a^3; top 4; }\n"
        "algebra B { top 4; }\n"
        "map p: A -> B { a -> 0; }\n"
        "cut { minus = A; total = A; common = B; p = p; i = p; n = 4;\n"
        "      delta = [ { cminus: a^2, m: w } ]; }\n");
    CHECK(e.line() == 5);
    CHECK(std::string(e.what()).find("unknown identifier 'w'") != std::string::npos);
}

TEST_CASE("parse errors: delta pair mixing degrees") {
    const ParseError e = capture_parse_error(
        "algebra A { gen a:2; rel a^3; top 4; }\n"
        "algebra B { top 4; }\n"
        "map p: A -> B { a -> 0; }\n"
        "cut { minus = A; total = A; common = B; p = p; i = p; n = 4;\n"
        "      delta = [ { cminus: a^2, m: a } ]; }\n");
    CHECK(std::string(e.what()).find("mixes degrees 4 and 2") != std::string::npos);
}

TEST_CASE("parse errors: duplicate definitions") {
    CHECK(std::string(capture_parse_error("algebra A { top 4; } algebra A { top 4; }").what())
              .find("duplicate algebra") != std::string::npos);
    CHECK(std::string(capture_parse_error("algebra A { gen a:2, a:2; top 4; }").what())
              .find("duplicate generator") != std::string::npos);
    const std::string two_maps =
        "algebra A { top 4; } map p: A -> A { } map p: A -> A { }";
    CHECK(std::string(capture_parse_error(two_maps).what()).find("duplicate map") !=
          std::string::npos);
}

TEST_CASE("parse errors: missing required pieces") {
    CHECK(std::string(capture_parse_error("algebra A { gen a:2; }").what())
              .find("missing its top degree") != std::string::npos);
    CHECK(std::string(capture_parse_error("algebra A { top 4; }").what())
              .find("missing cut block") != std::string::npos);
    const std::string no_image =
        "algebra A { gen a:2; top 4; } algebra B { top 4; } map p: A -> B { }";
    CHECK(std::string(capture_parse_error(no_image).what()).find("missing an image") !=
          std::string::npos);
    const std::string no_n =
        "algebra A { top 4; } map p: A -> A { } "
        "cut { minus = A; total = A; common = A; p = p; i = p; }";
    CHECK(std::string(capture_parse_error(no_n).what()).find("missing 'n'") !=
          std::string::npos);
}

TEST_CASE("parse errors: map endpoints must match the cut wiring") {
    const std::string wrong =
        "algebra A { gen a:2; rel a^3; top 4; }\n"
        "algebra B { top 4; }\n"
        "map p: B -> B { }\n"
        "map i: A -> B { a -> 0; }\n"
        "cut { minus = A; total = A; common = B; p = p; i = i; n = 4; }\n";
    CHECK(std::string(capture_parse_error(wrong).what()).find("must go from") !=
          std::string::npos);
}

TEST_CASE("parse: rational coefficients, parentheses and unary minus") {
    const std::string text =
        "algebra A { gen a:2, b:2; rel 3/2*a^2 - (b - a)*b; top 4; }\n"
        "algebra B { top 4; }\n"
        "map p: A -> B { a -> 0; b -> 0; }\n"
        "cut { minus = A; total = A; common = B; p = p; i = p; n = 4; }\n";
    const ScenarioDoc doc = parse_document(text);
    const Poly& rel = doc.algebras[0].pres.relations[0];
    // 3/2 a^2 - b^2 + ab over (a, b).
    CHECK(rel.at(Monomial({2, 0})) == rat(3, 2));
    CHECK(rel.at(Monomial({1, 1})) == Rat(1));
    CHECK(rel.at(Monomial({0, 2})) == Rat(-1));
}

TEST_CASE("parse: zero denominators are rejected") {
    const ParseError e = capture_parse_error("algebra A { gen a:2; rel 1/0*a^2; top 4; }");
    CHECK(std::string(e.what()).find("zero denominator") != std::string::npos);
}

TEST_CASE("round trip: print then parse is the identity on bundled scenarios") {
    for (const BundledExample& example : bundled_examples()) {
        const ScenarioDoc doc = parse_document(example.source);
        const std::string printed = print_scenario(doc);
        const ScenarioDoc again = parse_document(printed);
        CHECK(again == doc);
        CHECK(print_scenario(again) == printed);
    }
}

TEST_CASE("round trip: tiny scenario") {
    const ScenarioDoc doc = parse_document(kTinyScenario);
    CHECK(parse_document(print_scenario(doc)) == doc);
}

TEST_CASE("fuzz: the parser throws ParseError and nothing else") {
    std::mt19937 rng(0xC0FFEE);
    const std::string alphabet =
        "abgimnptuvw 0123456789{}[]();:,=+-*/^#\n\t ->algebra map cut iso rel gen top delta pd";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<std::size_t> length(0, 160);
    int parsed_ok = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text;
        const std::size_t len = length(rng);
        for (std::size_t k = 0; k < len; ++k)
            text.push_back(alphabet[pick(rng)]);
        try {
            parse_document(text);
            ++parsed_ok;
        } catch (const ParseError&) {
            // expected
        }
    }
    CHECK(parsed_ok >= 0);  // reaching here means no crash and no foreign exception
}

TEST_CASE("fuzz: mutated bundled source never crashes the parser") {
    std::mt19937 rng(1234321);
    const std::string base{flag_u3_source()};
    std::uniform_int_distribution<std::size_t> pos(0, base.size() - 1);
    std::uniform_int_distribution<int> byte(32, 126);
    for (int trial = 0; trial < 1500; ++trial) {
        std::string text = base;
        for (int edits = 0; edits < 1 + trial % 4; ++edits)
            text[pos(rng)] = static_cast<char>(byte(rng));
        try {
            parse_document(text);
        } catch (const ParseError&) {
            // expected
        }
    }
}

TEST_CASE("reports are deterministic and carry the schema version") {
    const ScenarioDoc doc = parse_document(flag_u3_source());
    const Scenario s = dsl::realize_scenario(doc, "flag_u3");
    const CutReport report = compute_cut_plus(s);

    const std::string json1 = emit_report(report, s, ReportFormat::json);
    const std::string json2 =
        emit_report(compute_cut_plus(dsl::realize_scenario(parse_document(flag_u3_source()),
                                                           "flag_u3")),
                    s, ReportFormat::json);
    CHECK(json1 == json2);
    CHECK(json1.find("\"schema\": 1") != std::string::npos);
    CHECK(json1.find("\"dims\": [\n      1,\n      0,\n      3,\n      0,\n      3,\n      0,\n      1\n    ]") != std::string::npos);

    const std::string text1 = emit_report(report, s, ReportFormat::text);
    CHECK(text1 == emit_report(report, s, ReportFormat::text));
    CHECK(text1.find("dim C+") != std::string::npos);
}

TEST_CASE("validation report names the failing degree") {
    const std::string broken =
        "algebra A { gen a:2; rel a^3; top 4; }\n"
        "algebra B { gen bbar:2; rel bbar^2; top 4; }\n"
        "map p: A -> B { a -> bbar; }\n"
        "map i: A -> B { a -> 0; }\n"
        "cut { minus = A; total = A; common = B; p = p; i = i; n = 4; }\n";
    const Scenario s = parse_scenario(broken, "broken");
    const HypothesisReport report = validate_scenario(s);
    CHECK_FALSE(report.ok());
    CHECK(report.i_star_failing_degrees == std::vector<int>{2});
    const std::string text = emit_validation_report(report, s, ReportFormat::text);
    CHECK(text.find("degree 2") != std::string::npos);
    CHECK(text.find("INVALID") != std::string::npos);
    const std::string json = emit_validation_report(report, s, ReportFormat::json);
    CHECK(json.find("\"i_star_failing_degrees\": [\n      2\n    ]") != std::string::npos);
}

TEST_CASE("iso block: realize and verify against the computed cut ring") {
    const ScenarioDoc doc = parse_document(flag_u3_source());
    const Scenario s = dsl::realize_scenario(doc, "flag_u3");
    const CutReport report = compute_cut_plus(s);
    const dsl::IsoCheckInput input = dsl::realize_iso(doc, s, report);
    CHECK(input.target.generators.size() == 3);
    const IsoVerdict verdict =
        verify_presentation_iso(input.target, report.c_plus.algebra, input.images);
    CHECK(verdict.ok);
}

TEST_CASE("iso block images must lie in the equalizer") {
    std::string text{flag_u3_source()};
    // Misdeclare the first iso image: (a | 0) is not in ker(p* - i*).
    const std::string needle = "a -> { cminus: b, m: v };";
    text.replace(text.find(needle), needle.size(), "a -> { cminus: a, m: 0 };");
    const ScenarioDoc doc = parse_document(text);
    const Scenario s = dsl::realize_scenario(doc, "flag_u3");
    const CutReport report = compute_cut_plus(s);
    try {
        dsl::realize_iso(doc, s, report);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("outside ker(p* - i*)") != std::string::npos);
        CHECK(std::string(e.what()).find("abar") != std::string::npos);
    }
}

TEST_CASE("expect mismatches are detected") {
    std::string text{blowup_cp2_source()};
    const std::string needle = "cplus = 1,0,2,0,1;";
    text.replace(text.find(needle), needle.size(), "cplus = 1,0,3,0,1;");
    const Scenario s = parse_scenario(text, "blowup_bad");
    const CutReport report = compute_cut_plus(s);
    const auto mismatches = expect_mismatches(s, report);
    REQUIRE(mismatches.size() == 1);
    CHECK(mismatches[0].find("cplus") != std::string::npos);
}
