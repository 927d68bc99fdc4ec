#include "cutcalc/bundled.hpp"
#include "cutcalc/dsl.hpp"
#include "cutcalc/errors.hpp"
#include "cutcalc/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;

struct Options {
    std::string input;
    std::string output_format = "text";
    int max_degree = 0;  // 0 = no override
    bool strict = false;
};

cutcalc::ReportFormat format(const Options& opts) {
    return opts.output_format == "json" ? cutcalc::ReportFormat::json
                                        : cutcalc::ReportFormat::text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw cutcalc::ValidationError("cannot read input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string scenario_name_from_path(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

struct LoadedScenario {
    cutcalc::dsl::ScenarioDoc doc;
    cutcalc::Scenario scenario;
};

LoadedScenario load(const Options& opts) {
    LoadedScenario loaded;
    const std::string text = read_file(opts.input);
    loaded.doc = cutcalc::dsl::parse_document(text);
    loaded.scenario =
        cutcalc::dsl::realize_scenario(loaded.doc, scenario_name_from_path(opts.input));
    if (opts.max_degree != 0)
        loaded.scenario = cutcalc::truncated_scenario(loaded.scenario, opts.max_degree);
    return loaded;
}

int finish(const Options& opts, const std::vector<std::string>& warnings, int code) {
    if (code == kExitOk && opts.strict && !warnings.empty()) {
        std::cerr << "error: warnings present and --strict given\n";
        return kExitValidation;
    }
    return code;
}

int run_validate(const Options& opts) {
    const LoadedScenario loaded = load(opts);
    const cutcalc::HypothesisReport report = cutcalc::validate_scenario(loaded.scenario);
    std::cout << cutcalc::emit_validation_report(report, loaded.scenario, format(opts));
    if (!report.ok()) {
        std::cerr << "error: " << report.failure_message() << "\n";
        for (const cutcalc::DeltaVerdict& v : report.delta)
            if (!v.in_kernel)
                std::cerr << "  delta pair " << (v.index + 1) << ": "
                          << cutcalc::delta_residual_str(loaded.scenario, v) << "\n";
        return kExitValidation;
    }
    return finish(opts, report.warnings, kExitOk);
}

int run_cut(const Options& opts) {
    const LoadedScenario loaded = load(opts);
    const cutcalc::CutReport report = cutcalc::compute_cut_plus(loaded.scenario);
    std::cout << cutcalc::emit_report(report, loaded.scenario, format(opts));
    const std::vector<std::string> mismatches =
        cutcalc::expect_mismatches(loaded.scenario, report);
    for (const std::string& m : mismatches)
        std::cerr << "error: " << m << "\n";
    if (!mismatches.empty())
        return kExitValidation;
    return finish(opts, report.warnings, kExitOk);
}

int run_reduce(const Options& opts) {
    const LoadedScenario loaded = load(opts);
    if (!loaded.scenario.pd)
        throw cutcalc::ValidationError("scenario has no pd class; nothing to reduce by");
    const cutcalc::ReductionReport report = cutcalc::compute_reduction(
        loaded.scenario.c_minus.algebra(), *loaded.scenario.pd,
        cutcalc::poincare(*loaded.scenario.m_minus.algebra()));
    std::cout << cutcalc::emit_reduction_report(report, loaded.scenario, format(opts));
    const std::vector<std::string> mismatches =
        cutcalc::expect_mismatches_reduction(loaded.scenario, report);
    for (const std::string& m : mismatches)
        std::cerr << "error: " << m << "\n";
    if (!mismatches.empty())
        return kExitValidation;
    if (report.ses_holds && !*report.ses_holds) {
        std::cerr << "error: the dimension identity fails; the supplied pd class is not "
                     "a dual class for these rings\n";
        return kExitValidation;
    }
    return finish(opts, report.warnings, kExitOk);
}

int run_betti(const Options& opts) {
    const LoadedScenario loaded = load(opts);
    const cutcalc::Scenario& s = loaded.scenario;
    cutcalc::BettiDocument doc;
    doc.p_m_minus = cutcalc::poincare(*s.m_minus.algebra());
    doc.p_c_minus = cutcalc::poincare(*s.c_minus.algebra());
    std::vector<std::string> warnings;
    if (s.pd) {
        const cutcalc::ReductionReport reduction =
            cutcalc::compute_reduction(s.c_minus.algebra(), *s.pd);
        doc.p_c0 = reduction.p_c0;
        const cutcalc::BettiReport identities =
            cutcalc::betti_identities(doc.p_m_minus, s.n, *doc.p_c0, doc.p_c_minus);
        doc.c_minus_identity = identities.c_minus;
        doc.c0_identity = identities.c0;
        doc.ses = cutcalc::ses_dimension_check(*doc.p_c0, doc.p_c_minus, doc.p_m_minus);
        warnings = reduction.warnings;
    } else {
        doc.c_minus_identity =
            cutcalc::betti_identities(doc.p_m_minus, s.n, cutcalc::LaurentPoly{}, doc.p_c_minus)
                .c_minus;
        warnings.push_back("no pd class: C0 identities skipped");
    }
    std::cout << cutcalc::emit_betti_report(doc, s, format(opts));
    if (!doc.all_hold()) {
        std::cerr << "error: a Poincare-polynomial identity fails\n";
        return kExitValidation;
    }
    return finish(opts, warnings, kExitOk);
}

int run_present(const Options& opts) {
    const LoadedScenario loaded = load(opts);
    const cutcalc::CutReport report = cutcalc::compute_cut_plus(loaded.scenario);
    std::cout << cutcalc::emit_present_report(report, loaded.scenario, format(opts));
    return finish(opts, report.warnings, kExitOk);
}

int run_verify_iso(const Options& opts) {
    const LoadedScenario loaded = load(opts);
    if (!loaded.doc.iso)
        throw cutcalc::ValidationError("scenario has no iso block to verify");
    const cutcalc::CutReport report = cutcalc::compute_cut_plus(loaded.scenario);
    const cutcalc::dsl::IsoCheckInput input =
        cutcalc::dsl::realize_iso(loaded.doc, loaded.scenario, report);
    cutcalc::IsoDocument doc;
    doc.target_name = loaded.doc.iso->target;
    doc.verdict =
        cutcalc::verify_presentation_iso(input.target, report.c_plus.algebra, input.images);
    std::cout << cutcalc::emit_iso_report(doc, loaded.scenario, format(opts));
    if (!doc.verdict.ok) {
        std::cerr << "error: " << doc.verdict.failure << "\n";
        return kExitValidation;
    }
    return finish(opts, report.warnings, kExitOk);
}

int run_examples(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const cutcalc::BundledExample& example : cutcalc::bundled_examples()) {
        const std::filesystem::path path = std::filesystem::path(dir) / example.filename;
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw cutcalc::ValidationError("cannot write '" + path.string() + "'");
        out << example.source;
        std::cout << "wrote " << path.string() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symplectic-cut cohomology calculator"};
    app.require_subcommand(1);

    Options opts;
    std::string examples_dir;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input)
            cmd->add_option("input", opts.input, "scenario file (.cut)")->required();
        cmd->add_option("--output", opts.output_format, "report format")
            ->check(CLI::IsMember({"text", "json"}))
            ->default_val("text");
        cmd->add_option("--max-degree", opts.max_degree,
                        "truncate the scenario to this top degree");
        cmd->add_flag("--strict", opts.strict, "treat warnings as errors");
        return cmd;
    };

    CLI::App* validate = add_common(app.add_subcommand("validate", "check hypotheses"), true);
    CLI::App* cut = add_common(app.add_subcommand("cut", "compute the cut ring C+"), true);
    CLI::App* reduce =
        add_common(app.add_subcommand("reduce", "compute the reduced ring C0"), true);
    CLI::App* betti =
        add_common(app.add_subcommand("betti", "check Poincare-polynomial identities"), true);
    CLI::App* present =
        add_common(app.add_subcommand("present", "print extracted presentations"), true);
    CLI::App* verify_iso = add_common(
        app.add_subcommand("verify-iso", "verify the iso block against the computed C+"), true);
    CLI::App* examples = app.add_subcommand("examples", "write the bundled scenarios");
    examples->add_option("dir", examples_dir, "target directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (validate->parsed())
            return run_validate(opts);
        if (cut->parsed())
            return run_cut(opts);
        if (reduce->parsed())
            return run_reduce(opts);
        if (betti->parsed())
            return run_betti(opts);
        if (present->parsed())
            return run_present(opts);
        if (verify_iso->parsed())
            return run_verify_iso(opts);
        if (examples->parsed())
            return run_examples(examples_dir);
    } catch (const cutcalc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const cutcalc::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
