// Acceptance suite: runs every criterion end to end, prints one line per
// criterion, and exits with the number of failures. All comparisons are
// exact; the per-criterion wall-clock budgets are enforced here as well.

#include "cutcalc/bundled.hpp"
#include "cutcalc/cut.hpp"
#include "cutcalc/dsl.hpp"
#include "cutcalc/errors.hpp"
#include "cutcalc/report.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace cutcalc;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<void()> body;
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition)
        throw Failure(message);
}

template <typename T>
void require_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream msg;
        msg << what << ": mismatch";
        throw Failure(msg.str());
    }
}

std::vector<std::size_t> dims(std::initializer_list<std::size_t> xs) {
    return std::vector<std::size_t>(xs);
}

Poly make_poly(std::size_t ngens,
               std::initializer_list<std::pair<long, std::vector<unsigned>>> terms) {
    Poly p;
    for (const auto& [c, exps] : terms) {
        require(exps.size() == ngens, "make_poly: bad arity");
        poly_add_in_place(p, poly_term(Rat(c), Monomial(std::vector<unsigned>(exps))));
    }
    return p;
}

// ---- shared corpus --------------------------------------------------------

Presentation truncated_poly_ring(unsigned k) {
    Presentation p;
    p.generators = {{"a", 2}};
    p.relations = {make_poly(1, {{1, {k}}})};
    p.top_degree = 2 * static_cast<int>(k - 1);
    return p;
}

Presentation product_of_two(unsigned j, unsigned k) {
    Presentation p;
    p.generators = {{"a", 2}, {"b", 2}};
    p.relations = {make_poly(2, {{1, {j, 0}}}), make_poly(2, {{1, {0, k}}})};
    p.top_degree = 2 * static_cast<int>(j - 1) + 2 * static_cast<int>(k - 1);
    return p;
}

struct Corpus {
    std::vector<Presentation> presentations;           // everything realizable
    std::vector<AlgebraPtr> algebras;                  // realized + computed rings
    std::vector<Ideal> ideals;                         // delta ideals + annihilators
    std::vector<QuotientAlgebra> quotients;            // cut + reduced rings
};

Corpus build_corpus() {
    Corpus corpus;
    for (unsigned k = 1; k <= 6; ++k)
        corpus.presentations.push_back(truncated_poly_ring(k));
    for (unsigned j = 2; j <= 4; ++j)
        for (unsigned k = j; k <= 4; ++k)
            corpus.presentations.push_back(product_of_two(j, k));
    corpus.presentations.push_back(product_of_two(2, 6));

    const Scenario flag = dsl::parse_scenario(flag_u3_source(), "flag_u3");
    const Scenario blowup = dsl::parse_scenario(blowup_cp2_source(), "blowup_cp2");
    for (const Scenario* s : {&flag, &blowup}) {
        corpus.presentations.push_back(s->c_minus.presentation());
        corpus.presentations.push_back(s->total.presentation());
        corpus.presentations.push_back(s->m_minus.presentation());
    }

    for (const Presentation& p : corpus.presentations)
        corpus.algebras.push_back(realize(p).algebra());

    for (const Scenario* s : {&flag, &blowup}) {
        const CutReport report = compute_cut_plus(*s);
        corpus.algebras.push_back(report.c.algebra);
        corpus.algebras.push_back(report.c_plus.algebra);
        corpus.ideals.push_back(report.delta_ideal);
        corpus.quotients.push_back(report.c_plus);

        const ReductionReport reduction =
            compute_reduction(s->c_minus.algebra(), *s->pd, poincare(*s->m_minus.algebra()));
        corpus.algebras.push_back(reduction.c0.algebra);
        corpus.ideals.push_back(reduction.annihilator_ideal);
        corpus.quotients.push_back(reduction.c0);
    }

    // A few spanned ideals beyond those the pipeline produces.
    const Realization cp3 = realize(truncated_poly_ring(4));
    corpus.ideals.push_back(ideal_span(cp3.algebra(), {cp3.generator_class(0)}));
    const Realization prod = realize(product_of_two(3, 3));
    corpus.ideals.push_back(
        ideal_span(prod.algebra(), {prod.algebra()->multiply(prod.generator_class(0),
                                                             prod.generator_class(1))}));
    return corpus;
}

// ---- CLI helpers for criterion 6 ------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string err;
};

const fs::path& workdir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("cutcalc_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

CliResult run_cli(const std::string& args) {
    const fs::path err = workdir() / "stderr.txt";
    const std::string command = std::string(CUTCALC_CLI_PATH) + " " + args + " > " +
                                (workdir() / "stdout.txt").string() + " 2> " + err.string();
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(err, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.err = buffer.str();
    return result;
}

fs::path write_file(const std::string& name, std::string_view content) {
    const fs::path path = workdir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

// ---- criteria ---------------------------------------------------------------

void criterion_flag_end_to_end() {
    const dsl::ScenarioDoc doc = dsl::parse_document(flag_u3_source());
    const Scenario s = dsl::realize_scenario(doc, "flag_u3");
    const CutReport report = compute_cut_plus(s);

    require_eq(report.c.algebra->dims(), dims({1, 0, 3, 0, 4, 0, 2}), "H(C) dims");
    require_eq(report.c_plus.algebra->dims(), dims({1, 0, 3, 0, 3, 0, 1}), "H(C+) dims");

    // Degree-4 relation space of the extracted presentation of C equals
    // span{x*y - x^2 - y^2, y*z} with x = (a|u), y = (0|v), z = (b|0).
    require(report.c_presentation.has_value(), "C presentation extracted");
    const ExtractedPresentation& ext = *report.c_presentation;
    const QVec x_amb = {Rat(1), Rat(0), Rat(1), Rat(0)};
    const QVec z_amb = {Rat(0), Rat(1), Rat(0), Rat(0)};
    const QVec y_amb = {Rat(0), Rat(0), Rat(0), Rat(1)};
    require(report.c.to_ambient(ext.generator_images[0]).coords == x_amb, "x1 = (a|u)");
    require(report.c.to_ambient(ext.generator_images[1]).coords == z_amb, "x2 = (b|0)");
    require(report.c.to_ambient(ext.generator_images[2]).coords == y_amb, "x3 = (0|v)");

    const auto& gens = ext.presentation.generators;
    const std::vector<Monomial> monos = enumerate_monomials(gens, 4);
    auto row_of = [&](const Poly& poly) {
        QVec row = zero_vec(monos.size());
        for (const auto& [m, c] : poly)
            for (std::size_t col = 0; col < monos.size(); ++col)
                if (monos[col] == m)
                    row[col] += c;
        return row;
    };
    std::vector<QVec> degree4_rows;
    for (const Poly& rel : ext.presentation.relations)
        if (*poly_degree(rel, gens) == 4)
            degree4_rows.push_back(row_of(rel));
    const la::Subspace computed = la::Subspace::span(monos.size(), degree4_rows);
    // x, z, y are generators 1, 2, 3: x*y = x1*x3, y*z = x3*x2.
    const la::Subspace expected = la::Subspace::span(
        monos.size(),
        {row_of(make_poly(3, {{1, {1, 0, 1}}, {-1, {2, 0, 0}}, {-1, {0, 0, 2}}})),
         row_of(make_poly(3, {{1, {0, 1, 1}}}))});
    require(computed == expected, "degree-4 relation space of H(C)");

    // The bundled iso block carries the known presentation of the upper cut
    // space and its generator images; verify the isomorphism.
    const dsl::IsoCheckInput iso = dsl::realize_iso(doc, s, report);
    const IsoVerdict verdict =
        verify_presentation_iso(iso.target, report.c_plus.algebra, iso.images);
    require(verdict.ok, "isomorphism with the known ring: " + verdict.failure);
}

void criterion_blowup() {
    const Scenario s = dsl::parse_scenario(blowup_cp2_source(), "blowup_cp2");
    const CutReport report = compute_cut_plus(s);
    require_eq(report.c_plus.algebra->dims(), dims({1, 0, 2, 0, 1}), "H(C+) dims");

    // Independent dense path: kernel and ideal dimensions via integer
    // elimination only.
    for (int d = 0; d <= s.n; ++d) {
        const std::size_t na = s.c_minus.algebra()->dim(d);
        const std::size_t nb = s.total.algebra()->dim(d);
        la::QMatrix diff(na + nb, s.m_minus.algebra()->dim(d));
        for (std::size_t r = 0; r < na; ++r)
            diff.set_row(r, s.p_star.matrix(d).row(r));
        for (std::size_t r = 0; r < nb; ++r)
            diff.set_row(na + r, scaled(s.i_star.matrix(d).row(r), Rat(-1)));
        const std::size_t kernel_dim = na + nb - oracle::bareiss_rank_q(diff);
        require(report.c.algebra->dim(d) == kernel_dim, "oracle kernel dim");

        std::vector<QVec> rows;
        for (const DeltaGen& gen : s.delta) {
            const Element ambient = direct_sum_element(*s.c_minus.algebra(),
                                                       *s.total.algebra(), gen.c_minus, gen.m);
            const auto in_c = report.c.from_ambient(ambient);
            require(in_c.has_value(), "delta generator in the equalizer");
            if (in_c->degree > d)
                continue;
            for (std::size_t i = 0; i < report.c.algebra->dim(d - in_c->degree); ++i)
                rows.push_back(
                    report.c.algebra
                        ->multiply(report.c.algebra->basis_element(d - in_c->degree, i), *in_c)
                        .coords);
        }
        const std::size_t ideal_dim =
            rows.empty()
                ? 0
                : oracle::bareiss_rank_q(la::QMatrix::from_rows(rows, report.c.algebra->dim(d)));
        require(report.c_plus.algebra->dim(d) == kernel_dim - ideal_dim, "oracle cut dim");
    }

    // Reduced ring via the annihilator: Q[a]/(a^2).
    const ReductionReport reduction = compute_reduction(
        s.c_minus.algebra(), *s.pd, poincare(*s.m_minus.algebra()));
    require_eq(reduction.c0.algebra->dims(), dims({1, 0, 1, 0, 0}), "H(C0) dims");
    const Element a_class = reduction.c0.project(s.c_minus.generator_class(0));
    require(!a_class.is_zero(), "class of a is nonzero in C0");
    require(reduction.c0.algebra->multiply(a_class, a_class).is_zero(), "a^2 = 0 in C0");
    require(reduction.ses_holds.has_value() && *reduction.ses_holds,
            "reduction dimension identity");
}

void criterion_poincare_identities() {
    for (const BundledExample& example : bundled_examples()) {
        const Scenario s = dsl::parse_scenario(example.source, example.filename);
        const LaurentPoly p_m_minus = poincare(*s.m_minus.algebra());
        const LaurentPoly p_c_minus = poincare(*s.c_minus.algebra());
        require(s.pd.has_value(), "bundled scenario has a dual class");
        const ReductionReport reduction = compute_reduction(s.c_minus.algebra(), *s.pd);
        const BettiReport betti =
            betti_identities(p_m_minus, s.n, reduction.p_c0, p_c_minus);
        require(betti.c0.holds, std::string(example.filename) + ": C0 identity");
        require(betti.c_minus.holds, std::string(example.filename) + ": C- identity");
        const IdentityVerdict ses =
            ses_dimension_check(reduction.p_c0, p_c_minus, p_m_minus);
        require(ses.holds, std::string(example.filename) + ": dimension identity");
    }
}

void criterion_property_suite() {
    const Corpus corpus = build_corpus();
    for (const AlgebraPtr& a : corpus.algebras) {
        check_unital(*a);
        check_graded_commutative(*a);
        check_associative(*a);
    }
    for (const Ideal& ideal : corpus.ideals)
        check_ideal_closure(ideal);
    for (const QuotientAlgebra& q : corpus.quotients) {
        for (int d1 = 0; d1 <= q.parent->top_degree(); ++d1) {
            const la::Subspace& piece = q.ideal_pieces[static_cast<std::size_t>(d1)];
            for (std::size_t r = 0; r < piece.dim(); ++r) {
                const Element w{d1, piece.basis().row(r)};
                for (int d2 = 0; d1 + d2 <= q.parent->top_degree(); ++d2)
                    for (std::size_t i = 0; i < q.parent->dim(d2); ++i)
                        require(q.project(q.parent->multiply(w, q.parent->basis_element(d2, i)))
                                    .is_zero(),
                                "representative independence");
            }
        }
    }
    for (const AlgebraPtr& a : corpus.algebras) {
        const ExtractedPresentation ext = extract_presentation(*a);
        require(realize(ext.presentation).algebra()->dims() == a->dims(),
                "extract/realize round trip dims");
        require(verify_presentation_iso(ext.presentation, a, ext.generator_images).ok,
                "extract/realize round trip iso");
    }
}

void criterion_oracle_equivalence() {
    Corpus corpus = build_corpus();
    // Extracted presentations of the computed rings join the corpus, so the
    // oracle also re-derives the pipeline outputs.
    for (const AlgebraPtr& a : corpus.algebras)
        corpus.presentations.push_back(extract_presentation(*a).presentation);
    for (const Presentation& p : corpus.presentations) {
        const std::vector<std::size_t> fast = realize(p).algebra()->dims();
        const std::vector<std::size_t> dense = oracle::realized_dims(p);
        require(fast == dense, "monomial-span dims equal dense-path dims");
    }
}

void criterion_hypothesis_rejection() {
    const std::string broken =
        "algebra A { gen a:2; rel a^3; top 4; }\n"
        "algebra B { gen bbar:2; rel bbar^2; top 4; }\n"
        "map p: A -> B { a -> bbar; }\n"
        "map i: A -> B { a -> 0; }\n"
        "cut { minus = A; total = A; common = B; p = p; i = i; n = 4; }\n";
    const fs::path broken_path = write_file("broken.cut", broken);
    const CliResult validate = run_cli("validate " + broken_path.string());
    require(validate.exit_code == 1, "validate exits 1 on a non-surjective i*");
    require(validate.err.find("degree 2") != std::string::npos,
            "diagnostic names the failing degree");

    std::string bad_delta{flag_u3_source()};
    const std::string needle = "{ cminus: b^2, m: v^2 }";
    bad_delta.replace(bad_delta.find(needle), needle.size(), "{ cminus: a, m: 0 }");
    const fs::path bad_path = write_file("bad_delta.cut", bad_delta);
    const CliResult cut = run_cli("cut " + bad_path.string());
    require(cut.exit_code == 1, "cut exits 1 on a delta pair outside the kernel");
    require(cut.err.find("p*(c) - i*(m)") != std::string::npos &&
                cut.err.find("abar") != std::string::npos,
            "diagnostic quotes the residual");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"flag example end-to-end", 5.0, criterion_flag_end_to_end},
        {"blowup example with dense oracle", 1.0, criterion_blowup},
        {"Poincare-polynomial identities", 1.0, criterion_poincare_identities},
        {"property suite on the corpus", 30.0, criterion_property_suite},
        {"oracle equivalence of both dimension paths", 30.0, criterion_oracle_equivalence},
        {"hypothesis rejection via the CLI", 10.0, criterion_hypothesis_rejection},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& criterion = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            criterion.body();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && seconds > criterion.limit_seconds)
            failure = "exceeded the time budget of " + std::to_string(criterion.limit_seconds) +
                      "s";
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << (i + 1) << " (" << criterion.name << "): "
             << (failure.empty() ? "PASS" : "FAIL") << " [" << seconds << "s]";
        if (!failure.empty())
            line << " - " << failure;
        std::cout << line.str() << "\n";
        if (!failure.empty())
            ++failures;
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
