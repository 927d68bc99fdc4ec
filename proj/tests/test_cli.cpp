#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutcalc/bundled.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const fs::path& workdir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("cutcalc_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    const fs::path out = workdir() / "stdout.txt";
    const fs::path err = workdir() / "stderr.txt";
    const std::string command = std::string(CUTCALC_CLI_PATH) + " " + args + " > " +
                                out.string() + " 2> " + err.string();
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

fs::path write_file(const std::string& name, std::string_view content) {
    const fs::path path = workdir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("cli: examples subcommand writes parseable bundled scenarios") {
    const fs::path dir = workdir() / "examples";
    const RunResult result = run_cli("examples " + dir.string());
    CHECK(result.exit_code == 0);
    for (const cutcalc::BundledExample& example : cutcalc::bundled_examples()) {
        const fs::path path = dir / example.filename;
        REQUIRE(fs::exists(path));
        CHECK(slurp(path) == std::string(example.source));
    }
}

TEST_CASE("cli: cut on the flag example, json output") {
    const fs::path file = write_file("flag_u3.cut", cutcalc::flag_u3_source());
    const RunResult result = run_cli("cut " + file.string() + " --output json");
    REQUIRE(result.exit_code == 0);

    const nlohmann::json doc = nlohmann::json::parse(result.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["n"] == 6);
    CHECK(doc["hypotheses"]["ok"] == true);
    CHECK(doc["c"]["dims"] == nlohmann::json({1, 0, 3, 0, 4, 0, 2}));
    CHECK(doc["c_plus"]["dims"] == nlohmann::json({1, 0, 3, 0, 3, 0, 1}));
    CHECK(doc["delta_ideal"]["dims"] == nlohmann::json({0, 0, 0, 0, 1, 0, 1}));
    CHECK(doc["poincare_identity"]["holds"] == true);
    CHECK(doc["c_plus"].contains("structure_constants"));
}

TEST_CASE("cli: identical invocations produce byte-identical output") {
    const fs::path file = write_file("flag_det.cut", cutcalc::flag_u3_source());
    for (const std::string mode : {"--output json", "--output text"}) {
        const RunResult first = run_cli("cut " + file.string() + " " + mode);
        const RunResult second = run_cli("cut " + file.string() + " " + mode);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
        CHECK(first.err == second.err);
    }
}

TEST_CASE("cli: validate rejects a scenario whose i* is not surjective") {
    const std::string broken =
        "algebra A { gen a:2; rel a^3; top 4; }\n"
        "algebra B { gen bbar:2; rel bbar^2; top 4; }\n"
        "map p: A -> B { a -> bbar; }\n"
        "map i: A -> B { a -> 0; }\n"
        "cut { minus = A; total = A; common = B; p = p; i = i; n = 4; }\n";
    const fs::path file = write_file("broken.cut", broken);
    const RunResult result = run_cli("validate " + file.string());
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("degree 2") != std::string::npos);
    CHECK(result.out.find("INVALID") != std::string::npos);

    const RunResult cut_result = run_cli("cut " + file.string());
    CHECK(cut_result.exit_code == 1);
    CHECK(cut_result.err.find("degree 2") != std::string::npos);
}

TEST_CASE("cli: a delta pair outside the kernel is rejected with its residual") {
    std::string text{cutcalc::flag_u3_source()};
    const std::string needle = "{ cminus: b^2, m: v^2 }";
    text.replace(text.find(needle), needle.size(), "{ cminus: a, m: 0 }");
    const fs::path file = write_file("bad_delta.cut", text);
    const RunResult result = run_cli("cut " + file.string());
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("outside ker(p* - i*)") != std::string::npos);
    CHECK(result.err.find("p*(c) - i*(m)") != std::string::npos);
}

TEST_CASE("cli: parse errors exit with code 2 and a position") {
    const fs::path file = write_file("syntax_error.cut", "algebra A { gen a:2 top }\n");
    const RunResult result = run_cli("cut " + file.string());
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("parse error at 1:") != std::string::npos);

    const RunResult missing = run_cli("cut " + (workdir() / "no_such_file.cut").string());
    CHECK(missing.exit_code == 1);
}

TEST_CASE("cli: betti reports all identities holding on the bundled scenarios") {
    for (const cutcalc::BundledExample& example : cutcalc::bundled_examples()) {
        const fs::path file = write_file(example.filename, example.source);
        const RunResult result = run_cli("betti " + file.string());
        CHECK(result.exit_code == 0);
        CHECK(result.out.find("FAILS") == std::string::npos);
        // Two dual-class identities plus the dimension identity.
        std::size_t holds = 0;
        for (std::size_t at = result.out.find("holds"); at != std::string::npos;
             at = result.out.find("holds", at + 1))
            ++holds;
        CHECK(holds == 3);
    }
}

TEST_CASE("cli: reduce computes the reduced ring of the blowup scenario") {
    const fs::path file = write_file("blowup_cp2.cut", cutcalc::blowup_cp2_source());
    const RunResult result = run_cli("reduce " + file.string() + " --output json");
    REQUIRE(result.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(result.out);
    CHECK(doc["c0"]["dims"] == nlohmann::json({1, 0, 1, 0, 0}));
    CHECK(doc["ses_identity"]["holds"] == true);
}

TEST_CASE("cli: verify-iso confirms the bundled flag isomorphism") {
    const fs::path file = write_file("flag_iso.cut", cutcalc::flag_u3_source());
    const RunResult result = run_cli("verify-iso " + file.string());
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("confirmed") != std::string::npos);

    const RunResult json_result = run_cli("verify-iso " + file.string() + " --output json");
    const nlohmann::json doc = nlohmann::json::parse(json_result.out);
    CHECK(doc["confirmed"] == true);
}

TEST_CASE("cli: present prints extracted presentations") {
    const fs::path file = write_file("flag_present.cut", cutcalc::flag_u3_source());
    const RunResult result = run_cli("present " + file.string());
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("C+ = Q[") != std::string::npos);
}

TEST_CASE("cli: expect mismatch fails the run") {
    std::string text{cutcalc::blowup_cp2_source()};
    const std::string needle = "cplus = 1,0,2,0,1;";
    text.replace(text.find(needle), needle.size(), "cplus = 1,0,9,0,1;");
    const fs::path file = write_file("expect_bad.cut", text);
    const RunResult result = run_cli("cut " + file.string());
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("expected cplus dimensions") != std::string::npos);
}

TEST_CASE("cli: max-degree truncation") {
    const fs::path file = write_file("flag_trunc.cut", cutcalc::flag_u3_source());
    // Truncating drops the expect block comparison target sizes, so run a
    // subcommand that does not consult expectations.
    const RunResult result = run_cli("present " + file.string() + " --max-degree 4");
    CHECK(result.exit_code == 0);

    const RunResult odd = run_cli("present " + file.string() + " --max-degree 3");
    CHECK(odd.exit_code == 1);
}

TEST_CASE("cli: reduce fails when the supplied class is not a dual class") {
    const std::string zero_pd =
        "algebra A { gen a:2; rel a^3; top 4; }\n"
        "algebra B { top 4; }\n"
        "map p: A -> B { a -> 0; }\n"
        "cut { minus = A; total = A; common = B; p = p; i = p; n = 4; pd = 0; }\n";
    const fs::path file = write_file("zero_pd.cut", zero_pd);
    const RunResult result = run_cli("reduce " + file.string());
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("not a dual class") != std::string::npos);
    CHECK(result.out.find("warning") != std::string::npos);
}

TEST_CASE("cli: --strict turns warnings into failures") {
    // No pd class: betti succeeds with a warning, so --strict must fail it.
    const std::string no_pd =
        "algebra A { gen a:2; rel a^3; top 4; }\n"
        "algebra B { top 4; }\n"
        "map p: A -> B { a -> 0; }\n"
        "cut { minus = A; total = A; common = B; p = p; i = p; n = 4; }\n";
    const fs::path file = write_file("no_pd.cut", no_pd);
    CHECK(run_cli("betti " + file.string()).exit_code == 0);
    const RunResult strict = run_cli("betti " + file.string() + " --strict");
    CHECK(strict.exit_code == 1);
    CHECK(strict.err.find("--strict") != std::string::npos);
}
