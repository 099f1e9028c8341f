// Integration tests driving the installed CLI binary end to end.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(QGT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int rc = pclose(pipe);
    return RunResult{WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::filesystem::path test_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("qgt_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    const auto path = test_dir() / name;
    std::ofstream os(path, std::ios::binary);
    os << content;
    return path.string();
}

const char* kWorkedScenario = R"({
    "bos": {"alpha": 5, "beta": 3, "gamma": 1},
    "epsilons": [0.01, 0.02]
})";

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

} // namespace

TEST_CASE("analyze renders the worked scenario") {
    const std::string path = write_file("worked.json", kWorkedScenario);
    const RunResult res = run("analyze --scenario " + path);
    INFO(res.output);
    REQUIRE(res.status == 0);
    REQUIRE(res.output.find("selected (0,0)") != std::string::npos);
    REQUIRE(res.output.find("3.91") != std::string::npos);
    REQUIRE(res.output.find("oracle check") != std::string::npos);

    const RunResult again = run("analyze --scenario " + path);
    REQUIRE(again.output == res.output);  // deterministic bytes
}

TEST_CASE("analyze machine format is valid JSON with the headline numbers") {
    const std::string path = write_file("worked_json.json", kWorkedScenario);
    const RunResult res = run("analyze --scenario " + path + " --format machine");
    REQUIRE(res.status == 0);
    const json doc = json::parse(res.output);
    REQUIRE(doc.at("risk_dominance").at("selection") == "(0,0)");
    REQUIRE(doc.at("risk_dominance").at("payoffs")[0].get<double>() ==
            Catch::Approx(3.91).margin(1e-12));
    REQUIRE(doc.at("baselines").at("nt_equilibrium").get<double>() ==
            Catch::Approx(2.875).margin(1e-12));
}

TEST_CASE("analyze handles the presets") {
    const std::string nt = write_file(
        "nt.json", R"({"bos": {"alpha":5,"beta":3,"gamma":1}, "preset": "nt"})");
    const RunResult res = run("analyze --scenario " + nt);
    REQUIRE(res.status == 0);
    REQUIRE(res.output.find("selected (1,1)") != std::string::npos);
    REQUIRE(res.output.find("2.875") != std::string::npos);

    const std::string classical = write_file(
        "classical.json", R"({"bos": {"alpha":5,"beta":3,"gamma":1}, "preset": "classical"})");
    const RunResult res2 = run("analyze --scenario " + classical);
    REQUIRE(res2.status == 0);
    REQUIRE(res2.output.find("mixed (0.666666666667, 0.333333333333)") != std::string::npos);
}

TEST_CASE("echoed scenarios reparse identically") {
    const std::string path = write_file("echo.json", kWorkedScenario);
    const RunResult first = run("analyze --scenario " + path + " --echo");
    REQUIRE(first.status == 0);

    const std::string echoed = write_file("echoed.json", first.output);
    const RunResult second = run("analyze --scenario " + echoed + " --echo");
    REQUIRE(second.status == 0);
    REQUIRE(second.output == first.output);
    REQUIRE(json::parse(first.output) == json::parse(kWorkedScenario));
}

TEST_CASE("sweep emits the documented CSV") {
    const std::string path = write_file("sweep.json", R"({
        "bos": {"alpha": 5, "beta": 3, "gamma": 1},
        "sweep": {"eps1": {"min": 0, "max": 0.2, "step": 0.1},
                  "eps2": {"min": 0, "max": 0.2, "step": 0.1}}
    })");

    const RunResult res = run("sweep --scenario " + path);
    REQUIRE(res.status == 0);
    REQUIRE(res.output.rfind("eps1,eps2,lemma_valid,selection,payoff_a,payoff_b,sign_product\n",
                             0) == 0);
    REQUIRE(count_lines(res.output) == 10);  // header + 9 grid points
    REQUIRE(res.output.find("mixed") != std::string::npos);
    REQUIRE(res.output.find("0.10000000000000001") != std::string::npos);  // 17 digits

    const RunResult again = run("sweep --scenario " + path);
    REQUIRE(again.output == res.output);

    SECTION("--out writes the same bytes to a file") {
        const std::string out_path = (test_dir() / "sweep.csv").string();
        const RunResult to_file = run("sweep --scenario " + path + " --out " + out_path);
        REQUIRE(to_file.status == 0);
        std::ifstream in(out_path, std::ios::binary);
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        REQUIRE(content == res.output);
    }
}

TEST_CASE("sweep needs a sweep spec") {
    const std::string path = write_file("nosweep.json", kWorkedScenario);
    const RunResult res = run("sweep --scenario " + path);
    REQUIRE(res.status == 1);
    REQUIRE(res.output.find("error") != std::string::npos);
}

TEST_CASE("verify runs the property suites deterministically") {
    const RunResult res = run("verify --samples 200 --seed 42");
    INFO(res.output);
    REQUIRE(res.status == 0);
    REQUIRE(count_lines(res.output) == 5);
    for (const char* property : {"oracle_equivalence", "phase_invariance",
                                 "prediction_consistency", "sign_product_identity"}) {
        const auto pos = res.output.find(property);
        REQUIRE(pos != std::string::npos);
        REQUIRE(res.output.substr(pos - 7, 6) == "[PASS]");
    }

    const RunResult again = run("verify --samples 200 --seed 42");
    REQUIRE(again.output == res.output);

    const RunResult single = run("verify --samples 1 --seed 7");
    REQUIRE(single.status == 0);

    const RunResult bad = run("verify --samples 0");
    REQUIRE(bad.status != 0);
}

TEST_CASE("compare prints the baseline table") {
    const std::string path = write_file("compare.json", kWorkedScenario);
    const RunResult res = run("compare --scenario " + path);
    REQUIRE(res.status == 0);
    REQUIRE(res.output.find("2.5") != std::string::npos);
    REQUIRE(res.output.find("2.875") != std::string::npos);
    REQUIRE(res.output.find("3.91") != std::string::npos);
    REQUIRE(res.output.find("ordering eps > NT > random: yes") != std::string::npos);

    const std::string edge = write_file(
        "edge.json", R"({"bos": {"alpha":5,"beta":3,"gamma":1}, "epsilons": [0, 0]})");
    const RunResult tie = run("compare --scenario " + edge);
    REQUIRE(tie.status == 0);
    REQUIRE(tie.output.find("epsilon selected equilibrium 2.5") != std::string::npos);
    REQUIRE(tie.output.find("ordering eps > NT > random: no") != std::string::npos);
}

TEST_CASE("compare rejects non-epsilon scenarios") {
    const std::string raw = write_file("raw.json", R"({
        "bimatrix": [[[5,3],[1,1]],[[1,1],[3,5]]],
        "preset": "classical"
    })");
    const RunResult res = run("compare --scenario " + raw);
    REQUIRE(res.status == 1);

    const std::string classical = write_file(
        "classical2.json", R"({"bos": {"alpha":5,"beta":3,"gamma":1}, "preset": "classical"})");
    const RunResult res2 = run("compare --scenario " + classical);
    REQUIRE(res2.status == 1);
}

TEST_CASE("malformed input exits with code 1 and a diagnostic") {
    const std::string bad_json = write_file("bad.json", "{ not json");
    REQUIRE(run("analyze --scenario " + bad_json).status == 1);

    const std::string unknown = write_file("unknown.json", R"({
        "bos": {"alpha": 5, "beta": 3, "gamma": 1},
        "epsilons": [0.01, 0.02],
        "typo_field": true
    })");
    const RunResult res = run("analyze --scenario " + unknown);
    REQUIRE(res.status == 1);
    REQUIRE(res.output.find("typo_field") != std::string::npos);

    REQUIRE(run("analyze --scenario /nonexistent/path.json").status == 1);
    REQUIRE(run("compare --scenario " + bad_json).status == 1);
}
