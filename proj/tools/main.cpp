// qgt -- quantize 2x2 games, select equilibria, sweep and verify.
//
// Subcommands:
//   analyze  full pipeline for one scenario (text or JSON report)
//   sweep    evaluate an epsilon grid, emit CSV
//   verify   randomized cross-checks of the independent evaluation routes
//   compare  baseline payoff table for an epsilon scenario
//
// Exit codes: 0 success; 1 bad input (flags, scenario file, grid);
// 2 an internal cross-check or verification property failed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qgt/qgt.hpp"

namespace {

int write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 1;
    }
    os << content;
    return 0;
}

int run_analyze(const std::string& scenario_path, const std::string& format,
                const std::string& out_path, bool echo) {
    const qgt::Scenario sc = qgt::load_scenario(scenario_path);
    if (echo) return write_output(out_path, qgt::scenario_to_json(sc).dump(2) + "\n");

    const qgt::AnalysisReport rep = qgt::analyze(sc);
    const std::string content = format == "machine" ? qgt::render_json(rep).dump(2) + "\n"
                                                    : qgt::render_text(rep);
    const int rc = write_output(out_path, content);
    if (rc != 0) return rc;

    if (rep.oracle_deviation >= qgt::kOracleTol) {
        std::cerr << "error: closed-form and density-matrix payoffs disagree ("
                  << rep.oracle_deviation << ")\n";
        return 2;
    }
    return 0;
}

int run_sweep(const std::string& scenario_path, const std::string& out_path) {
    const qgt::Scenario sc = qgt::load_scenario(scenario_path);
    if (!sc.has_sweep()) throw qgt::scenario_error("sweep: scenario has no sweep spec");

    const auto records = qgt::sweep(*sc.bos, sc.sweep_spec->eps1, sc.sweep_spec->eps2);
    std::ostringstream os;
    qgt::write_sweep_csv(os, records);
    return write_output(out_path, os.str());
}

int run_verify(int samples, std::uint64_t seed, const std::string& out_path) {
    const auto results = qgt::run_all_properties(samples, seed);
    const int rc = write_output(out_path, qgt::render_verify_text(results));
    if (rc != 0) return rc;
    for (const auto& r : results)
        if (!r.passed) return 2;
    return 0;
}

int run_compare(const std::string& scenario_path, const std::string& format,
                const std::string& out_path) {
    const qgt::Scenario sc = qgt::load_scenario(scenario_path);
    if (!sc.is_bos()) throw qgt::scenario_error("compare: scenario must use a bos game");
    const auto eps = sc.state_epsilons();
    if (!eps)
        throw qgt::scenario_error(
            "compare: scenario must give an epsilon pair (or the entangled/nt preset)");

    const auto cmp = qgt::baseline_comparison(*sc.bos, *eps);
    const std::string content = format == "machine" ? qgt::render_compare_json(cmp).dump(2) + "\n"
                                                    : qgt::render_compare_text(cmp);
    return write_output(out_path, content);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Marinatto-Weber quantization of 2x2 games with Harsanyi-Selten selection"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    std::string format = "text";
    int samples = 1000;
    std::uint64_t seed = 42;
    bool echo = false;

    auto* analyze = app.add_subcommand("analyze", "analyze one scenario");
    analyze->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    analyze->add_option("--out", out_path, "write output to this file");
    analyze->add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    analyze->add_flag("--echo", echo, "print the normalized scenario document and exit");

    auto* sweep = app.add_subcommand("sweep", "evaluate an epsilon grid, emit CSV");
    sweep->add_option("--scenario", scenario_path, "scenario JSON file with a sweep spec")
        ->required();
    sweep->add_option("--out", out_path, "write CSV to this file");

    auto* verify = app.add_subcommand("verify", "run randomized cross-checks");
    verify->add_option("--samples", samples, "samples per property")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--out", out_path, "write summary to this file");

    auto* compare = app.add_subcommand("compare", "baseline payoff table");
    compare->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    compare->add_option("--out", out_path, "write output to this file");
    compare->add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return run_analyze(scenario_path, format, out_path, echo);
        if (app.got_subcommand(sweep)) return run_sweep(scenario_path, out_path);
        if (app.got_subcommand(verify)) return run_verify(samples, seed, out_path);
        if (app.got_subcommand(compare)) return run_compare(scenario_path, format, out_path);
    } catch (const qgt::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
