// backtrack-cli: law suites, backtracking demos and the append benchmark.
//
//   backtrack-cli laws  --suite <id|all> --base <id|all> --cases N --seed S [--json]
//   backtrack-cli demo  --repr R --workload W --n N [--json]
//   backtrack-cli bench --reprs steplist,twocont --n-ladder 125,250,500,1000 [--json]
//
// Exit status: 0 when everything requested passes, 1 when a suite fails,
// 2 on usage or configuration errors.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "backtrack/demos.hpp"
#include "backtrack/laws.hpp"
#include "backtrack/report.hpp"

namespace {

using namespace backtrack;

template <class T>
void emit(const std::vector<T>& records, bool json) {
    if (json) {
        emit_json(records, std::cout);
        return;
    }
    for (const auto& r : records) emit_text(r, std::cout);
}

int run_laws(const std::string& suite, const std::string& base, std::size_t cases, std::uint64_t seed, bool json) {
    std::vector<std::string> bases;
    if (base == "all") {
        for (const auto& b : base_catalog())
            if (!default_suites(b).empty()) bases.push_back(b);
    } else {
        bases.push_back(base);
    }

    std::vector<LawReport> reports;
    for (const auto& b : bases) {
        std::vector<std::string> suites;
        if (suite == "all") {
            suites = default_suites(b);
            if (suites.empty()) throw ConfigError("no law suite applies to base " + b);
        } else {
            suites.push_back(suite);
        }
        for (const auto& s : suites) {
            GenConfig cfg;
            cfg.seed = seed;
            cfg.cases = cases;
            cfg.base = b;
            reports.push_back(run_suite(s, cfg));
        }
    }
    emit(reports, json);
    bool ok = std::all_of(reports.begin(), reports.end(), [](const LawReport& r) { return r.passed; });
    return ok ? 0 : 1;
}

int run_demo_cmd(const std::string& repr, const std::string& workload, int n, bool json) {
    emit(std::vector<DemoResult>{run_demo(repr, workload, n)}, json);
    return 0;
}

int run_bench_cmd(const std::vector<std::string>& reprs, const std::vector<std::size_t>& ladder, bool json) {
    std::vector<BenchRecord> records;
    for (const auto& r : reprs) {
        for (std::size_t n : ladder) {
            if (n == 0) throw UsageError("bench sizes must be positive");
            records.push_back(run_bench(r, n));
        }
    }
    emit(records, json);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Backtracking monad transformers: laws, demos and benchmark"};
    app.require_subcommand(1);

    std::string suite = "all", base = "all";
    std::size_t cases = 1000;
    std::uint64_t seed = 1;
    bool laws_json = false;
    auto* laws = app.add_subcommand("laws", "run law suites");
    laws->add_option("--suite", suite, "suite id or all");
    laws->add_option("--base", base, "base effect id or all");
    laws->add_option("--cases", cases, "cases per suite")->check(CLI::PositiveNumber);
    laws->add_option("--seed", seed, "generator seed");
    laws->add_flag("--json", laws_json, "newline-delimited JSON");

    std::string repr = "steplist", workload = "queens";
    int n = 8;
    bool demo_json = false;
    auto* demo = app.add_subcommand("demo", "run a backtracking workload");
    demo->add_option("--repr", repr, "steplist, twocont, efflist or clt");
    demo->add_option("--workload", workload, "queens, pythag, parser or lazy");
    demo->add_option("--n", n, "problem size");
    demo->add_flag("--json", demo_json, "newline-delimited JSON");

    std::vector<std::string> reprs = {"steplist", "twocont"};
    std::vector<std::size_t> ladder = {125, 250, 500, 1000};
    bool bench_json = false;
    auto* bench = app.add_subcommand("bench", "left-nested append cost per representation");
    bench->add_option("--reprs", reprs, "representations")->delimiter(',');
    bench->add_option("--n-ladder", ladder, "sizes")->delimiter(',');
    bench->add_flag("--json", bench_json, "newline-delimited JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*laws) return run_laws(suite, base, cases, seed, laws_json);
        if (*demo) return run_demo_cmd(repr, workload, n, demo_json);
        return run_bench_cmd(reprs, ladder, bench_json);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
