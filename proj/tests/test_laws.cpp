#include <catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "backtrack/laws.hpp"

using namespace backtrack;

namespace {

GenConfig config(const std::string& base, std::size_t cases, std::uint64_t seed = 1) {
    GenConfig cfg;
    cfg.base = base;
    cfg.cases = cases;
    cfg.seed = seed;
    return cfg;
}

std::string flatten_report(const LawReport& r) {
    std::string out = r.suite + "|" + r.base + "|" + std::to_string(r.cases) + "|" + (r.passed ? "1" : "0");
    for (const auto& f : r.failures) out += "|" + f.law + "/" + f.case_text + "/" + f.lhs + "/" + f.rhs;
    return out;
}

} // namespace

TEST_CASE("catalog") {
    CHECK(suite_catalog().size() == 13);
    CHECK(std::count_if(suite_catalog().begin(), suite_catalog().end(), is_negative_suite) == 1);
    CHECK(base_catalog().size() == 10);
}

TEST_CASE("applicability") {
    CHECK(applicable("coherence-writer", "writer-string"));
    CHECK(applicable("coherence-writer", "writer-sum"));
    CHECK_FALSE(applicable("coherence-writer", "state"));
    CHECK(applicable("coherence-state", "state"));
    CHECK(applicable("monad-efflist-commutative", "reader"));
    CHECK_FALSE(applicable("monad-efflist-commutative", "writer-string"));
    CHECK_FALSE(applicable("clt-hom", "freebin"));
    CHECK_FALSE(applicable("monad-steplist", "counter"));
    CHECK(default_suites("counter").empty());
    auto ws = default_suites("writer-string");
    CHECK(std::find(ws.begin(), ws.end(), "efflist-negative") != ws.end());
    auto wn = default_suites("writer-sum");
    CHECK(std::find(wn.begin(), wn.end(), "efflist-negative") == wn.end());
    CHECK(std::find(wn.begin(), wn.end(), "clt-hom") != wn.end());
}

TEST_CASE("configuration errors") {
    CHECK_THROWS_AS(run_suite("no-such-suite", config("identity", 1)), ConfigError);
    CHECK_THROWS_AS(run_suite("monad-steplist", config("no-such-base", 1)), ConfigError);
    CHECK_THROWS_AS(run_suite("coherence-state", config("identity", 1)), ConfigError);
    CHECK_THROWS_AS(run_suite("monad-steplist", config("counter", 1)), ConfigError);
    CHECK_THROWS_AS(applicable("no-such-suite", "identity"), ConfigError);
}

TEST_CASE("generator is deterministic") {
    Generator a(1, 6, 8), b(1, 6, 8), c(2, 6, 8);
    std::vector<std::string> xs, ys, zs;
    for (int i = 0; i < 3; ++i) {
        xs.push_back(a.list().show());
        ys.push_back(b.list().show());
        zs.push_back(c.list().show());
    }
    CHECK(xs == ys);
    CHECK(xs != zs);

    Generator p(9, 6, 8), q(9, 6, 8);
    for (int i = 0; i < 50; ++i) {
        auto lp = build_list<Identity>(p.list()), lq = build_list<Identity>(q.list());
        CHECK(observe(lp) == observe(lq));
    }
}

TEST_CASE("generated lists respect the bounds") {
    using WS = Writer<StringLog>;
    for (std::size_t depth : {1u, 3u, 6u}) {
        for (std::size_t width : {1u, 4u, 8u}) {
            Generator g(depth * 31 + width, depth, width);
            for (int i = 0; i < 300; ++i) {
                auto spec = g.list();
                CHECK(spec.layers.size() <= width);
                auto [log, values] = WS::observe(observe_all(build_list<WS>(spec)));
                CHECK(log.size() <= depth * width);
                CHECK(values.size() == spec.layers.size());
            }
        }
    }
}

TEST_CASE("kleisli arrows are functions of their argument") {
    Generator g(5, 6, 8);
    auto k = build_kleisli<Writer<StringLog>>(g.kleisli(3), 6, 8);
    for (int a = 0; a < 10; ++a) CHECK(observe(k(a)) == observe(k(a)));
}

TEST_CASE("shrinking reaches a minimal case") {
    // Fails whenever some element equals 7.
    ListLaw law = [](const std::vector<ListSpec>& s) -> Discrepancy {
        for (const auto& l : s[0].layers)
            if (l.value == 7) return std::pair<std::string, std::string>("7", "no 7");
        return std::nullopt;
    };
    ListSpec big;
    big.layers = {{{1, 2}, 3}, {{4}, 7}, {{5, 6, 7}, 1}};
    big.end_guard = {9};
    auto small = shrink({big}, law);
    REQUIRE(small[0].layers.size() == 1);
    CHECK(small[0].layers[0].value == 7);
    CHECK(small[0].layers[0].guard.empty());
    CHECK(small[0].end_guard.empty());

    LawReport report;
    LawRecorder rec(report);
    rec.check("has-seven", {big}, " extra", law);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].law == "has-seven");
    CHECK(report.failures[0].case_text == "[[]:7 end[]] extra");
    CHECK(report.failures[0].lhs == "7");
}

TEST_CASE("recorded failures are capped") {
    LawReport report;
    LawRecorder rec(report);
    for (int i = 0; i < 25; ++i) rec.check("always", "case", std::pair<std::string, std::string>("a", "b"));
    CHECK(report.failures.size() == kMaxRecordedFailures);
}

TEST_CASE("suites are deterministic") {
    auto a = run_suite("monad-steplist", config("state", 40, 77));
    auto b = run_suite("monad-steplist", config("state", 40, 77));
    CHECK(a.passed);
    CHECK(a.cases == 40);
    CHECK(flatten_report(a) == flatten_report(b));
}

TEST_CASE("every positive suite passes on every applicable base") {
    for (const auto& base : base_catalog()) {
        for (const auto& suite : default_suites(base)) {
            if (is_negative_suite(suite)) continue;
            auto report = run_suite(suite, config(base, 60, 11));
            INFO(suite << " over " << base);
            CHECK(report.passed);
            CHECK(report.failures.empty());
            CHECK(report.cases == 60);
        }
    }
}

TEST_CASE("monad-steplist over writer at 1000 cases") {
    auto report = run_suite("monad-steplist", config("writer-string", 1000));
    CHECK(report.passed);
    CHECK(report.cases == 1000);
}

TEST_CASE("cayley-roundtrip over identity at 100 cases") {
    CHECK(run_suite("cayley-roundtrip", config("identity", 100)).passed);
}

TEST_CASE("negative suite") {
    auto ws = run_suite("efflist-negative", config("writer-string", 1));
    CHECK(ws.passed);
    REQUIRE(ws.failures.size() == 1);
    CHECK(ws.failures[0].lhs == "(\"xxyy\",[0,1])");
    CHECK(ws.failures[0].rhs == "(\"xyxy\",[0,1])");

    for (const auto& base : {"state", "error", "freebin"}) {
        auto r = run_suite("efflist-negative", config(base, 1));
        INFO(base);
        CHECK(r.passed);
        CHECK(r.failures.size() == 1);
    }
    for (const auto& base : {"identity", "partial", "writer-sum", "reader", "thunk"}) {
        auto r = run_suite("efflist-negative", config(base, 1));
        INFO(base);
        CHECK_FALSE(r.passed);
        CHECK(r.failures.empty());
    }
}

TEST_CASE("a broken law is reported with both sides") {
    // Bind does not distribute over a choice made inside the continuation.
    using WS = Writer<StringLog>;
    using L = StepList<WS, int>;
    GenConfig cfg = config("writer-string", 200, 3);
    LawReport report;
    LawRecorder rec(report);
    Generator g(cfg);
    for (std::size_t i = 0; i < cfg.cases; ++i) {
        auto x = g.list(3);
        auto z = g.kleisli(2);
        auto f = build_kleisli<WS>(z, cfg.max_depth, cfg.max_width);
        rec.check("distribute-continuation-choice", {x}, "", [&](const std::vector<ListSpec>& s) {
            auto xs = build_list<WS>(s[0]);
            auto h = [](const int& n) { return L::unit(n); };
            return compare(observe(xs.bind([f, h](const int& n) { return f(n).mplus(h(n)); })),
                           observe(xs.bind(f).mplus(xs.bind(h))));
        });
    }
    REQUIRE_FALSE(report.failures.empty());
    CHECK_FALSE(report.failures[0].lhs.empty());
    CHECK(report.failures[0].lhs != report.failures[0].rhs);
}
