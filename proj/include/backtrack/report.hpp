#pragma once

// Newline-delimited JSON and plain-text rendering of law reports, demo
// results and bench records. Keys keep their insertion order.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "backtrack/demos.hpp"
#include "backtrack/laws.hpp"

namespace backtrack {

using Json = nlohmann::ordered_json;

inline Json to_json(const LawReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"law", f.law}, {"case", f.case_text}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    return {{"suite", r.suite}, {"base", r.base}, {"cases", r.cases}, {"failures", failures}, {"passed", r.passed}};
}

inline Json to_json(const BenchRecord& b) {
    return {{"repr", b.repr},
            {"workload", b.workload},
            {"n", b.n},
            {"results_count", b.results_count},
            {"base_bind_count", b.base_bind_count},
            {"wall_ns", b.wall_ns}};
}

inline Json to_json(const DemoResult& d) {
    Json j = {{"repr", d.repr}, {"workload", d.workload}, {"n", d.n}, {"results_count", d.results_count}};
    if (d.first_result_binds) j["first_result_binds"] = *d.first_result_binds;
    if (d.all_results_binds) j["all_results_binds"] = *d.all_results_binds;
    if (d.forces) j["forces"] = *d.forces;
    j["first"] = d.first;
    return j;
}

// One object per line; nothing for an empty list.
template <class T>
void emit_json(const std::vector<T>& records, std::ostream& out) {
    for (const auto& r : records) out << to_json(r).dump() << '\n';
}

inline void emit_text(const LawReport& r, std::ostream& out) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << " [" << r.base << "] cases=" << r.cases
        << " failures=" << r.failures.size() << '\n';
    for (const auto& f : r.failures) {
        out << "  " << f.law << ": " << f.case_text << "\n    lhs " << f.lhs << "\n    rhs " << f.rhs << '\n';
    }
}

inline void emit_text(const BenchRecord& b, std::ostream& out) {
    out << b.repr << " n=" << b.n << " results=" << b.results_count << " binds=" << b.base_bind_count
        << " wall_ns=" << b.wall_ns << '\n';
}

inline void emit_text(const DemoResult& d, std::ostream& out) {
    out << d.workload << " via " << d.repr << " n=" << d.n << ": " << d.results_count << " results";
    if (d.first_result_binds) out << ", binds first=" << *d.first_result_binds << " all=" << *d.all_results_binds;
    if (d.forces) out << ", forces=" << *d.forces;
    out << "\n  first: " << d.first << '\n';
}

} // namespace backtrack
