#pragma once

// Backtracking workloads written once against the common interface of the
// four representations (unit, mzero, lift, bind, mplus), and the left-nested
// append benchmark. Costs are bind counts from the Counter base.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "backtrack/commutative.hpp"
#include "backtrack/effects.hpp"
#include "backtrack/steplist.hpp"
#include "backtrack/twocont.hpp"

namespace backtrack {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <template <class, class> class R>
struct ReprTag {};

inline const std::vector<std::string>& repr_catalog() {
    static const std::vector<std::string> reprs = {"steplist", "twocont", "efflist", "clt"};
    return reprs;
}

inline const std::vector<std::string>& workload_catalog() {
    static const std::vector<std::string> workloads = {"queens", "pythag", "parser", "lazy"};
    return workloads;
}

// m[a] and its continuation form: all effects run before any result exists.
template <template <class, class> class R>
constexpr bool effects_first = false;
template <>
constexpr bool effects_first<EffList> = true;
template <>
constexpr bool effects_first<CLT> = true;

template <class Fn>
decltype(auto) dispatch_repr(const std::string& id, Fn&& fn) {
    if (id == "steplist") return fn(ReprTag<StepList>{});
    if (id == "twocont") return fn(ReprTag<Backtr>{});
    if (id == "efflist") return fn(ReprTag<EffList>{});
    if (id == "clt") return fn(ReprTag<CLT>{});
    throw UsageError("unknown representation: " + id);
}

// The parser threads its input position through State, and the lazy stream is
// infinite; neither fits the effects-first representations.
inline bool supports(const std::string& repr, const std::string& workload) {
    bool streaming = repr == "steplist" || repr == "twocont";
    if (workload == "parser" || workload == "lazy") return streaming;
    return true;
}

// ---------------------------------------------------------------------------
// First result and all results, per representation.

template <class M, class A>
Comp<M, std::optional<A>> first_result(const StepList<M, A>& xs) {
    return take_first(xs);
}

// The failure continuation is dropped, so the remaining search never runs.
template <class M, class A>
Comp<M, std::optional<A>> first_result(const Backtr<M, A>& k) {
    using O = std::optional<A>;
    return k.template run<O>([](const A& a, const Comp<M, O>&) { return M::unit(O(a)); }, M::unit(O()));
}

template <class M, class A>
Comp<M, std::optional<A>> first_result(const EffList<M, A>& e) {
    return M::map(e.payload(), [](const std::vector<A>& as) { return as.empty() ? std::optional<A>() : std::optional<A>(as.front()); });
}

template <class M, class A>
Comp<M, std::optional<A>> first_result(const CLT<M, A>& k) {
    return first_result(from_clt(k));
}

using CostBase = Counter<Identity>;
constexpr int kParserStates = 64;
using ParserState = State<kParserStates>;
using ParserBase = Counter<ParserState>;

template <class V>
Tally<V> run_counted(const Counted<Identity, V>& m) {
    return m.inner.value;
}

template <class V>
Tally<V> run_counted(const Counted<ParserState, V>& m) {
    return m.inner.run(0).first;
}

// A candidate costs one unit when it is considered.
template <template <class, class> class R, class M, class A>
R<M, A> candidate(A a) {
    return R<M, A>::lift(M::map(M::tick(), [a](Unit) { return a; }));
}

// lo, lo+1, ..., hi as a right-nested choice.
template <template <class, class> class R, class M>
R<M, int> choose_between(int lo, int hi) {
    if (lo > hi) return R<M, int>::mzero();
    auto acc = candidate<R, M>(hi);
    for (int v = hi - 1; v >= lo; --v) acc = candidate<R, M>(v).mplus(acc);
    return acc;
}

// ---------------------------------------------------------------------------
// n-queens: one column per row, pruned with mzero.

template <template <class, class> class R, class M = CostBase>
struct Queens {
    using Board = std::vector<int>;

    static bool safe(const Board& cols, int c) {
        int row = static_cast<int>(cols.size());
        for (int r = 0; r < row; ++r) {
            int d = cols[r] - c;
            if (d == 0 || d == row - r || d == r - row) return false;
        }
        return true;
    }

    static R<M, Board> place(int n, const Board& cols) {
        if (static_cast<int>(cols.size()) == n) return R<M, Board>::unit(cols);
        return choose_between<R, M>(0, n - 1).bind([n, cols](const int& c) {
            if (!safe(cols, c)) return R<M, Board>::mzero();
            Board next = cols;
            next.push_back(c);
            return place(n, next);
        });
    }

    static R<M, Board> solutions(int n) { return place(n, {}); }
};

// Pythagorean triples a <= b <= c <= n.
template <template <class, class> class R, class M = CostBase>
struct Pythag {
    using Triple = std::vector<int>;

    static R<M, Triple> solutions(int n) {
        return choose_between<R, M>(1, n).bind([n](const int& a) {
            return choose_between<R, M>(a, n).bind([n, a](const int& b) {
                return choose_between<R, M>(b, n).bind([a, b](const int& c) {
                    if (a * a + b * b != c * c) return R<M, Triple>::mzero();
                    return R<M, Triple>::unit(Triple{a, b, c});
                });
            });
        });
    }
};

// ---------------------------------------------------------------------------
// Backtracking recogniser over a token string, with the input position kept
// in State:
//
//   top    := items <end of input>
//   items  := <empty> | item items
//   item   := number | '(' items ')'
//   number := digit+        (any split of a digit run is a parse)

inline std::string parser_input(int n) {
    std::string in;
    for (int i = 0; i < n; ++i) {
        std::string run;
        for (int j = 0; j <= i % 3; ++j) run += static_cast<char>('1' + (i + j) % 9);
        in += i % 2 ? "(" + run + ")" : run;
    }
    return in;
}

template <template <class, class> class R>
struct Parser {
    using M = ParserBase;
    using S = ParserState;
    using Text = std::string;

    std::string input;

    static R<M, int> position() { return R<M, int>::lift(M::lift(S::get())); }

    static R<M, Unit> move_to(int pos) { return R<M, Unit>::lift(M::lift(S::put(pos))); }

    template <class Pred>
    R<M, char> next_if(Pred pred) const {
        return position().bind([in = input, pred](const int& pos) {
            if (pos >= static_cast<int>(in.size()) || !pred(in[pos])) return R<M, char>::mzero();
            char ch = in[pos];
            return move_to(pos + 1).bind([ch](const Unit&) { return R<M, char>::unit(ch); });
        });
    }

    R<M, char> digit() const {
        return next_if([](char c) { return c >= '0' && c <= '9'; });
    }

    R<M, char> symbol(char s) const {
        return next_if([s](char c) { return c == s; });
    }

    R<M, Unit> end() const {
        return position().bind([len = static_cast<int>(input.size())](const int& pos) {
            return pos == len ? R<M, Unit>::unit(Unit{}) : R<M, Unit>::mzero();
        });
    }

    // State is shared by all alternatives, so the second one rewinds to
    // where the choice was made.
    template <class A>
    static R<M, A> choice(R<M, A> p, R<M, A> q) {
        return position().bind([p, q](const int& pos) {
            return p.mplus(move_to(pos).bind([q](const Unit&) { return q; }));
        });
    }

    R<M, Text> number_from(const Text& acc) const {
        auto self = *this;
        return choice(R<M, Text>::unit(acc),
                      digit().bind([self, acc](const char& d) { return self.number_from(acc + d); }));
    }

    R<M, Text> number() const {
        auto self = *this;
        return digit().bind([self](const char& d) { return self.number_from(Text(1, d)); });
    }

    R<M, Text> item() const {
        auto self = *this;
        auto bracketed = symbol('(').bind([self](const char&) {
            return self.items().bind([self](const Text& inner) {
                return self.symbol(')').bind([inner](const char&) { return R<M, Text>::unit("(" + inner + ")"); });
            });
        });
        return choice(number(), bracketed);
    }

    R<M, Text> items() const {
        auto self = *this;
        return choice(R<M, Text>::unit(""), item().bind([self](const Text& first) {
            return self.items().bind([first](const Text& rest) {
                return R<M, Text>::unit(rest.empty() ? first : first + " " + rest);
            });
        }));
    }

    R<M, Text> parses() const {
        auto self = *this;
        return items().bind([self](const Text& t) {
            return self.end().bind([t](const Unit&) { return R<M, Text>::unit(t); });
        });
    }
};

// ---------------------------------------------------------------------------
// The infinite stream n, n+1, ... with every layer suspended.

inline StepList<Thunk, int> count_from(int n) {
    using S = Step<Thunk, int>;
    return StepList<Thunk, int>(Thunk::delay([n] { return S::yield(n, count_from(n + 1)); }));
}

// (values, suspensions forced) for the first k elements.
template <template <class, class> class R>
std::pair<std::vector<int>, std::size_t> lazy_take(std::size_t k) {
    if constexpr (std::is_same_v<R<Thunk, int>, StepList<Thunk, int>>) {
        return Thunk::observe(take_n(k, count_from(0)));
    } else if constexpr (std::is_same_v<R<Thunk, int>, Backtr<Thunk, int>>) {
        return Thunk::observe(take_n(k, from_backtr(to_backtr(count_from(0)))));
    } else {
        throw UsageError("lazy workload needs a stream representation");
    }
}

// ---------------------------------------------------------------------------

struct DemoResult {
    std::string repr;
    std::string workload;
    int n = 0;
    std::size_t results_count = 0;
    std::optional<std::size_t> first_result_binds;
    std::optional<std::size_t> all_results_binds;
    std::optional<std::size_t> forces;
    std::string first;
    std::vector<std::string> results;
};

template <template <class, class> class R, class X>
DemoResult summarize(const X& search) {
    DemoResult out;
    auto first = run_counted(first_result(search));
    auto all = run_counted(observe_all(search));
    out.first_result_binds = first.binds;
    out.all_results_binds = all.binds;
    out.first = first.value ? show(*first.value) : "none";
    out.results_count = all.value.size();
    for (const auto& v : all.value) out.results.push_back(show(v));
    return out;
}

template <template <class, class> class R>
DemoResult run_demo_in(ReprTag<R>, const std::string& workload, int n, const std::string& repr) {
    DemoResult out;
    if (workload == "queens") {
        out = summarize<R>(Queens<R>::solutions(n));
    } else if (workload == "pythag") {
        out = summarize<R>(Pythag<R>::solutions(n));
    } else if (workload == "parser") {
        if constexpr (effects_first<R>) {
            throw UsageError("parser needs a non-commutative base");
        } else {
            std::string in = parser_input(n);
            if (static_cast<int>(in.size()) >= kParserStates) throw UsageError("parser input too long for n=" + std::to_string(n));
            out = summarize<R>(Parser<R>{in}.parses());
        }
    } else {
        if constexpr (effects_first<R>) {
            throw UsageError("lazy workload needs a stream representation");
        } else {
            auto [values, forces] = lazy_take<R>(static_cast<std::size_t>(n));
            out.forces = forces;
            out.results_count = values.size();
            out.first = values.empty() ? "none" : show(values.front());
            for (int v : values) out.results.push_back(show(v));
        }
    }
    out.repr = repr;
    out.workload = workload;
    out.n = n;
    return out;
}

inline DemoResult run_demo(const std::string& repr, const std::string& workload, int n) {
    if (n <= 0) throw UsageError("n must be positive");
    if (std::find(workload_catalog().begin(), workload_catalog().end(), workload) == workload_catalog().end()) {
        throw UsageError("unknown workload: " + workload);
    }
    return dispatch_repr(repr, [&](auto tag) {
        if (!supports(repr, workload)) throw UsageError("representation " + repr + " does not support workload " + workload);
        return run_demo_in(tag, workload, n, repr);
    });
}

// ---------------------------------------------------------------------------
// Left-nested append of n singletons, then all results.

struct BenchRecord {
    std::string repr;
    std::string workload = "bench";
    std::size_t n = 0;
    std::size_t results_count = 0;
    std::size_t base_bind_count = 0;
    std::int64_t wall_ns = 0;
};

template <template <class, class> class R>
std::pair<std::size_t, std::size_t> left_nested_append(std::size_t n) {
    using X = R<CostBase, int>;
    X acc = X::unit(0);
    for (std::size_t i = 1; i < n; ++i) acc = acc.mplus(X::unit(static_cast<int>(i)));
    auto t = run_counted(observe_all(acc));
    return {t.value.size(), t.binds};
}

template <template <class, class> class R>
std::pair<std::size_t, std::size_t> run_bench_in(ReprTag<R>, std::size_t n) {
    return left_nested_append<R>(n);
}

inline BenchRecord run_bench(const std::string& repr, std::size_t n) {
    BenchRecord rec;
    rec.repr = repr;
    rec.n = n;
    auto start = std::chrono::steady_clock::now();
    auto [count, binds] = dispatch_repr(repr, [n](auto tag) { return run_bench_in(tag, n); });
    rec.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
    rec.results_count = count;
    rec.base_bind_count = binds;
    return rec;
}

} // namespace backtrack
