#pragma once

// Seeded property-test harness: generators of finite computations in every
// representation, and the catalog of named law suites.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "backtrack/commutative.hpp"
#include "backtrack/effects.hpp"
#include "backtrack/resumption.hpp"
#include "backtrack/show.hpp"
#include "backtrack/steplist.hpp"
#include "backtrack/twocont.hpp"

namespace backtrack {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenConfig {
    std::uint64_t seed = 1;
    std::size_t cases = 1000;
    std::size_t max_depth = 6;  // longest guard (number of primitive operations)
    std::size_t max_width = 8;  // most elements in a generated list
    std::string base = "identity";
};

struct LawFailure {
    std::string law;
    std::string case_text;
    std::string lhs;
    std::string rhs;
};

struct LawReport {
    std::string suite;
    std::string base;
    std::size_t cases = 0;
    std::vector<LawFailure> failures;
    bool passed = false;
};

// ---------------------------------------------------------------------------
// Case descriptions. Generated cases are plain data so that failures can be
// rendered and shrunk; they are turned into computations per base.

struct LayerSpec {
    std::vector<int> guard;
    int value = 0;
};

struct ListSpec {
    std::vector<LayerSpec> layers;
    std::vector<int> end_guard;

    std::string show() const {
        std::string out = "[";
        for (const auto& l : layers) out += backtrack::show(l.guard) + ":" + std::to_string(l.value) + " ";
        return out + "end" + backtrack::show(end_guard) + "]";
    }
};

// A Kleisli arrow a -> list, generated from seed and a.
struct KleisliSpec {
    std::uint64_t seed = 0;
    std::size_t width = 2;

    std::string show() const { return "k#" + std::to_string(seed % 100000) + "/" + std::to_string(width); }
};

struct TreeSpec {
    std::vector<int> guard;
    int value = 0;
    std::vector<TreeSpec> kids;  // empty for a leaf, two for a branch

    std::string show() const {
        if (kids.empty()) return backtrack::show(guard) + ":" + std::to_string(value);
        return backtrack::show(guard) + "<" + kids[0].show() + "|" + kids[1].show() + ">";
    }
};

struct EffSpec {
    std::vector<int> guard;
    std::vector<int> values;

    std::string show() const { return backtrack::show(guard) + backtrack::show(values); }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Small, cheaply seeded engine; one is created per Kleisli argument.
class SplitMix64 {
public:
    using result_type = std::uint64_t;
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

class Generator {
public:
    Generator(std::uint64_t seed, std::size_t max_depth, std::size_t max_width)
        : rng_(seed), max_depth_(max_depth), max_width_(max_width) {}

    explicit Generator(const GenConfig& cfg) : Generator(cfg.seed, cfg.max_depth, cfg.max_width) {}

    // Mostly short guards, occasionally up to max_depth operations.
    std::vector<int> guard() {
        std::size_t cap = std::min<std::size_t>(max_depth_, 2);
        if (below(4) == 0) cap = max_depth_;
        std::vector<int> codes(below(cap + 1));
        for (int& c : codes) c = static_cast<int>(below(64));
        return codes;
    }

    int value() { return static_cast<int>(below(20)); }

    // At most width guarded positions, the terminal one included, so a
    // Writer log has at most max_depth * width entries.
    ListSpec list(std::size_t width) {
        width = std::min(width, max_width_);
        ListSpec spec;
        spec.layers.resize(below(width + 1));
        for (auto& l : spec.layers) {
            l.guard = guard();
            l.value = value();
        }
        if (spec.layers.size() < width) spec.end_guard = guard();
        return spec;
    }

    ListSpec list() { return list(max_width_); }

    KleisliSpec kleisli(std::size_t width) { return {rng_(), width}; }

    TreeSpec tree(std::size_t depth) {
        TreeSpec t;
        t.guard = guard();
        t.value = value();
        if (depth > 0 && below(2) == 0) {
            t.kids.push_back(tree(depth - 1));
            t.kids.push_back(tree(depth - 1));
        }
        return t;
    }

    EffSpec efflist(std::size_t width) {
        EffSpec e;
        e.guard = guard();
        e.values.resize(below(std::min(width, max_width_) + 1));
        for (int& v : e.values) v = value();
        return e;
    }

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    std::size_t max_depth() const { return max_depth_; }
    std::size_t max_width() const { return max_width_; }

private:
    SplitMix64 rng_;
    std::size_t max_depth_;
    std::size_t max_width_;
};

// ---------------------------------------------------------------------------
// Builders

// Element i carries value + (result of its guard), so values can depend on
// effects (state read, environment, ...).
template <class M>
StepList<M, int> build_list(const ListSpec& spec) {
    using L = StepList<M, int>;
    using S = Step<M, int>;
    L xs(M::map(guard_sequence<M>(spec.end_guard), [](int) { return S::done(); }));
    for (auto it = spec.layers.rbegin(); it != spec.layers.rend(); ++it) {
        xs = L(M::map(guard_sequence<M>(it->guard), [v = it->value, xs](int g) { return S::yield(v + g, xs); }));
    }
    return xs;
}

// f(a) is built once per argument and shared afterwards.
template <class R, class Build>
std::function<R(const int&)> memoized(Build build) {
    auto cache = std::make_shared<std::map<int, R>>();
    return [cache, build](const int& a) {
        auto it = cache->find(a);
        if (it == cache->end()) it = cache->emplace(a, build(a)).first;
        return it->second;
    };
}

template <class M>
std::function<StepList<M, int>(const int&)> build_kleisli(const KleisliSpec& k, std::size_t max_depth,
                                                          std::size_t max_width) {
    return memoized<StepList<M, int>>([k, max_depth, max_width](int a) {
        Generator g(mix_seed(k.seed, static_cast<std::uint64_t>(a)), max_depth, max_width);
        return build_list<M>(g.list(k.width));
    });
}

template <class M>
EffTree<M, int> build_tree(const TreeSpec& t) {
    using T = EffTree<M, int>;
    if (t.kids.empty()) {
        return T(M::map(guard_sequence<M>(t.guard), [v = t.value](int g) { return TreeNode<M, int>::leaf(v + g); }));
    }
    return branch_guarded<M, int, int>(guard_sequence<M>(t.guard), build_tree<M>(t.kids[0]), build_tree<M>(t.kids[1]));
}

template <class M>
std::function<EffTree<M, int>(const int&)> build_tree_kleisli(const KleisliSpec& k, std::size_t max_depth,
                                                              std::size_t max_width) {
    return memoized<EffTree<M, int>>([k, max_depth, max_width](int a) {
        Generator g(mix_seed(k.seed, static_cast<std::uint64_t>(a)), max_depth, max_width);
        return build_tree<M>(g.tree(k.width));
    });
}

template <class M>
EffList<M, int> build_efflist(const EffSpec& e) {
    return EffList<M, int>(M::map(guard_sequence<M>(e.guard), [values = e.values](int g) {
        std::vector<int> out = values;
        for (int& v : out) v += g;
        return out;
    }));
}

template <class M>
std::function<EffList<M, int>(const int&)> build_efflist_kleisli(const KleisliSpec& k, std::size_t max_depth,
                                                                 std::size_t max_width) {
    return memoized<EffList<M, int>>([k, max_depth, max_width](int a) {
        Generator g(mix_seed(k.seed, static_cast<std::uint64_t>(a)), max_depth, max_width);
        return build_efflist<M>(g.efflist(k.width));
    });
}

// ---------------------------------------------------------------------------
// Shrinking: greedy structural reduction of a list description.

inline std::vector<ListSpec> shrink_candidates(const ListSpec& s) {
    std::vector<ListSpec> out;
    for (std::size_t i = s.layers.size(); i-- > 0;) {
        ListSpec c = s;
        c.layers.erase(c.layers.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < s.layers.size(); ++i) {
        if (s.layers[i].guard.empty()) continue;
        ListSpec c = s;
        c.layers[i].guard.clear();
        out.push_back(std::move(c));
    }
    if (!s.end_guard.empty()) {
        ListSpec c = s;
        c.end_guard.clear();
        out.push_back(std::move(c));
    }
    return out;
}

using Discrepancy = std::optional<std::pair<std::string, std::string>>;

template <class L, class R>
Discrepancy compare(const L& lhs, const R& rhs) {
    if (lhs == rhs) return std::nullopt;
    return std::pair(show(lhs), show(rhs));
}

// Law over a vector of list descriptions (other inputs are captured).
using ListLaw = std::function<Discrepancy(const std::vector<ListSpec>&)>;

inline std::vector<ListSpec> shrink(std::vector<ListSpec> lists, const ListLaw& law) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < lists.size() && !progress; ++i) {
            for (auto& candidate : shrink_candidates(lists[i])) {
                auto trial = lists;
                trial[i] = std::move(candidate);
                if (law(trial)) {
                    lists = std::move(trial);
                    progress = true;
                    break;
                }
            }
        }
    }
    return lists;
}

constexpr std::size_t kMaxRecordedFailures = 10;

class LawRecorder {
public:
    explicit LawRecorder(LawReport& report) : report_(report) {}

    // Checks a law on list descriptions, shrinking on failure.
    void check(const std::string& law_name, const std::vector<ListSpec>& lists, const std::string& extra,
               const ListLaw& law) {
        auto d = law(lists);
        if (!d) return;
        auto small = shrink(lists, law);
        auto ds = law(small);
        record(law_name, render(small) + extra, ds ? *ds : *d);
    }

    // Checks a law with no shrinkable inputs.
    void check(const std::string& law_name, const std::string& case_text, const Discrepancy& d) {
        if (d) record(law_name, case_text, *d);
    }

private:
    static std::string render(const std::vector<ListSpec>& lists) {
        std::string out;
        for (std::size_t i = 0; i < lists.size(); ++i) out += (i ? " " : "") + lists[i].show();
        return out;
    }

    void record(const std::string& law_name, std::string case_text, const std::pair<std::string, std::string>& d) {
        ++failed_;
        if (report_.failures.size() < kMaxRecordedFailures) {
            report_.failures.push_back({law_name, std::move(case_text), d.first, d.second});
        }
    }

    LawReport& report_;
    std::size_t failed_ = 0;
};

// ---------------------------------------------------------------------------
// Catalog

inline const std::vector<std::string>& suite_catalog() {
    static const std::vector<std::string> suites = {
        "monad-steplist", "monadplus-steplist",        "coherence-writer", "coherence-state", "lift-morphism",
        "flatten-morphism", "monad-backtr",            "cayley-roundtrip", "cayley-hom",      "monad-efflist-commutative",
        "clt-roundtrip",  "clt-hom",                   "efflist-negative"};
    return suites;
}

inline const std::vector<std::string>& base_catalog() {
    static const std::vector<std::string> bases = {"identity", "partial", "error",  "state",   "writer-string",
                                                   "writer-sum", "reader", "thunk", "counter", "freebin"};
    return bases;
}

using LawState = State<3>;
using LawReader = Reader<3>;

// Calls fn(std::type_identity<M>{}) for the policy named by id.
template <class Fn>
decltype(auto) dispatch_base(const std::string& id, Fn&& fn) {
    if (id == "identity") return fn(std::type_identity<Identity>{});
    if (id == "partial") return fn(std::type_identity<Partial>{});
    if (id == "error") return fn(std::type_identity<Error<>>{});
    if (id == "state") return fn(std::type_identity<LawState>{});
    if (id == "writer-string") return fn(std::type_identity<Writer<StringLog>>{});
    if (id == "writer-sum") return fn(std::type_identity<Writer<SumLog>>{});
    if (id == "reader") return fn(std::type_identity<LawReader>{});
    if (id == "thunk") return fn(std::type_identity<Thunk>{});
    if (id == "counter") return fn(std::type_identity<Counter<Identity>>{});
    if (id == "freebin") return fn(std::type_identity<FreeBin>{});
    throw ConfigError("unknown base: " + id);
}

inline bool base_is_commutative(const std::string& base) {
    return dispatch_base(base, [](auto tag) { return decltype(tag)::type::commutative; });
}

inline bool is_negative_suite(const std::string& suite) { return suite == "efflist-negative"; }

// Whether a suite is defined over a base. Counter instruments binds and is not
// lawful under count-sensitive observation, so no suite applies to it.
inline bool applicable(const std::string& suite, const std::string& base) {
    if (std::find(suite_catalog().begin(), suite_catalog().end(), suite) == suite_catalog().end()) {
        throw ConfigError("unknown suite: " + suite);
    }
    if (std::find(base_catalog().begin(), base_catalog().end(), base) == base_catalog().end()) {
        throw ConfigError("unknown base: " + base);
    }
    if (base == "counter") return false;
    if (suite == "coherence-writer") return base == "writer-string" || base == "writer-sum";
    if (suite == "coherence-state") return base == "state";
    if (suite == "monad-efflist-commutative" || suite == "clt-hom") return base_is_commutative(base);
    return true;
}

// The suites `laws --suite all` runs over a base: every applicable positive
// suite, plus the negative suite when the base is declared non-commutative.
inline std::vector<std::string> default_suites(const std::string& base) {
    std::vector<std::string> out;
    for (const auto& s : suite_catalog()) {
        if (!applicable(s, base)) continue;
        if (is_negative_suite(s) && base_is_commutative(base)) continue;
        out.push_back(s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suites

namespace suites {

template <class M>
struct Ctx {
    const GenConfig& cfg;
    Generator gen;
    LawReport& report;
    LawRecorder rec;

    Ctx(const GenConfig& c, std::uint64_t salt, LawReport& r)
        : cfg(c), gen(mix_seed(c.seed, salt), c.max_depth, c.max_width), report(r), rec(r) {}

    auto kleisli(const KleisliSpec& k) const { return build_kleisli<M>(k, cfg.max_depth, cfg.max_width); }
};

template <class M>
void monad_steplist(Ctx<M>& c) {
    using L = StepList<M, int>;
    for (std::size_t i = 0; i < c.cfg.cases; ++i) {
        auto m = c.gen.list();
        auto ks = c.gen.kleisli(3), hs = c.gen.kleisli(2);
        int a = c.gen.value();
        auto k = c.kleisli(ks), h = c.kleisli(hs);
        std::string extra = " " + ks.show() + " " + hs.show() + " a=" + std::to_string(a);

        c.rec.check("left-unit", {}, extra, [&](const std::vector<ListSpec>&) {
            return compare(observe(L::unit(a).bind(k)), observe(k(a)));
        });
        c.rec.check("right-unit", {m}, extra, [&](const std::vector<ListSpec>& s) {
            auto xs = build_list<M>(s[0]);
            return compare(observe(xs.bind([](const int& v) { return L::unit(v); })), observe(xs));
        });
        c.rec.check("associativity", {m}, extra, [&](const std::vector<ListSpec>& s) {
            auto xs = build_list<M>(s[0]);
            return compare(observe(xs.bind(k).bind(h)),
                           observe(xs.bind([k, h](const int& v) { return k(v).bind(h); })));
        });
    }
}

template <class M>
void monadplus_steplist(Ctx<M>& c) {
    using L = StepList<M, int>;
    for (std::size_t i = 0; i < c.cfg.cases; ++i) {
        auto x = c.gen.list(), y = c.gen.list(), z = c.gen.list(4);
        auto fs = c.gen.kleisli(2);
        auto f = c.kleisli(fs);
        std::string extra = " " + fs.show();

        c.rec.check("mplus-left-unit", {x}, extra, [&](const std::vector<ListSpec>& s) {
            auto xs = build_list<M>(s[0]);
            return compare(observe(L::mzero().mplus(xs)), observe(xs));
        });
        c.rec.check("mplus-right-unit", {x}, extra, [&](const std::vector<ListSpec>& s) {
            auto xs = build_list<M>(s[0]);
            return compare(observe(xs.mplus(L::mzero())), observe(xs));
        });
        c.rec.check("mplus-associativity", {x, y, z}, extra, [&](const std::vector<ListSpec>& s) {
            auto xs = build_list<M>(s[0]), ys = build_list<M>(s[1]), zs = build_list<M>(s[2]);
            return compare(observe(xs.mplus(ys).mplus(zs)), observe(xs.mplus(ys.mplus(zs))));
        });
        c.rec.check("left-zero", {}, extra, [&](const std::vector<ListSpec>&) {
            return compare(observe(L::mzero().bind(f)), observe(L::mzero()));
        });
        c.rec.check("left-distributivity", {x, y}, extra, [&](const std::vector<ListSpec>& s) {
            auto xs = build_list<M>(s[0]), ys = build_list<M>(s[1]);
            return compare(observe(xs.mplus(ys).bind(f)), observe(xs.bind(f).mplus(ys.bind(f))));
        });
        c.rec.check("append-oracle", {x, y}, extra, [&](const std::vector<ListSpec>& s) {
            auto xs = build_list<M>(s[0]), ys = build_list<M>(s[1]);
            auto appended = M::bind(observe_all(xs), [ys](const std::vector<int>& a) {
                return M::map(observe_all(ys), [a](const std::vector<int>& b) {
                    auto out = a;
                    out.insert(out.end(), b.begin(), b.end());
                    return out;
                });
            });
            return compare(M::observe(observe_all(xs.mplus(ys))), M::observe(appended));
        });
    }
}

// op(x1..xn) `mplus` y = op(x1 `mplus` y, ..., xn `mplus` y), with op an
// effect operation lifted into the list and the continuation branching on its
// result.
template <class M>
void coherence(Ctx<M>& c) {
    using L = StepList<M, int>;
    for (std::size_t i = 0; i < c.cfg.cases; ++i) {
        auto op_codes = c.gen.guard();
        if (op_codes.empty()) op_codes.push_back(static_cast<int>(c.gen.below(64)));
        auto y = c.gen.list();
        auto ks = c.gen.kleisli(3);
        auto k = c.kleisli(ks);
        auto op = guard_sequence<M>(op_codes);
        std::string extra = " op=" + show(op_codes) + " " + ks.show();

        c.rec.check("coherence", {y}, extra, [&](const std::vector<ListSpec>& s) {
            auto ys = build_list<M>(s[0]);
            auto lhs = L::lift(op).bind(k).mplus(ys);
            auto rhs = L::lift(op).bind([k, ys](const int& a) { return k(a).mplus(ys); });
            return compare(observe(lhs), observe(rhs));
        });
    }
}

template <class M>
void lift_morphism(Ctx<M>& c) {
    using L = StepList<M, int>;
    using K = Backtr<M, int>;
    for (std::size_t i = 0; i < c.cfg.cases; ++i) {
        auto m_codes = c.gen.guard(), k_codes = c.gen.guard();
        int a = c.gen.value();
        auto m = guard_sequence<M>(m_codes);
        auto k = [kc = guard_sequence<M>(k_codes)](const int& v) {
            return M::map(kc, [v](int g) { return v * 2 + g; });
        };
        std::string text = "m=" + show(m_codes) + " k=" + show(k_codes) + " a=" + std::to_string(a);

        c.rec.check("lift-unit", text, compare(observe(L::lift(M::unit(a))), observe(L::unit(a))));
        c.rec.check("lift-bind", text,
                    compare(observe(L::lift(M::bind(m, k))),
                            observe(L::lift(m).bind([k](const int& v) { return L::lift(k(v)); }))));
        c.rec.check("backtr-lift-unit", text, compare(observe(K::lift(M::unit(a))), observe(K::unit(a))));
        c.rec.check("backtr-lift-bind", text,
                    compare(observe(K::lift(M::bind(m, k))),
                            observe(K::lift(m).bind([k](const int& v) { return K::lift(k(v)); }))));
        c.rec.check("lift-observe-all", text,
                    compare(M::observe(observe_all(L::lift(m))),
                            M::observe(M::map(m, [](int v) { return std::vector<int>{v}; }))));
    }
}

template <class M>
void flatten_morphism(Ctx<M>& c) {
    using T = EffTree<M, int>;
    using L = StepList<M, int>;
    for (std::size_t i = 0; i < c.cfg.cases; ++i) {
        auto ts = c.gen.tree(3);
        auto fs = c.gen.kleisli(2), hs = c.gen.kleisli(1);
        auto f = build_tree_kleisli<M>(fs, c.cfg.max_depth, c.cfg.max_width);
        auto h = build_tree_kleisli<M>(hs, c.cfg.max_depth, c.cfg.max_width);
        int a = c.gen.value();
        auto t = build_tree<M>(ts);
        std::string text = ts.show() + " " + fs.show() + " " + hs.show() + " a=" + std::to_string(a);

        c.rec.check("flatten-unit", text, compare(observe(flatten(T::unit(a))), observe(L::unit(a))));
        c.rec.check("flatten-bind", text,
                    compare(observe(flatten(t.bind(f))),
                            observe(flatten(t).bind([f](const int& v) { return flatten(f(v)); }))));
        c.rec.check("tree-left-unit", text, compare(observe(T::unit(a).bind(f)), observe(f(a))));
        c.rec.check("tree-right-unit", text,
                    compare(observe(t.bind([](const int& v) { return T::unit(v); })), observe(t)));
        c.rec.check("tree-associativity", text,
                    compare(observe(t.bind(f).bind(h)),
                            observe(t.bind([f, h](const int& v) { return f(v).bind(h); }))));
        if (!ts.kids.empty()) {
            auto g = guard_sequence<M>(ts.guard);
            auto l = build_tree<M>(ts.kids[0]), r = build_tree<M>(ts.kids[1]);
            c.rec.check("flatten-branch", text,
                        compare(observe(flatten(branch_guarded<M, int, int>(g, l, r))),
                                observe(L::lift(g).bind([l, r](const int&) { return flatten(l).mplus(flatten(r)); }))));
        }
    }
}

template <class M>
void monad_backtr(Ctx<M>& c) {
    using K = Backtr<M, int>;
    for (std::size_t i = 0; i < c.cfg.cases; ++i) {
        auto x = c.gen.list(), y = c.gen.list(4), z = c.gen.list(4);
        auto fs = c.gen.kleisli(3), hs = c.gen.kleisli(2);
        int a = c.gen.value();
        auto f = [lf = c.kleisli(fs)](const int& v) { return to_backtr(lf(v)); };
        auto h = [lh = c.kleisli(hs)](const int& v) { return to_backtr(lh(v)); };
        std::string extra = " " + fs.show() + " " + hs.show() + " a=" + std::to_string(a);
        auto rep = [](const ListSpec& s) { return to_backtr(build_list<M>(s)); };

        c.rec.check("left-unit", {}, extra, [&](const std::vector<ListSpec>&) {
            return compare(observe(K::unit(a).bind(f)), observe(f(a)));
        });
        c.rec.check("right-unit", {x}, extra, [&](const std::vector<ListSpec>& s) {
            auto k = rep(s[0]);
            return compare(observe(k.bind([](const int& v) { return K::unit(v); })), observe(k));
        });
        c.rec.check("associativity", {x}, extra, [&](const std::vector<ListSpec>& s) {
            auto k = rep(s[0]);
            return compare(observe(k.bind(f).bind(h)), observe(k.bind([f, h](const int& v) { return f(v).bind(h); })));
        });
        c.rec.check("mplus-units", {x}, extra, [&](const std::vector<ListSpec>& s) {
            auto k = rep(s[0]);
            auto l = compare(observe(K::mzero().mplus(k)), observe(k));
            return l ? l : compare(observe(k.mplus(K::mzero())), observe(k));
        });
        c.rec.check("mplus-associativity", {x, y, z}, extra, [&](const std::vector<ListSpec>& s) {
            auto p = rep(s[0]), q = rep(s[1]), r = rep(s[2]);
            return compare(observe(p.mplus(q).mplus(r)), observe(p.mplus(q.mplus(r))));
        });
        c.rec.check("left-zero", {}, extra, [&](const std::vector<ListSpec>&) {
            return compare(observe(K::mzero().bind(f)), observe(K::mzero()));
        });
        c.rec.check("left-distributivity", {x, y}, extra, [&](const std::vector<ListSpec>& s) {
            auto p = rep(s[0]), q = rep(s[1]);
            return compare(observe(p.mplus(q).bind(f)), observe(p.bind(f).mplus(q.bind(f))));
        });
        c.rec.check("observe-all-direct", {x, y}, extra, [&](const std::vector<ListSpec>& s) {
            auto k = rep(s[0]).mplus(rep(s[1])).bind(f);
            return compare(M::observe(observe_all(k)), M::observe(observe_all(from_backtr(k))));
        });
    }
}

template <class M>
void cayley_roundtrip(Ctx<M>& c) {
    for (std::size_t i = 0; i < c.cfg.cases; ++i) {
        auto x = c.gen.list();
        c.rec.check("abs-rep", {x}, "", [&](const std::vector<ListSpec>& s) {
            auto xs = build_list<M>(s[0]);
            return compare(observe(from_backtr(to_backtr(xs))), observe(xs));
        });
    }
}

template <class M>
void cayley_hom(Ctx<M>& c) {
    using L = StepList<M, int>;
    using K = Backtr<M, int>;
    for (std::size_t i = 0; i < c.cfg.cases; ++i) {
        auto x = c.gen.list(), y = c.gen.list();
        auto fs = c.gen.kleisli(3);
        auto f = c.kleisli(fs);
        auto m_codes = c.gen.guard();
        int a = c.gen.value();
        std::string extra = " " + fs.show() + " m=" + show(m_codes) + " a=" + std::to_string(a);

        c.rec.check("rep-unit", {}, extra, [&](const std::vector<ListSpec>&) {
            return compare(observe(to_backtr(L::unit(a))), observe(K::unit(a)));
        });
        c.rec.check("rep-mzero", {}, extra, [&](const std::vector<ListSpec>&) {
            return compare(observe(to_backtr(L::mzero())), observe(K::mzero()));
        });
        c.rec.check("rep-mplus", {x, y}, extra, [&](const std::vector<ListSpec>& s) {
            auto xs = build_list<M>(s[0]), ys = build_list<M>(s[1]);
            return compare(observe(to_backtr(xs.mplus(ys))), observe(to_backtr(xs).mplus(to_backtr(ys))));
        });
        c.rec.check("rep-lift", {}, extra, [&](const std::vector<ListSpec>&) {
            auto m = guard_sequence<M>(m_codes);
            return compare(observe(to_backtr(L::lift(m))), observe(K::lift(m)));
        });
        c.rec.check("rep-bind", {x}, extra, [&](const std::vector<ListSpec>& s) {
            auto xs = build_list<M>(s[0]);
            return compare(observe(to_backtr(xs.bind(f))),
                           observe(to_backtr(xs).bind([f](const int& v) { return to_backtr(f(v)); })));
        });
    }
}

// EffList and CLT laws over a commutative base, plus the coherence and
// symmetry instances that make m[a] an algebra of the composite adjunction.
template <class M>
void monad_efflist_commutative(Ctx<M>& c) {
    using E = EffList<M, int>;
    using K = CLT<M, int>;
    const auto& cfg = c.cfg;
    for (std::size_t i = 0; i < cfg.cases; ++i) {
        auto xs = c.gen.efflist(cfg.max_width), ys = c.gen.efflist(4), zs = c.gen.efflist(4);
        auto fs = c.gen.kleisli(3), hs = c.gen.kleisli(2);
        auto m1 = c.gen.guard(), m2 = c.gen.guard();
        int a = c.gen.value();
        auto f = build_efflist_kleisli<M>(fs, cfg.max_depth, cfg.max_width);
        auto h = build_efflist_kleisli<M>(hs, cfg.max_depth, cfg.max_width);
        auto kf = [f](const int& v) { return to_clt(f(v)); };
        auto kh = [h](const int& v) { return to_clt(h(v)); };
        auto x = build_efflist<M>(xs), y = build_efflist<M>(ys), z = build_efflist<M>(zs);
        std::string text = xs.show() + " " + ys.show() + " " + zs.show() + " " + fs.show() + " " + hs.show() +
                           " m1=" + show(m1) + " m2=" + show(m2) + " a=" + std::to_string(a);

        c.rec.check("efflist-left-unit", text, compare(observe(E::unit(a).bind(f)), observe(f(a))));
        c.rec.check("efflist-right-unit", text,
                    compare(observe(x.bind([](const int& v) { return E::unit(v); })), observe(x)));
        c.rec.check("efflist-associativity", text,
                    compare(observe(x.bind(f).bind(h)), observe(x.bind([f, h](const int& v) { return f(v).bind(h); }))));
        c.rec.check("efflist-mplus-units", text, compare(observe(E::mzero().mplus(x)), observe(x.mplus(E::mzero()))));
        c.rec.check("efflist-mplus-associativity", text,
                    compare(observe(x.mplus(y).mplus(z)), observe(x.mplus(y.mplus(z)))));
        c.rec.check("efflist-left-zero", text, compare(observe(E::mzero().bind(f)), observe(E::mzero())));
        c.rec.check("efflist-left-distributivity", text,
                    compare(observe(x.mplus(y).bind(f)), observe(x.bind(f).mplus(y.bind(f)))));

        auto op = guard_sequence<M>(m1);
        c.rec.check("efflist-coherence", text,
                    compare(observe(E::lift(op).bind(f).mplus(y)),
                            observe(E::lift(op).bind([f, y](const int& v) { return f(v).mplus(y); }))));
        auto g1 = guard_sequence<M>(m1), g2 = guard_sequence<M>(m2);
        using P = EffList<M, std::pair<int, int>>;
        auto tau_first = E::lift(g1).bind([g2](const int& u) {
            return P::lift(M::map(g2, [u](int v) { return std::pair(u, v); }));
        });
        auto tau_second = E::lift(g2).bind([g1](const int& v) {
            return P::lift(M::map(g1, [v](int u) { return std::pair(u, v); }));
        });
        c.rec.check("efflist-symmetric", text, compare(observe(tau_first), observe(tau_second)));

        auto kx = to_clt(x), ky = to_clt(y), kz = to_clt(z);
        c.rec.check("clt-left-unit", text, compare(observe(K::unit(a).bind(kf)), observe(kf(a))));
        c.rec.check("clt-right-unit", text,
                    compare(observe(kx.bind([](const int& v) { return K::unit(v); })), observe(kx)));
        c.rec.check("clt-associativity", text,
                    compare(observe(kx.bind(kf).bind(kh)),
                            observe(kx.bind([kf, kh](const int& v) { return kf(v).bind(kh); }))));
        c.rec.check("clt-mplus-units", text,
                    compare(observe(K::mzero().mplus(kx)), observe(kx.mplus(K::mzero()))));
        c.rec.check("clt-mplus-associativity", text,
                    compare(observe(kx.mplus(ky).mplus(kz)), observe(kx.mplus(ky.mplus(kz)))));
        c.rec.check("clt-left-zero", text, compare(observe(K::mzero().bind(kf)), observe(K::mzero())));
        c.rec.check("clt-left-distributivity", text,
                    compare(observe(kx.mplus(ky).bind(kf)), observe(kx.bind(kf).mplus(ky.bind(kf)))));
    }
}

template <class M>
void clt_roundtrip(Ctx<M>& c) {
    for (std::size_t i = 0; i < c.cfg.cases; ++i) {
        auto es = c.gen.efflist(c.cfg.max_width);
        auto e = build_efflist<M>(es);
        c.rec.check("from-to", es.show(), compare(observe(from_clt(to_clt(e))), observe(e)));
    }
}

template <class M>
void clt_hom(Ctx<M>& c) {
    using E = EffList<M, int>;
    using K = CLT<M, int>;
    const auto& cfg = c.cfg;
    for (std::size_t i = 0; i < cfg.cases; ++i) {
        auto xs = c.gen.efflist(cfg.max_width), ys = c.gen.efflist(cfg.max_width);
        auto fs = c.gen.kleisli(3);
        auto m_codes = c.gen.guard();
        int a = c.gen.value();
        auto f = build_efflist_kleisli<M>(fs, cfg.max_depth, cfg.max_width);
        auto x = build_efflist<M>(xs), y = build_efflist<M>(ys);
        auto m = guard_sequence<M>(m_codes);
        std::string text = xs.show() + " " + ys.show() + " " + fs.show() + " m=" + show(m_codes) +
                           " a=" + std::to_string(a);

        c.rec.check("to-clt-unit", text, compare(observe(to_clt(E::unit(a))), observe(K::unit(a))));
        c.rec.check("to-clt-mzero", text, compare(observe(to_clt(E::mzero())), observe(K::mzero())));
        c.rec.check("to-clt-mplus", text, compare(observe(to_clt(x.mplus(y))), observe(to_clt(x).mplus(to_clt(y)))));
        c.rec.check("to-clt-lift", text, compare(observe(to_clt(E::lift(m))), observe(K::lift(m))));
        c.rec.check("to-clt-bind", text,
                    compare(observe(to_clt(x.bind(f))),
                            observe(to_clt(x).bind([f](const int& v) { return to_clt(f(v)); }))));
    }
}

// Operations exhibiting non-associativity of m[a] over a base: p >>= f >>= g
// with p = pure [0, 1].
template <class M>
struct NegativeWitness {
    static Comp<M, int> first(int) { return M::guard(5); }
    static Comp<M, int> second(int) { return M::guard(9); }
};

template <class Log>
struct NegativeWitness<Writer<Log>> {
    using W = Writer<Log>;
    static Comp<W, int> first(int i) {
        if constexpr (std::is_same_v<Log, StringLog>) return W::map(W::tell("x"), [i](Unit) { return i; });
        else return W::map(W::tell(1), [i](Unit) { return i; });
    }
    static Comp<W, int> second(int i) {
        if constexpr (std::is_same_v<Log, StringLog>) return W::map(W::tell("y"), [i](Unit) { return i; });
        else return W::map(W::tell(2), [i](Unit) { return i; });
    }
};

template <int N>
struct NegativeWitness<State<N>> {
    using S = State<N>;
    static Comp<S, int> first(int i) {
        return {[i](int s) { return std::pair<int, int>(i, (s + 1) % N); }};
    }
    static Comp<S, int> second(int i) {
        return {[i](int s) { return std::pair<int, int>(i, (2 * s) % N); }};
    }
};

template <class E>
struct NegativeWitness<Error<E>> {
    using X = Error<E>;
    static Comp<X, int> first(int i) { return i == 0 ? X::unit(i) : X::template raise<int>("x"); }
    static Comp<X, int> second(int) { return X::template raise<int>("y"); }
};

template <>
struct NegativeWitness<FreeBin> {
    static Comp<FreeBin, int> first(int i) { return FreeBin::branch(FreeBin::unit(i), FreeBin::unit(i + 10)); }
    static Comp<FreeBin, int> second(int i) { return FreeBin::branch(FreeBin::unit(i), FreeBin::unit(i + 20)); }
};

template <class M>
void efflist_negative(Ctx<M>& c) {
    using E = EffList<M, int>;
    using Wit = NegativeWitness<M>;
    E p(M::unit(std::vector<int>{0, 1}));
    auto [lhs, rhs] = association_pair(p, [](const int& i) { return E::lift(Wit::first(i)); },
                                       [](const int& i) { return E::lift(Wit::second(i)); });
    c.report.cases = 1;
    c.rec.check("witness", "p=pure [0,1] (p>>=f)>>=g vs p>>=(f>=>g)", compare(lhs, rhs));
}

} // namespace suites

// Runs one suite over base M.
template <class M>
LawReport run_suite_for(const std::string& suite, const GenConfig& cfg) {
    LawReport report;
    report.suite = suite;
    report.base = cfg.base;
    report.cases = cfg.cases;
    const auto& catalog = suite_catalog();
    auto pos = std::find(catalog.begin(), catalog.end(), suite);
    if (pos == catalog.end()) throw ConfigError("unknown suite: " + suite);
    if (!applicable(suite, cfg.base)) throw ConfigError("suite " + suite + " does not apply to base " + cfg.base);

    suites::Ctx<M> c(cfg, static_cast<std::uint64_t>(pos - catalog.begin()), report);
    if (suite == "monad-steplist") suites::monad_steplist(c);
    else if (suite == "monadplus-steplist") suites::monadplus_steplist(c);
    else if (suite == "coherence-writer" || suite == "coherence-state") suites::coherence(c);
    else if (suite == "lift-morphism") suites::lift_morphism(c);
    else if (suite == "flatten-morphism") suites::flatten_morphism(c);
    else if (suite == "monad-backtr") suites::monad_backtr(c);
    else if (suite == "cayley-roundtrip") suites::cayley_roundtrip(c);
    else if (suite == "cayley-hom") suites::cayley_hom(c);
    else if (suite == "monad-efflist-commutative") suites::monad_efflist_commutative(c);
    else if (suite == "clt-roundtrip") suites::clt_roundtrip(c);
    else if (suite == "clt-hom") suites::clt_hom(c);
    else if (suite == "efflist-negative") suites::efflist_negative(c);

    report.passed = is_negative_suite(suite) ? !report.failures.empty() : report.failures.empty();
    return report;
}

inline LawReport run_suite(const std::string& suite, const GenConfig& cfg) {
    return dispatch_base(cfg.base, [&](auto tag) {
        using M = typename decltype(tag)::type;
        if constexpr (std::is_same_v<M, Counter<Identity>>) {
            // No suite applies; run_suite_for would throw after checking names.
            applicable(suite, cfg.base);
            throw ConfigError("suite " + suite + " does not apply to base " + cfg.base);
            return LawReport{};
        } else {
            return run_suite_for<M>(suite, cfg);
        }
    });
}

} // namespace backtrack
