#include <catch_amalgamated.hpp>

#include <functional>
#include <string>
#include <vector>

#include "backtrack/effects.hpp"
#include "backtrack/resumption.hpp"
#include "backtrack/steplist.hpp"

using namespace backtrack;

using WS = Writer<StringLog>;
using WL = StepList<WS, int>;
using IL = StepList<Identity, int>;
using Ints = std::vector<int>;

namespace {

// (g0, v0, g1, v1, ..., gn): guard gi is logged before element vi, gn ends.
WL wl(const std::vector<std::string>& guards, const Ints& values) {
    WL xs = terminal<WS, int>(WS::tell(guards.back()));
    for (std::size_t i = values.size(); i-- > 0;) xs = guarded<WS, int>(WS::tell(guards[i]), values[i], xs);
    return xs;
}

std::pair<std::string, Ints> all(const WL& xs) { return WS::observe(observe_all(xs)); }

Ints pure_all(const IL& xs) { return Identity::observe(observe_all(xs)); }

} // namespace

TEST_CASE("unit and mzero") {
    CHECK(all(WL::unit(7)) == std::pair<std::string, Ints>("", {7}));
    CHECK(pure_all(IL::unit(7)) == Ints{7});
    CHECK(eq_obs(WL::unit(7), wl({"", ""}, {7})));
    CHECK(all(WL::mzero()) == std::pair<std::string, Ints>("", {}));
    CHECK(eq_obs(WL::mzero(), wl({""}, {})));
    auto xs = wl({"a", "b", "c"}, {1, 2});
    CHECK(eq_obs(WL::mzero().mplus(xs), xs));
}

TEST_CASE("mplus") {
    auto xs = wl({"a", "b"}, {1}), ys = wl({"c", "d"}, {2});
    auto zs = xs.mplus(ys);
    CHECK(eq_obs(zs, wl({"a", "bc", "d"}, {1, 2})));
    CHECK(all(zs) == std::pair<std::string, Ints>("abcd", {1, 2}));
    CHECK(eq_obs(xs.mplus(WL::mzero()), xs));
    CHECK(pure_all(IL::unit(1).mplus(from_values<Identity, int>({2, 3}))) == Ints{1, 2, 3});
}

TEST_CASE("bind") {
    auto xs = wl({"a", "b", "c"}, {1, 2});
    auto f = [](const int& n) { return wl({"", "", ""}, {n, n + 10}); };
    auto ys = xs.bind(f);
    CHECK(eq_obs(ys, wl({"a", "", "b", "", "c"}, {1, 11, 2, 12})));
    CHECK(all(ys) == std::pair<std::string, Ints>("abc", {1, 11, 2, 12}));
    CHECK(eq_obs(WL::unit(3).bind(f), f(3)));
    CHECK(eq_obs(WL::mzero().bind(f), WL::mzero()));
    CHECK(all(WL::mzero().bind(f)) == all(WL::mzero()));
}

TEST_CASE("lift") {
    auto m = Logged<std::string, int>{"a", 5};
    CHECK(eq_obs(WL::lift(m), wl({"a", ""}, {5})));
    CHECK(all(WL::lift(m)) == std::pair<std::string, Ints>("a", {5}));
    CHECK(eq_obs(WL::lift(WS::unit(5)), WL::unit(5)));
    auto k = [](int n) { return Logged<std::string, int>{"k", n * 2}; };
    CHECK(eq_obs(WL::lift(WS::bind(m, k)), WL::lift(m).bind([k](const int& n) { return WL::lift(k(n)); })));
}

TEST_CASE("observe_all") {
    CHECK(all(wl({"a", "b", "c"}, {1, 2})) == std::pair<std::string, Ints>("abc", {1, 2}));
    CHECK(pure_all(from_values<Identity, int>({1, 2})) == Ints{1, 2});
    CHECK(pure_all(IL::mzero()).empty());
}

TEST_CASE("take_first") {
    auto xs = wl({"a", "b", "c"}, {1, 2});
    CHECK(WS::observe(take_first(xs)) == std::pair<std::string, std::optional<int>>("a", 1));
    CHECK(WS::observe(take_first(wl({"z"}, {}))) == std::pair<std::string, std::optional<int>>("z", std::nullopt));
    CHECK(Identity::observe(take_first(IL::unit(4))) == std::optional<int>(4));
}

TEST_CASE("take_n") {
    auto xs = wl({"a", "b", "c"}, {1, 2});
    CHECK(WS::observe(take_n(1, xs)) == std::pair<std::string, Ints>("a", {1}));
    CHECK(WS::observe(take_n(0, xs)) == std::pair<std::string, Ints>("", {}));
    CHECK(WS::observe(take_n(5, wl({"a", "b"}, {1}))) == std::pair<std::string, Ints>("ab", {1}));
    CHECK(WS::observe(take_n(2, xs)) == std::pair<std::string, Ints>("ab", {1, 2}));
}

TEST_CASE("layered observation separates guard placement") {
    CHECK(eq_obs(wl({"a", "b"}, {1}), wl({"a", "b"}, {1})));
    CHECK_FALSE(eq_obs(wl({"a", ""}, {1}), wl({"", "a"}, {1})));
    // Same total log and values, different layering.
    CHECK(all(wl({"ab", ""}, {1})) == all(wl({"a", "b"}, {1})));
    CHECK_FALSE(eq_obs(wl({"ab", ""}, {1}), wl({"a", "b"}, {1})));
    CHECK(observe(wl({"a", "b"}, {1})).size() == 3);
}

TEST_CASE("layered observation under State") {
    using S = State<3>;
    using SL = StepList<S, int>;
    auto read_then_bump = guarded<S, int>(S::get(), 0, terminal<S, int>(S::guard(2)));
    auto bump_then_read = guarded<S, int>(S::guard(2), 0, terminal<S, int>(S::get()));
    CHECK_FALSE(eq_obs(read_then_bump, bump_then_read));
    CHECK(eq_obs(read_then_bump.mplus(SL::mzero()), read_then_bump));
}

TEST_CASE("forcing a layer runs only its own guard") {
    using T = Thunk;
    using TL = StepList<T, int>;
    std::function<TL(int)> from = [&](int n) -> TL {
        if (n == 4) return TL(T::delay([] { return Step<T, int>::done(); }));
        return TL(T::delay([n, &from] { return Step<T, int>::yield(n, from(n + 1)); }));
    };
    auto xs = from(0);
    CHECK(T::observe(take_first(xs)).second == 1);
    CHECK(T::observe(take_n(2, xs)).second == 2);
    CHECK(T::observe(observe_all(xs)) == std::pair<Ints, std::size_t>({0, 1, 2, 3}, 5));
}

TEST_CASE("left distributivity and left zero") {
    auto x = wl({"a", "b"}, {1}), y = wl({"c", "d", "e"}, {2, 3});
    auto f = [](const int& n) { return wl({"f", "g", "h"}, {n, -n}); };
    CHECK(eq_obs(x.mplus(y).bind(f), x.bind(f).mplus(y.bind(f))));
    CHECK(eq_obs(WL::mzero().bind(f), WL::mzero()));
}

TEST_CASE("coherence with tell") {
    auto y = wl({"y", "z"}, {9});
    auto k = [](const Unit&) { return wl({"k", "", "m"}, {1, 2}); };
    using UL = StepList<WS, Unit>;
    auto lhs = UL::lift(WS::tell("w")).bind(k).mplus(y);
    auto rhs = UL::lift(WS::tell("w")).bind([k, y](const Unit& u) { return k(u).mplus(y); });
    CHECK(eq_obs(lhs, rhs));
    CHECK(all(lhs) == std::pair<std::string, Ints>("wkmyz", {1, 2, 9}));
}

TEST_CASE("fold_with into the free binary-operation algebra") {
    using FL = StepList<FreeBin, int>;
    auto algebra = [](const EffTree<Identity, int>& t) { return eval_tree(t, std::plus<int>()); };
    auto times = std::multiplies<int>();
    auto id = [](const int& a) { return a; };

    // A choice between the singletons 2 and 3, made by the binary operation.
    auto choice = FL(FreeBin::branch(FreeBin::unit(Step<FreeBin, int>::yield(2, FL::mzero())),
                                     FreeBin::unit(Step<FreeBin, int>::yield(3, FL::mzero()))));
    CHECK(fold_with(algebra, times, 1, id, choice) == 5);
    CHECK(fold_with(algebra, times, 1, id, choice.mplus(FL::unit(4))) == 20);
    CHECK(fold_with(algebra, times, 1, id, choice.mplus(FL::unit(4))) == 2 * 4 + 3 * 4);
}

TEST_CASE("fold_with at Identity is observe_all") {
    auto collapse = [](const Pure<Ints>& m) { return m.value; };
    auto append = [](Ints a, const Ints& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    auto single = [](const int& a) { return Ints{a}; };
    auto xs = from_values<Identity, int>({4, 5, 6}).mplus(IL::unit(7));
    CHECK(fold_with(collapse, append, Ints{}, single, xs) == pure_all(xs));
}

TEST_CASE("check_coherence") {
    auto algebra = [](const EffTree<Identity, int>& t) { return eval_tree(t, std::plus<int>()); };
    std::vector<EffTree<Identity, int>> trees = {
        FreeBin::unit(7), FreeBin::branch(FreeBin::unit(2), FreeBin::unit(3)),
        FreeBin::branch(FreeBin::branch(FreeBin::unit(1), FreeBin::unit(2)), FreeBin::unit(3))};
    CHECK(check_coherence<FreeBin, int>(algebra, std::multiplies<int>(), trees, {0, 1, 4, -2}));
    // Addition does not distribute over addition.
    CHECK_FALSE(check_coherence<FreeBin, int>(algebra, std::plus<int>(), trees, {1}));
}

TEST_CASE("append oracle") {
    auto x = wl({"a", "b", "c"}, {1, 2}), y = wl({"d", "e"}, {3});
    auto [lx, vx] = all(x);
    auto [ly, vy] = all(y);
    Ints both = vx;
    both.insert(both.end(), vy.begin(), vy.end());
    CHECK(all(x.mplus(y)) == std::pair<std::string, Ints>(lx + ly, both));
}

TEST_CASE("take_n log is a prefix of observe_all log") {
    auto xs = wl({"a", "b", "c", "d"}, {1, 2, 3});
    auto full = all(xs).first;
    for (std::size_t n = 0; n <= 4; ++n) {
        auto part = WS::observe(take_n(n, xs)).first;
        CHECK(full.compare(0, part.size(), part) == 0);
    }
}
