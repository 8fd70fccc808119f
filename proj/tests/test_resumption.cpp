#include <catch_amalgamated.hpp>

#include <functional>
#include <string>
#include <vector>

#include "backtrack/resumption.hpp"

using namespace backtrack;

using WS = Writer<StringLog>;
using Ints = std::vector<int>;
using IT = EffTree<Identity, int>;
using WT = EffTree<WS, int>;

namespace {

IT leaf(int v) { return IT::unit(v); }
IT node(IT l, IT r) { return branch_guarded<Identity, int, Unit>(Identity::unit(Unit{}), std::move(l), std::move(r)); }

Ints flat(const IT& t) { return Identity::observe(observe_all(flatten(t))); }

std::pair<std::string, Ints> wflat(const WT& t) { return WS::observe(observe_all(flatten(t))); }

} // namespace

TEST_CASE("unit") {
    auto t = IT::unit(3);
    REQUIRE(t.node().value.is_leaf());
    CHECK(t.node().value.value() == 3);
    CHECK(eq_obs(flatten(t), StepList<Identity, int>::unit(3)));
    auto w = WT::unit(3);
    CHECK(WS::observe(w.node()).first.empty());
    CHECK(w.node().value.is_leaf());
}

TEST_CASE("bind substitutes leaves") {
    auto t = leaf(1).bind([](const int& n) { return node(leaf(n), leaf(n + 1)); });
    CHECK(flat(t) == Ints{1, 2});
    CHECK_FALSE(t.node().value.is_leaf());

    auto f = [](const int& n) { return node(leaf(n * 10), leaf(n)); };
    CHECK(eq_obs(IT::unit(4).bind(f), f(4)));

    WT logged(WS::map(WS::tell("a"), [](Unit) { return TreeNode<WS, int>::leaf(1); }));
    auto g = [](const int& n) { return WT(WS::map(WS::tell("b"), [n](Unit) { return TreeNode<WS, int>::leaf(n + 1); })); };
    CHECK(wflat(logged.bind(g)) == std::pair<std::string, Ints>("ab", {2}));
}

TEST_CASE("branch_guarded") {
    auto t = branch_guarded<Identity, int, Unit>(Identity::unit(Unit{}), leaf(1), leaf(2));
    CHECK(flat(t) == Ints{1, 2});
    using IL = StepList<Identity, int>;
    CHECK(eq_obs(flatten(t), IL::unit(1).mplus(IL::unit(2))));

    auto w = branch_guarded<WS, int, Unit>(WS::tell("g"), WT::unit(1), WT::unit(2));
    CHECK(wflat(w) == std::pair<std::string, Ints>("g", {1, 2}));
}

TEST_CASE("flatten") {
    CHECK(flat(node(leaf(1), node(leaf(2), leaf(3)))) == Ints{1, 2, 3});
    CHECK(flat(node(node(leaf(1), leaf(2)), leaf(3))) == Ints{1, 2, 3});

    // The guard of the right subtree runs after every element on the left.
    auto l = WT(WS::map(WS::tell("l"), [](Unit) { return TreeNode<WS, int>::leaf(1); }));
    auto r = WT(WS::map(WS::tell("r"), [](Unit) { return TreeNode<WS, int>::leaf(2); }));
    auto t = branch_guarded<WS, int, Unit>(WS::tell("g"), l, r);
    auto xs = flatten(t);
    CHECK(WS::observe(take_first(xs)).first == "gl");
    CHECK(WS::observe(observe_all(xs)).first == "glr");
}

TEST_CASE("flatten is a monad morphism on examples") {
    auto t = branch_guarded<WS, int, Unit>(WS::tell("t"), WT::unit(1), WT::unit(2));
    auto f = [](const int& n) { return branch_guarded<WS, int, Unit>(WS::tell(std::string(1, 'a' + n)), WT::unit(n), WT::unit(-n)); };
    CHECK(eq_obs(flatten(t.bind(f)), flatten(t).bind([f](const int& n) { return flatten(f(n)); })));
    CHECK(wflat(t.bind(f)) == std::pair<std::string, Ints>("tbc", {1, -1, 2, -2}));
    CHECK(eq_obs(flatten(WT::unit(5)), StepList<WS, int>::unit(5)));
}

TEST_CASE("eval_tree") {
    CHECK(eval_tree(FreeBin::branch(FreeBin::unit(2), FreeBin::unit(3)), std::plus<int>()) == 5);
    CHECK(eval_tree(FreeBin::unit(7), std::plus<int>()) == 7);
    CHECK(eval_tree(FreeBin::branch(FreeBin::branch(FreeBin::unit(1), FreeBin::unit(2)), FreeBin::unit(3)),
                    std::plus<int>()) == 6);
}

TEST_CASE("evaluation by + is coherent with multiplication") {
    std::vector<EffTree<Identity, int>> trees = {
        FreeBin::unit(3), FreeBin::branch(FreeBin::unit(2), FreeBin::unit(3)),
        FreeBin::branch(FreeBin::branch(FreeBin::unit(1), FreeBin::unit(-2)), FreeBin::branch(FreeBin::unit(5), FreeBin::unit(0)))};
    for (const auto& t : trees) {
        for (int y : {0, 1, 4, -3}) {
            auto scaled = FreeBin::map(t, [y](const int& x) { return x * y; });
            CHECK(eval_tree(t, std::plus<int>()) * y == eval_tree(scaled, std::plus<int>()));
        }
    }
}

TEST_CASE("FreeBin as a base effect") {
    auto c = FreeBin::choose();
    CHECK(FreeBin::observe(c).show() == "<false|true>");
    auto t = FreeBin::bind(c, [](const bool& b) { return FreeBin::unit(b ? 1 : 0); });
    CHECK(FreeBin::observe(t).show() == "<0|1>");
    CHECK(FreeBin::observe(FreeBin::guard(63)).show() == "<0|1>");
    CHECK(FreeBin::observe(FreeBin::guard(7)).show() == "1");
    CHECK(FreeBin::observe(FreeBin::unit(4)) == FreeBin::observe(FreeBin::map(FreeBin::unit(2), [](const int& x) { return x * 2; })));
}
