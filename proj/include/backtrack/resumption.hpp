#pragma once

// Effect-guarded binary trees (the resumption monad for the functor X -> X x X),
// the flatten morphism into StepList, and the free binary-operation base effect.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "backtrack/effects.hpp"
#include "backtrack/steplist.hpp"

namespace backtrack {

template <class M, class A>
struct TreeNode;

template <class M, class A>
class EffTree {
public:
    using effect_type = M;
    using value_type = A;
    using node_type = Comp<M, TreeNode<M, A>>;

    explicit EffTree(node_type node) : node_(std::make_shared<const node_type>(std::move(node))) {}

    const node_type& node() const { return *node_; }

    static EffTree unit(A a) { return EffTree(M::unit(TreeNode<M, A>::leaf(std::move(a)))); }

    static EffTree lift(const Comp<M, A>& m) {
        return EffTree(M::map(m, [](const A& a) { return TreeNode<M, A>::leaf(a); }));
    }

    // Leaf substitution; the guards of this tree run before those of the
    // substituted subtrees along every path.
    template <class F>
    auto bind(F f) const -> std::invoke_result_t<F&, const A&> {
        using Out = std::invoke_result_t<F&, const A&>;
        using OutNode = TreeNode<M, typename Out::value_type>;
        return Out(M::bind(node(), [f](const TreeNode<M, A>& n) -> Comp<M, OutNode> {
            if (n.is_leaf()) return std::invoke(f, n.value()).node();
            return M::unit(OutNode::branch(n.left().bind(f), n.right().bind(f)));
        }));
    }

private:
    std::shared_ptr<const node_type> node_;
};

template <class M, class A>
struct TreeNode {
    struct Branch {
        EffTree<M, A> left;
        EffTree<M, A> right;
    };

    std::variant<A, Branch> shape;

    static TreeNode leaf(A a) { return {std::variant<A, Branch>(std::in_place_index<0>, std::move(a))}; }
    static TreeNode branch(EffTree<M, A> l, EffTree<M, A> r) {
        return {std::variant<A, Branch>(std::in_place_index<1>, Branch{std::move(l), std::move(r)})};
    }

    bool is_leaf() const { return shape.index() == 0; }
    const A& value() const { return std::get<0>(shape); }
    const EffTree<M, A>& left() const { return std::get<1>(shape).left; }
    const EffTree<M, A>& right() const { return std::get<1>(shape).right; }
};

// A node that runs g and then branches.
template <class M, class A, class G>
EffTree<M, A> branch_guarded(const Comp<M, G>& g, EffTree<M, A> l, EffTree<M, A> r) {
    return EffTree<M, A>(M::map(g, [l = std::move(l), r = std::move(r)](const G&) { return TreeNode<M, A>::branch(l, r); }));
}

// Leaves become singletons, branches become concatenation; node guards keep
// their left-to-right order.
template <class M, class A>
StepList<M, A> flatten(const EffTree<M, A>& t) {
    using S = Step<M, A>;
    return StepList<M, A>(M::bind(t.node(), [](const TreeNode<M, A>& n) -> Comp<M, S> {
        if (n.is_leaf()) return M::unit(S::yield(n.value(), StepList<M, A>::mzero()));
        return flatten(n.left()).mplus(flatten(n.right())).head();
    }));
}

template <class M, class A>
auto observe(const EffTree<M, A>& t) {
    return observe(flatten(t));
}

template <class M, class A>
bool eq_obs(const EffTree<M, A>& x, const EffTree<M, A>& y) {
    return observe(x) == observe(y);
}

// ---------------------------------------------------------------------------
// Free monad of a single binary operation, as a base effect.

template <class V>
struct BinTree {
    std::optional<V> leaf;
    std::shared_ptr<const BinTree> left;
    std::shared_ptr<const BinTree> right;

    friend bool operator==(const BinTree& x, const BinTree& y) {
        if (x.leaf || y.leaf) return x.leaf == y.leaf;
        return *x.left == *y.left && *x.right == *y.right;
    }

    std::string show() const {
        if (leaf) return backtrack::show(*leaf);
        return "<" + left->show() + "|" + right->show() + ">";
    }
};

struct FreeBin {
    template <class V>
    using type = EffTree<Identity, V>;

    static constexpr bool commutative = false;

    template <class V>
    static EffTree<Identity, V> unit(V v) {
        return EffTree<Identity, V>::unit(std::move(v));
    }

    template <class V>
    static EffTree<Identity, V> branch(EffTree<Identity, V> l, EffTree<Identity, V> r) {
        return EffTree<Identity, V>(Identity::unit(TreeNode<Identity, V>::branch(std::move(l), std::move(r))));
    }

    // The generic binary operation applied to two returns.
    static EffTree<Identity, bool> choose() { return branch(unit(false), unit(true)); }

    template <class V, class F>
    static auto bind(const EffTree<Identity, V>& t, F&& k) {
        return t.bind(std::forward<F>(k));
    }

    template <class V, class F>
    static auto map(const EffTree<Identity, V>& t, F f) {
        using U = detail::result_t<F, V>;
        return t.bind([f](const V& v) { return EffTree<Identity, U>::unit(std::invoke(f, v)); });
    }

    template <class V>
    static BinTree<V> observe(const EffTree<Identity, V>& t) {
        const auto& n = t.node().value;
        if (n.is_leaf()) return {n.value(), nullptr, nullptr};
        return {std::nullopt, std::make_shared<const BinTree<V>>(observe(n.left())),
                std::make_shared<const BinTree<V>>(observe(n.right()))};
    }

    static EffTree<Identity, int> guard(int code) {
        if (code % 64 == 63) return branch(unit(0), unit(1));
        return unit(code % 3);
    }

    static EffectSignature signature() { return {EffectKind::freebin, "freebin", false, {}}; }
};

// Interprets the free binary operation by op.
template <class B, class Op>
B eval_tree(const EffTree<Identity, B>& t, Op op) {
    const auto& n = t.node().value;
    if (n.is_leaf()) return n.value();
    return std::invoke(op, eval_tree(n.left(), op), eval_tree(n.right(), op));
}

} // namespace backtrack
