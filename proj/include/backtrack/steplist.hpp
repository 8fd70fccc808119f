#pragma once

// The list monad transformer "done right": a list in which the head and every
// tail are guarded by a base computation. Forcing layer i runs exactly the
// effects guarding element i.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "backtrack/effects.hpp"

namespace backtrack {

template <class M, class A>
struct Step;

template <class M, class A>
class StepList {
public:
    using effect_type = M;
    using value_type = A;
    using step_type = Step<M, A>;
    using head_type = Comp<M, Step<M, A>>;

    explicit StepList(head_type head) : head_(std::make_shared<const head_type>(std::move(head))) {}

    const head_type& head() const { return *head_; }

    static StepList unit(A a) { return StepList(M::unit(step_type::yield(std::move(a), mzero()))); }

    static StepList mzero() { return StepList(M::unit(step_type::done())); }

    // One element guarded by all of m's effects, followed by a pure end.
    static StepList lift(const Comp<M, A>& m) {
        return StepList(M::map(m, [](const A& a) { return step_type::yield(a, mzero()); }));
    }

    // Concatenation. The first guard of ys runs after the terminal guard of
    // this list.
    StepList mplus(const StepList& ys) const {
        return StepList(M::bind(head(), [ys](const step_type& s) -> head_type {
            if (s.is_done()) return ys.head();
            return M::unit(step_type::yield(s.value(), s.tail().mplus(ys)));
        }));
    }

    template <class F>
    auto bind(F f) const -> std::invoke_result_t<F&, const A&> {
        using Out = std::invoke_result_t<F&, const A&>;
        using B = typename Out::value_type;
        using OutStep = Step<M, B>;
        return Out(M::bind(head(), [f](const step_type& s) -> Comp<M, OutStep> {
            if (s.is_done()) return M::unit(OutStep::done());
            return std::invoke(f, s.value()).mplus(s.tail().bind(f)).head();
        }));
    }

    template <class F>
    auto map(F f) const {
        using B = std::invoke_result_t<F&, const A&>;
        return bind([f](const A& a) { return StepList<M, B>::unit(std::invoke(f, a)); });
    }

private:
    std::shared_ptr<const head_type> head_;
};

template <class M, class A>
struct Step {
    std::optional<std::pair<A, StepList<M, A>>> cell;

    static Step done() { return {}; }
    static Step yield(A a, StepList<M, A> tail) { return {std::pair<A, StepList<M, A>>(std::move(a), std::move(tail))}; }

    bool is_done() const { return !cell.has_value(); }
    const A& value() const { return cell->first; }
    const StepList<M, A>& tail() const { return cell->second; }
};

// Layer constructors, mostly for building lists with explicit guards.
template <class M, class A, class G>
StepList<M, A> guarded(const Comp<M, G>& guard, A a, StepList<M, A> tail) {
    return StepList<M, A>(M::map(guard, [a = std::move(a), tail = std::move(tail)](const G&) {
        return Step<M, A>::yield(a, tail);
    }));
}

template <class M, class A, class G>
StepList<M, A> terminal(const Comp<M, G>& guard) {
    return StepList<M, A>(M::map(guard, [](const G&) { return Step<M, A>::done(); }));
}

template <class M, class A>
StepList<M, A> from_values(const std::vector<A>& values) {
    auto xs = StepList<M, A>::mzero();
    for (auto it = values.rbegin(); it != values.rend(); ++it) xs = StepList<M, A>(M::unit(Step<M, A>::yield(*it, xs)));
    return xs;
}

// Sequences every guard in list order and collects the values.
template <class M, class A>
Comp<M, std::vector<A>> observe_all(const StepList<M, A>& xs) {
    return M::bind(xs.head(), [](const Step<M, A>& s) -> Comp<M, std::vector<A>> {
        if (s.is_done()) return M::unit(std::vector<A>{});
        return M::map(observe_all(s.tail()), [a = s.value()](const std::vector<A>& rest) {
            std::vector<A> out;
            out.reserve(rest.size() + 1);
            out.push_back(a);
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
        });
    });
}

// Runs the first guard only.
template <class M, class A>
Comp<M, std::optional<A>> take_first(const StepList<M, A>& xs) {
    return M::map(xs.head(), [](const Step<M, A>& s) {
        return s.is_done() ? std::optional<A>() : std::optional<A>(s.value());
    });
}

// Runs the guards of elements 1..n, plus the terminal guard if the list ends
// before n elements.
template <class M, class A>
Comp<M, std::vector<A>> take_n(std::size_t n, const StepList<M, A>& xs) {
    if (n == 0) return M::unit(std::vector<A>{});
    return M::bind(xs.head(), [n](const Step<M, A>& s) -> Comp<M, std::vector<A>> {
        if (s.is_done()) return M::unit(std::vector<A>{});
        return M::map(take_n(n - 1, s.tail()), [a = s.value()](const std::vector<A>& rest) {
            std::vector<A> out;
            out.reserve(rest.size() + 1);
            out.push_back(a);
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
        });
    });
}

// The universal fold into an Eilenberg-Moore monoid <B, algebra, combine, empty>:
//   fold(xs) = algebra(M-map over the head: done -> empty, yield(a, t) -> combine(g(a), fold(t)))
// The result is only meaningful when algebra satisfies the Eilenberg-Moore
// laws and combine right-distributes over the algebra (see check_coherence).
template <class M, class A, class Algebra, class Combine, class B, class G>
B fold_with(Algebra algebra, Combine combine, const B& empty, G g, const StepList<M, A>& xs) {
    return std::invoke(algebra, M::map(xs.head(), [=](const Step<M, A>& s) -> B {
        if (s.is_done()) return empty;
        return std::invoke(combine, std::invoke(g, s.value()), fold_with(algebra, combine, empty, g, s.tail()));
    }));
}

// Sampled check of the coherence law  algebra(m) . y = algebra(M-map (x -> x . y) m)
// for the given computations and right operands.
template <class M, class B, class Algebra, class Combine>
bool check_coherence(Algebra algebra, Combine combine, const std::vector<Comp<M, B>>& computations,
                     const std::vector<B>& operands) {
    for (const auto& m : computations) {
        for (const auto& y : operands) {
            B lhs = std::invoke(combine, std::invoke(algebra, m), y);
            B rhs = std::invoke(algebra, M::map(m, [&](const B& x) { return std::invoke(combine, x, y); }));
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

// Layer-precise observation: the observations of take_n(k, xs) for
// k = 0, 1, ... until they stop changing. Two lists agree on it iff every
// prefix performs the same effects and yields the same values, which pins
// down where each guard sits.
template <class M, class A>
std::vector<Observation<M, std::vector<A>>> observe(const StepList<M, A>& xs) {
    std::vector<Observation<M, std::vector<A>>> prefixes;
    prefixes.push_back(M::observe(take_n(0, xs)));
    for (std::size_t k = 1;; ++k) {
        auto next = M::observe(take_n(k, xs));
        if (next == prefixes.back()) break;
        prefixes.push_back(std::move(next));
    }
    return prefixes;
}

template <class M, class A>
bool eq_obs(const StepList<M, A>& xs, const StepList<M, A>& ys) {
    return observe(xs) == observe(ys);
}

} // namespace backtrack
