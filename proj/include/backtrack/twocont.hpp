#pragma once

// Two-continuation backtracking:
//
//   Backtr m a = forall x. (a -> m x -> m x) -> m x -> m x
//
// obtained from the endomorphism monoid (m a -> m a) via codensity. The
// answer type x is erased to std::any; a Backtr never inspects its answers,
// so run<X> recovers the polymorphic behaviour at any concrete X.

#include <any>
#include <functional>
#include <memory>
#include <type_traits>
#include <utility>
#include <vector>

#include "backtrack/effects.hpp"
#include "backtrack/steplist.hpp"

namespace backtrack {

template <class M, class A>
class Backtr {
public:
    using effect_type = M;
    using value_type = A;
    using answer_type = Comp<M, std::any>;
    // success(a, failure) -> answer
    using success_type = std::function<answer_type(const A&, const answer_type&)>;
    using runner_type = std::function<answer_type(const success_type&, const answer_type&)>;

    explicit Backtr(runner_type runner) : runner_(std::make_shared<const runner_type>(std::move(runner))) {}

    answer_type run_erased(const success_type& success, const answer_type& failure) const {
        return (*runner_)(success, failure);
    }

    // Runs at answer type X with success : (A, Comp<M,X>) -> Comp<M,X>.
    template <class X, class S>
    Comp<M, X> run(S success, const Comp<M, X>& failure) const {
        auto to_any = [](const X& x) { return std::any(x); };
        auto from_any = [](const std::any& x) -> X { return std::any_cast<const X&>(x); };
        success_type erased = [success, to_any, from_any](const A& a, const answer_type& rest) {
            return M::map(std::invoke(success, a, M::map(rest, from_any)), to_any);
        };
        return M::map(run_erased(erased, M::map(failure, to_any)), from_any);
    }

    static Backtr unit(A a) {
        return Backtr([a = std::move(a)](const success_type& s, const answer_type& f) { return s(a, f); });
    }

    static Backtr mzero() {
        return Backtr([](const success_type&, const answer_type& f) { return f; });
    }

    static Backtr lift(const Comp<M, A>& m) {
        return Backtr([m](const success_type& s, const answer_type& f) {
            return M::bind(m, [s, f](const A& a) { return s(a, f); });
        });
    }

    // Composition of endomorphisms: y's run becomes this one's failure.
    Backtr mplus(const Backtr& y) const {
        return Backtr([x = *this, y](const success_type& s, const answer_type& f) {
            return x.run_erased(s, y.run_erased(s, f));
        });
    }

    template <class F>
    auto bind(F f) const -> std::invoke_result_t<F&, const A&> {
        using Out = std::invoke_result_t<F&, const A&>;
        using OutSuccess = typename Out::success_type;
        return Out([x = *this, f](const OutSuccess& s, const answer_type& failure) {
            return x.run_erased(
                [f, s](const A& a, const answer_type& rest) { return std::invoke(f, a).run_erased(s, rest); },
                failure);
        });
    }

    template <class F>
    auto map(F f) const {
        using B = std::invoke_result_t<F&, const A&>;
        return bind([f](const A& a) { return Backtr<M, B>::unit(std::invoke(f, a)); });
    }

private:
    std::shared_ptr<const runner_type> runner_;
};

// Cayley representation followed by codensity: folds the list into the
// continuations, binding each layer's guard in turn.
template <class M, class A>
Backtr<M, A> to_backtr(const StepList<M, A>& xs) {
    using K = Backtr<M, A>;
    return K([xs](const typename K::success_type& s, const typename K::answer_type& f) {
        return M::bind(xs.head(), [s, f](const Step<M, A>& step) -> typename K::answer_type {
            if (step.is_done()) return f;
            return s(step.value(), to_backtr(step.tail()).run_erased(s, f));
        });
    });
}

// The retraction: run at answer type Step with the list constructors.
template <class M, class A>
StepList<M, A> from_backtr(const Backtr<M, A>& k) {
    using S = Step<M, A>;
    return StepList<M, A>(k.template run<S>(
        [](const A& a, const Comp<M, S>& rest) { return M::unit(S::yield(a, StepList<M, A>(rest))); },
        M::unit(S::done())));
}

// Direct run at answer type List: success conses (one base bind per
// element), failure is the empty list.
template <class M, class A>
Comp<M, std::vector<A>> observe_all(const Backtr<M, A>& k) {
    using L = std::vector<A>;
    return k.template run<L>(
        [](const A& a, const Comp<M, L>& rest) {
            return M::bind(rest, [a](const L& as) {
                L out;
                out.reserve(as.size() + 1);
                out.push_back(a);
                out.insert(out.end(), as.begin(), as.end());
                return M::unit(std::move(out));
            });
        },
        M::unit(L{}));
}

template <class M, class A>
auto observe(const Backtr<M, A>& k) {
    return observe(from_backtr(k));
}

template <class M, class A>
bool eq_obs(const Backtr<M, A>& x, const Backtr<M, A>& y) {
    return observe(x) == observe(y);
}

} // namespace backtrack
