#pragma once

// The effects-first transformer  m [a]  and its continuation form
//
//   CLT m a = forall x. (a -> x -> m x) -> x -> m x
//
// Both are monads only over commutative bases. The operations are total for
// every base so that the failure of associativity can be exhibited.

#include <any>
#include <functional>
#include <memory>
#include <type_traits>
#include <utility>
#include <vector>

#include "backtrack/effects.hpp"

namespace backtrack {

template <class M, class A>
class EffList {
public:
    using effect_type = M;
    using value_type = A;
    using payload_type = Comp<M, std::vector<A>>;

    explicit EffList(payload_type payload) : payload_(std::move(payload)) {}

    const payload_type& payload() const { return payload_; }

    static EffList unit(A a) { return EffList(M::unit(std::vector<A>{std::move(a)})); }

    static EffList mzero() { return EffList(M::unit(std::vector<A>{})); }

    static EffList lift(const Comp<M, A>& m) {
        return EffList(M::map(m, [](const A& a) { return std::vector<A>{a}; }));
    }

    // This list's effects, then y's; values appended.
    EffList mplus(const EffList& y) const {
        return EffList(M::bind(payload_, [y](const std::vector<A>& xs) {
            return M::map(y.payload(), [xs](const std::vector<A>& ys) {
                std::vector<A> out = xs;
                out.insert(out.end(), ys.begin(), ys.end());
                return out;
            });
        }));
    }

    // Runs the payload, then every f(a) in element order, concatenating.
    template <class F>
    auto bind(F f) const -> std::invoke_result_t<F&, const A&> {
        using Out = std::invoke_result_t<F&, const A&>;
        using B = typename Out::value_type;
        using Payload = Comp<M, std::vector<B>>;
        return Out(M::bind(payload_, [f](const std::vector<A>& as) -> Payload {
            if (as.empty()) return M::unit(std::vector<B>{});
            Payload acc = std::invoke(f, as.front()).payload();
            for (std::size_t i = 1; i < as.size(); ++i) {
                acc = M::bind(acc, [next = std::invoke(f, as[i]).payload()](const std::vector<B>& done) {
                    return M::map(next, [done](const std::vector<B>& more) {
                        std::vector<B> out = done;
                        out.insert(out.end(), more.begin(), more.end());
                        return out;
                    });
                });
            }
            return acc;
        }));
    }

    template <class F>
    auto map(F f) const {
        using B = std::invoke_result_t<F&, const A&>;
        return EffList<M, B>(M::map(payload_, [f](const std::vector<A>& as) {
            std::vector<B> out;
            out.reserve(as.size());
            for (const auto& a : as) out.push_back(std::invoke(f, a));
            return out;
        }));
    }

private:
    payload_type payload_;
};

template <class M, class A>
auto observe(const EffList<M, A>& e) {
    return M::observe(e.payload());
}

template <class M, class A>
bool eq_obs(const EffList<M, A>& x, const EffList<M, A>& y) {
    return observe(x) == observe(y);
}

template <class M, class A>
Comp<M, std::vector<A>> observe_all(const EffList<M, A>& e) {
    return e.payload();
}

// ---------------------------------------------------------------------------

template <class M, class A>
class CLT {
public:
    using effect_type = M;
    using value_type = A;
    using answer_type = Comp<M, std::any>;
    // success(a, accumulated) -> answer
    using success_type = std::function<answer_type(const A&, const std::any&)>;
    using runner_type = std::function<answer_type(const success_type&, const std::any&)>;

    explicit CLT(runner_type runner) : runner_(std::make_shared<const runner_type>(std::move(runner))) {}

    answer_type run_erased(const success_type& success, const std::any& seed) const {
        return (*runner_)(success, seed);
    }

    // Runs at answer type X with success : (A, X) -> Comp<M,X>.
    template <class X, class S>
    Comp<M, X> run(S success, X seed) const {
        auto to_any = [](const X& x) { return std::any(x); };
        success_type erased = [success, to_any](const A& a, const std::any& x) {
            return M::map(std::invoke(success, a, std::any_cast<const X&>(x)), to_any);
        };
        return M::map(run_erased(erased, std::any(std::move(seed))),
                      [](const std::any& x) -> X { return std::any_cast<const X&>(x); });
    }

    static CLT unit(A a) {
        return CLT([a = std::move(a)](const success_type& s, const std::any& x) { return s(a, x); });
    }

    // The seed passes through untouched: failure has no effects of its own.
    static CLT mzero() {
        return CLT([](const success_type&, const std::any& x) { return M::unit(x); });
    }

    static CLT lift(const Comp<M, A>& m) {
        return CLT([m](const success_type& s, const std::any& x) {
            return M::bind(m, [s, x](const A& a) { return s(a, x); });
        });
    }

    // Kleisli composition of the two folds; y folds first since the fold
    // runs from the right.
    CLT mplus(const CLT& y) const {
        return CLT([x = *this, y](const success_type& s, const std::any& seed) {
            return M::bind(y.run_erased(s, seed), [x, s](const std::any& z) { return x.run_erased(s, z); });
        });
    }

    template <class F>
    auto bind(F f) const -> std::invoke_result_t<F&, const A&> {
        using Out = std::invoke_result_t<F&, const A&>;
        using OutSuccess = typename Out::success_type;
        return Out([k = *this, f](const OutSuccess& s, const std::any& seed) {
            return k.run_erased(
                [f, s](const A& a, const std::any& z) { return std::invoke(f, a).run_erased(s, z); }, seed);
        });
    }

    template <class F>
    auto map(F f) const {
        using B = std::invoke_result_t<F&, const A&>;
        return bind([f](const A& a) { return CLT<M, B>::unit(std::invoke(f, a)); });
    }

private:
    std::shared_ptr<const runner_type> runner_;
};

// Right-to-left effectful fold of the payload's values.
template <class M, class A>
CLT<M, A> to_clt(const EffList<M, A>& e) {
    using K = CLT<M, A>;
    return K([e](const typename K::success_type& s, const std::any& seed) {
        return M::bind(e.payload(), [s, seed](const std::vector<A>& as) -> typename K::answer_type {
            if (as.empty()) return M::unit(seed);
            auto acc = s(as.back(), seed);
            for (std::size_t i = as.size() - 1; i-- > 0;) {
                acc = M::bind(acc, [s, a = as[i]](const std::any& z) { return s(a, z); });
            }
            return acc;
        });
    });
}

// The retraction: fold with cons from the empty list.
template <class M, class A>
EffList<M, A> from_clt(const CLT<M, A>& k) {
    using L = std::vector<A>;
    return EffList<M, A>(k.template run<L>(
        [](const A& a, const L& xs) {
            L out;
            out.reserve(xs.size() + 1);
            out.push_back(a);
            out.insert(out.end(), xs.begin(), xs.end());
            return M::unit(std::move(out));
        },
        L{}));
}

template <class M, class A>
auto observe(const CLT<M, A>& k) {
    return observe(from_clt(k));
}

template <class M, class A>
bool eq_obs(const CLT<M, A>& x, const CLT<M, A>& y) {
    return observe(x) == observe(y);
}

template <class M, class A>
Comp<M, std::vector<A>> observe_all(const CLT<M, A>& k) {
    return from_clt(k).payload();
}

// Evaluates both associations of  p >>= f >>= g  and returns their
// observations: ((p >>= f) >>= g, p >>= (\a. f a >>= g)).
template <class M, class A, class F, class G>
auto association_pair(const EffList<M, A>& p, F f, G g) {
    auto left = p.bind(f).bind(g);
    auto right = p.bind([f, g](const A& a) { return std::invoke(f, a).bind(g); });
    return std::pair(observe(left), observe(right));
}

// p = pure [(), ()], f = const (lift x), g = const (lift y). Over a
// non-commutative base the left association runs x x y y and the right one
// x y x y.
template <class M>
auto associativity_counterexample(const Comp<M, Unit>& x, const Comp<M, Unit>& y) {
    using E = EffList<M, Unit>;
    E p(M::unit(std::vector<Unit>{Unit{}, Unit{}}));
    return association_pair(p, [x](Unit) { return E::lift(x); }, [y](Unit) { return E::lift(y); });
}

// The canonical witness over the free string monoid: logs "xxyy" vs "xyxy".
inline auto associativity_counterexample() {
    using W = Writer<StringLog>;
    return associativity_counterexample<W>(W::tell("x"), W::tell("y"));
}

} // namespace backtrack
