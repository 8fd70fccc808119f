#pragma once

// Base effects: the closed family of strong monads that the backtracking
// transformers are applied to.
//
// A base effect is a policy type M with
//   template <class V> using type      carrier of computations
//   unit(v), bind(m, k), map(m, f)     monad structure (bind is Kleisli extension)
//   observe(m)                         finite, comparable rendering
//   guard(code)                        a small effectful int-valued operation,
//                                      selected by code (used by generators)
//   signature()                        runtime descriptor
//
// Equality of computations throughout the library is equality of observations.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "backtrack/show.hpp"

namespace backtrack {

enum class EffectKind { identity, partial, error, state, writer, reader, thunk, counter, freebin };

struct EffectSignature {
    EffectKind kind;
    std::string id;
    bool commutative;
    // Environments or states enumerated by observation; empty when unused.
    std::vector<int> domain;
};

template <class M, class V>
using Comp = typename M::template type<V>;

template <class M, class V>
using Observation = decltype(M::observe(std::declval<const Comp<M, V>&>()));

template <class M>
concept BaseEffect = requires {
    typename M::template type<int>;
    { M::unit(0) } -> std::same_as<Comp<M, int>>;
    { M::guard(0) } -> std::same_as<Comp<M, int>>;
    { M::signature() } -> std::same_as<EffectSignature>;
    M::observe(M::unit(0));
};

namespace detail {
template <class F, class V>
using result_t = std::invoke_result_t<F&, const V&>;
} // namespace detail

// ---------------------------------------------------------------------------
// Identity

template <class V>
struct Pure {
    V value;
};

struct Identity {
    template <class V>
    using type = Pure<V>;

    static constexpr bool commutative = true;

    template <class V>
    static Pure<V> unit(V v) {
        return {std::move(v)};
    }

    template <class V, class F>
    static auto bind(const Pure<V>& m, F&& k) {
        return std::invoke(k, m.value);
    }

    template <class V, class F>
    static auto map(const Pure<V>& m, F&& f) {
        return Pure<detail::result_t<F, V>>{std::invoke(f, m.value)};
    }

    template <class V>
    static V observe(const Pure<V>& m) {
        return m.value;
    }

    static Pure<int> guard(int code) { return {code % 3}; }

    static EffectSignature signature() { return {EffectKind::identity, "identity", true, {}}; }
};

// ---------------------------------------------------------------------------
// Partiality

struct Partial {
    template <class V>
    using type = std::optional<V>;

    static constexpr bool commutative = true;

    template <class V>
    static std::optional<V> unit(V v) {
        return std::optional<V>(std::move(v));
    }

    template <class V>
    static std::optional<V> none() {
        return std::nullopt;
    }

    template <class V, class F>
    static auto bind(const std::optional<V>& m, F&& k) {
        using R = detail::result_t<F, V>;
        if (!m) return R{};
        return std::invoke(k, *m);
    }

    template <class V, class F>
    static auto map(const std::optional<V>& m, F&& f) {
        using U = detail::result_t<F, V>;
        if (!m) return std::optional<U>{};
        return std::optional<U>(std::invoke(f, *m));
    }

    template <class V>
    static std::optional<V> observe(const std::optional<V>& m) {
        return m;
    }

    static std::optional<int> guard(int code) {
        if (code % 9 == 8) return std::nullopt;
        return code % 3;
    }

    static EffectSignature signature() { return {EffectKind::partial, "partial", true, {}}; }
};

// ---------------------------------------------------------------------------
// Exceptions

template <class E>
struct Raised {
    E error;
    friend bool operator==(const Raised&, const Raised&) = default;
};

template <class E, class V>
struct Fallible {
    std::variant<V, Raised<E>> outcome;

    bool ok() const { return outcome.index() == 0; }
    const V& value() const { return std::get<0>(outcome); }
    const E& error() const { return std::get<1>(outcome).error; }

    friend bool operator==(const Fallible&, const Fallible&) = default;

    std::string show() const { return ok() ? "ok " + backtrack::show(value()) : "raise " + backtrack::show(error()); }
};

template <class E = std::string>
struct Error {
    template <class V>
    using type = Fallible<E, V>;

    static constexpr bool commutative = false;

    template <class V>
    static Fallible<E, V> unit(V v) {
        return {std::variant<V, Raised<E>>(std::in_place_index<0>, std::move(v))};
    }

    template <class V>
    static Fallible<E, V> raise(E e) {
        return {std::variant<V, Raised<E>>(std::in_place_index<1>, Raised<E>{std::move(e)})};
    }

    template <class V, class F>
    static auto bind(const Fallible<E, V>& m, F&& k) {
        using R = detail::result_t<F, V>;
        if (!m.ok()) return R{std::get<1>(m.outcome)};
        return std::invoke(k, m.value());
    }

    template <class V, class F>
    static auto map(const Fallible<E, V>& m, F&& f) {
        using U = detail::result_t<F, V>;
        if (!m.ok()) return raise<U>(m.error());
        return unit<U>(std::invoke(f, m.value()));
    }

    template <class V>
    static Fallible<E, V> observe(const Fallible<E, V>& m) {
        return m;
    }

    static Fallible<E, int> guard(int code)
        requires std::is_same_v<E, std::string>
    {
        if (code % 9 == 8) return raise<int>(std::string(1, static_cast<char>('p' + (code / 9) % 3)));
        return unit(code % 3);
    }

    static EffectSignature signature() { return {EffectKind::error, "error", false, {}}; }
};

// ---------------------------------------------------------------------------
// State over the finite domain {0, ..., N-1}

template <class V>
struct Stateful {
    std::function<std::pair<V, int>(int)> run;
};

template <int N>
struct State {
    static_assert(N > 0, "state domain must be nonempty");

    template <class V>
    using type = Stateful<V>;

    static constexpr bool commutative = false;

    template <class V>
    static Stateful<V> unit(V v) {
        return {[v = std::move(v)](int s) { return std::pair<V, int>(v, s); }};
    }

    template <class V, class F>
    static auto bind(const Stateful<V>& m, F&& k) {
        using R = detail::result_t<F, V>;
        return R{[m, k = std::forward<F>(k)](int s) {
            auto [v, s1] = m.run(s);
            return std::invoke(k, v).run(s1);
        }};
    }

    template <class V, class F>
    static auto map(const Stateful<V>& m, F&& f) {
        using U = detail::result_t<F, V>;
        return Stateful<U>{[m, f = std::forward<F>(f)](int s) {
            auto [v, s1] = m.run(s);
            return std::pair<U, int>(std::invoke(f, v), s1);
        }};
    }

    static Stateful<int> get() {
        return {[](int s) { return std::pair<int, int>(s, s); }};
    }

    static Stateful<Unit> put(int s) {
        return {[s](int) { return std::pair<Unit, int>(Unit{}, s); }};
    }

    // Table of (initial state, value, final state) over the whole domain.
    template <class V>
    static std::vector<std::tuple<int, V, int>> observe(const Stateful<V>& m) {
        std::vector<std::tuple<int, V, int>> table;
        table.reserve(N);
        for (int s = 0; s < N; ++s) {
            auto [v, s1] = m.run(s);
            table.emplace_back(s, std::move(v), s1);
        }
        return table;
    }

    static Stateful<int> guard(int code) {
        switch (code % 4) {
        case 0:
            return get();
        case 1:
            return map(put((code / 4) % N), [](Unit) { return 0; });
        case 2:
            return {[](int s) { return std::pair<int, int>(s, (s + 1) % N); }};
        default:
            return unit(code % 3);
        }
    }

    static EffectSignature signature() {
        std::vector<int> domain(N);
        for (int s = 0; s < N; ++s) domain[s] = s;
        return {EffectKind::state, "state", false, domain};
    }
};

// ---------------------------------------------------------------------------
// Writer over a log monoid

// Free monoid over characters: not commutative.
struct StringLog {
    using value_type = std::string;
    static constexpr bool commutative = false;
    static constexpr const char* id = "writer-string";

    static std::string empty() { return {}; }
    static std::string combine(const std::string& x, const std::string& y) { return x + y; }
    static std::string from_code(int code) {
        if (code % 4 == 0) return {};
        return std::string(1, static_cast<char>('a' + (code / 4) % 3));
    }
};

// (N, +, 0): commutative.
struct SumLog {
    using value_type = long;
    static constexpr bool commutative = true;
    static constexpr const char* id = "writer-sum";

    static long empty() { return 0; }
    static long combine(long x, long y) { return x + y; }
    static long from_code(int code) { return code % 4; }
};

// Sampled monoid laws over logs drawn from from_code; commutativity is
// checked too when the log claims it.
template <class Log>
bool check_log_monoid(std::size_t samples, std::uint64_t seed = 0x5eed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> code(0, 63);
    auto draw = [&] { return Log::combine(Log::from_code(code(rng)), Log::from_code(code(rng))); };
    for (std::size_t i = 0; i < samples; ++i) {
        auto x = draw(), y = draw(), z = draw();
        if (!(Log::combine(Log::combine(x, y), z) == Log::combine(x, Log::combine(y, z)))) return false;
        if (!(Log::combine(Log::empty(), x) == x) || !(Log::combine(x, Log::empty()) == x)) return false;
        if (Log::commutative && !(Log::combine(x, y) == Log::combine(y, x))) return false;
    }
    return true;
}

template <class W, class V>
struct Logged {
    W log;
    V value;
};

template <class Log>
struct Writer {
    using log_type = typename Log::value_type;

    template <class V>
    using type = Logged<log_type, V>;

    static constexpr bool commutative = Log::commutative;

    template <class V>
    static Logged<log_type, V> unit(V v) {
        return {Log::empty(), std::move(v)};
    }

    static Logged<log_type, Unit> tell(log_type w) { return {std::move(w), Unit{}}; }

    template <class V, class F>
    static auto bind(const Logged<log_type, V>& m, F&& k) {
        auto r = std::invoke(k, m.value);
        r.log = Log::combine(m.log, r.log);
        return r;
    }

    template <class V, class F>
    static auto map(const Logged<log_type, V>& m, F&& f) {
        return Logged<log_type, detail::result_t<F, V>>{m.log, std::invoke(f, m.value)};
    }

    template <class V>
    static std::pair<log_type, V> observe(const Logged<log_type, V>& m) {
        return {m.log, m.value};
    }

    static Logged<log_type, int> guard(int code) { return {Log::from_code(code), code % 3}; }

    static EffectSignature signature() { return {EffectKind::writer, Log::id, Log::commutative, {}}; }
};

// ---------------------------------------------------------------------------
// Reader over the finite environment {0, ..., N-1}

template <class V>
struct Env {
    std::function<V(int)> run;
};

template <int N>
struct Reader {
    static_assert(N > 0, "reader domain must be nonempty");

    template <class V>
    using type = Env<V>;

    static constexpr bool commutative = true;

    template <class V>
    static Env<V> unit(V v) {
        return {[v = std::move(v)](int) { return v; }};
    }

    template <class V, class F>
    static auto bind(const Env<V>& m, F&& k) {
        using R = detail::result_t<F, V>;
        return R{[m, k = std::forward<F>(k)](int r) { return std::invoke(k, m.run(r)).run(r); }};
    }

    template <class V, class F>
    static auto map(const Env<V>& m, F&& f) {
        using U = detail::result_t<F, V>;
        return Env<U>{[m, f = std::forward<F>(f)](int r) { return std::invoke(f, m.run(r)); }};
    }

    static Env<int> ask() {
        return {[](int r) { return r; }};
    }

    template <class V>
    static std::vector<std::pair<int, V>> observe(const Env<V>& m) {
        std::vector<std::pair<int, V>> table;
        table.reserve(N);
        for (int r = 0; r < N; ++r) table.emplace_back(r, m.run(r));
        return table;
    }

    static Env<int> guard(int code) {
        if (code % 2 == 0) return unit(code % 3);
        return {[code](int r) { return (r * code) % 5; }};
    }

    static EffectSignature signature() {
        std::vector<int> domain(N);
        for (int r = 0; r < N; ++r) domain[r] = r;
        return {EffectKind::reader, "reader", true, domain};
    }
};

// ---------------------------------------------------------------------------
// Thunks: suspended producers. Running a computation threads a force counter
// through it; each delay() increments it once when forced.

template <class V>
struct Lazy {
    std::function<V(std::size_t&)> run;
};

struct Thunk {
    template <class V>
    using type = Lazy<V>;

    static constexpr bool commutative = true;

    template <class V>
    static Lazy<V> unit(V v) {
        return {[v = std::move(v)](std::size_t&) { return v; }};
    }

    template <class F>
    static auto delay(F&& producer) {
        using V = std::invoke_result_t<F&>;
        return Lazy<V>{[p = std::forward<F>(producer)](std::size_t& forces) {
            ++forces;
            return p();
        }};
    }

    template <class V, class F>
    static auto bind(const Lazy<V>& m, F&& k) {
        using R = detail::result_t<F, V>;
        return R{[m, k = std::forward<F>(k)](std::size_t& forces) { return std::invoke(k, m.run(forces)).run(forces); }};
    }

    template <class V, class F>
    static auto map(const Lazy<V>& m, F&& f) {
        using U = detail::result_t<F, V>;
        return Lazy<U>{[m, f = std::forward<F>(f)](std::size_t& forces) { return std::invoke(f, m.run(forces)); }};
    }

    // (value, number of suspensions forced)
    template <class V>
    static std::pair<V, std::size_t> observe(const Lazy<V>& m) {
        std::size_t forces = 0;
        V v = m.run(forces);
        return {std::move(v), forces};
    }

    static Lazy<int> guard(int code) {
        if (code % 2 == 0) return unit(code % 3);
        return delay([code] { return code % 3; });
    }

    static EffectSignature signature() { return {EffectKind::thunk, "thunk", true, {}}; }
};

// ---------------------------------------------------------------------------
// Bind counting over an inner effect. Every bind adds one to the count
// carried next to the value; map and unit are free.

template <class V>
struct Tally {
    std::size_t binds;
    V value;

    friend bool operator==(const Tally&, const Tally&) = default;

    std::string show() const { return "(" + std::to_string(binds) + "," + backtrack::show(value) + ")"; }
};

template <class Inner, class V>
struct Counted {
    Comp<Inner, Tally<V>> inner;
};

template <class Inner>
struct Counter {
    template <class V>
    using type = Counted<Inner, V>;

    static constexpr bool commutative = Inner::commutative;

    template <class V>
    static Counted<Inner, V> unit(V v) {
        return {Inner::unit(Tally<V>{0, std::move(v)})};
    }

    template <class V, class F>
    static auto bind(const Counted<Inner, V>& m, F&& k) {
        using R = detail::result_t<F, V>;
        return R{Inner::bind(m.inner, [k = std::forward<F>(k)](const Tally<V>& t) {
            auto next = std::invoke(k, t.value).inner;
            return Inner::map(next, [before = t.binds](const auto& u) {
                return std::decay_t<decltype(u)>{before + u.binds + 1, u.value};
            });
        })};
    }

    template <class V, class F>
    static auto map(const Counted<Inner, V>& m, F&& f) {
        using U = detail::result_t<F, V>;
        return Counted<Inner, U>{Inner::map(m.inner, [f = std::forward<F>(f)](const Tally<V>& t) {
            return Tally<U>{t.binds, std::invoke(f, t.value)};
        })};
    }

    template <class V>
    static Counted<Inner, V> lift(const Comp<Inner, V>& m) {
        return {Inner::map(m, [](const V& v) { return Tally<V>{0, v}; })};
    }

    // A unit-cost operation.
    static Counted<Inner, Unit> tick() { return {Inner::unit(Tally<Unit>{1, Unit{}})}; }

    template <class V>
    static auto observe(const Counted<Inner, V>& m) {
        return Inner::observe(m.inner);
    }

    // Strips the counts, leaving the inner computation.
    template <class V>
    static Comp<Inner, V> strip(const Counted<Inner, V>& m) {
        return Inner::map(m.inner, [](const Tally<V>& t) { return t.value; });
    }

    static Counted<Inner, int> guard(int code) {
        auto base = lift<int>(Inner::guard(code));
        if (code % 2 == 0) return base;
        return bind(tick(), [base](Unit) { return base; });
    }

    static EffectSignature signature() {
        auto inner = Inner::signature();
        return {EffectKind::counter, "counter", commutative, inner.domain};
    }
};

// Bind count of a computation over Counter<Identity>.
template <class V>
std::size_t bind_count(const Counted<Identity, V>& m) {
    return m.inner.value.binds;
}

// ---------------------------------------------------------------------------
// Derived structure

// tau : MA x B -> M(A x B)
template <class M, class A, class B>
auto strength(const Comp<M, A>& m, B b) {
    return M::map(m, [b = std::move(b)](const A& a) { return std::pair<A, B>(a, b); });
}

// tau' : A x MB -> M(A x B)
template <class M, class A, class B>
auto left_strength(A a, const Comp<M, B>& m) {
    return M::map(m, [a = std::move(a)](const B& b) { return std::pair<A, B>(a, b); });
}

template <class M, class V>
bool eq_obs(const Comp<M, V>& x, const Comp<M, V>& y) {
    return M::observe(x) == M::observe(y);
}

// Runs the guards selected by codes in order, summing their results.
template <class M>
Comp<M, int> guard_sequence(const std::vector<int>& codes) {
    if (codes.empty()) return M::unit(0);
    Comp<M, int> acc = M::guard(codes.front());
    for (std::size_t i = 1; i < codes.size(); ++i) {
        acc = M::bind(acc, [g = M::guard(codes[i])](int r) { return M::map(g, [r](int x) { return r + x; }); });
    }
    return acc;
}

// Samples pairs of computations m1, m2 and compares the two ways of running
// both: first m1 then m2 versus first m2 then m1, each pairing the results as
// (m1's value, m2's value).
template <class M>
bool check_commutativity(std::size_t samples, std::uint64_t seed = 0x5eed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> code(0, 63);
    std::uniform_int_distribution<int> len(1, 3);
    // Boundary codes are drawn often; some bases only act unusually there.
    auto draw = [&] {
        int c = code(rng);
        if (c < 8) return c < 4 ? 0 : 63;
        return c;
    };
    for (std::size_t i = 0; i < samples; ++i) {
        std::vector<int> c1(len(rng)), c2(len(rng));
        for (int& c : c1) c = draw();
        for (int& c : c2) c = draw();
        auto m1 = guard_sequence<M>(c1);
        auto m2 = guard_sequence<M>(c2);
        auto lhs = M::bind(m1, [m2](int a) { return left_strength<M, int, int>(a, m2); });
        auto rhs = M::bind(m2, [m1](int b) { return strength<M, int, int>(m1, b); });
        if (!(M::observe(lhs) == M::observe(rhs))) return false;
    }
    return true;
}

} // namespace backtrack
