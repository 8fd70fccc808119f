#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

namespace backtrack {

// The one-point type standing in for the monoidal unit I.
struct Unit {
    friend bool operator==(Unit, Unit) { return true; }
    friend bool operator<(Unit, Unit) { return false; }
};

// Renders observations as short, deterministic, Haskell-ish text. Used for
// law-report failure entries and CLI output.
namespace show_detail {

template <class T>
struct is_vector : std::false_type {};
template <class T, class A>
struct is_vector<std::vector<T, A>> : std::true_type {};

template <class T>
struct is_optional : std::false_type {};
template <class T>
struct is_optional<std::optional<T>> : std::true_type {};

template <class T>
struct is_pair : std::false_type {};
template <class A, class B>
struct is_pair<std::pair<A, B>> : std::true_type {};

template <class T>
struct is_tuple : std::false_type {};
template <class... Ts>
struct is_tuple<std::tuple<Ts...>> : std::true_type {};

template <class T>
concept has_show_member = requires(const T& t) {
    { t.show() } -> std::convertible_to<std::string>;
};

} // namespace show_detail

template <class T>
std::string show(const T& value);

inline std::string show_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

template <class T>
std::string show(const T& value) {
    using namespace show_detail;
    if constexpr (std::is_same_v<T, Unit>) {
        return "()";
    } else if constexpr (std::is_same_v<T, bool>) {
        return value ? "true" : "false";
    } else if constexpr (std::is_same_v<T, std::string>) {
        return show_string(value);
    } else if constexpr (std::is_arithmetic_v<T>) {
        std::ostringstream os;
        os << value;
        return os.str();
    } else if constexpr (is_vector<T>::value) {
        std::string out = "[";
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (i) out += ",";
            out += show(value[i]);
        }
        return out + "]";
    } else if constexpr (is_optional<T>::value) {
        return value ? "some " + show(*value) : std::string("none");
    } else if constexpr (is_pair<T>::value) {
        return "(" + show(value.first) + "," + show(value.second) + ")";
    } else if constexpr (is_tuple<T>::value) {
        std::string out = "(";
        std::apply(
            [&](const auto&... xs) {
                std::size_t i = 0;
                ((out += (i++ ? "," : "") + show(xs)), ...);
            },
            value);
        return out + ")";
    } else if constexpr (has_show_member<T>) {
        return value.show();
    } else {
        static_assert(sizeof(T) == 0, "no rendering for this type");
    }
}

} // namespace backtrack
