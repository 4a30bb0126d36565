#include "edd/rational.hpp"

namespace edd {

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    auto parse_int = [](std::string_view s) -> std::optional<Int> {
        if (s.empty()) return std::nullopt;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return std::nullopt;
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') return std::nullopt;
        return Int(std::string(s));
    };
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(*n, *d);
}

std::string to_string(const Rational& q) {
    std::string s = rat_num(q).str();
    if (!is_integer(q)) {
        s += '/';
        s += rat_den(q).str();
    }
    return s;
}

std::string to_string(const Int& n) { return n.str(); }

}  // namespace edd
