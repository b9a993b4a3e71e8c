#include "johnson/rational.hpp"

#include <stdexcept>

namespace johnson {

std::string format_rational(const Rational& q) {
    return q.get_str();  // mpq prints "p/q", or "p" when the denominator is 1
}

Rational parse_rational(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    const std::size_t slash = text.find('/');
    auto digits_ok = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t start = (s.front() == '-') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string_view num = text.substr(0, slash);
    if (!digits_ok(num))
        throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (!digits_ok(den) || den.front() == '-')
            throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
    }
    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

Rational rat_dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Rational rat_norm_squared(const RatVec& v) { return rat_dot(v, v); }

RatVec to_rational(const std::vector<std::int64_t>& v) {
    RatVec out;
    out.reserve(v.size());
    for (std::int64_t x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

}  // namespace johnson
