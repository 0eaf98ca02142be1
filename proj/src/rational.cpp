#include "pinlab/rational.hpp"

#include <charconv>

namespace pinlab {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    const std::int64_t n = parse_int(text.substr(0, slash), text);
    const std::int64_t d = parse_int(text.substr(slash + 1), text);
    if (d == 0) throw std::invalid_argument("malformed rational: zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

}  // namespace pinlab
