#include "nalg/rational.hpp"

#include <fmt/format.h>

#include <cctype>

namespace nalg {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) throw error("zero denominator in rational");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    bool ok;
    if (slash == std::string_view::npos) {
        ok = all_digits(body);
    } else {
        ok = all_digits(body.substr(0, slash)) && all_digits(body.substr(slash + 1));
    }
    if (!ok) throw error(fmt::format("invalid rational '{}'", std::string(text)));

    Rational r(std::string(text), 10);
    if (r.get_den() == 0) throw error(fmt::format("invalid rational '{}': zero denominator",
                                                  std::string(text)));
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

} // namespace nalg
