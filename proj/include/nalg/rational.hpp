#ifndef NALG_RATIONAL_HPP
#define NALG_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nalg {

/// Exact rational scalar. Arbitrary-precision, always kept canonical
/// (positive denominator, gcd(num, den) = 1).
using Rational = mpq_class;

/// Domain or input error raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical rational from an integer pair. Throws on zero denominator.
Rational make_rational(long numerator, long denominator = 1);

/// Parses "p" or "p/q" (optional leading '-', base 10, no whitespace).
/// The result is canonicalized; "p/0" and any other malformed text throw.
Rational parse_rational(std::string_view text);

/// Lowest-terms decimal form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

} // namespace nalg

#endif
