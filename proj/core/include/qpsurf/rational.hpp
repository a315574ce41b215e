#ifndef QPSURF_RATIONAL_HPP
#define QPSURF_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qpsurf {

/// Exact arbitrary-precision rational used for every coefficient.
using Rational = mpq_class;

/// Parses "n", "n/d" or "-n/d". Throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Always "<num>/<den>" with a positive denominator, e.g. "1/1", "-3/2".
std::string format_rational(const Rational& q);

}  // namespace qpsurf

#endif  // QPSURF_RATIONAL_HPP
