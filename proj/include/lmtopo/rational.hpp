#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace lmtopo {

/// Exact fraction used for every density invariant and bound.
using Rational = boost::rational<std::int64_t>;

/// Always "p/q", including q = 1.
inline std::string to_string(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

} // namespace lmtopo
