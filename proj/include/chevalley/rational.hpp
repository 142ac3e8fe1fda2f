#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace chevalley {

using Rational = boost::rational<std::int64_t>;

// "num/den" in lowest terms; integers are still written with "/1".
std::string to_string(const Rational& q);
// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace chevalley
