#include "chevalley/rational.hpp"

#include <stdexcept>

namespace chevalley {

std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      const std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(n);
    }
    const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    const std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const std::int64_t d = std::stoll(b, &used);
    if (used != b.size() || d == 0) throw std::invalid_argument(text);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

}  // namespace chevalley
