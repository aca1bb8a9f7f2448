#include "basket3/rational.hpp"

#include <stdexcept>

namespace basket3 {

std::string to_frac_string(const Rat& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rat parse_frac(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

}  // namespace basket3
