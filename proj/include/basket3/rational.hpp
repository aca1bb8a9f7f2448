#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace basket3 {

// Exact arithmetic everywhere. Denominators are products of singularity
// indices, so fixed-width types are not safe once baskets get large.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical "p/q" form with q >= 1, also for integers ("6" -> "6/1").
std::string to_frac_string(const Rat& q);

// Accepts "p" or "p/q"; throws std::invalid_argument on malformed input.
Rat parse_frac(const std::string& s);

}  // namespace basket3
