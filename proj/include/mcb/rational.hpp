#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace mcb {

// All arithmetic in this library is exact.  Integers are arbitrary
// precision; bound comparisons use normalized rationals so that
// sharpness (exact equality with the multiplicity) is decidable.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Renders a rational as "num/den" (denominator always present, so
// sharp bounds stay visually exact: "16/1", "385/6").
inline std::string rat_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Approximate decimal rendering, for human readers only.
inline std::string rat_decimal(const Rat& r, int digits = 4) {
    const double approx = static_cast<double>(r);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, approx);
    return buf;
}

}  // namespace mcb
