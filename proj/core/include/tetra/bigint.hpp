#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tetra {

// Every triangle and tetrahedron value is an exact signed integer.
using BigInt = boost::multiprecision::cpp_int;

// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Signed so that zero-extended (negative) column indices are representable.
using index_t = std::int64_t;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Parses an optionally signed run of decimal digits. Throws ParseError.
BigInt parse_decimal(std::string_view text);

}  // namespace tetra
