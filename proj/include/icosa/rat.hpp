#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace icosa {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical "n/d" with d >= 1 and gcd(n, d) = 1, e.g. "-3/4", "0/1".
std::string rat_str(const Rat& r);

/// Parses "n" or "n/d"; throws InputError on malformed input or d = 0.
Rat rat_parse(const std::string& s);

} // namespace icosa
