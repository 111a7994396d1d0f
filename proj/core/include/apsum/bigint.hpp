#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace apsum {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt ipow(std::uint64_t base, std::uint64_t exponent);

std::string to_decimal(const BigInt& value);
/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_decimal(const BigRational& value);

BigInt parse_bigint(const std::string& text);

}  // namespace apsum
