#include "apsum/bigint.hpp"

#include <stdexcept>

namespace apsum {

BigInt ipow(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::string to_decimal(const BigRational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt parse_bigint(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a non-negative decimal integer: '" + text + "'");
  }
  return BigInt(text);
}

}  // namespace apsum
