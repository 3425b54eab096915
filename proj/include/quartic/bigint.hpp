#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace quartic {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Dense polynomial with arbitrary-precision coefficients, ascending powers.
using Poly = std::vector<BigInt>;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt big_pow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

inline std::vector<std::string> to_decimal(const std::vector<BigInt>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v.str());
  return out;
}

}  // namespace quartic
