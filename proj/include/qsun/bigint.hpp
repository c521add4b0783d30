#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsun {

/// Exact integers for counts that outgrow 64 bits (bounds, Gaussian binomials).
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

}  // namespace qsun
