#pragma once

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

namespace cycdiv {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 50-significant-digit decimal, used only for the exploratory log-based
/// statistics; everything load-bearing stays in Int/Rational.
using Real = boost::multiprecision::cpp_dec_float_50;

Int isqrt_ceil(const Int& n);
Int ipow(const Int& base, std::uint64_t e);
Int factorial(std::uint64_t n);
Rational rational_pow(const Rational& base, long long e);

std::uint64_t to_u64(const Int& n);

}  // namespace cycdiv
