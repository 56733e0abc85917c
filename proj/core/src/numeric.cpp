#include "cycdiv/numeric.hpp"

#include "cycdiv/errors.hpp"

namespace cycdiv {

Int isqrt_ceil(const Int& n) {
  if (n < 0) throw PreconditionViolated("isqrt_ceil of negative value");
  if (n == 0) return 0;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r < n) ++r;
  return r;
}

Int ipow(const Int& base, std::uint64_t e) {
  Int r = 1;
  Int b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Int factorial(std::uint64_t n) {
  Int r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational rational_pow(const Rational& base, long long e) {
  if (e < 0) {
    if (base == 0) throw PreconditionViolated("0 to a negative power");
    return 1 / rational_pow(base, -e);
  }
  Rational r = 1;
  Rational b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::uint64_t to_u64(const Int& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max())
    throw PreconditionViolated("value does not fit in 64 bits");
  return n.convert_to<std::uint64_t>();
}

}  // namespace cycdiv
