#pragma once

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "cycdiv/numeric.hpp"

namespace cycdiv {

/// A positive integer carried together with its full prime factorization.
/// This is the canonical integer everywhere an index may exceed machine
/// range; witness indices are only ever constructed already-factored.
class FactoredInt {
 public:
  FactoredInt() : value_(1) {}

  static FactoredInt one() { return FactoredInt(); }

  /// Factor a value by trial division (plus a primality check on the
  /// cofactor). Intended for CLI-scale inputs; throws PreconditionViolated
  /// if the value cannot be factored that way.
  static FactoredInt from_value(const Int& n);
  static FactoredInt from_u64(std::uint64_t n) { return from_value(Int(n)); }

  /// Build from an explicit factorization. Validates ordering, exponents
  /// and (when `check_primality`) that each base is prime.
  static FactoredInt from_factors(std::vector<std::pair<Int, unsigned>> factors,
                                  bool check_primality = true);

  static FactoredInt prime(const Int& p);

  const Int& value() const { return value_; }
  const std::vector<std::pair<Int, unsigned>>& factors() const { return factors_; }

  FactoredInt times(const FactoredInt& other) const;
  bool divides(const FactoredInt& other) const;

  bool operator==(const FactoredInt& o) const { return value_ == o.value_; }
  bool operator<(const FactoredInt& o) const { return value_ < o.value_; }

 private:
  Int value_;
  std::vector<std::pair<Int, unsigned>> factors_;  // primes ascending, exps >= 1
};

/// m / d, requiring d | m. Throws NotDivisible otherwise.
FactoredInt div_exact(const FactoredInt& m, const FactoredInt& d);
FactoredInt lcm(const FactoredInt& a, const FactoredInt& b);
FactoredInt radical(const FactoredInt& n);

int moebius(const FactoredInt& n);
std::vector<FactoredInt> divisors(const FactoredInt& n);  // ascending
Int divisor_count(const FactoredInt& n);                  // d(n)
Int totient(const FactoredInt& n);
unsigned distinct_prime_count(const FactoredInt& n);      // v(n)

/// i-th prime, 0-based, from the shared incremental sieve (thread-safe).
std::uint64_t nth_prime(std::size_t i);

FactoredInt primorial(unsigned k);  // product of first k primes, k >= 1

/// Deterministic Miller-Rabin (fixed base set, exact below 3.3e24, which
/// covers every integer this library ever tests).
bool is_prime(const Int& n);
Int next_prime(const Int& n);  // smallest prime > n

/// First window of t consecutive primes, all greater than t, satisfying
/// p_1 + p_2 > p_t. Requires t >= 3.
std::vector<Int> find_prime_cluster(unsigned t);

/// Ascending stream of squarefree integers with exactly two prime factors,
/// both strictly greater than `prime_lower` and distinct from `skip_prime`
/// (0 = no skip).
class TwoPrimeGenerator {
 public:
  explicit TwoPrimeGenerator(Int prime_lower, Int skip_prime = 0);
  FactoredInt next();

 private:
  const Int& prime_at(std::size_t i);

  Int lower_;
  Int skip_;
  std::vector<Int> primes_;
  struct Cand {
    Int prod;
    std::size_t i, j;
    bool operator>(const Cand& o) const { return prod > o.prod; }
  };
  std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap_;
};

/// The k smallest products q1*q2 with lower < q1 < q2, both prime.
std::vector<FactoredInt> two_prime_squarefree_sequence(const Int& lower, std::size_t k);

}  // namespace cycdiv
