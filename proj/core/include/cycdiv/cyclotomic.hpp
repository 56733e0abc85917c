#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cycdiv/numtheory.hpp"
#include "cycdiv/polyring.hpp"

namespace cycdiv {

struct CycConfig {
  /// Guard on full materialization: cyclotomic indices above this are only
  /// ever handled through truncations.
  Int materialization_cap = 1'000'000;
};

/// phi_n via the Moebius product: multiply every (x^d - 1) with
/// mu(n/d) = 1, then exact-divide by those with mu(n/d) = -1.
IntPoly cyclotomic(const FactoredInt& n, const CycConfig& cfg = {});

/// Independent path: reduce to the radical through phi_{np}(x) = phi_n(x^p),
/// building the squarefree part by phi_{mp}(x) = phi_m(x^p)/phi_m(x).
IntPoly cyclotomic_recurrence(const FactoredInt& n, const CycConfig& cfg = {});

/// phi_n mod x^{order+1}. Only the factorization of n is consulted, so the
/// index may be astronomically large. Every Moebius factor (x^d - 1)^{+-1}
/// with d > order contributes exactly -1; those signs are tracked so the
/// result matches the full polynomial, sign included.
IntSeries cyclotomic_trunc(const FactoredInt& n, std::size_t order);

/// x^n - 1 = prod over d|n of phi_d, returned per divisor, ascending.
std::vector<std::pair<FactoredInt, IntPoly>> factor_xn_minus_1(
    const FactoredInt& n, const CycConfig& cfg = {});

enum class CheckOutcome { pass, skip, fail };

struct Lemma2Report {
  CheckOutcome dividing_prime;    // p|n  =>  phi_{np} = phi_n(x^p)
  CheckOutcome coprime_prime;     // p∤n  =>  phi_{np} = phi_n(x^p)/phi_n(x)
  CheckOutcome odd_negation;      // n odd > 1  =>  phi_{2n}(x) = phi_n(-x)
  bool all_ok() const {
    return dividing_prime != CheckOutcome::fail &&
           coprime_prime != CheckOutcome::fail &&
           odd_negation != CheckOutcome::fail;
  }
};

Lemma2Report verify_lemma2(const FactoredInt& n, const Int& p, const CycConfig& cfg = {});

struct BatemanResult {
  Int height;            // A(n)
  Int bound;             // n^{2^{k-1}}, k = #distinct odd primes
  unsigned odd_primes;   // k
  bool ok;
  bool vacuous;          // k = 0: A(n) = 1, exponent convention note applies
};

BatemanResult bateman_check(const FactoredInt& n, const CycConfig& cfg = {});

}  // namespace cycdiv
