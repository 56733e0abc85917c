#pragma once

#include <cstdint>
#include <optional>

#include "cycdiv/divisor_search.hpp"
#include "cycdiv/numeric.hpp"
#include "cycdiv/numtheory.hpp"

namespace cycdiv {

struct BoundReport {
  std::size_t r = 0;
  FactoredInt n;
  Int d_n;
  Rational exact_bound;              // dominance bound (upper side)
  Rational leading;                  // d_n^r / (2^r r!)
  std::optional<Int> observed;       // H(r,n) or |(f_k)_r|
  std::optional<Rational> ratio;     // observed * 2^r r! / d_n^r
  bool ok = true;
};

/// Coefficient of x^r in prod_{i=1..r} (1 - x^i)^{-d_n/2}, exact in
/// rationals. Dominates H(r,n) for every n with d(n) = d_n because
/// |e(d)| <= d_n/2 coefficient-wise.
Rational dominance_bound(std::size_t r, const Int& d_n);

Rational leading_term(std::size_t r, const Int& d_n);

/// Asserts big_H(r,n) <= dominance_bound(r, d(n)).
BoundReport check_upper(std::size_t r, const FactoredInt& n, const SearchConfig& cfg = {});

/// Observed |(f_k)_r| against the leading term; the band on the ratio is
/// |ratio - 1| <= 8 r^2 / d(n_k). When 2^{d(n_k)} subsets fit the budget,
/// also asserts observed <= H(r, n_k).
BoundReport check_lower(std::size_t r, unsigned k, const SearchConfig& cfg = {});

/// Empirical divisor-function exponent log d(n) * log log n / log n.
/// Requires n >= 3 (log log n must be positive).
Real ramanujan_stat(const FactoredInt& n);

/// Exploratory statistic log log B / (log n / log log n); needs B >= 2.
std::optional<Real> height_growth_stat(const FactoredInt& n, const Int& big_b);

}  // namespace cycdiv
