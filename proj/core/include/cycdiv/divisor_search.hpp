#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cycdiv/cyclotomic.hpp"
#include "cycdiv/numtheory.hpp"
#include "cycdiv/polyring.hpp"

namespace cycdiv {

/// A monic divisor of x^n - 1, as the subset S of divisors of n whose
/// cyclotomics are multiplied. Bit i of `mask` selects all_divisors[i]
/// (ascending canonical order).
struct DivisorSubset {
  FactoredInt n;
  std::uint64_t mask = 0;
  std::vector<FactoredInt> all_divisors;

  static DivisorSubset of(FactoredInt n, std::uint64_t mask);
  static DivisorSubset of_members(FactoredInt n, const std::vector<Int>& members);
  std::vector<FactoredInt> members() const;
};

/// e(d) = s1(d) - s2(d) for each d|n, describing the subset product as
/// prod (x^d - 1)^{e(d)}. Entries aligned with ascending divisors.
struct ExponentVector {
  FactoredInt n;
  std::vector<std::pair<FactoredInt, long long>> entries;
  long long at(const FactoredInt& d) const;
};

ExponentVector exponent_vector(const DivisorSubset& s);

IntPoly divisor_poly(const DivisorSubset& s, const CycConfig& cfg = {});

/// Subset product mod x^{order+1}, never materializing the polynomial;
/// works for any n. Dropped (x^d - 1)^{e(d)} factors with d > order
/// contribute the sign (-1)^{e(d)}.
IntSeries divisor_poly_trunc(const DivisorSubset& s, std::size_t order);

struct SearchConfig {
  std::uint64_t subset_budget = std::uint64_t(1) << 20;  // truncated search
  std::uint64_t poly_budget = std::uint64_t(1) << 14;    // full-poly search
  unsigned workers = 1;
  CycConfig cyc;
};

struct SearchResult {
  Int value;
  DivisorSubset witness;  // ties broken by smallest canonical mask
};

/// B(n): exact max height over all 2^{d(n)} subset products.
SearchResult big_B(const FactoredInt& n, const SearchConfig& cfg = {});

/// H(r,n): exact max |r-th coefficient| over all subsets.
SearchResult big_H(std::size_t r, const FactoredInt& n, const SearchConfig& cfg = {});

/// One gray-code walk reporting max |coefficient r| for every r in
/// 0..max_order at once. Partitioned across cfg.workers with a
/// deterministic merge; results are schedule-independent.
std::vector<SearchResult> coefficient_maxima(const FactoredInt& n,
                                             std::size_t max_order,
                                             const SearchConfig& cfg = {});

}  // namespace cycdiv
