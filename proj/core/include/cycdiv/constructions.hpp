#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cycdiv/numtheory.hpp"
#include "cycdiv/polyring.hpp"

namespace cycdiv {

/// A divisor of x^l - 1 held symbolically as a set of distinct cyclotomic
/// indices (l = lcm of the indices). Indices may be far too large to ever
/// materialize the polynomial.
struct CycProduct {
  std::vector<FactoredInt> indices;  // ascending, pairwise distinct
  FactoredInt order_l;

  static CycProduct of(std::vector<FactoredInt> indices);
};

IntSeries trunc_of_product(const CycProduct& p, std::size_t order);

struct WitnessClaim {
  std::string name;
  bool pass;
};

struct WitnessReport {
  CycProduct product;
  IntSeries truncation;
  std::vector<WitnessClaim> claims;

  bool all_pass() const;
};

/// Building block congruent to 1 - x^n mod x^{n+1}: indices {n_m * d : d|n}
/// with n_m the m-th admissible two-prime squarefree number. Admissible
/// means both primes exceed n, neither equals 2n, and no resulting index
/// lies in `exclude`. The congruence is machine-checked before returning.
CycProduct building_block_d(std::uint64_t n, std::size_t m,
                            const std::set<Int>& exclude = {});

/// Congruent to 1 + x^n mod x^{n+1}: d ranges over d|2n, d∤n.
CycProduct building_block_dprime(std::uint64_t n, std::size_t m,
                                 const std::set<Int>& exclude = {});

/// A divisor of x^l - 1 whose coefficients 1..r equal the given target
/// sequence exactly, built by induction: fix coefficient j with |delta|
/// degree-j blocks of the appropriate sign, always on fresh indices.
WitnessReport prefix_witness(const std::vector<long long>& target);

/// A divisor with exactly m irreducible factors whose coefficient set
/// covers {-n..n}. `truncation_order` overrides the default verification
/// cap (p_t for odd m, p_t * p' for even m, where the coverage lives).
WitnessReport suzuki_witness(std::size_t m, std::uint64_t n,
                             std::optional<std::size_t> truncation_order = {});

/// f_k: the product of phi_m over squarefree m | n_k with mu(m) = 1,
/// n_k the k-th primorial.
CycProduct extremal_fk(unsigned k);
Int extremal_coeff(unsigned k, std::size_t r);

}  // namespace cycdiv
