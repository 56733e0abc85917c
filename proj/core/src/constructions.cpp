#include "cycdiv/constructions.hpp"

#include <algorithm>
#include <map>

#include "cycdiv/cyclotomic.hpp"
#include "cycdiv/errors.hpp"

namespace cycdiv {

namespace {

std::vector<std::uint64_t> small_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Advances `gen` to the next n_m giving a block whose indices avoid
// `exclude`, and machine-checks the 1 -+ x^n congruence before returning.
// `degrees` lists the d values the block multiplies over; `expect_plus`
// selects 1 + x^n vs 1 - x^n.
CycProduct next_block(TwoPrimeGenerator& gen, std::uint64_t n,
                      const std::vector<std::uint64_t>& degrees, bool expect_plus,
                      const std::set<Int>& exclude) {
  while (true) {
    FactoredInt nm = gen.next();
    std::vector<FactoredInt> indices;
    bool clashes = false;
    for (std::uint64_t d : degrees) {
      FactoredInt idx = nm.times(FactoredInt::from_u64(d));
      if (exclude.count(idx.value())) {
        clashes = true;
        break;
      }
      indices.push_back(std::move(idx));
    }
    if (clashes) continue;

    CycProduct block = CycProduct::of(std::move(indices));
    IntSeries got = trunc_of_product(block, n);
    IntSeries want = IntSeries::one(n);
    want[n] = expect_plus ? 1 : -1;
    if (!(got == want))
      throw VerificationFailed("building block congruence failed at n=" +
                               std::to_string(n));
    return block;
  }
}

// Candidate n_m: two-prime squarefree, both primes > n and distinct from
// 2n. Primes > n alone would not be enough: a prime dividing some
// d | 2n breaks the congruence (e.g. n_m = 6 at n = 1), so 2n is barred;
// no other divisor of 2n can exceed n.
TwoPrimeGenerator block_candidates(std::uint64_t n) {
  return TwoPrimeGenerator(Int(n), Int(2 * n));
}

CycProduct make_block(std::uint64_t n, std::size_t m, const std::set<Int>& exclude,
                      const std::vector<std::uint64_t>& degrees, bool expect_plus) {
  if (n < 1 || m < 1) throw PreconditionViolated("building block needs n >= 1, m >= 1");
  TwoPrimeGenerator gen = block_candidates(n);
  CycProduct block = next_block(gen, n, degrees, expect_plus, exclude);
  for (std::size_t i = 1; i < m; ++i)
    block = next_block(gen, n, degrees, expect_plus, exclude);
  return block;
}

}  // namespace

CycProduct CycProduct::of(std::vector<FactoredInt> indices) {
  if (indices.empty()) throw PreconditionViolated("empty cyclotomic product");
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i - 1] == indices[i])
      throw PreconditionViolated("cyclotomic indices must be pairwise distinct");
  // One pass over all prime factors; iterated lcm would be quadratic in
  // the index count and witnesses can carry tens of thousands of indices.
  std::map<Int, unsigned> maxexp;
  for (const FactoredInt& m : indices)
    for (const auto& [p, e] : m.factors()) {
      unsigned& cur = maxexp[p];
      cur = std::max(cur, e);
    }
  std::vector<std::pair<Int, unsigned>> fs(maxexp.begin(), maxexp.end());
  CycProduct p;
  p.order_l = FactoredInt::from_factors(std::move(fs), false);
  p.indices = std::move(indices);
  return p;
}

IntSeries trunc_of_product(const CycProduct& p, std::size_t order) {
  IntSeries s = IntSeries::one(order);
  for (const FactoredInt& m : p.indices) s = s.mul(cyclotomic_trunc(m, order));
  return s;
}

bool WitnessReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const WitnessClaim& c) { return c.pass; });
}

CycProduct building_block_d(std::uint64_t n, std::size_t m, const std::set<Int>& exclude) {
  return make_block(n, m, exclude, small_divisors(n), false);
}

CycProduct building_block_dprime(std::uint64_t n, std::size_t m,
                                 const std::set<Int>& exclude) {
  std::vector<std::uint64_t> degrees;
  for (std::uint64_t d : small_divisors(2 * n))
    if (n % d != 0) degrees.push_back(d);
  return make_block(n, m, exclude, degrees, true);
}

WitnessReport prefix_witness(const std::vector<long long>& target) {
  const std::size_t r = target.size();
  if (r < 1) throw PreconditionViolated("prefix target must be nonempty");

  std::vector<FactoredInt> indices;
  std::set<Int> used;
  IntSeries cur = IntSeries::one(r);

  auto absorb = [&](const CycProduct& block) {
    for (const FactoredInt& idx : block.indices) {
      used.insert(idx.value());
      indices.push_back(idx);
    }
    cur = cur.mul(trunc_of_product(block, r));
  };

  // Adjusting coefficient j can take thousands of blocks (the deltas
  // compound across degrees), so each degree keeps its candidate stream
  // alive instead of rescanning from the start per block.
  std::vector<std::uint64_t> divisors_d, divisors_dp;
  std::vector<TwoPrimeGenerator> gen_d, gen_dp;
  std::vector<std::vector<std::uint64_t>> degs_d(r + 1), degs_dp(r + 1);
  gen_d.reserve(r + 1);
  gen_dp.reserve(r + 1);
  for (std::uint64_t j = 0; j <= r; ++j) {
    gen_d.push_back(block_candidates(j ? j : 1));
    gen_dp.push_back(block_candidates(j ? j : 1));
    if (j == 0) continue;
    degs_d[j] = small_divisors(j);
    for (std::uint64_t d : small_divisors(2 * j))
      if (j % d != 0) degs_dp[j].push_back(d);
  }

  // Base: the all-zero start still needs a nonempty product; a degree-2
  // block keeps the linear term at zero.
  if (target[0] == 0) absorb(building_block_d(2, 1, used));
  for (std::size_t j = 1; j <= r; ++j) {
    // Blocks of degree j shift coefficient j by exactly -+1 (constant term
    // stays 1 throughout) and leave coefficients below j alone.
    while (cur[j] != target[j - 1]) {
      bool raise = cur[j] < target[j - 1];
      absorb(raise ? next_block(gen_dp[j], j, degs_dp[j], true, used)
                   : next_block(gen_d[j], j, degs_d[j], false, used));
    }
  }

  WitnessReport rep;
  rep.product = CycProduct::of(indices);
  rep.truncation = cur;
  bool match = true;
  for (std::size_t j = 1; j <= r; ++j)
    if (cur[j] != target[j - 1]) match = false;
  rep.claims = {
      {"indices_distinct", rep.product.indices.size() == used.size()},
      {"constant_term_unit", cur[0] == 1 || cur[0] == -1},
      {"prefix_match", match},
  };
  return rep;
}

WitnessReport suzuki_witness(std::size_t m, std::uint64_t n,
                             std::optional<std::size_t> truncation_order) {
  if (m < 1 || n < 1) throw PreconditionViolated("suzuki witness needs m >= 1, n >= 1");

  unsigned t = static_cast<unsigned>(n + 2);
  if (t % 2 == 0) ++t;  // smallest odd t strictly greater than n+1
  const std::vector<Int> cluster = find_prime_cluster(t);
  const Int p = cluster.back();

  std::vector<std::pair<Int, unsigned>> nf;
  for (const Int& q : cluster) nf.emplace_back(q, 1);
  const FactoredInt N = FactoredInt::from_factors(std::move(nf), false);
  const FactoredInt two = FactoredInt::from_factors({{Int(2), 1}}, false);
  const FactoredInt twoN = two.times(N);
  const Int pprime = next_prime(p);
  const FactoredInt pprime_f = FactoredInt::from_factors({{pprime, 1}}, false);

  std::vector<FactoredInt> indices;
  std::size_t extra_pairs = 0;
  std::size_t cap;
  if (m % 2 == 1) {
    indices.push_back(twoN);
    extra_pairs = (m - 1) / 2;
    cap = static_cast<std::size_t>(to_u64(p));
  } else {
    // phi_{2Np'} phi_{p'} = phi_{2N}(x^{p'}): the covered coefficients sit
    // at multiples of p', so verification must reach p * p'.
    indices.push_back(twoN.times(pprime_f));
    indices.push_back(pprime_f);
    extra_pairs = m / 2 - 1;
    cap = static_cast<std::size_t>(to_u64(p * pprime));
  }
  if (extra_pairs > 0) {
    const Int bound = twoN.value() * pprime;
    for (const FactoredInt& ni : two_prime_squarefree_sequence(bound, extra_pairs))
      indices.push_back(ni);
    Int q = bound;
    for (std::size_t i = 0; i < extra_pairs; ++i) {
      q = next_prime(q);
      indices.push_back(FactoredInt::from_factors({{q, 1}}, false));
    }
  }
  if (truncation_order) cap = *truncation_order;

  WitnessReport rep;
  rep.product = CycProduct::of(indices);
  rep.truncation = trunc_of_product(rep.product, cap);

  std::set<Int> seen;
  for (std::size_t i = 1; i <= cap; ++i) seen.insert(rep.truncation[i]);
  bool covered = true;
  for (long long v = -static_cast<long long>(n); v <= static_cast<long long>(n); ++v)
    if (!seen.count(Int(v))) covered = false;

  rep.claims = {
      {"factor_count", rep.product.indices.size() == m},
      {"coverage", covered},
  };
  if (!rep.all_pass())
    throw VerificationFailed("suzuki witness checks failed for m=" + std::to_string(m) +
                             ", n=" + std::to_string(n));
  return rep;
}

CycProduct extremal_fk(unsigned k) {
  if (k < 1) throw PreconditionViolated("primorial rank must be >= 1");
  const FactoredInt nk = primorial(k);
  std::vector<FactoredInt> indices;
  for (const FactoredInt& m : divisors(nk))
    if (moebius(m) == 1) indices.push_back(m);
  return CycProduct::of(std::move(indices));
}

Int extremal_coeff(unsigned k, std::size_t r) {
  return trunc_of_product(extremal_fk(k), r)[r];
}

}  // namespace cycdiv
