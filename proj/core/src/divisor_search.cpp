#include "cycdiv/divisor_search.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "cycdiv/errors.hpp"

namespace cycdiv {

namespace {

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

void apply_binomial_power(IntSeries& s, const Int& d, long long e) {
  if (e == 0) return;
  if (d > s.order()) {
    if (e & 1) s.negate();  // each dropped factor contributes exactly -1
    return;
  }
  std::size_t dd = static_cast<std::size_t>(to_u64(d));
  for (long long i = 0; i < e; ++i) s.mul_binomial(dd);
  for (long long i = 0; i > e; --i) s.div_binomial(dd);
}

}  // namespace

DivisorSubset DivisorSubset::of(FactoredInt n, std::uint64_t mask) {
  DivisorSubset s;
  s.all_divisors = divisors(n);
  s.n = std::move(n);
  if (s.all_divisors.size() < 64 && mask >= (std::uint64_t(1) << s.all_divisors.size()))
    throw PreconditionViolated("subset mask has bits beyond d(n)");
  s.mask = mask;
  return s;
}

DivisorSubset DivisorSubset::of_members(FactoredInt n, const std::vector<Int>& members) {
  DivisorSubset s;
  s.all_divisors = divisors(n);
  s.n = std::move(n);
  for (const Int& m : members) {
    auto it = std::find_if(s.all_divisors.begin(), s.all_divisors.end(),
                           [&](const FactoredInt& d) { return d.value() == m; });
    if (it == s.all_divisors.end())
      throw PreconditionViolated(m.str() + " is not a divisor of " + s.n.value().str());
    s.mask |= std::uint64_t(1) << (it - s.all_divisors.begin());
  }
  return s;
}

std::vector<FactoredInt> DivisorSubset::members() const {
  std::vector<FactoredInt> out;
  for (std::size_t i = 0; i < all_divisors.size(); ++i)
    if (mask >> i & 1) out.push_back(all_divisors[i]);
  return out;
}

long long ExponentVector::at(const FactoredInt& d) const {
  for (const auto& [dd, e] : entries)
    if (dd.value() == d.value()) return e;
  throw PreconditionViolated(d.value().str() + " is not a divisor");
}

ExponentVector exponent_vector(const DivisorSubset& s) {
  ExponentVector ev;
  ev.n = s.n;
  const auto& divs = s.all_divisors;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    long long e = 0;
    for (std::size_t j = 0; j < divs.size(); ++j) {
      if (!(s.mask >> j & 1)) continue;
      if (divs[j].value() % divs[i].value() != 0) continue;
      e += moebius(div_exact(divs[j], divs[i]));
    }
    ev.entries.emplace_back(divs[i], e);
  }
  return ev;
}

IntPoly divisor_poly(const DivisorSubset& s, const CycConfig& cfg) {
  if (s.n.value() > cfg.materialization_cap)
    throw CapExceeded("index " + s.n.value().str() + " exceeds materialization cap");
  ExponentVector ev = exponent_vector(s);
  IntPoly p = IntPoly::one();
  for (const auto& [d, e] : ev.entries)
    for (long long i = 0; i < e; ++i) p = p * IntPoly::xn_minus_1(to_u64(d.value()));
  for (const auto& [d, e] : ev.entries)
    for (long long i = 0; i > e; --i) p = p.exact_div(IntPoly::xn_minus_1(to_u64(d.value())));
  return p;
}

IntSeries divisor_poly_trunc(const DivisorSubset& s, std::size_t order) {
  ExponentVector ev = exponent_vector(s);
  IntSeries out = IntSeries::one(order);
  for (const auto& [d, e] : ev.entries) apply_binomial_power(out, d.value(), e);
  return out;
}

std::vector<SearchResult> coefficient_maxima(const FactoredInt& n,
                                             std::size_t max_order,
                                             const SearchConfig& cfg) {
  const std::vector<FactoredInt> divs = divisors(n);
  const std::size_t D = divs.size();
  if (D >= 63 || (std::uint64_t(1) << D) > cfg.subset_budget)
    throw BudgetExceeded("2^" + std::to_string(D) + " subsets exceed the search budget");

  std::vector<IntSeries> phi(D, IntSeries(max_order));
  std::vector<IntSeries> phi_inv(D, IntSeries(max_order));
  for (std::size_t i = 0; i < D; ++i) {
    phi[i] = cyclotomic_trunc(divs[i], max_order);
    phi_inv[i] = phi[i].inverse();  // constant term is +-1 for any divisor of x^n-1
  }

  struct Best {
    Int value{-1};
    std::uint64_t mask = 0;
  };
  const std::uint64_t total = std::uint64_t(1) << D;
  const unsigned workers = std::max(1u, cfg.workers);
  const std::uint64_t blocks = std::min<std::uint64_t>(workers, total);

  std::vector<std::vector<Best>> partial(blocks, std::vector<Best>(max_order + 1));
  auto run_block = [&](std::uint64_t b) {
    const std::uint64_t lo = total * b / blocks;
    const std::uint64_t hi = total * (b + 1) / blocks;
    if (lo >= hi) return;
    std::vector<Best>& best = partial[b];
    IntSeries cur = IntSeries::one(max_order);
    std::uint64_t g = gray(lo);
    for (std::size_t i = 0; i < D; ++i)
      if (g >> i & 1) cur = cur.mul(phi[i]);
    for (std::uint64_t idx = lo;; ++idx) {
      for (std::size_t r = 0; r <= max_order; ++r) {
        Int v = abs(cur[r]);
        if (v > best[r].value || (v == best[r].value && g < best[r].mask)) {
          best[r].value = std::move(v);
          best[r].mask = g;
        }
      }
      if (idx + 1 >= hi) break;
      const unsigned bit = std::countr_zero(idx + 1);
      const std::uint64_t next = g ^ (std::uint64_t(1) << bit);
      cur = cur.mul((next >> bit & 1) ? phi[bit] : phi_inv[bit]);
      g = next;
    }
  };

  if (blocks == 1) {
    run_block(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(blocks);
    for (std::uint64_t b = 0; b < blocks; ++b) pool.emplace_back(run_block, b);
    for (auto& t : pool) t.join();
  }

  std::vector<SearchResult> out;
  out.reserve(max_order + 1);
  for (std::size_t r = 0; r <= max_order; ++r) {
    Best merged;
    for (const auto& part : partial) {
      const Best& c = part[r];
      if (c.value > merged.value || (c.value == merged.value && c.mask < merged.mask))
        merged = c;
    }
    SearchResult res;
    res.value = merged.value;
    res.witness.n = n;
    res.witness.all_divisors = divs;
    res.witness.mask = merged.mask;
    out.push_back(std::move(res));
  }
  return out;
}

SearchResult big_H(std::size_t r, const FactoredInt& n, const SearchConfig& cfg) {
  return coefficient_maxima(n, r, cfg)[r];
}

SearchResult big_B(const FactoredInt& n, const SearchConfig& cfg) {
  const std::vector<FactoredInt> divs = divisors(n);
  const std::size_t D = divs.size();
  if (D >= 63 || (std::uint64_t(1) << D) > cfg.poly_budget)
    throw BudgetExceeded("2^" + std::to_string(D) +
                         " subsets exceed the full-polynomial budget");
  if (n.value() > cfg.cyc.materialization_cap)
    throw CapExceeded("index " + n.value().str() + " exceeds materialization cap");

  std::vector<IntPoly> phi(D);
  for (std::size_t i = 0; i < D; ++i) phi[i] = cyclotomic(divs[i], cfg.cyc);

  Int best_value = -1;
  std::uint64_t best_mask = 0;
  const std::uint64_t total = std::uint64_t(1) << D;
  // Gray walk: one multiply or exact divide per step.
  IntPoly cur = IntPoly::one();
  std::uint64_t g = 0;
  for (std::uint64_t idx = 0;; ++idx) {
    Int h = cur.height();
    if (h > best_value || (h == best_value && g < best_mask)) {
      best_value = std::move(h);
      best_mask = g;
    }
    if (idx + 1 >= total) break;
    const unsigned bit = std::countr_zero(idx + 1);
    const std::uint64_t next = g ^ (std::uint64_t(1) << bit);
    cur = (next >> bit & 1) ? cur * phi[bit] : cur.exact_div(phi[bit]);
    g = next;
  }

  SearchResult res;
  res.value = best_value;
  res.witness.n = n;
  res.witness.all_divisors = divs;
  res.witness.mask = best_mask;
  return res;
}

}  // namespace cycdiv
