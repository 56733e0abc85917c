#include "cycdiv/numtheory.hpp"

#include <algorithm>
#include <mutex>

#include "cycdiv/errors.hpp"

namespace cycdiv {

namespace {

// Shared incremental sieve. Extension is guarded so concurrent workers can
// share it; reads of already-materialized primes go through the same lock
// for simplicity (contention is negligible at desk scale).
std::mutex g_prime_mutex;
std::vector<std::uint64_t> g_primes = {2, 3, 5, 7, 11, 13};

// Caller holds g_prime_mutex.
void extend_to_count(std::size_t count) {
  std::uint64_t c = g_primes.back();
  while (g_primes.size() < count) {
    c += (c == 2) ? 1 : 2;
    bool prime = true;
    for (std::uint64_t p : g_primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) g_primes.push_back(c);
  }
}

}  // namespace

std::uint64_t nth_prime(std::size_t i) {
  std::lock_guard<std::mutex> lock(g_prime_mutex);
  extend_to_count(i + 1);
  return g_primes[i];
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const int small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                     23, 29, 31, 37, 41, 43, 47};
  for (int p : small_primes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Miller-Rabin with the first twelve prime bases: deterministic for
  // n < 3.317e24, well beyond anything this library tests.
  Int d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  static const int bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int a : bases) {
    Int x = boost::multiprecision::powm(Int(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = boost::multiprecision::powm(x, Int(2), n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Int next_prime(const Int& n) {
  if (n < 2) return 2;
  Int c = n + 1;
  if (c % 2 == 0) {
    if (c == 2) return 2;
    ++c;
  }
  while (!is_prime(c)) c += 2;
  return c;
}

FactoredInt FactoredInt::from_value(const Int& n) {
  if (n < 1) throw PreconditionViolated("FactoredInt requires a positive integer");
  std::vector<std::pair<Int, unsigned>> fs;
  Int rest = n;
  for (std::size_t i = 0; rest > 1; ++i) {
    Int p = nth_prime(i);
    if (p * p > rest) break;
    if (p > 10'000'000) break;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) fs.emplace_back(p, e);
  }
  if (rest > 1) {
    if (!is_prime(rest))
      throw PreconditionViolated(
          "cannot factor " + n.str() + " by trial division; pass it in factored form");
    fs.emplace_back(rest, 1);
  }
  FactoredInt r;
  r.value_ = n;
  r.factors_ = std::move(fs);
  return r;
}

FactoredInt FactoredInt::from_factors(std::vector<std::pair<Int, unsigned>> factors,
                                      bool check_primality) {
  Int last = 1;
  std::vector<Int> parts;
  parts.reserve(factors.size());
  for (const auto& [p, e] : factors) {
    if (p <= last)
      throw PreconditionViolated("factor bases must be strictly increasing");
    if (e < 1) throw PreconditionViolated("factor exponents must be >= 1");
    if (check_primality && !is_prime(p))
      throw PreconditionViolated(p.str() + " is not prime");
    parts.push_back(ipow(p, e));
    last = p;
  }
  // Balanced product keeps the cost manageable when there are tens of
  // thousands of factors (witness order computations hit this).
  if (parts.empty()) parts.push_back(1);
  while (parts.size() > 1) {
    std::vector<Int> next;
    next.reserve(parts.size() / 2 + 1);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
      next.push_back(parts[i] * parts[i + 1]);
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  FactoredInt r;
  r.value_ = std::move(parts.front());
  r.factors_ = std::move(factors);
  return r;
}

FactoredInt FactoredInt::prime(const Int& p) {
  return from_factors({{p, 1}}, true);
}

FactoredInt FactoredInt::times(const FactoredInt& other) const {
  std::vector<std::pair<Int, unsigned>> merged;
  std::size_t i = 0, j = 0;
  while (i < factors_.size() || j < other.factors_.size()) {
    if (j == other.factors_.size() ||
        (i < factors_.size() && factors_[i].first < other.factors_[j].first)) {
      merged.push_back(factors_[i++]);
    } else if (i == factors_.size() || other.factors_[j].first < factors_[i].first) {
      merged.push_back(other.factors_[j++]);
    } else {
      merged.emplace_back(factors_[i].first, factors_[i].second + other.factors_[j].second);
      ++i;
      ++j;
    }
  }
  FactoredInt r;
  r.value_ = value_ * other.value_;
  r.factors_ = std::move(merged);
  return r;
}

bool FactoredInt::divides(const FactoredInt& other) const {
  return other.value_ % value_ == 0;
}

FactoredInt div_exact(const FactoredInt& m, const FactoredInt& d) {
  std::vector<std::pair<Int, unsigned>> fs;
  std::size_t j = 0;
  for (const auto& [p, e] : m.factors()) {
    unsigned sub = 0;
    if (j < d.factors().size() && d.factors()[j].first == p) {
      sub = d.factors()[j].second;
      ++j;
    }
    if (sub > e) throw NotDivisible(d.value().str() + " does not divide " + m.value().str());
    if (e - sub > 0) fs.emplace_back(p, e - sub);
  }
  if (j < d.factors().size())
    throw NotDivisible(d.value().str() + " does not divide " + m.value().str());
  return FactoredInt::from_factors(std::move(fs), false);
}

FactoredInt lcm(const FactoredInt& a, const FactoredInt& b) {
  std::vector<std::pair<Int, unsigned>> fs;
  std::size_t i = 0, j = 0;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      fs.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      fs.push_back(fb[j++]);
    } else {
      fs.emplace_back(fa[i].first, std::max(fa[i].second, fb[j].second));
      ++i;
      ++j;
    }
  }
  return FactoredInt::from_factors(std::move(fs), false);
}

FactoredInt radical(const FactoredInt& n) {
  std::vector<std::pair<Int, unsigned>> fs;
  fs.reserve(n.factors().size());
  for (const auto& [p, e] : n.factors()) fs.emplace_back(p, 1);
  return FactoredInt::from_factors(std::move(fs), false);
}

int moebius(const FactoredInt& n) {
  for (const auto& [p, e] : n.factors())
    if (e >= 2) return 0;
  return n.factors().size() % 2 == 0 ? 1 : -1;
}

std::vector<FactoredInt> divisors(const FactoredInt& n) {
  std::vector<FactoredInt> result = {FactoredInt::one()};
  for (const auto& [p, e] : n.factors()) {
    std::size_t base = result.size();
    FactoredInt pk = FactoredInt::one();
    for (unsigned k = 1; k <= e; ++k) {
      pk = pk.times(FactoredInt::from_factors({{p, 1}}, false));
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i].times(pk));
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

Int divisor_count(const FactoredInt& n) {
  Int d = 1;
  for (const auto& [p, e] : n.factors()) d *= e + 1;
  return d;
}

Int totient(const FactoredInt& n) {
  Int t = 1;
  for (const auto& [p, e] : n.factors()) t *= ipow(p, e - 1) * (p - 1);
  return t;
}

unsigned distinct_prime_count(const FactoredInt& n) {
  return static_cast<unsigned>(n.factors().size());
}

FactoredInt primorial(unsigned k) {
  if (k < 1) throw PreconditionViolated("primorial rank must be >= 1");
  std::vector<std::pair<Int, unsigned>> fs;
  for (unsigned i = 0; i < k; ++i) fs.emplace_back(nth_prime(i), 1);
  return FactoredInt::from_factors(std::move(fs), false);
}

std::vector<Int> find_prime_cluster(unsigned t) {
  if (t < 3) throw PreconditionViolated("prime cluster needs t >= 3");
  // First index whose prime exceeds t, then slide over consecutive primes.
  std::size_t start = 0;
  while (nth_prime(start) <= t) ++start;
  for (std::size_t i = start;; ++i) {
    Int p1 = nth_prime(i);
    Int p2 = nth_prime(i + 1);
    Int pt = nth_prime(i + t - 1);
    if (p1 + p2 > pt) {
      std::vector<Int> window;
      for (unsigned j = 0; j < t; ++j) window.emplace_back(nth_prime(i + j));
      return window;
    }
  }
}

TwoPrimeGenerator::TwoPrimeGenerator(Int prime_lower, Int skip_prime)
    : lower_(std::move(prime_lower)), skip_(std::move(skip_prime)) {
  const Int& p0 = prime_at(0);
  const Int& p1 = prime_at(1);
  heap_.push({p0 * p1, 0, 1});
}

const Int& TwoPrimeGenerator::prime_at(std::size_t i) {
  while (primes_.size() <= i) {
    Int p = primes_.empty() ? next_prime(lower_) : next_prime(primes_.back());
    if (p == skip_) p = next_prime(p);
    primes_.push_back(std::move(p));
  }
  return primes_[i];
}

FactoredInt TwoPrimeGenerator::next() {
  Cand c = heap_.top();
  heap_.pop();
  heap_.push({prime_at(c.i) * prime_at(c.j + 1), c.i, c.j + 1});
  if (c.j == c.i + 1)
    heap_.push({prime_at(c.i + 1) * prime_at(c.i + 2), c.i + 1, c.i + 2});
  return FactoredInt::from_factors({{primes_[c.i], 1}, {primes_[c.j], 1}}, false);
}

std::vector<FactoredInt> two_prime_squarefree_sequence(const Int& lower, std::size_t k) {
  if (lower < 1 || k < 1)
    throw PreconditionViolated("need lower >= 1 and k >= 1");
  TwoPrimeGenerator gen(lower);
  std::vector<FactoredInt> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(gen.next());
  return out;
}

}  // namespace cycdiv
