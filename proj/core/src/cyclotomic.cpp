#include "cycdiv/cyclotomic.hpp"

#include <algorithm>

#include "cycdiv/errors.hpp"

namespace cycdiv {

namespace {

void check_cap(const FactoredInt& n, const CycConfig& cfg) {
  if (n.value() > cfg.materialization_cap)
    throw CapExceeded("index " + n.value().str() + " exceeds materialization cap " +
                      cfg.materialization_cap.str());
}

// All (e, mu(e)) with e | radical(n) and mu(e) != 0, i.e. every squarefree
// product of n's primes. The Moebius factor of phi_n at d = n/e has
// exponent mu(e).
std::vector<std::pair<Int, int>> squarefree_parts(const FactoredInt& n) {
  const auto& fs = n.factors();
  if (fs.size() > 30)
    throw PreconditionViolated("too many distinct primes to enumerate");
  std::vector<std::pair<Int, int>> parts = {{Int(1), 1}};
  for (const auto& [p, e] : fs) {
    std::size_t base = parts.size();
    for (std::size_t i = 0; i < base; ++i)
      parts.emplace_back(parts[i].first * p, -parts[i].second);
  }
  return parts;
}

}  // namespace

IntPoly cyclotomic(const FactoredInt& n, const CycConfig& cfg) {
  check_cap(n, cfg);
  IntPoly p = IntPoly::one();
  std::vector<std::uint64_t> denominators;
  for (const auto& [e, mu] : squarefree_parts(n)) {
    std::uint64_t d = to_u64(n.value() / e);
    if (mu == 1)
      p = p * IntPoly::xn_minus_1(d);
    else
      denominators.push_back(d);
  }
  for (std::uint64_t d : denominators) p = p.exact_div(IntPoly::xn_minus_1(d));
  return p;
}

IntPoly cyclotomic_recurrence(const FactoredInt& n, const CycConfig& cfg) {
  check_cap(n, cfg);
  // Squarefree part first: phi_{mp}(x) = phi_m(x^p)/phi_m(x) for p coprime
  // to m, starting from phi_1 = x - 1.
  IntPoly f({-1, 1});
  Int rad = 1;
  for (const auto& [p, e] : n.factors()) {
    std::uint64_t pu = to_u64(p);
    f = f.substitute_power(pu).exact_div(f);
    rad *= p;
  }
  Int step = n.value() / rad;
  if (step > 1) f = f.substitute_power(to_u64(step));
  return f;
}

IntSeries cyclotomic_trunc(const FactoredInt& n, std::size_t order) {
  IntSeries s = IntSeries::one(order);
  for (const auto& [e, mu] : squarefree_parts(n)) {
    Int d = n.value() / e;
    if (d > order) {
      // (x^d - 1)^{+-1} is congruent to -1 below x^d.
      s.negate();
    } else {
      std::size_t dd = static_cast<std::size_t>(to_u64(d));
      if (mu == 1)
        s.mul_binomial(dd);
      else
        s.div_binomial(dd);
    }
  }
  return s;
}

std::vector<std::pair<FactoredInt, IntPoly>> factor_xn_minus_1(const FactoredInt& n,
                                                               const CycConfig& cfg) {
  check_cap(n, cfg);
  std::vector<std::pair<FactoredInt, IntPoly>> out;
  for (const FactoredInt& d : divisors(n)) out.emplace_back(d, cyclotomic(d, cfg));
  return out;
}

Lemma2Report verify_lemma2(const FactoredInt& n, const Int& p, const CycConfig& cfg) {
  if (!is_prime(p)) throw PreconditionViolated(p.str() + " is not prime");
  Lemma2Report rep{CheckOutcome::skip, CheckOutcome::skip, CheckOutcome::skip};

  FactoredInt pf = FactoredInt::from_factors({{p, 1}}, false);
  FactoredInt np = n.times(pf);
  IntPoly phi_n = cyclotomic(n, cfg);
  IntPoly phi_np = cyclotomic(np, cfg);
  std::uint64_t pu = to_u64(p);

  bool p_divides = n.value() % p == 0;
  if (p_divides) {
    rep.dividing_prime = phi_np == phi_n.substitute_power(pu) ? CheckOutcome::pass
                                                              : CheckOutcome::fail;
  } else {
    rep.coprime_prime = phi_np == phi_n.substitute_power(pu).exact_div(phi_n)
                            ? CheckOutcome::pass
                            : CheckOutcome::fail;
  }
  if (n.value() > 1 && n.value() % 2 == 1) {
    FactoredInt twon = n.times(FactoredInt::from_factors({{Int(2), 1}}, false));
    rep.odd_negation = cyclotomic(twon, cfg) == phi_n.substitute_negate()
                           ? CheckOutcome::pass
                           : CheckOutcome::fail;
  }
  return rep;
}

BatemanResult bateman_check(const FactoredInt& n, const CycConfig& cfg) {
  BatemanResult r;
  r.height = cyclotomic_recurrence(n, cfg).height();
  unsigned k = 0;
  for (const auto& [p, e] : n.factors())
    if (p != 2) ++k;
  r.odd_primes = k;
  if (k == 0) {
    // The stated exponent 2^{k-1} has no integer meaning at k = 0; A(n) = 1
    // there, so the check is vacuous with the square-root reading.
    r.bound = isqrt_ceil(n.value());
    r.vacuous = true;
  } else {
    r.bound = ipow(n.value(), std::uint64_t(1) << (k - 1));
    r.vacuous = false;
  }
  r.ok = r.height <= r.bound;
  return r;
}

}  // namespace cycdiv
