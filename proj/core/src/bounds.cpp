#include "cycdiv/bounds.hpp"

#include "cycdiv/constructions.hpp"
#include "cycdiv/errors.hpp"
#include "cycdiv/polyring.hpp"

namespace cycdiv {

Rational dominance_bound(std::size_t r, const Int& d_n) {
  if (d_n < 1) throw PreconditionViolated("divisor count must be >= 1");
  if (r == 0) return 1;
  const Rational half_d(d_n, 2);
  TruncSeries g = TruncSeries::one(r);
  for (std::size_t i = 1; i <= r; ++i) g = g.mul(binomial_series(half_d, i, r));
  return g[r];
}

Rational leading_term(std::size_t r, const Int& d_n) {
  return Rational(ipow(d_n, r), ipow(Int(2), r) * factorial(r));
}

BoundReport check_upper(std::size_t r, const FactoredInt& n, const SearchConfig& cfg) {
  BoundReport rep;
  rep.r = r;
  rep.n = n;
  rep.d_n = divisor_count(n);
  rep.exact_bound = dominance_bound(r, rep.d_n);
  rep.leading = leading_term(r, rep.d_n);
  rep.observed = big_H(r, n, cfg).value;
  if (rep.leading != 0) rep.ratio = Rational(*rep.observed) / rep.leading;
  rep.ok = Rational(*rep.observed) <= rep.exact_bound;
  return rep;
}

BoundReport check_lower(std::size_t r, unsigned k, const SearchConfig& cfg) {
  if (k < r) throw PreconditionViolated("lower-bound check needs k >= r");
  BoundReport rep;
  rep.r = r;
  rep.n = primorial(k);
  rep.d_n = divisor_count(rep.n);
  rep.exact_bound = dominance_bound(r, rep.d_n);
  rep.leading = leading_term(r, rep.d_n);
  rep.observed = abs(extremal_coeff(k, r));
  rep.ok = true;
  if (rep.leading != 0) {
    rep.ratio = Rational(*rep.observed) / rep.leading;
    // Tolerance band from the O(d^{r-1}) correction term.
    Rational band(Int(8) * r * r, rep.d_n);
    Rational dev = *rep.ratio - 1;
    if (dev < 0) dev = -dev;
    rep.ok = dev <= band;
  }
  if (rep.d_n < 63 && std::uint64_t(1) << to_u64(rep.d_n) <= cfg.subset_budget) {
    SearchResult h = big_H(r, rep.n, cfg);
    if (*rep.observed > h.value) rep.ok = false;
  }
  return rep;
}

Real ramanujan_stat(const FactoredInt& n) {
  if (n.value() < 3)
    throw PreconditionViolated("statistic needs n >= 3 (log log n must be positive)");
  Real nn(n.value().str());
  Real dn(divisor_count(n).str());
  return log(dn) * log(log(nn)) / log(nn);
}

std::optional<Real> height_growth_stat(const FactoredInt& n, const Int& big_b) {
  if (n.value() < 3 || big_b < 2) return std::nullopt;
  Real nn(n.value().str());
  Real b(big_b.str());
  return log(log(b)) / (log(nn) / log(log(nn)));
}

}  // namespace cycdiv
