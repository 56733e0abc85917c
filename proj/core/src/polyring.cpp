#include "cycdiv/polyring.hpp"

#include <sstream>

namespace cycdiv {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::xn_minus_1(std::uint64_t n) {
  if (n == 0) throw PreconditionViolated("x^0 - 1 is the zero polynomial");
  std::vector<Int> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPoly::coefficient(std::uint64_t r) const {
  return r < c_.size() ? c_[r] : Int(0);
}

Int IntPoly::height() const {
  Int h = 0;
  for (const Int& v : c_) {
    Int a = abs(v);
    if (a > h) h = a;
  }
  return h;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::exact_div(const IntPoly& g) const {
  if (g.is_zero()) throw PreconditionViolated("division by the zero polynomial");
  if (is_zero()) return {};
  if (degree() < g.degree())
    throw NotDivisible("degree of dividend is below the divisor");

  // Long division iterating only the divisor's nonzero terms; the sparse
  // binomials (x^d - 1) used throughout make this O(deg).
  std::vector<std::pair<std::size_t, Int>> nz;
  for (std::size_t j = 0; j < g.c_.size(); ++j)
    if (g.c_[j] != 0) nz.emplace_back(j, g.c_[j]);
  const std::size_t dg = g.c_.size() - 1;
  const Int& lead = g.c_[dg];

  std::vector<Int> rem = c_;
  std::vector<Int> q(c_.size() - dg);
  for (std::size_t i = q.size(); i-- > 0;) {
    Int& cur = rem[i + dg];
    if (cur == 0) continue;
    if (cur % lead != 0) throw NotDivisible("leading coefficient does not divide");
    Int coef = cur / lead;
    for (const auto& [j, gc] : nz) rem[i + j] -= coef * gc;
    q[i] = std::move(coef);
  }
  for (const Int& v : rem)
    if (v != 0) throw NotDivisible("nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly IntPoly::substitute_negate() const {
  std::vector<Int> r = c_;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::substitute_power(std::uint64_t p) const {
  if (p < 1) throw PreconditionViolated("substitution power must be >= 1");
  if (is_zero() || p == 1) return *this;
  std::vector<Int> r((c_.size() - 1) * p + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * p] = c_[i];
  return IntPoly(std::move(r));
}

std::string IntPoly::to_list_string() const {
  std::ostringstream os;
  os << '[';
  if (is_zero()) {
    os << '0';
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ", ";
      os << c_[i];
    }
  }
  os << ']';
  return os.str();
}

TruncSeries to_rational(const IntSeries& s) {
  TruncSeries r(s.order());
  for (std::size_t i = 0; i <= s.order(); ++i) r[i] = Rational(s[i]);
  return r;
}

IntSeries truncate(const IntPoly& f, std::size_t order) {
  IntSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) s[i] = f.coefficient(i);
  return s;
}

TruncSeries binomial_series(const Rational& alpha, std::uint64_t d, std::size_t order) {
  if (d < 1) throw PreconditionViolated("binomial series step d must be >= 1");
  TruncSeries s(order);
  s[0] = 1;
  Rational term = 1;
  for (std::uint64_t k = 1; d * k <= order; ++k) {
    term *= alpha + Rational(k - 1);
    term /= Rational(k);
    s[static_cast<std::size_t>(d * k)] = term;
  }
  return s;
}

}  // namespace cycdiv
