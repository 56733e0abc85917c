#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <vector>

#include "cycdiv/errors.hpp"
#include "cycdiv/numeric.hpp"

namespace cycdiv {

/// Dense polynomial over arbitrary-precision integers, canonical form
/// (no trailing zero coefficients). Immutable value semantics.
class IntPoly {
 public:
  IntPoly() = default;  // zero polynomial
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly one() { return IntPoly({1}); }
  static IntPoly constant(Int c);
  static IntPoly xn_minus_1(std::uint64_t n);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  Int coefficient(std::uint64_t r) const;  // 0 beyond the degree
  Int height() const;                      // max |a_i|, 0 for zero poly
  const std::vector<Int>& coefficients() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  /// Exact quotient; throws NotDivisible if the remainder is nonzero
  /// (a nonzero remainder signals a broken identity upstream).
  IntPoly exact_div(const IntPoly& g) const;

  IntPoly substitute_negate() const;                // f(-x)
  IntPoly substitute_power(std::uint64_t p) const;  // f(x^p), p >= 1

  /// Ascending coefficient list, e.g. "[-1, 2, -2, 1]".
  std::string to_list_string() const;

 private:
  void trim();
  std::vector<Int> c_;
};

/// Power series truncated at a fixed order: exactly order+1 stored
/// coefficients, arithmetic never consults anything beyond. T is Int for
/// truncations of integer polynomials, Rational for the bound series.
template <class T>
class Series {
 public:
  Series() : c_(1) {}  // order-0 zero series
  explicit Series(std::size_t order) : c_(order + 1) {}

  static Series one(std::size_t order) {
    Series s(order);
    s.c_[0] = 1;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  T& operator[](std::size_t i) { return c_[i]; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<T>& coefficients() const { return c_; }
  bool operator==(const Series& o) const { return c_ == o.c_; }

  Series mul(const Series& o) const {
    if (order() != o.order())
      throw OrderMismatch("series orders " + std::to_string(order()) + " vs " +
                          std::to_string(o.order()));
    Series r(order());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < c_.size(); ++j) {
        if (o.c_[j] == 0) continue;
        r.c_[i + j] += c_[i] * o.c_[j];
      }
    }
    return r;
  }

  /// b with this*b == 1 mod x^{order+1}. Over Int the constant term must
  /// be a unit; over Rational merely nonzero.
  Series inverse() const {
    if constexpr (std::is_same_v<T, Int>) {
      if (c_[0] != 1 && c_[0] != -1)
        throw NotInvertible("constant term is not a unit over the integers");
    } else {
      if (c_[0] == 0) throw NotInvertible("constant term is zero");
    }
    Series b(order());
    b.c_[0] = T(1) / c_[0];
    for (std::size_t k = 1; k < c_.size(); ++k) {
      T acc{};
      for (std::size_t i = 1; i <= k; ++i) {
        if (c_[i] == 0) continue;
        acc += c_[i] * b.c_[k - i];
      }
      b.c_[k] = -acc / c_[0];
    }
    return b;
  }

  Series pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Series r = one(order());
    Series base = *this;
    while (e > 0) {
      if (e & 1) r = r.mul(base);
      e >>= 1;
      if (e) base = base.mul(base);
    }
    return r;
  }

  void negate() {
    for (auto& v : c_) v = -v;
  }

  /// In-place multiply by (x^d - 1). For d > order the factor is
  /// congruent to -1, so this negates. O(order).
  void mul_binomial(std::size_t d) {
    if (d == 0) throw PreconditionViolated("binomial step d must be >= 1");
    if (d > order()) {
      negate();
      return;
    }
    for (std::size_t i = c_.size(); i-- > 0;) {
      T v = (i >= d) ? c_[i - d] : T{};
      c_[i] = v - c_[i];
    }
  }

  /// In-place divide by (x^d - 1), i.e. multiply by its truncated inverse.
  void div_binomial(std::size_t d) {
    if (d == 0) throw PreconditionViolated("binomial step d must be >= 1");
    if (d > order()) {
      negate();
      return;
    }
    // f = g*(x^d - 1)  =>  g_i = g_{i-d} - f_i
    for (std::size_t i = 0; i < c_.size(); ++i) {
      T v = (i >= d) ? c_[i - d] : T{};
      c_[i] = v - c_[i];
    }
  }

 private:
  std::vector<T> c_;
};

using IntSeries = Series<Int>;
using TruncSeries = Series<Rational>;

TruncSeries to_rational(const IntSeries& s);
IntSeries truncate(const IntPoly& f, std::size_t order);

/// (1 - x^d)^{-alpha} = sum_k binom(alpha+k-1, k) x^{dk}, truncated.
TruncSeries binomial_series(const Rational& alpha, std::uint64_t d, std::size_t order);

}  // namespace cycdiv
