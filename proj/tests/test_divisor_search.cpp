#include <doctest.h>

#include <algorithm>

#include "cycdiv/divisor_search.hpp"
#include "cycdiv/errors.hpp"
#include "test_support.hpp"

using namespace cycdiv;

namespace {

std::uint64_t full_mask(const FactoredInt& n) {
  return (std::uint64_t(1) << to_u64(divisor_count(n))) - 1;
}

}  // namespace

TEST_CASE("divisor subsets") {
  FactoredInt six = FactoredInt::from_u64(6);
  DivisorSubset s = DivisorSubset::of_members(six, {Int(1), Int(6)});
  CHECK(s.mask == 0b1001);
  auto mem = s.members();
  REQUIRE(mem.size() == 2);
  CHECK(mem[0].value() == 1);
  CHECK(mem[1].value() == 6);

  CHECK_THROWS_AS(DivisorSubset::of(six, 1 << 4), PreconditionViolated);
  CHECK_THROWS_AS(DivisorSubset::of_members(six, {Int(4)}), PreconditionViolated);
}

TEST_CASE("exponent vectors") {
  FactoredInt six = FactoredInt::from_u64(6);

  ExponentVector all = exponent_vector(DivisorSubset::of(six, full_mask(six)));
  CHECK(all.at(FactoredInt::from_u64(6)) == 1);
  CHECK(all.at(FactoredInt::from_u64(1)) == 0);
  CHECK(all.at(FactoredInt::from_u64(2)) == 0);
  CHECK(all.at(FactoredInt::from_u64(3)) == 0);

  ExponentVector one = exponent_vector(DivisorSubset::of_members(six, {Int(1)}));
  CHECK(one.at(FactoredInt::one()) == 1);

  // S = {1, 6}: e = (2, -1, -1, 1) on divisors (1, 2, 3, 6).
  ExponentVector e = exponent_vector(DivisorSubset::of_members(six, {Int(1), Int(6)}));
  CHECK(e.at(FactoredInt::from_u64(1)) == 2);
  CHECK(e.at(FactoredInt::from_u64(2)) == -1);
  CHECK(e.at(FactoredInt::from_u64(3)) == -1);
  CHECK(e.at(FactoredInt::from_u64(6)) == 1);
}

TEST_CASE("exponent magnitude never exceeds half the divisor count") {
  // Only from n = 2 on: the lone subset {1} of n = 1 has e(1) = 1 > 1/2.
  CHECK(exponent_vector(DivisorSubset::of(FactoredInt::one(), 1)).at(FactoredInt::one()) == 1);

  auto rng = test_rng(10);
  std::uniform_int_distribution<std::uint64_t> pick_n(2, 200);
  for (int i = 0; i < 200; ++i) {
    FactoredInt n = FactoredInt::from_u64(pick_n(rng));
    Int dn = divisor_count(n);
    std::uniform_int_distribution<std::uint64_t> pick_mask(0, full_mask(n));
    ExponentVector e = exponent_vector(DivisorSubset::of(n, pick_mask(rng)));
    for (const auto& [d, ed] : e.entries) CHECK(2 * Int(ed < 0 ? -ed : ed) <= dn);
  }
}

TEST_CASE("subset products divide x^n - 1") {
  FactoredInt six = FactoredInt::from_u64(6);
  CHECK(divisor_poly(DivisorSubset::of(six, 0)) == IntPoly::one());
  CHECK(divisor_poly(DivisorSubset::of(six, full_mask(six))) == IntPoly::xn_minus_1(6));
  CHECK(divisor_poly(DivisorSubset::of_members(six, {Int(1), Int(6)})) ==
        IntPoly{-1, 2, -2, 1});

  for (std::uint64_t n : {1, 2, 8, 12, 30, 40}) {
    FactoredInt fn = FactoredInt::from_u64(n);
    for (std::uint64_t mask = 0; mask <= full_mask(fn); ++mask) {
      DivisorSubset s = DivisorSubset::of(fn, mask);
      IntPoly f = divisor_poly(s);
      CHECK(IntPoly::xn_minus_1(n).exact_div(f) * f == IntPoly::xn_minus_1(n));
      for (std::size_t r : {std::size_t(0), std::size_t(3), std::size_t(10)})
        CHECK(divisor_poly_trunc(s, r) == truncate(f, r));
    }
  }
}

TEST_CASE("truncated subset products, sign cases") {
  FactoredInt six = FactoredInt::from_u64(6);
  DivisorSubset s16 = DivisorSubset::of_members(six, {Int(1), Int(6)});
  IntSeries t = divisor_poly_trunc(s16, 2);
  CHECK(t[0] == -1);
  CHECK(t[1] == 2);
  CHECK(t[2] == -2);

  // Constant term of any subset product is +-1.
  auto rng = test_rng(11);
  std::uniform_int_distribution<std::uint64_t> pick_n(1, 400);
  for (int i = 0; i < 100; ++i) {
    FactoredInt n = FactoredInt::from_u64(pick_n(rng));
    std::uniform_int_distribution<std::uint64_t> pick_mask(0, full_mask(n));
    IntSeries c = divisor_poly_trunc(DivisorSubset::of(n, pick_mask(rng)), 0);
    CHECK((c[0] == 1 || c[0] == -1));
  }

  // The full product is x^n - 1, so below order n only -1 survives.
  for (std::uint64_t n : {7, 12, 30}) {
    FactoredInt fn = FactoredInt::from_u64(n);
    IntSeries full = divisor_poly_trunc(DivisorSubset::of(fn, full_mask(fn)), 5);
    CHECK(full[0] == -1);
    for (std::size_t i = 1; i <= 5; ++i) CHECK(full[i] == 0);
  }
}

TEST_CASE("maximal heights B(n)") {
  CHECK(big_B(FactoredInt::one()).value == 1);
  CHECK(big_B(FactoredInt::from_u64(7)).value == 1);

  SearchResult b6 = big_B(FactoredInt::from_u64(6));
  CHECK(b6.value == 2);
  // Two subsets attain height 2, {2,3} and {1,6}; the tie goes to the
  // smaller mask.
  auto mem = b6.witness.members();
  REQUIRE(mem.size() == 2);
  CHECK(mem[0].value() == 2);
  CHECK(mem[1].value() == 3);
  CHECK(divisor_poly(DivisorSubset::of_members(FactoredInt::from_u64(6),
                                               {Int(1), Int(6)}))
            .height() == 2);

  SearchConfig tight;
  tight.poly_budget = 4;
  CHECK_THROWS_AS(big_B(FactoredInt::from_u64(30), tight), BudgetExceeded);
}

TEST_CASE("maximal coefficients H(r,n)") {
  CHECK(big_H(1, FactoredInt::from_u64(6)).value == 2);
  CHECK(big_H(1, FactoredInt::from_u64(30)).value == 4);
  CHECK(big_H(1, FactoredInt::one()).value == 1);
  CHECK(big_H(0, FactoredInt::from_u64(12)).value == 1);

  SearchResult h = big_H(1, FactoredInt::from_u64(6));
  CHECK(h.witness.mask == 0b0110);  // {2,3} ties {1,6}, smaller mask wins

  // Coefficients above the degree of x^n - 1 are all zero.
  CHECK(big_H(9, FactoredInt::from_u64(8)).value == 0);

  SearchConfig tight;
  tight.subset_budget = 4;
  CHECK_THROWS_AS(big_H(1, FactoredInt::from_u64(30), tight), BudgetExceeded);
}

TEST_CASE("H(1,n) equals the best moebius subset sum") {
  // Coefficient 1 of prod_{m in S} phi_m is -sum_{m in S} mu(m), so H(1,n)
  // is the larger of (count of mu=+1 divisors, count of mu=-1 divisors).
  for (std::uint64_t n = 1; n <= 60; ++n) {
    FactoredInt fn = FactoredInt::from_u64(n);
    Int plus = 0, minus = 0;
    for (const FactoredInt& d : divisors(fn)) {
      int mu = moebius(d);
      if (mu > 0) ++plus;
      if (mu < 0) ++minus;
    }
    CHECK(big_H(1, fn).value == std::max(plus, minus));
  }
}

TEST_CASE("H(r,n) never exceeds B(n)") {
  for (std::uint64_t n : {2, 6, 12, 15, 24, 30}) {
    FactoredInt fn = FactoredInt::from_u64(n);
    Int b = big_B(fn).value;
    for (std::size_t r = 0; r <= 8; ++r) CHECK(big_H(r, fn).value <= b);
  }
}

TEST_CASE("one walk reports every order at once") {
  for (std::uint64_t n : {6, 30, 36}) {
    FactoredInt fn = FactoredInt::from_u64(n);
    auto maxima = coefficient_maxima(fn, 6);
    REQUIRE(maxima.size() == 7);
    for (std::size_t r = 0; r <= 6; ++r) {
      SearchResult ref = big_H(r, fn);
      CHECK(maxima[r].value == ref.value);
      CHECK(maxima[r].witness.mask == ref.witness.mask);
    }
  }
}

TEST_CASE("worker count does not change results") {
  SearchConfig one, four;
  one.workers = 1;
  four.workers = 4;
  for (std::uint64_t n : {30, 60, 210}) {
    FactoredInt fn = FactoredInt::from_u64(n);
    auto a = coefficient_maxima(fn, 5, one);
    auto b = coefficient_maxima(fn, 5, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
      CHECK(a[r].value == b[r].value);
      CHECK(a[r].witness.mask == b[r].witness.mask);
    }
  }
}
