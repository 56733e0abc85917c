#include <doctest.h>

#include "cycdiv/errors.hpp"
#include "cycdiv/numtheory.hpp"
#include "test_support.hpp"

using namespace cycdiv;

TEST_CASE("moebius") {
  CHECK(moebius(FactoredInt::from_u64(1)) == 1);
  CHECK(moebius(FactoredInt::from_u64(12)) == 0);
  CHECK(moebius(FactoredInt::from_u64(30)) == -1);
  CHECK(moebius(FactoredInt::from_u64(6)) == 1);
}

TEST_CASE("moebius sums to zero over the divisor lattice") {
  for (std::uint64_t n = 2; n <= 600; ++n) {
    int sum = 0;
    for (const FactoredInt& d : divisors(FactoredInt::from_u64(n))) sum += moebius(d);
    CHECK(sum == 0);
  }
  int sum1 = 0;
  for (const FactoredInt& d : divisors(FactoredInt::one())) sum1 += moebius(d);
  CHECK(sum1 == 1);
}

TEST_CASE("divisors ascending and complete") {
  auto d1 = divisors(FactoredInt::from_u64(1));
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].value() == 1);

  auto d6 = divisors(FactoredInt::from_u64(6));
  REQUIRE(d6.size() == 4);
  CHECK(d6[0].value() == 1);
  CHECK(d6[1].value() == 2);
  CHECK(d6[2].value() == 3);
  CHECK(d6[3].value() == 6);

  CHECK(divisors(FactoredInt::from_u64(30)).size() == 8);

  auto rng = test_rng(1);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1'000'000);
  for (int i = 0; i < 50; ++i) {
    FactoredInt n = FactoredInt::from_u64(pick(rng));
    auto ds = divisors(n);
    CHECK(Int(ds.size()) == divisor_count(n));
    for (std::size_t j = 1; j < ds.size(); ++j) CHECK(ds[j - 1].value() < ds[j].value());
    for (const auto& d : ds) CHECK(n.value() % d.value() == 0);
  }
}

TEST_CASE("prime clusters") {
  CHECK_THROWS_AS(find_prime_cluster(2), PreconditionViolated);

  auto c3 = find_prime_cluster(3);
  REQUIRE(c3.size() == 3);
  CHECK(c3[0] == 5);
  CHECK(c3[1] == 7);
  CHECK(c3[2] == 11);

  for (unsigned t = 3; t <= 9; ++t) {
    auto c = find_prime_cluster(t);
    REQUIRE(c.size() == t);
    for (std::size_t i = 1; i < c.size(); ++i) {
      CHECK(c[i - 1] < c[i]);
      CHECK(is_prime(c[i]));
    }
    CHECK(c[0] + c[1] > c.back());
  }
}

TEST_CASE("two-prime squarefree sequence") {
  auto a = two_prime_squarefree_sequence(1, 3);
  REQUIRE(a.size() == 3);
  CHECK(a[0].value() == 6);
  CHECK(a[1].value() == 10);
  CHECK(a[2].value() == 14);

  auto b = two_prime_squarefree_sequence(2, 3);
  CHECK(b[0].value() == 15);
  CHECK(b[1].value() == 21);
  CHECK(b[2].value() == 33);

  CHECK(two_prime_squarefree_sequence(2, 1)[0].value() == 15);

  // Pairwise distinct, ascending, coprime to everything <= lower.
  auto c = two_prime_squarefree_sequence(12, 12);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c[i].factors().size() == 2);
    for (const auto& [p, e] : c[i].factors()) {
      CHECK(p > 12);
      CHECK(e == 1);
    }
    if (i) CHECK(c[i - 1].value() < c[i].value());
    for (int q = 2; q <= 12; ++q) CHECK(boost::multiprecision::gcd(c[i].value(), Int(q)) == 1);
  }
}

TEST_CASE("primorials") {
  CHECK(primorial(1).value() == 2);
  CHECK(primorial(3).value() == 30);
  CHECK(primorial(4).value() == 210);
  for (unsigned k = 1; k <= 10; ++k)
    CHECK(divisor_count(primorial(k)) == ipow(Int(2), k));
  CHECK_THROWS_AS(primorial(0), PreconditionViolated);
}

TEST_CASE("distinct prime count") {
  CHECK(distinct_prime_count(FactoredInt::one()) == 0);
  CHECK(distinct_prime_count(FactoredInt::from_u64(12)) == 2);
  CHECK(distinct_prime_count(FactoredInt::from_u64(30)) == 3);
}

TEST_CASE("factored integers") {
  FactoredInt n = FactoredInt::from_u64(360);
  Int prod = 1;
  for (const auto& [p, e] : n.factors()) prod *= ipow(p, e);
  CHECK(prod == 360);

  CHECK_THROWS_AS(FactoredInt::from_value(Int(0)), PreconditionViolated);
  CHECK_THROWS_AS(FactoredInt::from_factors({{Int(4), 1}}), PreconditionViolated);
  CHECK_THROWS_AS(FactoredInt::from_factors({{Int(5), 1}, {Int(3), 1}}),
                  PreconditionViolated);

  CHECK(div_exact(FactoredInt::from_u64(30), FactoredInt::from_u64(6)).value() == 5);
  CHECK_THROWS_AS(div_exact(FactoredInt::from_u64(30), FactoredInt::from_u64(4)),
                  NotDivisible);
  CHECK(lcm(FactoredInt::from_u64(12), FactoredInt::from_u64(18)).value() == 36);
  CHECK(radical(FactoredInt::from_u64(360)).value() == 30);
  CHECK(totient(FactoredInt::from_u64(36)) == 12);
}

TEST_CASE("primality and next_prime") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(97)));
  CHECK(!is_prime(Int(1)));
  CHECK(!is_prime(Int(561)));             // Carmichael
  CHECK(is_prime(Int("1000000000000066600000000000001")));
  CHECK(next_prime(Int(13)) == 17);
  CHECK(next_prime(Int(1)) == 2);
  CHECK(next_prime(Int("10000000000000000")) == Int("10000000000000061"));
}
