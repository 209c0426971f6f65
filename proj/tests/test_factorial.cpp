#include "oracles.hpp"

#include "sixj/errors.hpp"
#include "sixj/factorial.hpp"

#include <doctest.h>

#include <thread>
#include <vector>

using namespace sixj;

TEST_CASE("small factorizations") {
  CHECK(factorial_factored(0)->as_map().empty());
  CHECK(factorial_factored(0)->value() == 1);
  CHECK(factorial_factored(1)->value() == 1);
  const std::map<std::uint64_t, std::uint64_t> four{{2, 3}, {3, 1}};
  CHECK(factorial_factored(4)->as_map() == four);
  CHECK(factorial_factored(4)->value() == 24);
  const std::map<std::uint64_t, std::uint64_t> ten{{2, 8}, {3, 4}, {5, 2}, {7, 1}};
  CHECK(factorial_factored(10)->as_map() == ten);
  CHECK_THROWS_AS(factorial_factored(-1), DomainError);
}

TEST_CASE("factorizations match Legendre's formula and trial division") {
  for (std::int64_t n : {2, 3, 17, 50, 97, 100, 211, 500}) {
    const auto got = factorial_factored(n)->as_map();
    CHECK(got == oracle::legendre_factorization(n));
    if (n <= 211) {
      CHECK(got == oracle::trial_division_factorization(n));
    }
  }
  for (std::int64_t n = 0; n <= 60; ++n) CHECK(factorial_factored(n)->value() == oracle::factorial(n));
}

TEST_CASE("prime lists are prefixes of each other") {
  const auto big = factorial_factored(300);
  for (std::int64_t n : {0, 5, 30, 299}) {
    const auto small = factorial_factored(n);
    REQUIRE(small->factors.size() <= big->factors.size());
    for (std::size_t i = 0; i < small->factors.size(); ++i) {
      CHECK(small->factors[i].prime == big->factors[i].prime);
    }
  }
}

TEST_CASE("PrimeExponents ratios") {
  PrimeExponents e;
  e.add_factorial(10);
  e.sub_factorial(7);
  e.sub_factorial(3);
  CHECK(e.is_integral());
  CHECK(e.to_integer() == 120);  // C(10,3)

  PrimeExponents r;
  r.add_factorial(3);
  r.sub_factorial(5);
  CHECK_FALSE(r.is_integral());
  CHECK(r.to_rational() == BigRational(1, 20));
  CHECK_THROWS_AS(r.to_integer(), InternalError);

  PrimeExponents a, b;
  a.add_factorial(6);   // 2^4 3^2 5
  b.add_factorial(4);
  b.add_factorial(4);   // 2^6 3^2
  const PrimeExponents m = PrimeExponents::min(a, b);
  CHECK(m.to_integer() == 16 * 9);
  CHECK(a.minus(m).to_integer() == 5);
  CHECK(b.minus(m).to_integer() == 4);

  PrimeExponents s = a;
  s += b;
  CHECK(s.to_integer() == BigInt(720) * 576);
}

TEST_CASE("multiply_out") {
  CHECK(multiply_out({}) == 1);
  CHECK(multiply_out({{2, 10}, {3, 2}, {7, 0}, {11, 1}}) == 1024 * 9 * 11);
}

TEST_CASE("concurrent cache access gives identical factorizations") {
  std::vector<std::jthread> pool;
  std::vector<BigInt> results(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([t, &results] {
      BigInt acc = 0;
      for (std::int64_t n = 600 + t; n < 800; n += 3) acc += factorial_factored(n)->value();
      results[static_cast<std::size_t>(t)] = acc;
    });
  }
  pool.clear();
  for (int t = 0; t < 8; ++t) {
    BigInt acc = 0;
    for (std::int64_t n = 600 + t; n < 800; n += 3) acc += oracle::factorial(n);
    CHECK(results[static_cast<std::size_t>(t)] == acc);
  }
  CHECK(factorial_cache_size() > 0);
}
