#include "oracles.hpp"

#include "sixj/errors.hpp"
#include "sixj/exact_racah.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>

using namespace sixj;

namespace {

HalfInt h(int doubled) { return HalfInt::from_doubled(doubled); }

bool squarefree(const BigInt& m) {
  for (BigInt p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

} // namespace

TEST_CASE("triangle coefficients") {
  CHECK(triangle_coefficient(h(0), h(0), h(0)) == 1);
  CHECK(triangle_coefficient(h(2), h(2), h(2)) == BigRational(1, 24));
  CHECK(triangle_coefficient(h(0), h(2), h(2)) == BigRational(1, 3));
  CHECK(triangle_exponents(h(2), h(2), h(2)).to_rational() == BigRational(1, 24));
  CHECK_THROWS_AS(triangle_coefficient(h(1), h(1), h(4)), DomainError);
}

TEST_CASE("alternating sums by hand") {
  CHECK(racah_alternating_sum(SpinSextet::from_ints({1, 1, 1, 1, 1, 1})) == 96);
  CHECK(racah_alternating_sum(SpinSextet::from_ints({1, 1, 1, 0, 1, 1})) == -24);
  CHECK(racah_alternating_sum(SpinSextet::from_ints({0, 0, 0, 0, 0, 0})) == 1);
  CHECK_THROWS_AS(racah_alternating_sum(SpinSextet::from_doubled({1, 1, 4, 2, 2, 2})), DomainError);
}

TEST_CASE("exact values") {
  const ExactSixJ a = sixj_exact(SpinSextet::from_ints({1, 1, 1, 1, 1, 1}));
  CHECK(a.sum_part == 96);
  for (const auto& t : a.tri) CHECK(t == BigRational(1, 24));
  CHECK(a.squared() == BigRational(1, 36));
  CHECK(a.sign() == 1);
  CHECK(a.radical_form().coefficient == BigRational(1, 6));
  CHECK(a.radical_form().radicand == 1);
  CHECK(a.radical_form().to_string() == "1/6 · √1");

  const ExactSixJ b = sixj_exact(SpinSextet::from_ints({1, 1, 1, 0, 1, 1}));
  CHECK(b.sum_part == -24);
  CHECK(b.radicand() == BigRational(1, 72 * 72));
  CHECK(b.radical_form().coefficient == BigRational(-1, 3));
  CHECK(b.to_double() == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

  const ExactSixJ c = sixj_exact(SpinSextet::from_ints({0, 0, 0, 0, 0, 0}));
  CHECK(c.squared() == 1);
  CHECK(c.sign() == 1);
}

TEST_CASE("inadmissible sextets are exactly zero") {
  const ExactSixJ z = sixj_exact(SpinSextet::from_doubled({1, 1, 4, 2, 2, 2}));
  CHECK(z.is_zero());
  CHECK(z.squared() == 0);
  CHECK(z.to_double() == 0.0);
  for (const auto& t : z.tri) CHECK(t == 0);
  CHECK(sixj_decimal(z, 8) == "0");
}

TEST_CASE("decimal rendering") {
  const ExactSixJ a = sixj_exact(SpinSextet::from_ints({1, 1, 1, 1, 1, 1}));
  const ExactSixJ b = sixj_exact(SpinSextet::from_ints({1, 1, 1, 0, 1, 1}));
  const ExactSixJ c = sixj_exact(SpinSextet::from_ints({0, 0, 0, 0, 0, 0}));
  CHECK(sixj_decimal(a, 6) == "0.166667");
  CHECK(sixj_decimal(a, 8) == "0.16666667");
  CHECK(sixj_decimal(a, 1) == "0.2");
  CHECK(sixj_decimal(b, 4) == "-0.3333");
  CHECK(sixj_decimal(c, 3) == "1.000");
  CHECK_THROWS_AS(sixj_decimal(a, 0), DomainError);
}

TEST_CASE("agreement with the plain big-integer evaluation") {
  oracle::Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    const SpinSextet s = oracle::random_admissible(rng, 16);
    const ExactSixJ x = sixj_exact(s);
    const oracle::NaiveSixJ n = oracle::naive_racah(s);
    CHECK(x.sum_part == n.sum);
    CHECK(x.squared() == n.squared());
    CHECK(x.sign() == n.sign());
  }
}

TEST_CASE("agreement with the 3j contraction for small spins") {
  CHECK(oracle::wigner_3j(2, 2, 0, 0, 0, 0) == doctest::Approx(-1.0 / std::sqrt(3.0)));
  CHECK(oracle::wigner_3j(1, 1, 2, 1, -1, 0) == doctest::Approx(1.0 / std::sqrt(6.0)));
  CHECK(oracle::sixj_by_3j(SpinSextet::from_ints({1, 1, 1, 1, 1, 1})) == doctest::Approx(1.0 / 6.0));
  CHECK(oracle::sixj_by_3j(SpinSextet::from_ints({1, 1, 1, 0, 1, 1})) == doctest::Approx(-1.0 / 3.0));

  oracle::Rng rng(7);
  for (int i = 0; i < 150; ++i) {
    const SpinSextet s = oracle::random_admissible(rng, 6);
    const double expect = oracle::sixj_by_3j(s);
    CHECK(std::abs(sixj_exact(s).to_double() - expect) <= 1e-10);
  }
}

TEST_CASE("30-digit decimals agree with a floating evaluation to 12 digits") {
  oracle::Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const SpinSextet s = oracle::random_admissible(rng, 20);
    const double dec = std::strtod(sixj_decimal(sixj_exact(s), 30).c_str(), nullptr);
    const double flt = static_cast<double>(oracle::float_racah(s));
    INFO(s.to_string());
    CHECK(std::abs(dec - flt) <= 1e-12);
  }
}

TEST_CASE("the 24 tetrahedral symmetries") {
  oracle::Rng rng(31337);
  for (int i = 0; i < 200; ++i) {
    const SpinSextet s = oracle::random_admissible(rng, 10);
    const ExactSixJ base = sixj_exact(s);
    for (const SpinSextet& img : tetrahedral_images(s)) {
      const ExactSixJ x = sixj_exact(img);
      CHECK(x.squared() == base.squared());
      CHECK(x.sign() == base.sign());
    }
  }
}

TEST_CASE("radical form is exact and has a squarefree radicand") {
  oracle::Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const SpinSextet s = oracle::random_admissible(rng, 14);
    const ExactSixJ x = sixj_exact(s);
    const Surd r = x.radical_form();
    CHECK(r.radicand.get_den() == 1);
    CHECK(squarefree(r.radicand.get_num()));
    CHECK(r.coefficient * r.coefficient * r.radicand == x.squared());
    CHECK(sgn(r.coefficient) == x.sign());
  }
}

TEST_CASE("orthogonality, exhaustively for doubled spins up to 6") {
  int checked = 0;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c)
        for (int d = 0; d <= 6; ++d)
          for (int p = 0; p <= 6; ++p)
            for (int q = 0; q <= 6; ++q) {
              const bool p_ok = is_admissible_triple(h(c), h(b), h(p)) &&
                                is_admissible_triple(h(a), h(d), h(p));
              const bool q_ok = is_admissible_triple(h(c), h(b), h(q)) &&
                                is_admissible_triple(h(a), h(d), h(q));
              if (!p_ok || !q_ok) continue;
              const Surd s = orthogonality_sum(h(a), h(b), h(c), h(d), h(p), h(q));
              if (p == q) {
                CHECK(s.radicand == 1);
                CHECK(s.coefficient == BigRational(1, p + 1));
              } else {
                CHECK(s.coefficient == 0);
              }
              ++checked;
            }
  CHECK(checked > 1000);
}

TEST_CASE("large arguments stay exact") {
  const ExactSixJ x = sixj_exact(SpinSextet::from_ints({150, 150, 150, 150, 150, 150}));
  CHECK_FALSE(x.is_zero());
  CHECK(std::abs(x.to_double()) < 1e-3);
  const ExactSixJ y = sixj_exact(tetrahedral_images(SpinSextet::from_ints({150, 150, 150, 150, 150, 150}))[7]);
  CHECK(x.squared() == y.squared());
}
