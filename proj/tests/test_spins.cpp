#include "oracles.hpp"

#include "sixj/errors.hpp"
#include "sixj/spins.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace sixj;

TEST_CASE("parse_spin accepts integers, halves and .5 decimals") {
  CHECK(parse_spin("3/2").doubled() == 3);
  CHECK(parse_spin("2").doubled() == 4);
  CHECK(parse_spin("0").doubled() == 0);
  CHECK(parse_spin("4/2").doubled() == 4);
  CHECK(parse_spin("7/1").doubled() == 14);
  CHECK(parse_spin("2.5").doubled() == 5);
  CHECK(parse_spin("3.0").doubled() == 6);
}

TEST_CASE("parse_spin rejects bad input") {
  CHECK_THROWS_AS(parse_spin("1.25"), DomainError);
  CHECK_THROWS_AS(parse_spin("-1"), DomainError);
  CHECK_THROWS_AS(parse_spin("1/3"), DomainError);
  CHECK_THROWS_AS(parse_spin(""), ParseError);
  CHECK_THROWS_AS(parse_spin("x"), ParseError);
  CHECK_THROWS_AS(parse_spin("1/"), ParseError);
  CHECK_THROWS_AS(parse_spin("2.5.1"), ParseError);
}

TEST_CASE("HalfInt integrality follows the parity of the doubled value") {
  for (int d = 0; d < 20; ++d) {
    const HalfInt h = HalfInt::from_doubled(d);
    CHECK(h.is_integer() == (d % 2 == 0));
    CHECK(h.to_double() == doctest::Approx(d / 2.0));
    CHECK(parse_spin(h.to_string()) == h);
  }
  CHECK(HalfInt::from_doubled(3).to_string() == "3/2");
  CHECK(HalfInt::from_doubled(4).to_string() == "2");
}

TEST_CASE("admissible triples") {
  const auto h = [](int d) { return HalfInt::from_doubled(d); };
  CHECK(is_admissible_triple(h(2), h(2), h(2)));
  CHECK_FALSE(is_admissible_triple(h(1), h(1), h(4)));
  CHECK_FALSE(is_admissible_triple(h(1), h(1), h(1)));
  CHECK(is_admissible_triple(h(0), h(0), h(0)));
}

TEST_CASE("triad sums") {
  auto ts = triad_sums(SpinSextet::from_ints({1, 1, 1, 1, 1, 1}));
  CHECK(ts.v == std::array<std::int64_t, 4>{3, 3, 3, 3});
  CHECK(ts.p == std::array<std::int64_t, 3>{4, 4, 4});

  ts = triad_sums(SpinSextet::from_ints({1, 1, 1, 0, 1, 1}));
  CHECK(ts.v == std::array<std::int64_t, 4>{3, 2, 2, 3});
  CHECK(ts.p == std::array<std::int64_t, 3>{4, 3, 3});

  ts = triad_sums(SpinSextet::from_ints({3, 5, 4, 3, 5, 4}));
  CHECK(ts.v == std::array<std::int64_t, 4>{12, 12, 12, 12});
  CHECK(ts.p == std::array<std::int64_t, 3>{18, 14, 16});

  CHECK_THROWS_AS(triad_sums(SpinSextet::from_doubled({1, 1, 4, 2, 2, 2})), DomainError);
}

TEST_CASE("sum v = sum p and max v <= min p for admissible sextets") {
  oracle::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const SpinSextet s = oracle::random_admissible(rng, 24);
    const TriadSums ts = triad_sums(s);
    std::int64_t sv = 0, sp = 0;
    for (auto v : ts.v) sv += v;
    for (auto p : ts.p) sp += p;
    CHECK(sv == sp);
    CHECK(ts.max_v() <= ts.min_p());
  }
}

TEST_CASE("triad and pair-sum membership tables are consistent") {
  for (Edge e : kEdges) {
    for (std::size_t t : triads_containing(e)) {
      CHECK(std::ranges::find(kTriadEdges[t], e) != kTriadEdges[t].end());
    }
    for (std::size_t p : pair_sums_containing(e)) {
      CHECK(std::ranges::find(kPairSumEdges[p], e) != kPairSumEdges[p].end());
    }
  }
}

TEST_CASE("24 tetrahedral images are distinct for a generic sextet and preserve admissibility") {
  const SpinSextet s = SpinSextet::from_doubled({2, 4, 6, 8, 10, 12});
  const auto images = tetrahedral_images(s);
  std::set<std::string> seen;
  for (const auto& img : images) seen.insert(img.to_string());
  CHECK(seen.size() == 24);
  CHECK(images[0] == s);

  oracle::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const SpinSextet a = oracle::random_admissible(rng, 12);
    for (const auto& img : tetrahedral_images(a)) CHECK(is_admissible(img));
  }
}

TEST_CASE("parse_sextet and formatting") {
  const std::vector<std::string> texts{"1", "1/2", "3/2", "2.5", "0", "2"};
  const SpinSextet s = parse_sextet(texts);
  CHECK(s.to_string() == "{1 1/2 3/2; 5/2 0 2}");
  CHECK(s.scaled(2).to_string() == "{2 1 3; 5 0 4}");
  const std::vector<std::string> five{"1", "1", "1", "1", "1"};
  CHECK_THROWS_AS(parse_sextet(five), ParseError);
}
