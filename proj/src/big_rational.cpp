#include "sixj/big_rational.hpp"

#include "sixj/errors.hpp"

#include <cmath>

namespace sixj {

double Surd::to_double() const { return coefficient.get_d() * std::sqrt(radicand.get_d()); }

std::string Surd::to_string() const {
  std::string out = coefficient.get_str() + " · √";
  if (radicand.get_den() == 1) return out + radicand.get_str();
  return out + "(" + radicand.get_str() + ")";
}

Surd sqrt_surd(const BigRational& r) {
  if (sgn(r) < 0) throw DomainError("square root of a negative rational");
  if (sgn(r) == 0) return {BigRational(0), BigRational(1)};
  // sqrt(n/d) = sqrt(n*d) / d.
  BigInt rest = r.get_num() * r.get_den();
  BigInt outside = 1;
  BigInt inside = 1;
  BigInt p = 2;
  const BigInt trial_limit = 1000000;
  while (rest > 1 && p <= trial_limit && p * p <= rest) {
    const auto e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (e > 0) {
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), e / 2);
      outside *= pw;
      if (e % 2 == 1) inside *= p;
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  inside *= rest;
  return {make_rational(outside, r.get_den()), BigRational(inside)};
}

} // namespace sixj
