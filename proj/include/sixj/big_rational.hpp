#pragma once

#include <gmpxx.h>

#include <string>

namespace sixj {

using BigInt = mpz_class;
/// Always kept canonical: gcd(num, den) = 1 and den > 0.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline int sign(const BigRational& q) { return sgn(q); }
inline int sign(const BigInt& z) { return sgn(z); }

/// coefficient * sqrt(radicand), radicand >= 0.
struct Surd {
  BigRational coefficient;
  BigRational radicand;

  double to_double() const;
  /// "1/6 · √1", "-5/12 · √(7/3)".
  std::string to_string() const;
};

/// sqrt(r) as c * sqrt(m) with m a positive integer that has no square
/// factor below 10^6 (squarefree whenever all prime factors are that small,
/// which holds for products of factorials of moderate size). Throws
/// DomainError for r < 0.
Surd sqrt_surd(const BigRational& r);

} // namespace sixj
