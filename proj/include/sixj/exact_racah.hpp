#pragma once

#include "sixj/big_rational.hpp"
#include "sixj/factorial.hpp"
#include "sixj/spins.hpp"

#include <array>
#include <string>

namespace sixj {

/// Exact value of a 6j symbol, with the square root left unevaluated:
///   value = sum_part * sqrt(tri[0] * tri[1] * tri[2] * tri[3]).
/// tri[i] is the triangle coefficient of the i-th vertex triad (kTriadEdges).
/// The inadmissible (zero) symbol has sum_part = 0 and all tri = 0.
struct ExactSixJ {
  BigRational sum_part;
  std::array<BigRational, 4> tri;

  BigRational radicand() const;
  /// value^2 as an exact rational.
  BigRational squared() const;
  int sign() const { return sgn(sum_part); }
  bool is_zero() const { return sgn(sum_part) == 0; }

  /// sign * sqrt(squared), rounded once from the exact square.
  double to_double() const;

  /// value = c * sqrt(m) with c rational and m a squarefree integer.
  Surd radical_form() const;
};

/// Delta(a,b,c) = (a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!.
/// Throws DomainError when the triple is not admissible.
BigRational triangle_coefficient(HalfInt a, HalfInt b, HalfInt c);
PrimeExponents triangle_exponents(HalfInt a, HalfInt b, HalfInt c);

/// sum_t (-1)^t (t+1)! / (prod_i (t-v_i)! prod_j (p_j-t)!) for t from max v
/// to min p; exactly zero for an empty range. Every summand is an integer,
/// and the prime factors common to all summands are pulled out before any
/// big-integer product is formed. Throws DomainError on inadmissible input.
BigRational racah_alternating_sum(const SpinSextet& s);

/// Never throws on inadmissible input; returns the zero symbol instead.
ExactSixJ sixj_exact(const SpinSextet& s);

/// Fixed-point rendering with `digits` decimals, rounded half-up from the
/// exact square root (integer square root of the scaled radicand). The zero
/// symbol renders as "0". Throws DomainError when digits < 1.
std::string sixj_decimal(const ExactSixJ& x, int digits);

/// sum_x (2x+1) {a b x; c d p} {a b x; c d q}.
/// The x-dependent triangle coefficients appear squared, so the result is a
/// rational multiple of sqrt(Delta(c,b,p) Delta(a,d,p) Delta(c,b,q) Delta(a,d,q)).
/// For p == q the radical is rational and is folded into the coefficient
/// (radicand 1). The expected value is delta_pq / (2p+1).
Surd orthogonality_sum(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt p, HalfInt q);

} // namespace sixj
