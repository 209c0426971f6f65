#include "sixj/exact_racah.hpp"

#include "sixj/errors.hpp"

#include <cmath>
#include <vector>

namespace sixj {

BigRational ExactSixJ::radicand() const { return tri[0] * tri[1] * tri[2] * tri[3]; }

BigRational ExactSixJ::squared() const { return sum_part * sum_part * radicand(); }

double ExactSixJ::to_double() const {
  if (is_zero()) return 0.0;
  const double magnitude = std::sqrt(squared().get_d());
  return sign() < 0 ? -magnitude : magnitude;
}

Surd ExactSixJ::radical_form() const {
  if (is_zero()) return {BigRational(0), BigRational(1)};
  Surd root = sqrt_surd(radicand());
  root.coefficient *= sum_part;
  return root;
}

PrimeExponents triangle_exponents(HalfInt a, HalfInt b, HalfInt c) {
  if (!is_admissible_triple(a, b, c)) {
    throw DomainError("inadmissible triad (" + a.to_string() + ", " + b.to_string() + ", " +
                      c.to_string() + ")");
  }
  const std::int64_t x = a.doubled(), y = b.doubled(), z = c.doubled();
  PrimeExponents e;
  e.add_factorial((x + y - z) / 2);
  e.add_factorial((x - y + z) / 2);
  e.add_factorial((-x + y + z) / 2);
  e.sub_factorial((x + y + z) / 2 + 1);
  return e;
}

BigRational triangle_coefficient(HalfInt a, HalfInt b, HalfInt c) {
  return triangle_exponents(a, b, c).to_rational();
}

BigRational racah_alternating_sum(const SpinSextet& s) {
  const TriadSums ts = triad_sums(s);
  const std::int64_t t_min = ts.max_v();
  const std::int64_t t_max = ts.min_p();
  if (t_min > t_max) return BigRational(0);

  std::vector<PrimeExponents> terms;
  terms.reserve(static_cast<std::size_t>(t_max - t_min + 1));
  for (std::int64_t t = t_min; t <= t_max; ++t) {
    PrimeExponents e;
    e.add_factorial(t + 1);
    for (std::int64_t v : ts.v) e.sub_factorial(t - v);
    for (std::int64_t p : ts.p) e.sub_factorial(p - t);
    terms.push_back(std::move(e));
  }

  PrimeExponents common = terms.front();
  for (const auto& e : terms) common = PrimeExponents::min(common, e);

  BigInt sum = 0;
  std::int64_t t = t_min;
  for (const auto& e : terms) {
    const BigInt magnitude = e.minus(common).to_integer();
    if (t % 2 == 0) {
      sum += magnitude;
    } else {
      sum -= magnitude;
    }
    ++t;
  }
  return BigRational(sum * common.to_integer());
}

ExactSixJ sixj_exact(const SpinSextet& s) {
  ExactSixJ out{BigRational(0), {BigRational(0), BigRational(0), BigRational(0), BigRational(0)}};
  if (!is_admissible(s)) return out;
  out.sum_part = racah_alternating_sum(s);
  const auto triads = s.triads();
  for (std::size_t i = 0; i < 4; ++i) {
    out.tri[i] = triangle_coefficient(triads[i][0], triads[i][1], triads[i][2]);
  }
  return out;
}

std::string sixj_decimal(const ExactSixJ& x, int digits) {
  if (digits < 1) throw DomainError("digits must be at least 1");
  if (x.is_zero()) return "0";

  // floor(sqrt(R) * 10^(digits+1)), then round half-up on the extra digit.
  const BigRational r = x.squared();
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 2 * static_cast<unsigned long>(digits + 1));
  BigInt scaled = r.get_num() * scale;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), r.get_den().get_mpz_t());
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  BigInt rounded = (root + 5) / 10;

  std::string text = rounded.get_str();
  const auto width = static_cast<std::size_t>(digits);
  if (text.size() <= width) text.insert(0, width + 1 - text.size(), '0');
  text.insert(text.size() - width, ".");
  if (x.sign() < 0 && rounded != 0) text.insert(0, "-");
  return text;
}

Surd orthogonality_sum(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt p, HalfInt q) {
  const bool p_ok = is_admissible_triple(c, b, p) && is_admissible_triple(a, d, p);
  const bool q_ok = is_admissible_triple(c, b, q) && is_admissible_triple(a, d, q);
  if (!p_ok || !q_ok) return {BigRational(0), BigRational(0)};

  const std::int64_t lo = std::max(std::abs(a.doubled() - b.doubled()),
                                   std::abs(c.doubled() - d.doubled()));
  const std::int64_t hi = std::min(a.doubled() + b.doubled(), c.doubled() + d.doubled());

  BigRational bracket = 0;
  for (std::int64_t x2 = lo; x2 <= hi; x2 += 2) {
    const HalfInt x = HalfInt::from_doubled(x2);
    SpinSextet sp;
    sp.spins = {a, b, x, c, d, p};
    SpinSextet sq = sp;
    sq[Edge::J3] = q;
    if (!is_admissible(sp) || !is_admissible(sq)) continue;
    const ExactSixJ wp = sixj_exact(sp);
    const ExactSixJ wq = sixj_exact(sq);
    // tri[0] = Delta(a,b,x) and tri[2] = Delta(c,d,x) are shared by both symbols.
    bracket += BigRational(x2 + 1) * wp.sum_part * wq.sum_part * wp.tri[0] * wp.tri[2];
  }

  const BigRational tp = triangle_coefficient(c, b, p) * triangle_coefficient(a, d, p);
  if (p == q) return {bracket * tp, BigRational(1)};
  const BigRational tq = triangle_coefficient(c, b, q) * triangle_coefficient(a, d, q);
  return {bracket, tp * tq};
}

} // namespace sixj
