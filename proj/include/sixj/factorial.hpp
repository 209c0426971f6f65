#pragma once

#include "sixj/big_rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace sixj {

struct PrimePower {
  std::uint64_t prime = 0;
  std::int64_t exponent = 0;
};

/// Prime factorization of n!. `factors` lists every prime <= n in ascending
/// order, so the factor list of m! is a prefix of that of n! for m <= n.
struct FactoredFactorial {
  std::int64_t n = 0;
  std::vector<PrimePower> factors;

  BigInt value() const;
  std::map<std::uint64_t, std::uint64_t> as_map() const;
};

/// Cached; safe to call from several threads. Throws DomainError for n < 0.
std::shared_ptr<const FactoredFactorial> factorial_factored(std::int64_t n);

/// Number of distinct factorials currently cached.
std::size_t factorial_cache_size();

/// A product of factorials and inverse factorials, kept as one signed
/// exponent per prime so that ratios cancel before anything is multiplied
/// out.
class PrimeExponents {
public:
  void add_factorial(std::int64_t n) { accumulate(n, +1); }
  void sub_factorial(std::int64_t n) { accumulate(n, -1); }
  PrimeExponents& operator+=(const PrimeExponents& other);

  std::size_t size() const { return powers_.size(); }
  const std::vector<PrimePower>& powers() const { return powers_; }

  bool is_integral() const;
  /// Throws InternalError when any exponent is negative.
  BigInt to_integer() const;
  BigRational to_rational() const;

  /// Elementwise minimum; missing trailing primes count as exponent 0.
  static PrimeExponents min(const PrimeExponents& a, const PrimeExponents& b);
  /// this - other.
  PrimeExponents minus(const PrimeExponents& other) const;

private:
  void accumulate(std::int64_t n, int sign);
  void widen_to(const std::vector<PrimePower>& primes);

  std::vector<PrimePower> powers_;
};

/// Product of p^e over the given powers (all e >= 0), via a balanced product tree.
BigInt multiply_out(const std::vector<PrimePower>& powers);

} // namespace sixj
