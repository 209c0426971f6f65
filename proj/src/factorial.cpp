#include "sixj/factorial.hpp"

#include "sixj/errors.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace sixj {

namespace {

std::vector<std::uint64_t> sieve(std::int64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(static_cast<std::uint64_t>(i));
    for (std::int64_t m = i * i; m <= n; m += i) composite[static_cast<std::size_t>(m)] = true;
  }
  return primes;
}

std::shared_ptr<const FactoredFactorial> compute_factorial(std::int64_t n) {
  auto out = std::make_shared<FactoredFactorial>();
  out->n = n;
  for (std::uint64_t p : sieve(n)) {
    // Legendre: sum of floor(n / p^i).
    std::int64_t e = 0;
    for (std::uint64_t q = p; q <= static_cast<std::uint64_t>(n); q *= p) {
      e += static_cast<std::int64_t>(static_cast<std::uint64_t>(n) / q);
      if (q > static_cast<std::uint64_t>(n) / p) break;
    }
    out->factors.push_back({p, e});
  }
  return out;
}

struct FactorialCache {
  std::shared_mutex mutex;
  std::unordered_map<std::int64_t, std::shared_ptr<const FactoredFactorial>> entries;
};

FactorialCache& cache() {
  static FactorialCache instance;
  return instance;
}

BigInt product_range(std::vector<BigInt>& terms, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return terms[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return product_range(terms, lo, mid) * product_range(terms, mid, hi);
}

} // namespace

BigInt FactoredFactorial::value() const { return multiply_out(factors); }

std::map<std::uint64_t, std::uint64_t> FactoredFactorial::as_map() const {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& pp : factors) out[pp.prime] = static_cast<std::uint64_t>(pp.exponent);
  return out;
}

std::shared_ptr<const FactoredFactorial> factorial_factored(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    if (auto it = c.entries.find(n); it != c.entries.end()) return it->second;
  }
  // Computed outside the lock; concurrent computations of the same n produce
  // identical values, so whichever insert lands last is fine.
  auto fresh = compute_factorial(n);
  std::unique_lock lock(c.mutex);
  c.entries[n] = fresh;
  return fresh;
}

std::size_t factorial_cache_size() {
  auto& c = cache();
  std::shared_lock lock(c.mutex);
  return c.entries.size();
}

BigInt multiply_out(const std::vector<PrimePower>& powers) {
  std::vector<BigInt> terms;
  terms.reserve(powers.size());
  for (const auto& pp : powers) {
    if (pp.exponent < 0) throw InternalError("multiply_out: negative exponent");
    if (pp.exponent == 0) continue;
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), pp.prime, static_cast<unsigned long>(pp.exponent));
    terms.push_back(std::move(t));
  }
  if (terms.empty()) return BigInt(1);
  return product_range(terms, 0, terms.size());
}

void PrimeExponents::widen_to(const std::vector<PrimePower>& primes) {
  for (std::size_t i = powers_.size(); i < primes.size(); ++i) {
    powers_.push_back({primes[i].prime, 0});
  }
}

void PrimeExponents::accumulate(std::int64_t n, int sign) {
  const auto f = factorial_factored(n);
  widen_to(f->factors);
  for (std::size_t i = 0; i < f->factors.size(); ++i) {
    powers_[i].exponent += sign * f->factors[i].exponent;
  }
}

PrimeExponents& PrimeExponents::operator+=(const PrimeExponents& other) {
  widen_to(other.powers_);
  for (std::size_t i = 0; i < other.powers_.size(); ++i) {
    powers_[i].exponent += other.powers_[i].exponent;
  }
  return *this;
}

bool PrimeExponents::is_integral() const {
  return std::ranges::all_of(powers_, [](const PrimePower& pp) { return pp.exponent >= 0; });
}

BigInt PrimeExponents::to_integer() const {
  if (!is_integral()) throw InternalError("prime exponent vector is not an integer");
  return multiply_out(powers_);
}

BigRational PrimeExponents::to_rational() const {
  std::vector<PrimePower> num, den;
  for (const auto& pp : powers_) {
    if (pp.exponent > 0) num.push_back(pp);
    if (pp.exponent < 0) den.push_back({pp.prime, -pp.exponent});
  }
  // Disjoint prime supports, so the fraction is already in lowest terms.
  BigRational q(multiply_out(num), multiply_out(den));
  return q;
}

PrimeExponents PrimeExponents::min(const PrimeExponents& a, const PrimeExponents& b) {
  const PrimeExponents& longer = a.size() >= b.size() ? a : b;
  PrimeExponents out;
  out.powers_.reserve(longer.size());
  for (std::size_t i = 0; i < longer.size(); ++i) {
    const std::int64_t ea = i < a.size() ? a.powers_[i].exponent : 0;
    const std::int64_t eb = i < b.size() ? b.powers_[i].exponent : 0;
    out.powers_.push_back({longer.powers_[i].prime, std::min(ea, eb)});
  }
  return out;
}

PrimeExponents PrimeExponents::minus(const PrimeExponents& other) const {
  PrimeExponents out = *this;
  out.widen_to(other.powers_);
  for (std::size_t i = 0; i < other.powers_.size(); ++i) {
    out.powers_[i].exponent -= other.powers_[i].exponent;
  }
  return out;
}

} // namespace sixj
