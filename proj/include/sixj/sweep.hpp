#pragma once

#include "sixj/spins.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sixj {

struct SweepConfig {
  SpinSextet sextet;
  std::vector<std::int64_t> k_values;  // strictly increasing, positive
  std::string output_path;
  int digits = 8;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ConvergenceRow {
  std::int64_t k = 0;
  double exact = 0.0;
  double pr = 0.0;
  double amplitude = 0.0;
  double abs_err = 0.0;
  double env_rel_err = 0.0;
  double phase = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;

  /// Median env_rel_err over the rows with the larger half of the k values
  /// (the upper ceil(n/2) rows). Zero for an empty report.
  double median_top_half() const;
  /// Median env_rel_err over rows with k_lo <= k <= k_hi. NaN when no row
  /// falls in the window.
  double median_in(std::int64_t k_lo, std::int64_t k_hi) const;
};

/// Throws DomainError unless ks is non-empty, positive and strictly increasing.
void validate_k_values(std::span<const std::int64_t> ks);

/// k_min, k_min + step, ... up to k_max inclusive.
std::vector<std::int64_t> k_range(std::int64_t k_min, std::int64_t k_max, std::int64_t step);
/// k_min, 2 k_min, 4 k_min, ... up to k_max inclusive.
std::vector<std::int64_t> k_doubling(std::int64_t k_min, std::int64_t k_max);

/// Exact and asymptotic values at every k. Points are evaluated on up to
/// `threads` workers; rows come back in k order and do not depend on the
/// thread count. Throws DegenerateError / MinkowskianError for non-Euclidean
/// sextets and DomainError for inadmissible ones or bad k lists.
ConvergenceReport run_sweep(const SpinSextet& s, std::span<const std::int64_t> ks,
                            unsigned threads = 0);
ConvergenceReport run_sweep(const SweepConfig& config);

inline constexpr const char* kCsvHeader = "k,exact,pr,amplitude,abs_err,env_rel_err,phase";

/// "%.17e" in the C locale.
std::string format_csv_number(double x);
void write_csv(const ConvergenceReport& report, std::ostream& out);
/// Writes to config.output_path; throws DomainError if the file cannot be opened.
void write_csv(const ConvergenceReport& report, const std::string& path);

double median(std::vector<double> values);
/// Ordinary least-squares slope of y against x. Throws DomainError for
/// fewer than two points or constant x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

struct DecayFit {
  double predicted = 0.0;          // decay_rate(s).rate
  double raw_slope = 0.0;          // slope of ln|exact(k s)| against k
  double compensated_slope = 0.0;  // slope of ln(k^{3/2} |exact(k s)|) against k
  std::vector<std::int64_t> ks;    // k values used (zero symbols dropped)
};

/// Requires a Minkowskian sextet (DomainError otherwise) and at least four
/// k values with a nonzero symbol (DomainError otherwise).
DecayFit fit_decay(const SpinSextet& s, std::span<const std::int64_t> ks);

} // namespace sixj
