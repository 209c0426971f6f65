#include "sixj/sweep.hpp"

#include "sixj/errors.hpp"
#include "sixj/exact_racah.hpp"
#include "sixj/pr_asymptotics.hpp"
#include "sixj/tetra_geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <ostream>
#include <thread>

namespace sixj {

namespace {

double median_of(const std::vector<ConvergenceRow>& rows, std::size_t first, std::size_t last) {
  std::vector<double> errs;
  for (std::size_t i = first; i < last; ++i) errs.push_back(rows[i].env_rel_err);
  return median(std::move(errs));
}

ConvergenceRow evaluate_point(const SpinSextet& s, std::int64_t k) {
  ConvergenceRow row;
  row.k = k;
  row.exact = sixj_exact(s.scaled(k)).to_double();
  const AsymptoticEstimate pr = ponzano_regge(s, k);
  row.pr = pr.value;
  row.amplitude = pr.amplitude;
  row.phase = pr.phase;
  row.abs_err = std::abs(row.exact - row.pr);
  row.env_rel_err = row.abs_err / row.amplitude;
  return row;
}

} // namespace

double ConvergenceReport::median_top_half() const {
  if (rows.empty()) return 0.0;
  return median_of(rows, rows.size() / 2, rows.size());
}

double ConvergenceReport::median_in(std::int64_t k_lo, std::int64_t k_hi) const {
  std::vector<double> errs;
  for (const auto& r : rows) {
    if (r.k >= k_lo && r.k <= k_hi) errs.push_back(r.env_rel_err);
  }
  if (errs.empty()) return std::numeric_limits<double>::quiet_NaN();
  return median(std::move(errs));
}

void validate_k_values(std::span<const std::int64_t> ks) {
  if (ks.empty()) throw DomainError("no k values");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1) throw DomainError("k values must be positive");
    if (i > 0 && ks[i] <= ks[i - 1]) throw DomainError("k values must be strictly increasing");
  }
}

std::vector<std::int64_t> k_range(std::int64_t k_min, std::int64_t k_max, std::int64_t step) {
  if (step < 1) throw DomainError("k step must be positive");
  if (k_min < 1) throw DomainError("k values must be positive");
  if (k_max < k_min) throw DomainError("empty k range");
  std::vector<std::int64_t> out;
  for (std::int64_t k = k_min; k <= k_max; k += step) out.push_back(k);
  return out;
}

std::vector<std::int64_t> k_doubling(std::int64_t k_min, std::int64_t k_max) {
  if (k_min < 1) throw DomainError("k values must be positive");
  if (k_max < k_min) throw DomainError("empty k range");
  std::vector<std::int64_t> out;
  for (std::int64_t k = k_min; k <= k_max; k *= 2) out.push_back(k);
  return out;
}

ConvergenceReport run_sweep(const SpinSextet& s, std::span<const std::int64_t> ks,
                            unsigned threads) {
  validate_k_values(ks);
  switch (classify(s)) {
  case TetraKind::Euclidean: break;
  case TetraKind::Degenerate:
    throw DegenerateError("zero volume: " + s.to_string() + " has no oscillatory asymptotics");
  case TetraKind::Minkowskian:
    throw MinkowskianError(s.to_string() + " is Minkowskian; use the decay command");
  }

  ConvergenceReport report;
  report.rows.resize(ks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, ks.size()));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < ks.size(); i = next++) {
        report.rows[i] = evaluate_point(s, ks[i]);
      }
    } catch (...) {
      failures[id] = std::current_exception();
      next = ks.size();
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return report;
}

ConvergenceReport run_sweep(const SweepConfig& config) {
  return run_sweep(config.sextet, config.k_values, config.threads);
}

std::string format_csv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17e", x);
  std::string out(buf);
  for (char& c : out) {
    if (c == ',') c = '.';
  }
  return out;
}

void write_csv(const ConvergenceReport& report, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : report.rows) {
    out << r.k << ',' << format_csv_number(r.exact) << ',' << format_csv_number(r.pr) << ','
        << format_csv_number(r.amplitude) << ',' << format_csv_number(r.abs_err) << ','
        << format_csv_number(r.env_rel_err) << ',' << format_csv_number(r.phase) << '\n';
  }
}

void write_csv(const ConvergenceReport& report, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw DomainError("cannot open " + path + " for writing");
  file.imbue(std::locale::classic());
  write_csv(report, file);
  if (!file) throw DomainError("failed writing " + path);
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("slope fit: size mismatch");
  if (x.size() < 2) throw DomainError("slope fit needs at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw DomainError("slope fit: all x values coincide");
  return sxy / sxx;
}

DecayFit fit_decay(const SpinSextet& s, std::span<const std::int64_t> ks) {
  validate_k_values(ks);
  DecayFit fit;
  fit.predicted = decay_rate(s).rate;
  std::vector<double> x, raw, compensated;
  for (std::int64_t k : ks) {
    const double value = sixj_exact(s.scaled(k)).to_double();
    if (value == 0.0) continue;
    const double kd = static_cast<double>(k);
    fit.ks.push_back(k);
    x.push_back(kd);
    raw.push_back(std::log(std::abs(value)));
    compensated.push_back(std::log(std::abs(value)) + 1.5 * std::log(kd));
  }
  if (x.size() < 4) {
    throw DomainError("decay fit needs at least 4 k values with a nonzero symbol, got " +
                      std::to_string(x.size()));
  }
  fit.raw_slope = least_squares_slope(x, raw);
  fit.compensated_slope = least_squares_slope(x, compensated);
  return fit;
}

} // namespace sixj
