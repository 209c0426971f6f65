#include "sixj/cli.hpp"

#include "sixj/errors.hpp"
#include "sixj/exact_racah.hpp"
#include "sixj/identities.hpp"
#include "sixj/pr_asymptotics.hpp"
#include "sixj/sweep.hpp"
#include "sixj/tetra_geometry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace sixj {

namespace {

struct Options {
  int digits = 8;
  std::string output;
  std::vector<std::string> spins;

  std::vector<std::int64_t> ks;
  std::int64_t k_min = 0;
  std::int64_t k_max = 0;
  std::int64_t k_step = 1;
  bool doubling = false;
  unsigned threads = 0;

  std::vector<std::string> positional;
};

std::int64_t parse_integer(const std::string& text, std::string_view what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed " + std::string(what) + " '" + text + "'");
  }
  return value;
}

double parse_real(const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError("malformed number '" + text + "'");
  }
  return value;
}

void require_digits(int digits) {
  if (digits < 1) throw DomainError("--digits must be at least 1");
}

std::string fixed(double x, int digits) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", std::min(digits, 17), x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10e", x);
  return buf;
}

void line(std::ostream& out, std::string_view key, const std::string& value) {
  std::string k(key);
  k.resize(std::max<std::size_t>(k.size() + 1, 20), ' ');
  out << k << value << '\n';
}

/// c * sqrt(m) as "√2/6", "3·√5", "7/2".
std::string render_surd(const Surd& s) {
  if (s.radicand == 1) return to_string(s.coefficient);
  const BigInt num = s.coefficient.get_num();
  const BigInt den = s.coefficient.get_den();
  std::string out;
  if (num == -1) {
    out = "-";
  } else if (num != 1) {
    out = num.get_str() + "·";
  }
  out += "√" + to_string(s.radicand);
  if (den != 1) out += "/" + den.get_str();
  return out;
}

SpinSextet sextet_from(const Options& o) { return parse_sextet(o.spins); }

int cmd_exact(const Options& o, std::ostream& out) {
  require_digits(o.digits);
  const SpinSextet s = sextet_from(o);
  const ExactSixJ x = sixj_exact(s);
  line(out, "symbol", s.to_string());
  if (x.is_zero()) {
    line(out, "admissible", is_admissible(s) ? "yes" : "no");
    line(out, "value", "0");
    line(out, "decimal", sixj_decimal(x, o.digits));
    return kExitOk;
  }
  line(out, "sum_part", to_string(x.sum_part));
  line(out, "triangle", to_string(x.tri[0]) + " " + to_string(x.tri[1]) + " " +
                            to_string(x.tri[2]) + " " + to_string(x.tri[3]));
  line(out, "value", x.radical_form().to_string());
  line(out, "decimal", sixj_decimal(x, o.digits));
  return kExitOk;
}

int cmd_geometry(const Options& o, std::ostream& out) {
  require_digits(o.digits);
  const SpinSextet s = sextet_from(o);
  const TetraGeometry g = tetra_geometry(s);
  line(out, "symbol", s.to_string());
  line(out, "A", to_string(g.coeffs.A));
  line(out, "B", to_string(g.coeffs.B));
  line(out, "C", to_string(g.coeffs.C));
  line(out, "Delta", to_string(g.delta));
  line(out, "kind", std::string(to_string(g.kind)));
  line(out, "volume", g.volume ? fixed(*g.volume, o.digits) : "imaginary (Delta < 0)");
  for (Edge e : kEdges) {
    const std::string key = "theta " + std::string(edge_name(e));
    if (g.thetas) {
      line(out, key, fixed((*g.thetas)[index(e)], o.digits));
    } else {
      line(out, key, g.kind == TetraKind::Degenerate ? "undefined (zero volume)"
                                                     : "undefined (Minkowskian)");
    }
  }
  if (!g.saddles) {
    line(out, "saddles", "none (A = 0)");
    return kExitOk;
  }
  const BigRational centre = g.coeffs.B / (2 * g.coeffs.A);
  const BigRational four_a2 = 4 * g.coeffs.A * g.coeffs.A;
  const int sg = sgn(g.delta);
  std::string exact;
  std::string numeric;
  if (sg == 0) {
    exact = "x = " + to_string(centre) + " (double root)";
    numeric = fixed(g.saddles->plus.real(), o.digits);
  } else {
    const BigRational abs_delta = sg > 0 ? g.delta : BigRational(-g.delta);
    const std::string half = render_surd(sqrt_surd(abs_delta / four_a2));
    exact = "x = " + to_string(centre) + (sg > 0 ? " ± i·" : " ± ") + half;
    const double w = sg > 0 ? g.saddles->plus.imag() : g.saddles->plus.real() - centre.get_d();
    numeric = fixed(centre.get_d(), o.digits) + (sg > 0 ? " ± " : " ± ") + fixed(w, o.digits) +
              (sg > 0 ? "i" : "");
  }
  line(out, "saddles", exact);
  line(out, "", numeric);
  return kExitOk;
}

std::vector<std::int64_t> scan_ks(const Options& o) {
  if (!o.ks.empty()) {
    if (o.k_min != 0 || o.k_max != 0 || o.doubling) {
      throw DomainError("--ks cannot be combined with --k-min/--k-max/--doubling");
    }
    validate_k_values(o.ks);
    return o.ks;
  }
  if (o.k_min == 0 || o.k_max == 0) throw DomainError("give --ks or both --k-min and --k-max");
  return o.doubling ? k_doubling(o.k_min, o.k_max) : k_range(o.k_min, o.k_max, o.k_step);
}

int cmd_scan(const Options& o, std::ostream& out) {
  require_digits(o.digits);
  SweepConfig config;
  config.sextet = sextet_from(o);
  config.k_values = scan_ks(o);
  config.output_path = o.output.empty() ? "scan.csv" : o.output;
  config.digits = o.digits;
  config.threads = o.threads;

  const ConvergenceReport report = run_sweep(config);
  if (config.output_path == "-") {
    write_csv(report, out);
    return kExitOk;
  }
  write_csv(report, config.output_path);
  line(out, "symbol", config.sextet.to_string());
  line(out, "rows", std::to_string(report.rows.size()) + " written to " + config.output_path);
  line(out, "median env_rel_err", sci(report.median_top_half()) + " (top half of k values)");
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const SpinSextet s = sextet_from(o);
  const auto results = run_identity_suite(s);
  out << "symbol " << s.to_string() << '\n';
  for (const auto& r : results) {
    std::string status(to_string(r.status));
    status.resize(8, ' ');
    std::string name = r.name;
    if (name.size() < 30) name.resize(30, ' ');
    out << status << name << r.detail << '\n';
  }
  return all_passed(results) ? kExitOk : kExitInternal;
}

int cmd_decay(Options o, std::ostream& out) {
  o.spins.assign(o.positional.begin(), o.positional.begin() + 6);
  o.k_min = parse_integer(o.positional[6], "k_min");
  o.k_max = parse_integer(o.positional[7], "k_max");
  const SpinSextet s = sextet_from(o);
  if (classify(s) != TetraKind::Minkowskian) {
    throw DomainError(s.to_string() + " is " + std::string(to_string(classify(s))) +
                      "; decay needs a Minkowskian sextet");
  }
  const auto ks = k_range(o.k_min, o.k_max, o.k_step);
  if (ks.size() < 4) {
    throw DomainError("need at least 4 k values for a fit, got " + std::to_string(ks.size()));
  }
  const DecayEstimate est = decay_rate(s);
  const DecayFit fit = fit_decay(s, ks);
  const double rel = std::abs(fit.compensated_slope - fit.predicted) / std::abs(fit.predicted);
  line(out, "symbol", s.to_string());
  line(out, "saddle", fixed(est.dominant_saddle, o.digits) + " (other root " +
                          fixed(est.other_saddle, o.digits) + ")");
  line(out, "predicted rate", fixed(fit.predicted, o.digits));
  line(out, "fitted slope", fixed(fit.compensated_slope, o.digits) +
                                " (ln(k^1.5 |6j|) against k, " + std::to_string(fit.ks.size()) +
                                " points)");
  line(out, "raw slope", fixed(fit.raw_slope, o.digits) + " (ln |6j| against k)");
  line(out, "relative deviation", fixed(100.0 * rel, 3) + "%");
  return kExitOk;
}

int cmd_integral(const Options& o, std::ostream& out, std::ostream& err) {
  require_digits(o.digits);
  std::array<double, 4> v{};
  std::array<double, 3> p{};
  for (std::size_t i = 0; i < 4; ++i) v[i] = parse_real(o.positional[i]);
  for (std::size_t j = 0; j < 3; ++j) p[j] = parse_real(o.positional[4 + j]);
  const std::int64_t k = parse_integer(o.positional[7], "k");
  const std::int64_t n = parse_integer(o.positional[8], "n_points");
  if (n > 100000000) throw DomainError("n_points too large");
  const IntegralEstimate est = integral_estimate(v, p, k, static_cast<int>(n));
  line(out, "estimate", sci(est.value));
  line(out, "x+ branch", sci(est.single_branch.real()) + " " + sci(est.single_branch.imag()) + "i");
  line(out, "refined (2n)", sci(est.refined_value));
  line(out, "relative change", sci(est.relative_change));
  line(out, "endpoint scale", sci(est.endpoint_scale));

  // When (v, p) come from half-integer spins, compare with the exact symbol.
  ContinuousSums sums;
  sums.v = v;
  sums.p = p;
  try {
    const EdgeArray<double> edges = edges_from_sums(sums);
    std::array<std::int64_t, 6> doubled{};
    bool half_integral = true;
    for (std::size_t i = 0; i < 6; ++i) {
      const double d = 2.0 * edges[i];
      if (std::abs(d - std::round(d)) > 1e-12) half_integral = false;
      doubled[i] = std::llround(d);
    }
    if (half_integral) {
      const SpinSextet s = SpinSextet::from_doubled(doubled);
      const double exact = sixj_exact(s.scaled(k)).to_double();
      line(out, "exact", sci(exact));
      if (classify(s) == TetraKind::Euclidean) {
        const double amp = ponzano_regge(s, k).amplitude;
        line(out, "|est-exact|/amp", sci(std::abs(est.value - exact) / amp));
      }
    }
  } catch (const DomainError&) {
  }

  if (est.endpoint_scale > 1e-3 * std::abs(est.value)) {
    err << "warning: endpoint terms (" << sci(est.endpoint_scale)
        << ") are not small next to the estimate; it does not track the symbol here\n";
  }
  if (!est.converged) {
    err << "warning: quadrature not converged (relative change " << sci(est.relative_change)
        << " with " << est.n_points << " nodes)\n";
  }
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic Wigner 6j symbols", "sixj"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--digits", o.digits, "decimal places in printed values")->capture_default_str();
  app.add_option("--output", o.output, "output file for scan (- for stdout)");

  auto spins = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("spins", o.spins, "six spins j1 j2 j3 J1 J2 J3 (n, n/2 or n.5)")
        ->expected(6)
        ->required();
  };

  CLI::App* exact = app.add_subcommand("exact", "exact value by the Racah sum");
  spins(exact);
  CLI::App* geometry = app.add_subcommand("geometry", "tetrahedron data and saddle points");
  spins(geometry);
  CLI::App* scan = app.add_subcommand("scan", "exact vs asymptotic values over k, as CSV");
  spins(scan);
  scan->add_option("--ks", o.ks, "explicit k values")->delimiter(',');
  scan->add_option("--k-min", o.k_min, "first k");
  scan->add_option("--k-max", o.k_max, "last k (inclusive)");
  scan->add_option("--k-step", o.k_step, "k increment")->capture_default_str();
  scan->add_flag("--doubling", o.doubling, "k_min, 2 k_min, 4 k_min, ...");
  scan->add_option("--threads", o.threads, "worker threads (0: all cores)");
  CLI::App* check = app.add_subcommand("check", "run the identity suite on one sextet");
  spins(check);
  CLI::App* decay = app.add_subcommand("decay", "Minkowskian decay rate vs fitted slope");
  decay->fallthrough();
  decay->add_option("args", o.positional, "six spins, then k_min k_max")->expected(8)->required();
  decay->add_option("--k-step", o.k_step, "k increment")->capture_default_str();
  CLI::App* integral = app.add_subcommand("integral", "quadrature of the continuous Racah sum");
  integral->fallthrough();
  integral->add_option("args", o.positional, "v1 v2 v3 v4 p1 p2 p3 k n_points")
      ->expected(9)
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*exact) return cmd_exact(o, out);
    if (*geometry) return cmd_geometry(o, out);
    if (*scan) return cmd_scan(o, out);
    if (*check) return cmd_check(o, out);
    if (*decay) return cmd_decay(o, out);
    if (*integral) return cmd_integral(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

} // namespace sixj
