#include "sixj/identities.hpp"

#include "sixj/errors.hpp"
#include "sixj/exact_racah.hpp"
#include "sixj/pr_asymptotics.hpp"
#include "sixj/tetra_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

namespace sixj {

namespace {

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

IdentityResult verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

IdentityResult guarded(const std::string& name, const std::function<IdentityResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, CheckStatus::Fail, std::string("threw: ") + e.what()};
  }
}

IdentityResult skipped(std::string name, std::string why) {
  return {std::move(name), CheckStatus::Skipped, std::move(why)};
}

std::vector<IdentityResult> exact_checks(const SpinSextet& s) {
  std::vector<IdentityResult> out;
  out.push_back(guarded("tetrahedral symmetry", [&] {
    const ExactSixJ base = sixj_exact(s);
    const BigRational sq = base.squared();
    int bad = 0;
    for (const SpinSextet& img : tetrahedral_images(s)) {
      const ExactSixJ x = sixj_exact(img);
      if (x.sign() != base.sign() || x.squared() != sq) ++bad;
    }
    return verdict("tetrahedral symmetry", bad == 0,
                   "24 images, " + std::to_string(bad) + " mismatches");
  }));
  out.push_back(guarded("orthogonality", [&] {
    const HalfInt p = s[Edge::J3];
    const Surd sum = orthogonality_sum(s[Edge::j1], s[Edge::j2], s[Edge::J1], s[Edge::J2], p, p);
    const BigRational expected = make_rational(BigInt(1), BigInt(p.doubled() + 1));
    const bool ok = sum.radicand == 1 && sum.coefficient == expected;
    return verdict("orthogonality", ok,
                   "sum_x (2x+1){j1 j2 x; J1 J2 J3}^2 = " + (sum.radicand == 1 ? to_string(sum.coefficient) : sum.to_string()) + ", expected " +
                       to_string(expected));
  }));
  return out;
}

std::vector<IdentityResult> geometry_checks(const SpinSextet& s) {
  std::vector<IdentityResult> out;
  out.push_back(guarded("quadratic coefficients", [&] {
    const auto closed = quadratic_coefficients(s);
    const auto sym = quadratic_coefficients_symmetric(s);
    return verdict("quadratic coefficients", closed == sym,
                   "A=" + to_string(closed.A) + " B=" + to_string(closed.B) +
                       " C=" + to_string(closed.C));
  }));
  out.push_back(guarded("quartic cancellation", [&] {
    const auto c = quadratic_coefficients(s);
    const std::array<BigRational, 4> xs{make_rational(1, 3), make_rational(7, 2),
                                        make_rational(-11, 5), make_rational(101, 7)};
    int bad = 0;
    for (const auto& x : xs) {
      if (saddle_quartic(s, x) != c.A * x * x - c.B * x + c.C) ++bad;
    }
    return verdict("quartic cancellation", bad == 0,
                   "x prod(p-x) + prod(x-v) = Ax^2 - Bx + C at 4 rational points");
  }));
  out.push_back(guarded("discriminant expansion", [&] {
    const BigRational d = discriminant(s);
    return verdict("discriminant expansion", d == discriminant_expanded(s),
                   "4AC - B^2 = " + to_string(d));
  }));
  out.push_back(guarded("discriminant-volume", [&] {
    const BigRational d = discriminant(s);
    const BigRational cm = cayley_menger_volume_sq(s);
    return verdict("discriminant-volume", d == 576 * cm,
                   "Delta = " + to_string(d) + ", 576 V^2 = " + to_string(BigRational(576 * cm)));
  }));
  return out;
}

std::vector<IdentityResult> euclidean_checks(const SpinSextet& s) {
  std::vector<IdentityResult> out;
  SaddleDecomposition d;
  PrefactorTerms pt;
  try {
    d = saddle_decomposition(s);
    pt = prefactor_terms(s);
  } catch (const DegenerateError& e) {
    for (const char* name : {"stationarity", "cancellation h+Re f", "angle Im f", "second derivative",
                             "product form", "conjugate saddles"}) {
      out.push_back(skipped(name, e.what()));
    }
    return out;
  }
  const ContinuousSums sums = continuous_sums(s);

  out.push_back(guarded("stationarity", [&] {
    const double dev = std::abs(exponent_f_prime(d.x, sums));
    return verdict("stationarity", dev <= kIdentityAbsTol, "|f'(x+)| = " + fmt(dev));
  }));
  out.push_back(guarded("cancellation h+Re f", [&] {
    double worst = 0.0;
    for (Edge e : kEdges) {
      worst = std::max(worst, std::abs(pt.h[index(e)] + d.f[index(e)].real()));
    }
    return verdict("cancellation h+Re f", worst <= kIdentityAbsTol,
                   "max_e |h_e + Re f_e| = " + fmt(worst));
  }));
  out.push_back(guarded("angle Im f", [&] {
    const EdgeArray<double> theta = exterior_dihedral_angles(s);
    double worst = 0.0;
    for (Edge e : kEdges) {
      worst = std::max(worst, std::abs(d.f[index(e)].imag() - theta[index(e)]));
    }
    return verdict("angle Im f", worst <= kIdentityAbsTol,
                   "max_e |Im f_e - theta_e| = " + fmt(worst));
  }));
  out.push_back(guarded("second derivative", [&] {
    Complex lhs = -d.f_second * d.x;
    for (double p : sums.p) lhs *= p - d.x;
    const Complex rhs(0.0, -std::sqrt(discriminant(s).get_d()));
    const double rel = std::abs(lhs - rhs) / std::abs(rhs);
    return verdict("second derivative", rel <= kIdentityRelTol,
                   "|-f'' x prod(p-x) + i sqrt(Delta)| / sqrt(Delta) = " + fmt(rel));
  }));
  out.push_back(guarded("product form", [&] {
    Complex weighted = 0.0;
    for (Edge e : kEdges) weighted += s[e].to_double() * d.f[index(e)];
    const Complex full = exponent_f(d.x, sums);
    const double dev = std::abs(weighted - exponent_f_product_form(d.x, sums)) +
                       std::abs(std::exp(weighted - full) - 1.0);
    return verdict("product form", dev <= kIdentityAbsTol * std::max(1.0, std::abs(full)),
                   "sum_e s_e f_e vs f(x+) = " + fmt(dev));
  }));
  out.push_back(guarded("conjugate saddles", [&] {
    const std::int64_t k = 10;
    const AsymptoticEstimate pr = ponzano_regge(s, k);
    const double two_re = 2.0 * saddle_contribution(s, k).real();
    const double dev = std::abs(two_re - pr.value) / pr.amplitude;
    return verdict("conjugate saddles", dev <= 1e-9,
                   "|2 Re(x+ term) - PR| / amplitude at k=10 = " + fmt(dev));
  }));
  return out;
}

std::vector<IdentityResult> minkowskian_checks(const SpinSextet& s) {
  std::vector<IdentityResult> out;
  try {
    prefactor_terms(s);
  } catch (const DegenerateError& e) {
    out.push_back(skipped("decay saddle", e.what()));
    out.push_back(skipped("decay roots outside interval", e.what()));
    return out;
  }
  out.push_back(guarded("decay saddle", [&] {
    const DecayEstimate est = decay_rate(s);
    const ContinuousSums sums = continuous_sums(s);
    const double dev = std::abs(exponent_f_prime(Complex(est.dominant_saddle, 0.0), sums));
    return verdict("decay saddle", est.rate < 0 && dev <= kIdentityAbsTol,
                   "x=" + fmt(est.dominant_saddle) + " rate=" + fmt(est.rate) +
                       " |f'(x)|=" + fmt(dev));
  }));
  out.push_back(guarded("decay roots outside interval", [&] {
    const DecayEstimate est = decay_rate(s);
    const ContinuousSums sums = continuous_sums(s);
    auto inside = [&](double x) { return x > sums.max_v() && x < sums.min_p(); };
    return verdict("decay roots outside interval",
                   !inside(est.dominant_saddle) && !inside(est.other_saddle),
                   "roots " + fmt(est.dominant_saddle) + ", " + fmt(est.other_saddle) +
                       " vs (" + fmt(sums.max_v()) + ", " + fmt(sums.min_p()) + ")");
  }));
  return out;
}

} // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
  case CheckStatus::Pass: return "PASS";
  case CheckStatus::Fail: return "FAIL";
  case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

std::vector<IdentityResult> run_identity_suite(const SpinSextet& s) {
  if (!is_admissible(s)) throw DomainError("inadmissible sextet " + s.to_string());
  std::vector<IdentityResult> out = exact_checks(s);
  if (s.all_zero()) {
    out.push_back(skipped("geometry", "all spins zero"));
    return out;
  }
  for (auto& r : geometry_checks(s)) out.push_back(std::move(r));

  const TetraKind kind = classify(s);
  if (kind == TetraKind::Euclidean) {
    for (auto& r : euclidean_checks(s)) out.push_back(std::move(r));
  } else {
    const std::string why(kind == TetraKind::Degenerate ? "degenerate (zero volume)"
                                                        : "Minkowskian (negative discriminant)");
    for (const char* name : {"stationarity", "cancellation h+Re f", "angle Im f", "second derivative",
                             "product form", "conjugate saddles"}) {
      out.push_back(skipped(name, why));
    }
    if (kind == TetraKind::Minkowskian) {
      for (auto& r : minkowskian_checks(s)) out.push_back(std::move(r));
    }
  }
  return out;
}

bool all_passed(const std::vector<IdentityResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const IdentityResult& r) { return r.status == CheckStatus::Fail; });
}

} // namespace sixj
