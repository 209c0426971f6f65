#include "sixj/pr_asymptotics.hpp"

#include "sixj/errors.hpp"
#include "sixj/tetra_geometry.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <numbers>
#include <string>
#include <vector>

namespace sixj {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI{0.0, 1.0};

// x - v and p - x keep the sign of Im x (including signed zero), so real
// arguments left of a cut pick up +i pi for x - v and -i pi for p - x.
Complex minus_v(Complex x, double v) { return {x.real() - v, x.imag()}; }
Complex p_minus(double p, Complex x) { return {p - x.real(), -x.imag()}; }

double reduce_angle(double phase) {
  double r = std::fmod(phase, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

void require_euclidean(const SpinSextet& s) {
  switch (classify(s)) {
  case TetraKind::Euclidean: return;
  case TetraKind::Minkowskian:
    throw MinkowskianError(s.to_string() + " is Minkowskian; use decay_rate");
  case TetraKind::Degenerate:
    throw DegenerateError(s.to_string() + " has zero volume; the asymptotic formula is undefined");
  }
}

void require_positive_k(std::int64_t k) {
  if (k < 1) throw DomainError("scale k must be a positive integer");
}

// ln Delta(a,b,c) with factorials continued by the Gamma function.
double log_triangle(double a, double b, double c) {
  return std::lgamma(a + b - c + 1.0) + std::lgamma(a - b + c + 1.0) +
         std::lgamma(-a + b + c + 1.0) - std::lgamma(a + b + c + 2.0);
}

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

const GaussRule& gauss16() {
  static const GaussRule rule = [] {
    using G = boost::math::quadrature::gauss<double, 16>;
    GaussRule r;
    for (std::size_t i = 0; i < G::abscissa().size(); ++i) {
      const double a = G::abscissa()[i];
      const double w = G::weights()[i];
      r.nodes.push_back(a);
      r.weights.push_back(w);
      if (a != 0.0) {
        r.nodes.push_back(-a);
        r.weights.push_back(w);
      }
    }
    return r;
  }();
  return rule;
}

} // namespace

double ContinuousSums::max_v() const { return *std::ranges::max_element(v); }
double ContinuousSums::min_p() const { return *std::ranges::min_element(p); }

ContinuousSums continuous_sums(const SpinSextet& s) {
  const TriadSums ts = triad_sums(s);
  ContinuousSums out;
  for (std::size_t i = 0; i < 4; ++i) out.v[i] = static_cast<double>(ts.v[i]);
  for (std::size_t j = 0; j < 3; ++j) out.p[j] = static_cast<double>(ts.p[j]);
  return out;
}

EdgeArray<double> edges_from_sums(const ContinuousSums& sums) {
  const auto& v = sums.v;
  const auto& p = sums.p;
  const double sv = v[0] + v[1] + v[2] + v[3];
  const double sp = p[0] + p[1] + p[2];
  if (std::abs(sv - sp) > 1e-12 * std::max(1.0, std::abs(sv))) {
    throw DomainError("triad sums and pair sums must have equal totals");
  }
  // p pairs: j_i + J_i; v differences: j_i - J_i.
  const std::array<double, 3> plus{(p[1] + p[2] - p[0]) / 2, (p[0] + p[2] - p[1]) / 2,
                                   (p[0] + p[1] - p[2]) / 2};
  const double d1 = (v[0] - v[1] - v[2] + v[3]) / 2;
  const std::array<double, 3> minus{d1, v[0] - v[2] - d1, v[0] - v[1] - d1};

  EdgeArray<double> e{};
  for (std::size_t i = 0; i < 3; ++i) {
    e[i] = (plus[i] + minus[i]) / 2;
    e[i + 3] = (plus[i] - minus[i]) / 2;
  }
  const double tol = 1e-12 * std::max(1.0, sv);
  for (double x : e) {
    if (x < -tol) throw DomainError("triad and pair sums do not describe non-negative edges");
  }
  for (const auto& t : kTriadEdges) {
    const double a = e[index(t[0])], b = e[index(t[1])], c = e[index(t[2])];
    if (a + b - c < -tol || a - b + c < -tol || -a + b + c < -tol) {
      throw DomainError("triad and pair sums violate a triangle inequality");
    }
  }
  return e;
}

Complex exponent_f(Complex x, const ContinuousSums& sums) {
  Complex out = kI * kPi * x + x * std::log(x);
  for (double v : sums.v) {
    const Complex d = minus_v(x, v);
    out -= d * std::log(d);
  }
  for (double p : sums.p) {
    const Complex d = p_minus(p, x);
    out -= d * std::log(d);
  }
  return out;
}

Complex exponent_f_prime(Complex x, const ContinuousSums& sums) {
  Complex out = kI * kPi + std::log(x);
  for (double v : sums.v) out -= std::log(minus_v(x, v));
  for (double p : sums.p) out += std::log(p_minus(p, x));
  return out;
}

Complex exponent_f_second(Complex x, const ContinuousSums& sums) {
  Complex out = 1.0 / x;
  for (double v : sums.v) out -= 1.0 / minus_v(x, v);
  for (double p : sums.p) out -= 1.0 / p_minus(p, x);
  return out;
}

Complex exponent_F(Complex x, const ContinuousSums& sums) {
  Complex out = 3.0 * std::log(x);
  for (double v : sums.v) out -= std::log(minus_v(x, v));
  for (double p : sums.p) out -= std::log(p_minus(p, x));
  return 0.5 * out;
}

Complex saddle_first_term(Complex x, const ContinuousSums& sums) {
  Complex num = -x;
  for (double p : sums.p) num *= p_minus(p, x);
  Complex den = 1.0;
  for (double v : sums.v) den *= minus_v(x, v);
  return x * std::log(num / den);
}

Complex exponent_f_product_form(Complex x, const ContinuousSums& sums) {
  Complex out = saddle_first_term(x, sums);
  for (double v : sums.v) out += v * std::log(minus_v(x, v));
  for (double p : sums.p) out -= p * std::log(p_minus(p, x));
  return out;
}

double PrefactorTerms::weighted(const SpinSextet& s) const {
  double out = 0.0;
  for (Edge e : kEdges) out += s[e].to_double() * h[index(e)];
  return out;
}

PrefactorTerms prefactor_terms(const SpinSextet& s) {
  if (!is_admissible(s)) throw DomainError("inadmissible sextet " + s.to_string());
  PrefactorTerms out;
  for (Edge e : kEdges) {
    double log_ratio = 0.0;
    for (std::size_t t : triads_containing(e)) {
      std::array<HalfInt, 2> others{};
      std::size_t n = 0;
      for (Edge o : kTriadEdges[t]) {
        if (o != e) others[n++] = s[o];
      }
      const HalfInt a = s[e], b = others[0], c = others[1];
      const std::array<HalfInt, 4> factors{a + b - c, a - b + c, a + b + c, b + c - a};
      for (HalfInt f : factors) {
        if (f.doubled() <= 0) {
          throw DegenerateError("triad (" + a.to_string() + ", " + b.to_string() + ", " +
                                c.to_string() + ") is degenerate");
        }
      }
      log_ratio += std::log(factors[0].to_double()) + std::log(factors[1].to_double()) -
                   std::log(factors[2].to_double()) - std::log(factors[3].to_double());
    }
    out.h[index(e)] = 0.5 * log_ratio;
  }
  double sum = 0.0;
  for (double h : out.h) sum += h;
  out.H = 0.5 * sum;
  return out;
}

SaddleDecomposition saddle_decomposition(const SpinSextet& s) {
  require_euclidean(s);
  const ContinuousSums sums = continuous_sums(s);
  SaddleDecomposition out;
  out.x = saddle_points(s).plus;

  for (double v : sums.v) {
    if (!(minus_v(out.x, v).imag() > 0)) throw InternalError("x_+ - v left the upper half-plane");
  }
  for (double p : sums.p) {
    if (!(p_minus(p, out.x).imag() < 0)) throw InternalError("p - x_+ left the lower half-plane");
  }

  for (Edge e : kEdges) {
    Complex fe = 0.0;
    for (std::size_t i : triads_containing(e)) fe += std::log(minus_v(out.x, sums.v[i]));
    for (std::size_t j : pair_sums_containing(e)) fe -= std::log(p_minus(sums.p[j], out.x));
    out.f[index(e)] = fe;
  }
  out.f_second = exponent_f_second(out.x, sums);
  out.first_term = saddle_first_term(out.x, sums);
  if (std::abs(out.first_term) > 1e-8 * std::max(1.0, std::abs(out.x))) {
    throw InternalError("first term of f does not vanish at the saddle for " + s.to_string());
  }
  return out;
}

AsymptoticEstimate ponzano_regge(const SpinSextet& s, std::int64_t k) {
  require_positive_k(k);
  require_euclidean(s);
  const double vol = volume(s);
  const EdgeArray<double> theta = exterior_dihedral_angles(s);
  const double kd = static_cast<double>(k);

  AsymptoticEstimate out;
  out.k = k;
  out.amplitude = 1.0 / std::sqrt(12.0 * kPi * kd * kd * kd * vol);
  double phase = kPi / 4.0;
  for (Edge e : kEdges) phase += (kd * s[e].to_double() + 0.5) * theta[index(e)];
  out.phase = reduce_angle(phase);
  out.value = out.amplitude * std::cos(out.phase);
  return out;
}

Complex saddle_contribution(const SpinSextet& s, std::int64_t k) {
  require_positive_k(k);
  const SaddleDecomposition d = saddle_decomposition(s);
  const PrefactorTerms pt = prefactor_terms(s);
  const double kd = static_cast<double>(k);
  Complex exponent = 0.0;
  for (Edge e : kEdges) {
    exponent += (kd * s[e].to_double() + 0.5) * (pt.h[index(e)] + d.f[index(e)]);
  }
  const double root_delta = std::sqrt(discriminant(s).get_d());
  const Complex denom = std::sqrt(Complex(0.0, -2.0 * kPi * kd * kd * kd * root_delta));
  return std::exp(exponent) / denom;
}

Complex saddle_contribution_from_exponent(const SpinSextet& s, std::int64_t k) {
  require_positive_k(k);
  const SaddleDecomposition d = saddle_decomposition(s);
  const PrefactorTerms pt = prefactor_terms(s);
  const ContinuousSums sums = continuous_sums(s);
  const double kd = static_cast<double>(k);
  const Complex exponent =
      pt.H + exponent_F(d.x, sums) + kd * (pt.weighted(s) + exponent_f(d.x, sums));
  return std::exp(exponent) /
         (std::sqrt(2.0 * kPi * kd * kd * kd) * std::sqrt(-d.f_second));
}

DecayEstimate decay_rate(const SpinSextet& s) {
  if (classify(s) != TetraKind::Minkowskian) {
    throw DomainError(s.to_string() + " is not Minkowskian");
  }
  const SaddlePair roots = saddle_points(s);
  const ContinuousSums sums = continuous_sums(s);
  const double h = prefactor_terms(s).weighted(s);

  const std::array<double, 2> xs{roots.plus.real(), roots.minus.real()};
  std::array<Complex, 2> total{};
  for (std::size_t i = 0; i < 2; ++i) total[i] = h + exponent_f(Complex(xs[i], 0.0), sums);

  std::size_t pick = 2;
  for (std::size_t i = 0; i < 2; ++i) {
    if (total[i].real() < 0 && (pick == 2 || total[i].real() > total[pick].real())) pick = i;
  }
  if (pick == 2) {
    throw InternalError("no decaying real saddle for " + s.to_string() + " (rates " +
                        std::to_string(total[0].real()) + ", " +
                        std::to_string(total[1].real()) + ")");
  }
  DecayEstimate out;
  out.rate = total[pick].real();
  out.dominant_saddle = xs[pick];
  out.other_saddle = xs[1 - pick];
  out.other_rate = total[1 - pick].real();
  out.phase = reduce_angle(total[pick].imag());
  out.near_degenerate = std::abs(xs[0] - xs[1]) < 1e-9;
  return out;
}

namespace {

// ln Gamma(z) up to multiples of 2 pi i: upward recurrence to Re z >= 15,
// then the Stirling series.
Complex log_gamma(Complex z) {
  Complex shift = 0.0;
  while (z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  static constexpr std::array<double, 7> kCoeff{1.0 / 12.0,     -1.0 / 360.0,
                                                1.0 / 1260.0,   -1.0 / 1680.0,
                                                1.0 / 1188.0,   -691.0 / 360360.0,
                                                1.0 / 156.0};
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (double c : kCoeff) {
    series += c * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(kTwoPi) + series - shift;
}

// ln of (t+1)! / (prod (t - k v)! prod (k p - t)!) continued to complex t,
// plus i pi t for the alternating sign.
Complex log_integrand(const ContinuousSums& sums, double k, Complex t) {
  Complex out = log_gamma(t + 2.0);
  for (double v : sums.v) out -= log_gamma(t - k * v + 1.0);
  for (double p : sums.p) out -= log_gamma(k * p - t + 1.0);
  return out + Complex(-kPi * t.imag(), kPi * std::fmod(t.real(), 2.0));
}

// Integral of exp(log_integrand + log_prefactor) dt along the polygon
// through `vertices`, about n_points Gauss nodes in total.
Complex integrate_path(const ContinuousSums& sums, double log_prefactor, double k,
                       const std::vector<Complex>& vertices, int n_points) {
  const GaussRule& rule = gauss16();
  const int per_panel = static_cast<int>(rule.nodes.size());
  const int segments = static_cast<int>(vertices.size()) - 1;
  const int panels = std::max(1, (n_points + per_panel * segments - 1) / (per_panel * segments));

  Complex total = 0.0;
  for (int seg = 0; seg < segments; ++seg) {
    const Complex from = vertices[static_cast<std::size_t>(seg)];
    const Complex step = (vertices[static_cast<std::size_t>(seg) + 1] - from) / double(panels);
    for (int panel = 0; panel < panels; ++panel) {
      const Complex mid = from + (panel + 0.5) * step;
      for (std::size_t n = 0; n < rule.nodes.size(); ++n) {
        const Complex t = mid + 0.5 * rule.nodes[n] * step;
        total += 0.5 * rule.weights[n] * step * std::exp(log_integrand(sums, k, t) + log_prefactor);
      }
    }
  }
  return total;
}

// Upper-half-plane root of A x^2 - B x + C with A, B, C the symmetric
// functions of (v, p); empty unless the discriminant is positive.
std::optional<Complex> continuous_saddle(const ContinuousSums& sums) {
  const auto& v = sums.v;
  const auto& p = sums.p;
  double e2v = 0.0, e3v = 0.0, e2p = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      e2v += v[i] * v[j];
      for (std::size_t l = j + 1; l < 4; ++l) e3v += v[i] * v[j] * v[l];
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) e2p += p[i] * p[j];
  }
  const double a = e2v - e2p;
  const double b = e3v - p[0] * p[1] * p[2];
  const double c = v[0] * v[1] * v[2] * v[3];
  const double disc = 4.0 * a * c - b * b;
  if (!(a > 0.0) || !(disc > 0.0)) return std::nullopt;
  return Complex(b / (2.0 * a), std::sqrt(disc) / (2.0 * a));
}

} // namespace

IntegralEstimate integral_estimate(std::span<const double, 4> v, std::span<const double, 3> p,
                                   std::int64_t k, int n_points) {
  require_positive_k(k);
  if (n_points < 100) throw DomainError("n_points must be at least 100");
  ContinuousSums sums;
  std::copy(v.begin(), v.end(), sums.v.begin());
  std::copy(p.begin(), p.end(), sums.p.begin());
  if (!(sums.max_v() < sums.min_p())) {
    throw DomainError("empty integration interval: max v >= min p");
  }
  const EdgeArray<double> edges = edges_from_sums(sums);
  const double kd = static_cast<double>(k);

  // ln sqrt(prod Delta(k a, k b, k c)).
  double log_prefactor = 0.0;
  for (const auto& t : kTriadEdges) {
    log_prefactor += 0.5 * log_triangle(kd * edges[index(t[0])], kd * edges[index(t[1])],
                                        kd * edges[index(t[2])]);
  }

  const Complex lo(kd * sums.max_v(), 0.0);
  const Complex hi(kd * sums.min_p(), 0.0);
  std::vector<Complex> path{lo, hi};
  if (const auto saddle = continuous_saddle(sums)) path = {lo, kd * *saddle, hi};

  IntegralEstimate out;
  out.n_points = n_points;
  out.path_through_saddle = path.size() == 3;
  out.single_branch = integrate_path(sums, log_prefactor, kd, path, n_points);
  out.value = 2.0 * out.single_branch.real();
  out.refined_value = 2.0 * integrate_path(sums, log_prefactor, kd, path, 2 * n_points).real();
  const double scale = std::max(std::abs(out.refined_value), std::numeric_limits<double>::min());
  out.relative_change = std::abs(out.refined_value - out.value) / scale;
  out.converged = out.relative_change <= 1e-6;
  out.endpoint_scale = std::exp(log_integrand(sums, kd, lo).real() + log_prefactor) +
                       std::exp(log_integrand(sums, kd, hi).real() + log_prefactor);
  return out;
}

IntegralEstimate integral_estimate(const SpinSextet& s, std::int64_t k, int n_points) {
  const ContinuousSums sums = continuous_sums(s);
  return integral_estimate(std::span<const double, 4>(sums.v), std::span<const double, 3>(sums.p),
                           k, n_points);
}

} // namespace sixj
