#pragma once

#include "sixj/spins.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <span>

namespace sixj {

using Complex = std::complex<double>;

/// Triad sums v_i and opposite-pair sums p_j as reals (for the continuous
/// symbol they need not be integers).
struct ContinuousSums {
  std::array<double, 4> v{};
  std::array<double, 3> p{};

  double max_v() const;
  double min_p() const;
};

ContinuousSums continuous_sums(const SpinSextet& s);

/// Recover the six edges from (v, p). Throws DomainError when sum v != sum p
/// or when a recovered edge or triad side is negative.
EdgeArray<double> edges_from_sums(const ContinuousSums& sums);

// Exponent functions of the large-k analysis, in the variable x = t/k.
// Logarithms of (x - v) and (p - x) are evaluated with x approached from the
// upper half-plane, so for real x outside (max v, min p) they continue the
// branch that is principal for Im x > 0.

/// f(x) = i pi x + x ln x - sum (x - v_i) ln(x - v_i) - sum (p_j - x) ln(p_j - x).
Complex exponent_f(Complex x, const ContinuousSums& sums);
/// f'(x) = i pi + ln x - sum ln(x - v_i) + sum ln(p_j - x).
Complex exponent_f_prime(Complex x, const ContinuousSums& sums);
/// f''(x) = 1/x - sum 1/(x - v_i) - sum 1/(p_j - x).
Complex exponent_f_second(Complex x, const ContinuousSums& sums);
/// F(x) = 1/2 ln[x^3 / (prod (x - v_i) prod (p_j - x))].
Complex exponent_F(Complex x, const ContinuousSums& sums);
/// x ln(-x prod (p_j - x) / prod (x - v_i)), with a single principal logarithm
/// of the whole ratio. Zero at a saddle point.
Complex saddle_first_term(Complex x, const ContinuousSums& sums);
/// saddle_first_term(x) + sum v_i ln(x - v_i) - sum p_j ln(p_j - x).
Complex exponent_f_product_form(Complex x, const ContinuousSums& sums);

/// h_e = 1/2 ln[(e+a-b)(e-a+b)(e+c-d)(e-c+d) / ((e+a+b)(-e+a+b)(e+c+d)(-e+c+d))]
/// for the two triads (e,a,b), (e,c,d) containing edge e; H = (sum h_e) / 2.
/// Together they give the large-k form (2 pi)^2 exp(H + k h) of the
/// square-rooted product of triangle coefficients, h = sum_e e h_e.
struct PrefactorTerms {
  EdgeArray<double> h{};
  double H = 0.0;

  /// sum_e spin_e * h_e.
  double weighted(const SpinSextet& s) const;
};

/// Throws DegenerateError when some triad has a vanishing side combination.
PrefactorTerms prefactor_terms(const SpinSextet& s);

struct SaddleDecomposition {
  Complex x;                  // the saddle x_+ in the upper half-plane
  EdgeArray<Complex> f{};     // f_e, with sum_e spin_e f_e = f(x_+)
  Complex f_second;           // f''(x_+)
  Complex first_term;         // saddle_first_term(x_+), ~0
};

/// f_e = sum over the two triads containing e of ln(x_+ - v) minus sum over
/// the two pair sums containing e of ln(p - x_+). Requires a Euclidean
/// sextet (MinkowskianError / DegenerateError otherwise). Throws
/// InternalError if the first term of the product form does not vanish or a
/// logarithm argument sits on the wrong side of its branch cut.
SaddleDecomposition saddle_decomposition(const SpinSextet& s);

struct AsymptoticEstimate {
  std::int64_t k = 0;
  double amplitude = 0.0;  // 1 / sqrt(12 pi k^3 V)
  double phase = 0.0;      // pi/4 + sum_e (k s_e + 1/2) theta_e, reduced to [0, 2 pi)
  double value = 0.0;      // amplitude * cos(phase)
};

/// Leading large-k behaviour of the symbol at k * s. Throws DomainError for
/// k < 1, DegenerateError for zero volume and MinkowskianError for negative
/// discriminant.
AsymptoticEstimate ponzano_regge(const SpinSextet& s, std::int64_t k);

/// The x_+ contribution
///   exp(sum_e (k s_e + 1/2)(h_e + f_e)) / sqrt(2 pi k^3 (-i) sqrt(Delta)).
/// Its conjugate is the x_- contribution, so the symbol is approximated by
/// twice the real part.
Complex saddle_contribution(const SpinSextet& s, std::int64_t k);

/// The same contribution assembled directly from the saddle-point rule:
///   exp(H + F(x_+) + k [h + f(x_+)]) / (sqrt(2 pi k^3) sqrt(-f''(x_+))).
/// Agrees with saddle_contribution in modulus; the two square roots carry
/// independent branch choices, so the phases may differ by pi.
Complex saddle_contribution_from_exponent(const SpinSextet& s, std::int64_t k);

struct DecayEstimate {
  double rate = 0.0;             // h + Re f(x_dom), negative
  double dominant_saddle = 0.0;
  double other_saddle = 0.0;
  double other_rate = 0.0;       // h + Re f at the other real root
  double phase = 0.0;            // Im f(x_dom), reduced to [0, 2 pi)
  bool near_degenerate = false;  // the two roots agree to 1e-9
};

/// Exponential decay per unit k for a Minkowskian sextet. Both real roots of
/// the saddle quadratic lie outside (max v, min p), where the sign of
/// x prod (p - x) + prod (x - v) cannot change; f is continued to them from
/// the upper half-plane and the decaying root with the larger rate is taken.
/// Throws DomainError unless Minkowskian and InternalError if no root decays.
DecayEstimate decay_rate(const SpinSextet& s);

struct IntegralEstimate {
  double value = 0.0;          // 2 Re(single_branch)
  Complex single_branch;       // the exp(+i pi t) half of the sum
  double refined_value = 0.0;  // same with twice the nodes
  double relative_change = 0.0;
  bool converged = false;      // relative_change <= 1e-6
  int n_points = 0;
  bool path_through_saddle = false;
  /// |summand| at t = k max v plus |summand| at t = k min p, prefactor
  /// included. The integral only stands in for the alternating sum when this
  /// is negligible next to the result.
  double endpoint_scale = 0.0;
};

/// Continuous version of the Racah sum: every factorial n! in the summand is
/// replaced by Gamma(n+1), the sign (-1)^t by exp(i pi t), and the result is
/// integrated in t = k x from k max v to k min p, times the Gamma-continued
/// triangle coefficients. The exp(-i pi t) half is the complex conjugate,
/// hence value = 2 Re(single_branch).
///
/// When the continuous sums have a complex saddle x_+ the path runs
/// k max v -> k x_+ -> k min p (the integrand is entire there), which keeps
/// the quadrature free of cancellation; otherwise it is the real segment.
/// Composite 16-point Gauss-Legendre panels, about n_points nodes.
///
/// The boundary terms of the sum are not reproduced, so the estimate tracks
/// the symbol only when endpoint_scale is small (the equilateral family, for
/// instance); otherwise the error is of the order of endpoint_scale.
/// Throws DomainError on an empty interval, n_points < 100 or k < 1.
IntegralEstimate integral_estimate(std::span<const double, 4> v, std::span<const double, 3> p,
                                   std::int64_t k, int n_points);
IntegralEstimate integral_estimate(const SpinSextet& s, std::int64_t k, int n_points);

} // namespace sixj
