#pragma once

#include "sixj/big_rational.hpp"
#include "sixj/spins.hpp"

#include <complex>
#include <optional>
#include <string_view>

namespace sixj {

enum class TetraKind { Euclidean, Minkowskian, Degenerate };
std::string_view to_string(TetraKind kind);

/// Coefficients of the saddle-point quadratic A x^2 - B x + C = 0.
struct QuadraticCoefficients {
  BigRational A;
  BigRational B;
  BigRational C;

  friend bool operator==(const QuadraticCoefficients&, const QuadraticCoefficients&) = default;
};

/// Closed forms:
///   A = 2(j1 J1 + j2 J2 + j3 J3)
///   B = 2[(j1 J1 + j2 J2 + j3 J3)(j1+J1+j2+J2+j3+J3) + j1 j2 j3 + J1 j2 J3 + J1 J2 j3 + j1 J2 J3]
///   C = v1 v2 v3 v4
/// cross-checked against quadratic_coefficients_symmetric; a mismatch throws
/// InternalError. Throws DomainError on inadmissible input and
/// DegenerateError when all six spins vanish.
QuadraticCoefficients quadratic_coefficients(const SpinSextet& s);

/// The same coefficients from the elementary symmetric functions of the
/// triad sums v and pair sums p: A = -e2(p) + e2(v), B = -e3(p) + e3(v),
/// C = e4(v).
QuadraticCoefficients quadratic_coefficients_symmetric(const SpinSextet& s);

/// x * prod_j (p_j - x) + prod_i (x - v_i), evaluated exactly. The quartic
/// and cubic terms cancel, leaving A x^2 - B x + C.
BigRational saddle_quartic(const SpinSextet& s, const BigRational& x);

/// 4AC - B^2.
BigRational discriminant(const SpinSextet& s);

/// 4 * [ j1^2 J1^2 (j2^2 + J2^2 + j3^2 + J3^2 - j1^2 - J1^2) + (cyclic)
///       - j1^2 j2^2 j3^2 - J1^2 j2^2 J3^2 - J1^2 J2^2 j3^2 - j1^2 J2^2 J3^2 ],
/// the expanded form in squared edge lengths.
BigRational discriminant_expanded(const SpinSextet& s);

/// Exact sign test on the discriminant.
TetraKind classify(const SpinSextet& s);

/// sqrt(discriminant) / 24. Zero for flat tetrahedra; throws MinkowskianError
/// when the discriminant is negative.
double volume(const SpinSextet& s);

struct SaddlePair {
  std::complex<double> plus;
  std::complex<double> minus;
  bool real = false;
};

/// x+- = (B +- i sqrt(Delta)) / 2A, or (B +- sqrt(-Delta)) / 2A when Delta < 0.
/// Throws DegenerateError when A = 0.
SaddlePair saddle_points(const SpinSextet& s);

/// The relabeled sextet that moves edge `e` into the j1 slot while keeping
/// the triad structure.
SpinSextet relabel_to_j1(const SpinSextet& s, Edge e);

/// j1^2 (j1^2 + 2 J1^2 - j2^2 - J2^2 - j3^2 - J3^2) + j2^2 J3^2 + j3^2 J2^2
/// - j2^2 J2^2 - j3^2 J3^2, evaluated on relabel_to_j1(s, e).
BigRational dihedral_denominator(const SpinSextet& s, Edge e);

/// theta_e = atan2(e sqrt(Delta), dihedral_denominator(s, e)), in (0, pi).
/// Throws MinkowskianError or DegenerateError unless the tetrahedron is
/// Euclidean.
EdgeArray<double> exterior_dihedral_angles(const SpinSextet& s);

/// Squared volume from the 5x5 Cayley-Menger determinant over the squared
/// edge lengths of the vertices O, O+j1, O+j3, O+J2 (OP = j1, OQ = j3,
/// OR = J2, PQ = j2, PR = J3, QR = J1). Negative for Minkowskian sextets.
BigRational cayley_menger_volume_sq(const SpinSextet& s);

struct TetraGeometry {
  QuadraticCoefficients coeffs;
  BigRational delta;
  TetraKind kind = TetraKind::Degenerate;
  std::optional<double> volume;             // absent when Minkowskian
  std::optional<EdgeArray<double>> thetas;  // only when Euclidean
  std::optional<SaddlePair> saddles;        // absent when A = 0
};

TetraGeometry tetra_geometry(const SpinSextet& s);

} // namespace sixj
