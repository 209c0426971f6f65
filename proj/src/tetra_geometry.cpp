#include "sixj/tetra_geometry.hpp"

#include "sixj/errors.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace sixj {

namespace {

BigRational q(HalfInt h) { return make_rational(BigInt(h.doubled()), BigInt(2)); }

struct Spins {
  BigRational j1, j2, j3, J1, J2, J3;

  explicit Spins(const SpinSextet& s)
      : j1(q(s[Edge::j1])), j2(q(s[Edge::j2])), j3(q(s[Edge::j3])),
        J1(q(s[Edge::J1])), J2(q(s[Edge::J2])), J3(q(s[Edge::J3])) {}
};

void require_admissible(const SpinSextet& s) {
  if (!is_admissible(s)) throw DomainError("inadmissible sextet " + s.to_string());
}

} // namespace

std::string_view to_string(TetraKind kind) {
  switch (kind) {
  case TetraKind::Euclidean: return "Euclidean";
  case TetraKind::Minkowskian: return "Minkowskian";
  case TetraKind::Degenerate: return "Degenerate";
  }
  return "?";
}

QuadraticCoefficients quadratic_coefficients_symmetric(const SpinSextet& s) {
  const TriadSums ts = triad_sums(s);
  std::array<BigRational, 4> v;
  std::array<BigRational, 3> p;
  for (std::size_t i = 0; i < 4; ++i) v[i] = BigRational(ts.v[i]);
  for (std::size_t j = 0; j < 3; ++j) p[j] = BigRational(ts.p[j]);

  BigRational e2v = 0, e3v = 0, e2p = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      e2v += v[i] * v[j];
      for (std::size_t k = j + 1; k < 4; ++k) e3v += v[i] * v[j] * v[k];
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = k + 1; l < 3; ++l) e2p += p[k] * p[l];
  }
  return {e2v - e2p, e3v - p[0] * p[1] * p[2], v[0] * v[1] * v[2] * v[3]};
}

QuadraticCoefficients quadratic_coefficients(const SpinSextet& s) {
  require_admissible(s);
  if (s.all_zero()) throw DegenerateError("all six spins are zero");
  const Spins x(s);
  const TriadSums ts = triad_sums(s);

  const BigRational dot = x.j1 * x.J1 + x.j2 * x.J2 + x.j3 * x.J3;
  const BigRational total = x.j1 + x.J1 + x.j2 + x.J2 + x.j3 + x.J3;
  QuadraticCoefficients out;
  out.A = 2 * dot;
  out.B = 2 * (dot * total + x.j1 * x.j2 * x.j3 + x.J1 * x.j2 * x.J3 + x.J1 * x.J2 * x.j3 +
               x.j1 * x.J2 * x.J3);
  out.C = BigRational(ts.v[0]) * ts.v[1] * ts.v[2] * ts.v[3];

  if (!(out == quadratic_coefficients_symmetric(s))) {
    throw InternalError("closed-form and symmetric-function coefficients disagree for " +
                        s.to_string());
  }
  return out;
}

BigRational saddle_quartic(const SpinSextet& s, const BigRational& x) {
  const TriadSums ts = triad_sums(s);
  BigRational lhs = x;
  for (std::int64_t p : ts.p) lhs *= BigRational(p) - x;
  BigRational rhs = 1;
  for (std::int64_t v : ts.v) rhs *= x - BigRational(v);
  return lhs + rhs;
}

BigRational discriminant(const SpinSextet& s) {
  const auto c = quadratic_coefficients(s);
  return 4 * c.A * c.C - c.B * c.B;
}

BigRational discriminant_expanded(const SpinSextet& s) {
  require_admissible(s);
  const Spins x(s);
  const BigRational a1 = x.j1 * x.j1, a2 = x.j2 * x.j2, a3 = x.j3 * x.j3;
  const BigRational b1 = x.J1 * x.J1, b2 = x.J2 * x.J2, b3 = x.J3 * x.J3;
  BigRational poly = a1 * b1 * (a2 + b2 + a3 + b3 - a1 - b1) +
                     a2 * b2 * (a1 + b1 + a3 + b3 - a2 - b2) +
                     a3 * b3 * (a2 + b2 + a1 + b1 - a3 - b3) - a1 * a2 * a3 - b1 * a2 * b3 -
                     b1 * b2 * a3 - a1 * b2 * b3;
  return 4 * poly;
}

TetraKind classify(const SpinSextet& s) {
  const int sg = sgn(discriminant(s));
  if (sg > 0) return TetraKind::Euclidean;
  if (sg < 0) return TetraKind::Minkowskian;
  return TetraKind::Degenerate;
}

double volume(const SpinSextet& s) {
  const BigRational delta = discriminant(s);
  if (sgn(delta) < 0) {
    throw MinkowskianError("negative discriminant: the volume of " + s.to_string() +
                           " is imaginary");
  }
  if (sgn(delta) == 0) return 0.0;
  return std::sqrt(delta.get_d()) / 24.0;
}

SaddlePair saddle_points(const SpinSextet& s) {
  const auto c = quadratic_coefficients(s);
  if (sgn(c.A) == 0) throw DegenerateError("A = 0, the saddle quadratic degenerates");
  const BigRational delta = 4 * c.A * c.C - c.B * c.B;
  const double centre = BigRational(c.B / (2 * c.A)).get_d();
  const double two_a = BigRational(2 * c.A).get_d();

  SaddlePair out;
  if (sgn(delta) >= 0) {
    const double im = std::sqrt(delta.get_d()) / two_a;
    out.plus = {centre, im};
    out.minus = {centre, -im};
    out.real = sgn(delta) == 0;
  } else {
    const double half_width = std::sqrt(BigRational(-delta).get_d()) / two_a;
    out.plus = {centre + half_width, 0.0};
    out.minus = {centre - half_width, 0.0};
    out.real = true;
  }
  return out;
}

SpinSextet relabel_to_j1(const SpinSextet& s, Edge e) {
  const HalfInt j1 = s[Edge::j1], j2 = s[Edge::j2], j3 = s[Edge::j3];
  const HalfInt J1 = s[Edge::J1], J2 = s[Edge::J2], J3 = s[Edge::J3];
  SpinSextet out;
  switch (e) {
  case Edge::j1: out.spins = {j1, j2, j3, J1, J2, J3}; break;
  case Edge::j2: out.spins = {j2, j1, j3, J2, J1, J3}; break;
  case Edge::j3: out.spins = {j3, j2, j1, J3, J2, J1}; break;
  case Edge::J1: out.spins = {J1, J2, j3, j1, j2, J3}; break;
  case Edge::J2: out.spins = {J2, J1, j3, j2, j1, J3}; break;
  case Edge::J3: out.spins = {J3, j2, J1, j3, J2, j1}; break;
  }
  return out;
}

BigRational dihedral_denominator(const SpinSextet& s, Edge e) {
  const Spins x(relabel_to_j1(s, e));
  const BigRational a1 = x.j1 * x.j1, a2 = x.j2 * x.j2, a3 = x.j3 * x.j3;
  const BigRational b1 = x.J1 * x.J1, b2 = x.J2 * x.J2, b3 = x.J3 * x.J3;
  return a1 * (a1 + 2 * b1 - a2 - b2 - a3 - b3) + a2 * b3 + a3 * b2 - a2 * b2 - a3 * b3;
}

EdgeArray<double> exterior_dihedral_angles(const SpinSextet& s) {
  const BigRational delta = discriminant(s);
  if (sgn(delta) < 0) throw MinkowskianError("dihedral angles need a Euclidean tetrahedron");
  if (sgn(delta) == 0) throw DegenerateError("dihedral angles of a flat tetrahedron");
  const double root = std::sqrt(delta.get_d());
  EdgeArray<double> out{};
  for (Edge e : kEdges) {
    const double numerator = s[e].to_double() * root;
    out[index(e)] = std::atan2(numerator, dihedral_denominator(s, e).get_d());
  }
  return out;
}

BigRational cayley_menger_volume_sq(const SpinSextet& s) {
  require_admissible(s);
  const Spins x(s);
  // Vertices O, P, Q, R.
  std::array<std::array<BigRational, 4>, 4> d2;
  auto set = [&](std::size_t a, std::size_t b, const BigRational& len) {
    d2[a][b] = len * len;
    d2[b][a] = len * len;
  };
  for (std::size_t i = 0; i < 4; ++i) d2[i][i] = 0;
  set(0, 1, x.j1);
  set(0, 2, x.j3);
  set(0, 3, x.J2);
  set(1, 2, x.j2);
  set(1, 3, x.J3);
  set(2, 3, x.J1);

  std::array<std::array<BigRational, 5>, 5> m;
  m[0][0] = 0;
  for (std::size_t i = 1; i < 5; ++i) {
    m[0][i] = 1;
    m[i][0] = 1;
    for (std::size_t j = 1; j < 5; ++j) m[i][j] = d2[i - 1][j - 1];
  }

  // Gaussian elimination over the rationals.
  BigRational det = 1;
  for (std::size_t col = 0; col < 5; ++col) {
    std::size_t pivot = col;
    while (pivot < 5 && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == 5) return BigRational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < 5; ++row) {
      if (sgn(m[row][col]) == 0) continue;
      const BigRational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < 5; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det / 288;
}

TetraGeometry tetra_geometry(const SpinSextet& s) {
  TetraGeometry g;
  g.coeffs = quadratic_coefficients(s);
  g.delta = 4 * g.coeffs.A * g.coeffs.C - g.coeffs.B * g.coeffs.B;
  const int sg = sgn(g.delta);
  g.kind = sg > 0 ? TetraKind::Euclidean : (sg < 0 ? TetraKind::Minkowskian : TetraKind::Degenerate);
  if (sg >= 0) g.volume = sg == 0 ? 0.0 : std::sqrt(g.delta.get_d()) / 24.0;
  if (sg > 0) g.thetas = exterior_dihedral_angles(s);
  if (sgn(g.coeffs.A) != 0) g.saddles = saddle_points(s);
  return g;
}

} // namespace sixj
