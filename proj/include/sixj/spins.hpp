#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace sixj {

/// A non-negative integer or half-integer spin, stored as twice its value so
/// that every arithmetic step on spins stays exact.
class HalfInt {
public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_doubled(std::int64_t doubled) {
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }
  static constexpr HalfInt from_int(std::int64_t value) { return from_doubled(2 * value); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  constexpr double to_double() const { return 0.5 * static_cast<double>(doubled_); }

  /// "3/2" for half-integers, "2" for integers.
  std::string to_string() const;

  constexpr HalfInt scaled(std::int64_t k) const { return from_doubled(doubled_ * k); }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_doubled(a.doubled_ + b.doubled_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_doubled(a.doubled_ - b.doubled_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
  std::int64_t doubled_ = 0;
};

/// Accepts "n", "n/2" (or "n/1") and decimals whose fractional part is .5 or
/// .0 ("2.5", "3.0"). Throws ParseError on malformed text and DomainError on
/// negative or non-half-integer values.
HalfInt parse_spin(std::string_view text);

/// Edge labels of the tetrahedron, in the column order of the symbol
/// {j1 j2 j3; J1 J2 J3}.
enum class Edge : std::size_t { j1 = 0, j2, j3, J1, J2, J3 };

inline constexpr std::array<Edge, 6> kEdges{Edge::j1, Edge::j2, Edge::j3,
                                            Edge::J1, Edge::J2, Edge::J3};

constexpr std::size_t index(Edge e) { return static_cast<std::size_t>(e); }
std::string_view edge_name(Edge e);

template <class T>
using EdgeArray = std::array<T, 6>;

/// The four vertex triads: (j1,j2,j3), (J1,j2,J3), (J1,J2,j3), (j1,J2,J3).
inline constexpr std::array<std::array<Edge, 3>, 4> kTriadEdges{{
    {Edge::j1, Edge::j2, Edge::j3},
    {Edge::J1, Edge::j2, Edge::J3},
    {Edge::J1, Edge::J2, Edge::j3},
    {Edge::j1, Edge::J2, Edge::J3},
}};

/// The three sums over two pairs of opposite edges:
/// p1 = j2+J2+j3+J3, p2 = j1+J1+j3+J3, p3 = j2+J2+j1+J1.
inline constexpr std::array<std::array<Edge, 4>, 3> kPairSumEdges{{
    {Edge::j2, Edge::J2, Edge::j3, Edge::J3},
    {Edge::j1, Edge::J1, Edge::j3, Edge::J3},
    {Edge::j2, Edge::J2, Edge::j1, Edge::J1},
}};

/// Indices of the two triads containing `e`.
std::array<std::size_t, 2> triads_containing(Edge e);
/// Indices of the two opposite-pair sums containing `e`.
std::array<std::size_t, 2> pair_sums_containing(Edge e);

/// The six arguments of a 6j symbol, labelled as tetrahedron edges.
struct SpinSextet {
  EdgeArray<HalfInt> spins{};

  static SpinSextet from_doubled(const std::array<std::int64_t, 6>& doubled);
  static SpinSextet from_ints(const std::array<std::int64_t, 6>& values);

  HalfInt operator[](Edge e) const { return spins[index(e)]; }
  HalfInt& operator[](Edge e) { return spins[index(e)]; }

  SpinSextet scaled(std::int64_t k) const;
  std::array<std::array<HalfInt, 3>, 4> triads() const;
  bool all_zero() const;

  /// "{1 1 1; 1 1 1}".
  std::string to_string() const;

  friend bool operator==(const SpinSextet&, const SpinSextet&) = default;
};

SpinSextet parse_sextet(std::span<const std::string> texts);

bool is_admissible_triple(HalfInt a, HalfInt b, HalfInt c);
bool is_admissible(const SpinSextet& s);

struct TriadSums {
  std::array<std::int64_t, 4> v{};
  std::array<std::int64_t, 3> p{};

  std::int64_t max_v() const;
  std::int64_t min_p() const;
};

/// v_i are the triad sums, p_j the opposite-pair sums. Throws DomainError
/// when any triad is inadmissible.
TriadSums triad_sums(const SpinSextet& s);

/// The 24 relabelings under which the symbol is invariant: the six column
/// permutations combined with swapping upper and lower entries in zero or
/// two columns.
std::array<SpinSextet, 24> tetrahedral_images(const SpinSextet& s);

} // namespace sixj
