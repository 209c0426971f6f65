#include "sixj/spins.hpp"

#include "sixj/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sixj {

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("malformed spin '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("spin out of range '" + std::string(whole) + "'");
  }
  return value;
}

} // namespace

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

HalfInt parse_spin(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  std::int64_t doubled = 0;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_digits(body.substr(0, slash), text);
    const std::int64_t den = parse_digits(body.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in spin '" + std::string(text) + "'");
    if ((2 * num) % den != 0) {
      throw DomainError("spin '" + std::string(text) + "' is not a half-integer");
    }
    doubled = 2 * num / den;
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::int64_t whole = parse_digits(body.substr(0, dot), text);
    const std::string_view frac = body.substr(dot + 1);
    if (frac.size() > 17) throw ParseError("too many decimals in spin '" + std::string(text) + "'");
    const std::int64_t frac_value = parse_digits(frac, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    if ((2 * frac_value) % scale != 0) {
      throw DomainError("spin '" + std::string(text) + "' is not a half-integer");
    }
    doubled = 2 * whole + 2 * frac_value / scale;
  } else {
    doubled = 2 * parse_digits(body, text);
  }

  if (negative && doubled != 0) {
    throw DomainError("spin '" + std::string(text) + "' is negative");
  }
  return HalfInt::from_doubled(doubled);
}

std::string_view edge_name(Edge e) {
  static constexpr std::array<std::string_view, 6> names{"j1", "j2", "j3", "J1", "J2", "J3"};
  return names[index(e)];
}

std::array<std::size_t, 2> triads_containing(Edge e) {
  std::array<std::size_t, 2> out{};
  std::size_t n = 0;
  for (std::size_t i = 0; i < kTriadEdges.size(); ++i) {
    if (std::ranges::find(kTriadEdges[i], e) != kTriadEdges[i].end()) out[n++] = i;
  }
  return out;
}

std::array<std::size_t, 2> pair_sums_containing(Edge e) {
  std::array<std::size_t, 2> out{};
  std::size_t n = 0;
  for (std::size_t j = 0; j < kPairSumEdges.size(); ++j) {
    if (std::ranges::find(kPairSumEdges[j], e) != kPairSumEdges[j].end()) out[n++] = j;
  }
  return out;
}

SpinSextet SpinSextet::from_doubled(const std::array<std::int64_t, 6>& doubled) {
  SpinSextet s;
  for (std::size_t i = 0; i < 6; ++i) s.spins[i] = HalfInt::from_doubled(doubled[i]);
  return s;
}

SpinSextet SpinSextet::from_ints(const std::array<std::int64_t, 6>& values) {
  SpinSextet s;
  for (std::size_t i = 0; i < 6; ++i) s.spins[i] = HalfInt::from_int(values[i]);
  return s;
}

SpinSextet SpinSextet::scaled(std::int64_t k) const {
  SpinSextet s = *this;
  for (auto& x : s.spins) x = x.scaled(k);
  return s;
}

std::array<std::array<HalfInt, 3>, 4> SpinSextet::triads() const {
  std::array<std::array<HalfInt, 3>, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t m = 0; m < 3; ++m) out[i][m] = (*this)[kTriadEdges[i][m]];
  }
  return out;
}

bool SpinSextet::all_zero() const {
  return std::ranges::all_of(spins, [](HalfInt h) { return h.doubled() == 0; });
}

std::string SpinSextet::to_string() const {
  std::ostringstream os;
  os << '{' << spins[0].to_string() << ' ' << spins[1].to_string() << ' ' << spins[2].to_string()
     << "; " << spins[3].to_string() << ' ' << spins[4].to_string() << ' '
     << spins[5].to_string() << '}';
  return os.str();
}

SpinSextet parse_sextet(std::span<const std::string> texts) {
  if (texts.size() != 6) throw ParseError("expected six spins, got " + std::to_string(texts.size()));
  SpinSextet s;
  for (std::size_t i = 0; i < 6; ++i) s.spins[i] = parse_spin(texts[i]);
  return s;
}

bool is_admissible_triple(HalfInt a, HalfInt b, HalfInt c) {
  const std::int64_t x = a.doubled(), y = b.doubled(), z = c.doubled();
  if (x < 0 || y < 0 || z < 0) return false;
  if (x + y - z < 0 || x - y + z < 0 || -x + y + z < 0) return false;
  return (x + y + z) % 2 == 0;
}

bool is_admissible(const SpinSextet& s) {
  for (const auto& t : s.triads()) {
    if (!is_admissible_triple(t[0], t[1], t[2])) return false;
  }
  return true;
}

std::int64_t TriadSums::max_v() const { return *std::ranges::max_element(v); }
std::int64_t TriadSums::min_p() const { return *std::ranges::min_element(p); }

TriadSums triad_sums(const SpinSextet& s) {
  if (!is_admissible(s)) throw DomainError("inadmissible sextet " + s.to_string());
  TriadSums out;
  for (std::size_t i = 0; i < 4; ++i) {
    std::int64_t doubled = 0;
    for (Edge e : kTriadEdges[i]) doubled += s[e].doubled();
    out.v[i] = doubled / 2;
  }
  for (std::size_t j = 0; j < 3; ++j) {
    std::int64_t doubled = 0;
    for (Edge e : kPairSumEdges[j]) doubled += s[e].doubled();
    // p_j = v_a + v_b - (twice an edge), integral whenever the triads are.
    if (doubled % 2 != 0) throw InternalError("non-integral opposite-pair sum");
    out.p[j] = doubled / 2;
  }
  return out;
}

std::array<SpinSextet, 24> tetrahedral_images(const SpinSextet& s) {
  static constexpr std::array<std::array<std::size_t, 3>, 6> perms{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  // Columns whose upper and lower entries are exchanged.
  static constexpr std::array<std::array<bool, 3>, 4> flips{{
      {false, false, false}, {true, true, false}, {true, false, true}, {false, true, true}}};

  std::array<SpinSextet, 24> out{};
  std::size_t n = 0;
  for (const auto& flip : flips) {
    for (const auto& perm : perms) {
      SpinSextet t;
      for (std::size_t col = 0; col < 3; ++col) {
        const std::size_t src = perm[col];
        HalfInt up = s.spins[src];
        HalfInt down = s.spins[src + 3];
        if (flip[src]) std::swap(up, down);
        t.spins[col] = up;
        t.spins[col + 3] = down;
      }
      out[n++] = t;
    }
  }
  return out;
}

} // namespace sixj
