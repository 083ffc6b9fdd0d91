#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's mixed integer == rational template recurses forever once
// C++20 adds reversed comparison candidates. These exact matches win
// overload resolution over it.
namespace boost {

inline bool operator==(const rational<std::int64_t>& a, int b) noexcept {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) noexcept {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(int b, const rational<std::int64_t>& a) noexcept { return a == b; }
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) noexcept { return a == b; }

}  // namespace boost

namespace dofb {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& x);
/// Inverse of to_string; also accepts plain integers. nullopt on bad input.
std::optional<Rational> parse_rational(std::string_view text);

/// a·D1 + b·D2 <= c with non-negative coefficients and (a, b) != (0, 0).
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;

  HalfPlane(Rational a_, Rational b_, Rational c_);

  /// rho·D_i + D_other <= rho for destination i in {1, 2}.
  static HalfPlane bottleneck(int dest, Rational rho);

  bool contains(const Rational& d1, const Rational& d2) const { return a * d1 + b * d2 <= c; }
  bool on_boundary(const Rational& d1, const Rational& d2) const { return a * d1 + b * d2 == c; }

  /// Destination i when the bound reads w·D_i + D_other <= w; both when w = 1.
  std::optional<int> bottleneck_dest() const;
  /// The weight w of a bound of bottleneck form.
  std::optional<Rational> bottleneck_weight() const;

  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

/// "3 D1 + D2 <= 3", "D1 + D2 <= 3/2", "D2 <= 1".
std::string to_string(const HalfPlane& h);

}  // namespace dofb
