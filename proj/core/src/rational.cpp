#include "dofb/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace dofb {

namespace {

std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
  return value;
}

std::string coefficient_term(const Rational& coef, const char* var) {
  if (coef == 1) return var;
  return to_string(coef) + " " + var;
}

}  // namespace

std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  const auto n = parse_int(text.substr(0, slash));
  const auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

HalfPlane::HalfPlane(Rational a_, Rational b_, Rational c_) : a(a_), b(b_), c(c_) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("half-plane coefficients must be non-negative");
  if (a == 0 && b == 0) throw std::invalid_argument("half-plane needs a nonzero coefficient");
}

HalfPlane HalfPlane::bottleneck(int dest, Rational rho) {
  if (dest == 1) return HalfPlane(rho, 1, rho);
  if (dest == 2) return HalfPlane(1, rho, rho);
  throw std::invalid_argument("destination index must be 1 or 2");
}

std::optional<int> HalfPlane::bottleneck_dest() const {
  if (b == 1 && a == c && a > 0) return 1;
  if (a == 1 && b == c && b > 0) return 2;
  return std::nullopt;
}

std::optional<Rational> HalfPlane::bottleneck_weight() const {
  const auto dest = bottleneck_dest();
  if (!dest) return std::nullopt;
  return *dest == 1 ? a : b;
}

std::string to_string(const HalfPlane& h) {
  std::string lhs;
  if (h.a != 0) lhs = coefficient_term(h.a, "D1");
  if (h.b != 0) lhs += (lhs.empty() ? "" : " + ") + coefficient_term(h.b, "D2");
  return lhs + " <= " + to_string(h.c);
}

}  // namespace dofb
