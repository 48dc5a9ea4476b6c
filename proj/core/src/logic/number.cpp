#include "pk/logic/number.hpp"

#include <cctype>

namespace pk::logic {

Integer floor_div(const Integer& n, const Integer& d)
{
  Integer q = n / d;
  Integer r = n % d;
  if (r != 0 && ((r < 0) != (d < 0))) {
    q -= 1;
  }
  return q;
}

Integer floor_mod(const Integer& n, const Integer& d)
{
  return n - d * floor_div(n, d);
}

std::string to_string(const Rational& q)
{
  if (is_integral(q)) {
    return numerator(q).str();
  }
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text)
{
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer d{std::string(den)};
    if (d == 0) return std::nullopt;
    value = Rational(Integer{std::string(num)}, d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    value = Rational(digits, scale);
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Rational(Integer(std::string(text)));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace pk::logic
