#include "hcaa/rational.hpp"

#include <cctype>

namespace hcaa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  bool ok = !digits.empty();
  for (char ch : digits) ok = ok && std::isdigit(static_cast<unsigned char>(ch));
  require(ok, ErrorKind::ParseError, "not a rational: '" + std::string(whole) + "'");
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  return Int(text);
}

}  // namespace

Rat parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s, text));
  const Int num = parse_int(s.substr(0, slash), text);
  const Int den = parse_int(s.substr(slash + 1), text);
  require(den != 0, ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

std::string to_string(const Rat& q) {
  if (is_integer(q)) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

bool rational_root(const Rat& value, unsigned k, Rat& root) {
  require(k >= 1, ErrorKind::InvalidInput, "rational_root: k must be positive");
  if (value == 0) {
    root = 0;
    return true;
  }
  const bool negative = value < 0;
  if (negative && k % 2 == 0) return false;
  const Int num = mp::abs(mp::numerator(value));
  const Int den = mp::denominator(value);
  auto exact_root = [k](const Int& x, Int& r) {
    Int lo = 0, hi = 1;
    while (mp::pow(hi, k) < x) hi *= 2;
    while (lo < hi) {
      const Int mid = (lo + hi) / 2;
      if (mp::pow(mid, k) < x) lo = mid + 1;
      else hi = mid;
    }
    r = lo;
    return mp::pow(lo, k) == x;
  };
  Int rn, rd;
  if (!exact_root(num, rn) || !exact_root(den, rd)) return false;
  root = Rat(rn, rd);
  if (negative) root = -root;
  return true;
}

}  // namespace hcaa
