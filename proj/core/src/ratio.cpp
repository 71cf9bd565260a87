#include "aimdsim/ratio.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aimdsim {

Ratio ratio_pow(const Ratio& base, unsigned exp) {
  Ratio result(1);
  Ratio b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
}

// Parses a decimal literal (no sign, no slash): digits[.digits][e[+-]digits].
Ratio parse_decimal(std::string_view text, std::string_view whole) {
  std::string_view s = whole;
  int exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view es = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = es[0] == '-';
      es = es.substr(1);
    }
    if (!is_digits(es) || es.size() > 6) bad(text);
    exp10 = std::stoi(std::string(es));
    if (eneg) exp10 = -exp10;
  }
  std::string_view ipart = s;
  std::string_view fpart;
  auto dot = s.find('.');
  if (dot != std::string_view::npos) {
    ipart = s.substr(0, dot);
    fpart = s.substr(dot + 1);
  }
  if (ipart.empty() && fpart.empty()) bad(text);
  if (!ipart.empty() && !is_digits(ipart)) bad(text);
  if (!fpart.empty() && !is_digits(fpart)) bad(text);

  BigInt mantissa(0);
  for (char c : ipart) mantissa = mantissa * 10 + (c - '0');
  for (char c : fpart) mantissa = mantissa * 10 + (c - '0');
  exp10 -= static_cast<int>(fpart.size());

  BigInt num = mantissa;
  BigInt den = 1;
  if (exp10 > 0) {
    for (int i = 0; i < exp10; ++i) num *= 10;
  } else {
    for (int i = 0; i < -exp10; ++i) den *= 10;
  }
  return Ratio(num, den);
}

}  // namespace

Ratio parse_ratio(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) bad(text);

  Ratio value;
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) bad(text);
    BigInt n(std::string(num));
    BigInt d(std::string(den));
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    value = Ratio(n, d);
  } else {
    value = parse_decimal(text, s);
  }
  return negative ? -value : value;
}

Ratio ratio_from_double(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("non-finite value has no rational form");
  }
  return Ratio(value);
}

double ratio_to_double(const Ratio& value) { return value.convert_to<double>(); }

std::string ratio_to_string(const Ratio& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace aimdsim
