#include "blowuplab/rational.hpp"

#include "blowuplab/errors.hpp"

#include <algorithm>
#include <cctype>

namespace blowuplab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    if (text.find_first_of(".eE") != std::string_view::npos)
      throw ParseError("floating-point literal '" + std::string(text) +
                       "' is not allowed; write exact rationals as \"p/q\"");
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }

  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
  };
  mpz_class n(strip_plus(num));
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(strip_plus(den));
    if (d == 0)
      throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational &value) { return value.get_str(); }

bool is_zero_vector(const RationalVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Rational &x) { return is_zero(x); });
}

std::string to_string(const RationalVector &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0)
      out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

} // namespace blowuplab
