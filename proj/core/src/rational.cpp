#include "repstab/rational.hpp"

#include <cctype>

#include "repstab/error.hpp"

namespace repstab {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// [-]digits, no leading '+', no blanks.
bool valid_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return all_digits(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den))
      throw Error(ErrorCode::bad_input,
                  "bad rational '" + std::string(text) + "'");
  }
  if (!valid_integer_token(num))
    throw Error(ErrorCode::bad_input, "bad rational '" + std::string(text) + "'");

  Rational q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0)
    throw Error(ErrorCode::bad_input, "bad rational '" + std::string(text) + "'");
  if (q.get_den() == 0)
    throw Error(ErrorCode::bad_input,
                "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

int sign(const Rational& value) { return sgn(value); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

long long to_longlong(const Rational& value) {
  if (!is_integer(value))
    throw Error(ErrorCode::bad_input, to_string(value) + " is not an integer");
  const Integer& num = value.get_num();
  if (!num.fits_slong_p())
    throw Error(ErrorCode::bad_input, to_string(value) + " out of range");
  return num.get_si();
}

}  // namespace repstab
