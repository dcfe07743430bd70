#include "lvlp/rational.hpp"

#include <cctype>

#include "lvlp/error.hpp"

namespace lvlp {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw AlgebraError("empty rational literal: '" + std::string(text) + "'");

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw AlgebraError("bad rational literal: '" + std::string(text) + "'");
    Integer d{std::string(den), 10};
    if (d == 0) throw AlgebraError("zero denominator in '" + std::string(text) + "'");
    result = Rational(Integer(std::string(num), 10), d);
    result.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      bool neg_exp = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        neg_exp = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6)
        throw AlgebraError("bad exponent in '" + std::string(text) + "'");
      exponent = std::stol(std::string(exp_text));
      if (neg_exp) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty()))
        throw AlgebraError("bad decimal literal: '" + std::string(text) + "'");
      digits = std::string(whole) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      if (!all_digits(s)) throw AlgebraError("bad rational literal: '" + std::string(text) + "'");
      digits = std::string(s);
    }
    Integer mantissa(digits, 10);
    if (exponent >= 0) {
      result = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
    } else {
      result = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
      result.canonicalize();
    }
  }
  if (negative) result = -result;
  return result;
}

}  // namespace lvlp
