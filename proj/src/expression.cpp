#include "lvlp/expression.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "lvlp/error.hpp"

namespace lvlp {

EvalPoint make_eval_point(const Real& alpha, const Real& phi) {
  if (!(alpha > 0)) throw std::invalid_argument("numeric evaluation needs alpha > 0");
  return {sqrt(alpha), phi};
}

namespace detail {

bool has_top_level_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && i > 0 && (c == '+' || c == '-')) return true;
  }
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Printing

namespace {

enum class Shape { kOne, kAtom, kProduct, kSum };

std::string alpha_power(std::size_t k) {
  if (k == 1) return "alpha";
  return "alpha^" + std::to_string(k);
}

// Integer polynomial in alpha, descending powers, e.g. "5*alpha^2+34*alpha+29".
std::string integer_poly(const std::vector<Integer>& coeffs, Shape& shape) {
  std::string out;
  int terms = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    ++terms;
    std::string t;
    if (k == 0) {
      t = c.get_str();
    } else if (c == 1) {
      t = alpha_power(k);
    } else if (c == -1) {
      t = "-" + alpha_power(k);
    } else {
      t = c.get_str() + "*" + alpha_power(k);
    }
    if (!out.empty() && t.front() != '-') out += "+";
    out += t;
  }
  if (terms > 1) {
    shape = Shape::kSum;
  } else if (out == "1") {
    shape = Shape::kOne;
  } else {
    shape = Shape::kAtom;
  }
  return out;
}

// content * [sqrt(alpha)] * P(alpha) with P primitive and positive leading term.
std::string print_part(const std::vector<Rational>& by_alpha_power, bool odd) {
  Integer den = common_denominator(by_alpha_power);
  std::vector<Integer> ints(by_alpha_power.size());
  Integer g = 0;
  for (std::size_t k = 0; k < ints.size(); ++k) {
    ints[k] = by_alpha_power[k].get_num() * (den / by_alpha_power[k].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[k].get_mpz_t());
  }
  std::size_t lead = ints.size();
  while (lead > 0 && ints[lead - 1] == 0) --lead;
  Rational content(g, den);
  content.canonicalize();
  if (ints[lead - 1] < 0) content = -content;
  for (auto& v : ints) v /= g;
  if (ints[lead - 1] < 0)
    for (auto& v : ints) v = -v;

  Shape shape;
  std::string body = integer_poly(ints, shape);
  if (odd) {
    if (shape == Shape::kOne) {
      body = "sqrt(alpha)";
      shape = Shape::kAtom;
    } else {
      body = "sqrt(alpha)*" + (shape == Shape::kSum ? "(" + body + ")" : body);
      shape = Shape::kProduct;
    }
  }
  if (shape == Shape::kOne) return to_string(content);

  const bool negative = content < 0;
  Integer num = abs(content.get_num());
  const Integer& cden = content.get_den();
  std::string n;
  Shape n_shape = shape;
  if (num == 1) {
    n = body;
  } else {
    n = num.get_str() + "*" + (shape == Shape::kSum ? "(" + body + ")" : body);
    n_shape = Shape::kProduct;
  }
  std::string out;
  if (cden == 1) {
    out = (negative && n_shape == Shape::kSum) ? "(" + n + ")" : n;
  } else {
    out = (n_shape == Shape::kAtom ? n : "(" + n + ")") + "/" + cden.get_str();
  }
  return negative ? "-" + out : out;
}

}  // namespace

std::string to_string(const SqrtAlphaPoly& p) {
  if (p.is_zero()) return "0";
  const auto& c = p.coefficients();
  std::vector<Rational> even, odd;
  for (std::size_t k = 0; k < c.size(); ++k) (k % 2 == 0 ? even : odd).push_back(c[k]);
  auto nonzero = [](const std::vector<Rational>& v) {
    for (const auto& x : v)
      if (x != 0) return true;
    return false;
  };
  std::string out;
  if (nonzero(even)) out = print_part(even, false);
  if (nonzero(odd)) {
    std::string o = print_part(odd, true);
    if (!out.empty() && o.front() != '-') out += "+";
    out += o;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using Value = PhiCoefficient<SqrtAlphaPoly>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                       what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      std::size_t end = pos_ + w.size();
      if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
      pos_ = end;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Value expr() {
    Value v;
    if (accept('-')) {
      v = -term();
    } else {
      accept('+');
      v = term();
    }
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        Value d = unary();
        auto q = d.as_rational();
        if (!q) fail("division by a non-constant");
        if (*q == 0) fail("division by zero");
        v = v * Rational(1 / *q);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (accept('^')) {
      Integer e = integer();
      if (e > 4096) fail("exponent too large");
      Value r{SqrtAlphaPoly(1)};
      for (unsigned long i = 0; i < e.get_ui(); ++i) r = r * base;
      return r;
    }
    return base;
  }

  int harmonic_argument() {
    expect('(');
    int k = 1;
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Integer n = integer();
      if (n == 0 || n > 1000000) fail("bad harmonic");
      k = static_cast<int>(n.get_si());
      expect('*');
    }
    if (!accept_word("phi")) fail("expected phi");
    expect(')');
    return k;
  }

  Value primary() {
    skip_ws();
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      return Value{SqrtAlphaPoly(Rational(integer()))};
    if (accept_word("sqrt")) {
      expect('(');
      if (!accept_word("alpha")) fail("only sqrt(alpha) is supported");
      expect(')');
      return Value{SqrtAlphaPoly::sqrt_alpha()};
    }
    if (accept_word("alpha")) return Value{SqrtAlphaPoly::alpha()};
    if (accept_word("sin")) return Value::sin_term(harmonic_argument(), SqrtAlphaPoly(1));
    if (accept_word("cos")) return Value::cos_term(harmonic_argument(), SqrtAlphaPoly(1));
    fail("unexpected token");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::shared_ptr<const Rational> alpha_of(const SqrtAlphaNumber& x) {
  if (!x.alpha()) throw AlgebraError("parse target carries no alpha context");
  return x.alpha();
}

std::shared_ptr<const Rational> alpha_of(const PhiCoefficient<SqrtAlphaNumber>& x) {
  for (const auto& [k, c] : x.cosines())
    if (c.alpha()) return c.alpha();
  for (const auto& [k, c] : x.sines())
    if (c.alpha()) return c.alpha();
  throw AlgebraError("parse target carries no alpha context");
}

}  // namespace

PhiCoefficient<SqrtAlphaPoly> parse_phi_coefficient(std::string_view text) { return Parser(text).parse(); }

SqrtAlphaPoly parse_sqrt_alpha_poly(std::string_view text) {
  Value v = parse_phi_coefficient(text);
  if (!v.is_constant()) throw AlgebraError("unexpected phi dependence in '" + std::string(text) + "'");
  return v.constant();
}

SqrtAlphaNumber parse_sqrt_alpha_number(std::string_view text, std::shared_ptr<const Rational> alpha) {
  return SqrtAlphaNumber::reduce(parse_sqrt_alpha_poly(text), std::move(alpha));
}

SqrtAlphaPoly parse_element(std::string_view text, const SqrtAlphaPoly&) { return parse_sqrt_alpha_poly(text); }

SqrtAlphaNumber parse_element(std::string_view text, const SqrtAlphaNumber& like) {
  return parse_sqrt_alpha_number(text, alpha_of(like));
}

PhiCoefficient<SqrtAlphaPoly> parse_element(std::string_view text, const PhiCoefficient<SqrtAlphaPoly>&) {
  return parse_phi_coefficient(text);
}

PhiCoefficient<SqrtAlphaNumber> parse_element(std::string_view text, const PhiCoefficient<SqrtAlphaNumber>& like) {
  auto alpha = alpha_of(like);
  return convert_coefficients<SqrtAlphaNumber>(parse_phi_coefficient(text),
                                               [&](const SqrtAlphaPoly& c) { return SqrtAlphaNumber::reduce(c, alpha); });
}

}  // namespace lvlp
