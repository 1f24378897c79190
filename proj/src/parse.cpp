#include "blx/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace blx {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MPoly parse() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MPoly expr() {
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    else eat('+');
    MPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  MPoly factor() {
    MPoly base = atom();
    if (eat('^')) {
      skip_ws();
      unsigned long e = parse_uint();
      base = base.pow(e);
    }
    return base;
  }

  MPoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail("expected a number, variable or '('");
  }

  unsigned long parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an exponent");
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 10000) fail("exponent too large");
      ++pos_;
    }
    return v;
  }

  mpz_class parse_integer_literal() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_++]);
    }
    return mpz_class(digits);
  }

  MPoly number() {
    mpz_class num = parse_integer_literal();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        mpz_class den = parse_integer_literal();
        if (den == 0) {
          pos_ = save;
          fail("zero denominator");
        }
        mpq_class q(num, den);
        q.canonicalize();
        return MPoly(q);
      }
      pos_ = save;
      fail("expected denominator digits after '/'");
    }
    return MPoly(mpq_class(num));
  }

  MPoly variable() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    auto v = var_by_name(name);
    if (!v) {
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    return MPoly::variable(*v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void format_coeff_abs(std::ostringstream& os, const mpq_class& c, bool monomial_follows) {
  mpq_class a = abs(c);
  if (a == 1 && monomial_follows) return;
  os << a.get_num();
  if (a.get_den() != 1) os << '/' << a.get_den();
  if (monomial_follows) os << '*';
}

}  // namespace

MPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string format_poly(const MPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // leading term first
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool has_monomial = e != Exponents{};
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    format_coeff_abs(os, c, has_monomial);
    bool first_var = true;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << var_name(static_cast<Var>(i));
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

}  // namespace blx
