#include "negder/parser.hpp"

#include <cctype>

#include "negder/errors.hpp"

namespace negder {

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "x" + std::to_string(i + 1);
  return names;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& variables)
      : text_(text), vars_(variables) {}

  Polynomial run() {
    Polynomial p = parse_poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial parse_poly() {
    std::size_t n = vars_.size();
    Polynomial acc(n);
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    acc += parse_term(neg);
    while (true) {
      if (accept('+'))
        acc += parse_term(false);
      else if (accept('-'))
        acc += parse_term(true);
      else
        break;
    }
    return acc;
  }

  Polynomial parse_term(bool negate) {
    Polynomial p = parse_factor();
    while (accept('*')) p *= parse_factor();
    return negate ? -p : p;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (accept('^')) {
      unsigned long e = parse_uint();
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = parse_poly();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long num = parse_uint();
      Rational q = make_rational(static_cast<long>(num));
      if (accept('/')) {
        unsigned long den = parse_uint();
        if (den == 0) fail("zero denominator");
        q = make_rational(static_cast<long>(num), static_cast<long>(den));
      }
      return Polynomial::constant(vars_.size(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
    fail(std::string("unexpected character '") + c + "'");
  }

  unsigned long parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 1000000000ul) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  Polynomial parse_variable() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++pos_;
      else
        break;
    }
    std::string name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return Polynomial::variable(vars_.size(), i);
    pos_ = start;
    fail("unknown variable '" + name + "'");
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
  return Parser(text, variables).run();
}

}  // namespace negder
