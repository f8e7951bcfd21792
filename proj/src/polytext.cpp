#include "srlab/polytext.hpp"

#include <cctype>

#include "srlab/error.hpp"

namespace srlab {

namespace {

class Parser {
 public:
  Parser(const FieldPtr& f, const std::string& s) : f_(f), s_(s) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(i_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (i_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[i_])) || s_[i_] == '$')) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  std::uint64_t number() {
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
      if (v > (1ull << 32)) fail("number too large");
      ++i_;
    }
    return v;
  }
  std::uint64_t exponent() {
    if (!peek('^')) return 1;
    ++i_;
    if (peek('{')) {
      ++i_;
      auto v = number();
      if (!peek('}')) fail("expected }");
      ++i_;
      return v;
    }
    return number();
  }
  Polynomial power(const Polynomial& b, std::uint64_t e) {
    Polynomial r(f_, {1});
    for (std::uint64_t k = 0; k < e; ++k) r = r * b;
    return r;
  }
  Polynomial atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected )");
      ++i_;
      return power(p, exponent());
    }
    if (c == 'x') {
      ++i_;
      return Polynomial::monomial(f_, exponent());
    }
    if (c == 'w') {
      if (f_->order() != 4) fail("w is only defined over GF(4)");
      ++i_;
      return Polynomial(f_, {f_->pow(2, exponent())});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto v = number();
      if (v >= f_->order()) fail("coefficient outside the field");
      return Polynomial(f_, {static_cast<Elem>(v)});
    }
    fail("unexpected character");
  }
  bool starts_atom() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == '(' || c == 'x' || c == 'w' || std::isdigit(static_cast<unsigned char>(c));
  }
  Polynomial product() {
    Polynomial p = atom();
    while (true) {
      if (peek('*')) {
        ++i_;
        p = p * atom();
      } else if (starts_atom()) {
        p = p * atom();
      } else {
        return p;
      }
    }
  }
  Polynomial expr() {
    bool negate = false;
    if (peek('-')) {
      ++i_;
      negate = true;
    }
    Polynomial p = product();
    if (negate) p = Polynomial(f_) - p;
    while (true) {
      if (peek('+')) {
        ++i_;
        p = p + product();
      } else if (peek('-')) {
        ++i_;
        p = p - product();
      } else {
        return p;
      }
    }
  }

  const FieldPtr& f_;
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const FieldPtr& f, const std::string& text) { return Parser(f, text).parse(); }

std::string format_element(const Field& f, Elem a) {
  if (f.order() == 4) {
    static const char* names[] = {"0", "1", "w", "w^2"};
    return names[a & 3];
  }
  return std::to_string(a);
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const Field& F = *p.field();
  bool f4 = F.order() == 4;
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    Elem c = p.coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    std::string coef = format_element(F, c);
    std::string mono = d == 0 ? "" : (d == 1 ? "x" : "x^" + std::to_string(d));
    if (d == 0) {
      out += coef;
    } else if (c == 1) {
      out += mono;
    } else {
      out += coef + (f4 ? "" : "*") + mono;
    }
  }
  return out;
}

}  // namespace srlab
