#include "sextic/poly.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace sextic {

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int n(s.substr(0, slash)), d(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("rat_from_string: zero denominator");
  return Rat(n, d);
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.deg(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = a == 1 && i > 0;
    if (!unit) out += to_string(a);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

// recursive-descent parser over one variable; grammar: expr = term (+|- term)*,
// term = factor (('*'? factor) | '/' number)*, factor = base ('^' int)?,
// base = number | var | '(' expr ')' | '-' factor
struct Parser {
  const std::string& s;
  const std::string& var;
  size_t i = 0;

  void ws() {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  QPoly expr() {
    QPoly acc = term();
    while (true) {
      ws();
      if (eat('+'))
        acc = acc + term();
      else if (i < s.size() && s[i] == '-') {
        ++i;
        acc = acc - term();
      } else
        break;
    }
    return acc;
  }

  QPoly term() {
    QPoly acc = factor();
    while (true) {
      ws();
      if (eat('*')) {
        acc = acc * factor();
      } else if (i < s.size() && s[i] == '/') {
        ++i;
        QPoly d = factor();
        if (d.deg() != 0) throw std::invalid_argument("poly parse: division only by constants");
        acc = acc * (Rat(1) / d.c[0]);
      } else if (i < s.size() && (isalnum(static_cast<unsigned char>(s[i])) || s[i] == '(')) {
        acc = acc * factor();  // implicit multiplication
      } else
        break;
    }
    return acc;
  }

  QPoly factor() {
    QPoly b = base();
    ws();
    if (eat('^')) {
      ws();
      size_t j = i;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw std::invalid_argument("poly parse: exponent expected");
      int e = std::stoi(s.substr(i, j - i));
      i = j;
      return pow(b, e);
    }
    return b;
  }

  QPoly base() {
    ws();
    if (i >= s.size()) throw std::invalid_argument("poly parse: unexpected end");
    if (s[i] == '(') {
      ++i;
      QPoly e = expr();
      if (!eat(')')) throw std::invalid_argument("poly parse: ')' expected");
      return e;
    }
    if (s[i] == '-') {
      ++i;
      return -factor();
    }
    if (isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Int n(s.substr(i, j - i));
      i = j;
      return QPoly::constant(Rat(n));
    }
    if (s.compare(i, var.size(), var) == 0) {
      i += var.size();
      return QPoly::x();
    }
    throw std::invalid_argument("poly parse: unexpected character '" + std::string(1, s[i]) + "'");
  }
};

}  // namespace

QPoly qpoly_from_string(const std::string& s, const std::string& var) {
  Parser p{s, var};
  QPoly out = p.expr();
  p.ws();
  if (p.i != s.size()) throw std::invalid_argument("poly parse: trailing input");
  return out;
}

}  // namespace sextic
