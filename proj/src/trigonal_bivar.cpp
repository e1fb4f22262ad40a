#include <cctype>

#include "sextic/bivar.hpp"

namespace sextic {

KP kp_lift(const QPoly& f) {
  std::vector<NFElem> c;
  c.reserve(f.c.size());
  for (const Rat& q : f.c) c.emplace_back(q);
  return KP(std::move(c));
}

KK kk_lift(const QQ& f) {
  std::vector<KP> c;
  c.reserve(f.c.size());
  for (const QPoly& q : f.c) c.push_back(kp_lift(q));
  return KK(std::move(c));
}

QQ qq_dx(const QQ& f) {
  std::vector<QPoly> c;
  c.reserve(f.c.size());
  for (const QPoly& q : f.c) c.push_back(derivative(q));
  return QQ(std::move(c));
}

KK kk_dx(const KK& f) {
  std::vector<KP> c;
  c.reserve(f.c.size());
  for (const KP& q : f.c) c.push_back(derivative(q));
  return KK(std::move(c));
}

int total_degree(const QQ& f) {
  int d = -1;
  for (int j = 0; j <= f.deg(); ++j)
    if (!f.coeff(j).is_zero()) d = std::max(d, j + f.coeff(j).deg());
  return d;
}

int total_degree_kk(const KK& f) {
  int d = -1;
  for (int j = 0; j <= f.deg(); ++j)
    if (!f.coeff(j).is_zero()) d = std::max(d, j + f.coeff(j).deg());
  return d;
}

KK kk_translate(const KK& f, const NFElem& a, const NFElem& b) {
  // y-shift first, then x-shift each coefficient
  KK g = shifted(f, KP::constant(b));
  std::vector<KP> c;
  c.reserve(g.c.size());
  for (const KP& q : g.c) c.push_back(shifted(q, a));
  return KK(std::move(c));
}

QQ qq_translate(const QQ& f, const Rat& a, const Rat& b) {
  QQ g = shifted(f, QPoly::constant(b));
  std::vector<QPoly> c;
  c.reserve(g.c.size());
  for (const QPoly& q : g.c) c.push_back(shifted(q, a));
  return QQ(std::move(c));
}

QQ qq_shift_y(const QQ& f, const QPoly& s) { return shifted(f, s); }

NFElem kk_eval(const KK& f, const NFElem& x, const NFElem& y) {
  NFElem acc(0);
  for (size_t j = f.c.size(); j-- > 0;) acc = acc * y + f.c[j].eval(x);
  return acc;
}

Rat qq_eval(const QQ& f, const Rat& x, const Rat& y) {
  Rat acc(0);
  for (size_t j = f.c.size(); j-- > 0;) acc = acc * y + f.c[j].eval(x);
  return acc;
}

NFElem kk_coeff_xy(const KK& f, int i, int j) { return f.coeff(j).coeff(i); }

std::string to_string(const KP& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.deg(); i >= 0; --i) {
    if (p.coeff(i).is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = to_string(p.coeff(i));
    if (i == 0) {
      out += cs;
      continue;
    }
    std::string xp = i == 1 ? var : var + "^" + std::to_string(i);
    if (cs == "1")
      out += xp;
    else if (cs == "-1")
      out += "-" + xp;
    else if (cs.find(' ') != std::string::npos || cs.find('t') != std::string::npos)
      out += "(" + cs + ")*" + xp;
    else
      out += cs + "*" + xp;
  }
  return out;
}

std::string to_string(const QQ& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int j = f.deg(); j >= 0; --j) {
    const QPoly& c = f.coeff(j);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = to_string(c, "x");
    if (j == 0) {
      out += cs;
      continue;
    }
    std::string ypart = j == 1 ? "y" : "y^" + std::to_string(j);
    if (cs == "1")
      out += ypart;
    else if (cs == "-1")
      out += "-" + ypart;
    else if (c.deg() > 0 || cs.find('-') != std::string::npos)
      out += "(" + cs + ")*" + ypart;
    else
      out += cs + "*" + ypart;
  }
  return out;
}

namespace {

// two-variable recursive descent, mirrors the univariate grammar
struct Parser2 {
  const std::string& s;
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

  QQ expr() {
    QQ acc = term();
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

  QQ term() {
    QQ acc = factor();
    while (true) {
      ws();
      if (eat('*')) {
        acc = acc * factor();
      } else if (i < s.size() && s[i] == '/') {
        ++i;
        QQ d = factor();
        if (total_degree(d) != 0) throw std::invalid_argument("curve parse: division only by constants");
        Rat v = d.coeff(0).coeff(0);
        acc = acc * QPoly::constant(Rat(1) / v);
      } else if (i < s.size() && (isalnum(static_cast<unsigned char>(s[i])) || s[i] == '(')) {
        acc = acc * factor();
      } else
        break;
    }
    return acc;
  }

  QQ factor() {
    QQ b = base();
    ws();
    if (eat('^')) {
      ws();
      size_t j = i;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw std::invalid_argument("curve parse: exponent expected");
      int e = std::stoi(s.substr(i, j - i));
      i = j;
      return pow(b, e);
    }
    return b;
  }

  QQ base() {
    ws();
    if (i >= s.size()) throw std::invalid_argument("curve parse: unexpected end");
    if (s[i] == '(') {
      ++i;
      QQ e = expr();
      if (!eat(')')) throw std::invalid_argument("curve parse: ')' expected");
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
      return QQ::constant(QPoly::constant(Rat(n)));
    }
    if (s[i] == 'x') {
      ++i;
      return QQ::constant(QPoly::x());
    }
    if (s[i] == 'y') {
      ++i;
      return QQ::x();
    }
    throw std::invalid_argument("curve parse: unexpected character");
  }
};

}  // namespace

QQ qq_from_string(const std::string& s) {
  Parser2 p{s};
  QQ out = p.expr();
  p.ws();
  if (p.i != s.size()) throw std::invalid_argument("curve parse: trailing input");
  return out;
}

}  // namespace sextic
