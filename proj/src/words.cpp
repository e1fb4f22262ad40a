#include "sextic/words.hpp"

#include <algorithm>

#include "sextic/poly.hpp"
#include <stdexcept>

namespace sextic {

Word Word::from_letters(std::vector<int> ls) {
  Word w;
  for (int x : ls) {
    if (x == 0) throw std::invalid_argument("Word: zero letter");
    if (!w.letters.empty() && w.letters.back() == -x)
      w.letters.pop_back();
    else
      w.letters.push_back(x);
  }
  return w;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<int> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return Word::from_letters(std::move(ls));
}

Word conjugated(const Word& x, const Word& w) { return w * x * w.inverse(); }

namespace {

std::vector<int> cyclic_reduction(std::vector<int> ls) {
  while (ls.size() >= 2 && ls.front() == -ls.back()) {
    ls.erase(ls.begin());
    ls.pop_back();
  }
  return ls;
}

}  // namespace

bool conjugate_in_free_group(const Word& a, const Word& b) {
  std::vector<int> x = cyclic_reduction(a.letters), y = cyclic_reduction(b.letters);
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  for (size_t r = 0; r < x.size(); ++r) {
    bool same = true;
    for (size_t i = 0; i < x.size() && same; ++i) same = x[(i + r) % x.size()] == y[i];
    if (same) return true;
  }
  return false;
}

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
  std::vector<int> ls;
  size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    ws();
    if (i >= text.size()) break;
    int which = -1;
    for (size_t g = 0; g < gens.size(); ++g)
      if (text.compare(i, gens[g].size(), gens[g]) == 0 &&
          (which < 0 || gens[g].size() > gens[which].size()))
        which = static_cast<int>(g);
    if (which < 0) throw std::invalid_argument("parse_word: unknown generator at '" + text.substr(i) + "'");
    i += gens[which].size();
    ws();
    int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      ws();
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      size_t j = i;
      while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument("parse_word: exponent expected");
      e = std::stoi(text.substr(i, j - i));
      if (neg) e = -e;
      i = j;
    }
    int sign = e < 0 ? -1 : 1;
    for (int k = 0; k < std::abs(e); ++k) ls.push_back(sign * (which + 1));
  }
  return Word::from_letters(std::move(ls));
}

std::string word_text(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.letters.size();) {
    int letter = w.letters[i];
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == letter) ++j;
    int e = static_cast<int>(j - i) * (letter > 0 ? 1 : -1);
    out += gens[std::abs(letter) - 1];
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Word Endomorphism::apply(const Word& w) const {
  std::vector<int> out;
  for (int letter : w.letters) {
    const Word& img = images[std::abs(letter) - 1];
    if (letter > 0)
      out.insert(out.end(), img.letters.begin(), img.letters.end());
    else {
      Word inv = img.inverse();
      out.insert(out.end(), inv.letters.begin(), inv.letters.end());
    }
  }
  return Word::from_letters(std::move(out));
}

Endomorphism Endomorphism::after(const Endomorphism& inner) const {
  Endomorphism out;
  out.ngens = inner.ngens;
  for (const Word& w : inner.images) out.images.push_back(apply(w));
  return out;
}

bool Endomorphism::is_identity() const {
  for (int i = 0; i < ngens; ++i)
    if (!(images[i] == Word::gen(i + 1))) return false;
  return true;
}

std::vector<std::string> Presentation::names() const {
  if (!gen_names.empty()) return gen_names;
  std::vector<std::string> out;
  for (int i = 1; i <= ngens; ++i) out.push_back("g" + std::to_string(i));
  return out;
}

Presentation parse_presentation(const std::vector<std::string>& gens, const std::vector<std::string>& relators) {
  Presentation p;
  p.ngens = static_cast<int>(gens.size());
  p.gen_names = gens;
  for (const std::string& r : relators) {
    auto eq = r.find('=');
    if (eq == std::string::npos)
      p.relators.push_back(parse_word(r, gens));
    else
      p.relators.push_back(parse_word(r.substr(0, eq), gens) * parse_word(r.substr(eq + 1), gens).inverse());
  }
  return p;
}

namespace {

Word w(std::initializer_list<int> ls) { return Word::from_letters(ls); }

}  // namespace

SpecialFiber special_fiber_from_name(const std::string& s) {
  if (s == "A0**" || s == "II") return SpecialFiber::A0ss;
  if (s == "A1*" || s == "III") return SpecialFiber::A1s;
  if (s == "A2*" || s == "IV") return SpecialFiber::A2s;
  throw std::invalid_argument("special fiber: expected A0**, A1* or A2* (II, III, IV)");
}

std::string special_fiber_name(SpecialFiber f) {
  switch (f) {
    case SpecialFiber::A0ss:
      return "A0**";
    case SpecialFiber::A1s:
      return "A1*";
    case SpecialFiber::A2s:
      return "A2*";
  }
  return "?";
}

Word monodromy_product() { return w({3, 2, 1}); }

Endomorphism monodromy(SpecialFiber f) {
  Word pi = monodromy_product();
  Endomorphism m;
  m.ngens = 3;
  switch (f) {
    case SpecialFiber::A0ss:
      m.images = {w({2}), w({3}), conjugated(w({1}), pi)};
      break;
    case SpecialFiber::A1s:
      m.images = {w({3}), conjugated(w({2}), w({3})), conjugated(w({1}), pi)};
      break;
    case SpecialFiber::A2s:
      m.images = {w({3}), conjugated(w({1}), pi), conjugated(w({2}), pi)};
      break;
  }
  return m;
}

Endomorphism monodromy_inverse(SpecialFiber f) {
  Word pi = monodromy_product();
  Endomorphism m;
  m.ngens = 3;
  Word x = conjugated(w({3}), pi.inverse());
  switch (f) {
    case SpecialFiber::A0ss:
      m.images = {x, w({1}), w({2})};
      break;
    case SpecialFiber::A1s:
      m.images = {x, conjugated(w({2}), w({1}).inverse()), w({1})};
      break;
    case SpecialFiber::A2s:
      m.images = {conjugated(w({2}), pi.inverse()), conjugated(w({3}), pi.inverse()), w({1})};
      break;
  }
  return m;
}

Presentation local_presentation(const Endomorphism& m) {
  Presentation p;
  p.ngens = m.ngens;
  p.gen_names = {};
  for (int i = 0; i < m.ngens; ++i) {
    Word r = m.images[i] * Word::gen(i + 1).inverse();
    if (!r.empty()) p.relators.push_back(r);
  }
  return p;
}

Presentation local_presentation(SpecialFiber f) {
  Presentation p = local_presentation(monodromy(f));
  p.gen_names = {"a1", "a2", "a3"};
  return p;
}

std::pair<int, TorsionGroup> abelianization(const Presentation& p) {
  IMat m(p.ngens, std::max<int>(1, static_cast<int>(p.relators.size())));
  for (size_t j = 0; j < p.relators.size(); ++j)
    for (int letter : p.relators[j].letters) m(std::abs(letter) - 1, static_cast<int>(j)) += letter > 0 ? 1 : -1;
  SmithDecomposition s = smith_normal_form(m);
  int rank = p.ngens;
  std::vector<Int> tors;
  const int n = std::min(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) {
    if (s.d(i, i) == 0) continue;
    --rank;
    if (s.d(i, i) > 1) tors.push_back(s.d(i, i));
  }
  std::sort(tors.begin(), tors.end());
  return {rank, TorsionGroup{tors}};
}

// ---- Fox calculus ----

namespace {

// integer Laurent polynomial with explicit offset
struct LP {
  int lo = 0;
  std::vector<Int> c;  // coefficient of t^(lo+i)

  bool zero() const { return c.empty(); }
  void trim() {
    size_t a = 0, b = c.size();
    while (b > a && c[b - 1] == 0) --b;
    while (a < b && c[a] == 0) ++a;
    if (a == b) {
      c.clear();
      lo = 0;
      return;
    }
    c = std::vector<Int>(c.begin() + a, c.begin() + b);
    lo += static_cast<int>(a);
  }
};

LP lp_add(const LP& a, const LP& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  int lo = std::min(a.lo, b.lo);
  int hi = std::max(a.lo + static_cast<int>(a.c.size()), b.lo + static_cast<int>(b.c.size()));
  LP r;
  r.lo = lo;
  r.c.assign(hi - lo, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[a.lo - lo + i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[b.lo - lo + i] += b.c[i];
  r.trim();
  return r;
}

LP lp_neg(LP a) {
  for (Int& x : a.c) x = -x;
  return a;
}

LP lp_mul(const LP& a, const LP& b) {
  if (a.zero() || b.zero()) return {};
  LP r;
  r.lo = a.lo + b.lo;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

LP lp_mono(int e, Int v) {
  LP r;
  r.lo = e;
  r.c = {std::move(v)};
  r.trim();
  return r;
}

// determinant by expansion (matrices stay tiny here)
LP lp_det(const std::vector<std::vector<LP>>& m) {
  size_t n = m.size();
  if (n == 0) return lp_mono(0, Int(1));
  if (n == 1) return m[0][0];
  LP acc;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].zero()) continue;
    std::vector<std::vector<LP>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<LP> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    LP term = lp_mul(m[0][j], lp_det(minor));
    acc = lp_add(acc, j % 2 == 0 ? term : lp_neg(term));
  }
  return acc;
}

// gcd of primitive integer polynomials via the rational gcd and contents
std::vector<Int> zpoly_gcd(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  auto content = [](const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
  };
  auto to_q = [](const std::vector<Int>& v) {
    std::vector<Rat> c;
    for (const Int& x : v) c.emplace_back(x);
    return QPoly(std::move(c));
  };
  QPoly g = gcd(to_q(a), to_q(b));
  // primitive integer form of the monic rational gcd
  Int l = 1;
  for (const Rat& q : g.c) l = lcm(l, den(q));
  std::vector<Int> z;
  Int zg = 0;
  for (const Rat& q : g.c) {
    z.push_back(num(q) * (l / den(q)));
    zg = gcd(zg, z.back());
  }
  for (Int& v : z) v /= zg;
  Int cg = gcd(content(a), content(b));
  for (Int& v : z) v *= cg;
  return z;
}

}  // namespace

std::string LaurentPoly::text() const {
  if (c.empty()) return "0";
  std::string out;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Int a = c[i];
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    Int v = iabs(a);
    if (v != 1 || i == 0) out += v.str();
    if (i > 0) {
      if (v != 1) out += "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

LaurentPoly fox_alexander(const Presentation& p, const std::vector<int>& aug) {
  if (static_cast<int>(aug.size()) != p.ngens) throw std::invalid_argument("fox_alexander: aug size mismatch");
  for (const Word& r : p.relators) {
    int total = 0;
    for (int letter : r.letters) total += letter > 0 ? aug[letter - 1] : -aug[-letter - 1];
    if (total != 0) throw std::invalid_argument("fox_alexander: aug is not a homomorphism to Z on the relators");
  }
  const int n = p.ngens;
  if (n == 1) return LaurentPoly{{Int(1)}};
  const int r = static_cast<int>(p.relators.size());
  // Fox jacobian evaluated through aug
  std::vector<std::vector<LP>> jac(r, std::vector<LP>(n));
  for (int i = 0; i < r; ++i) {
    int e = 0;
    for (int letter : p.relators[i].letters) {
      int g = std::abs(letter) - 1;
      if (letter > 0) {
        jac[i][g] = lp_add(jac[i][g], lp_mono(e, Int(1)));
        e += aug[g];
      } else {
        e -= aug[g];
        jac[i][g] = lp_add(jac[i][g], lp_mono(e, Int(-1)));
      }
    }
  }
  if (r < n - 1) return LaurentPoly{};  // first elementary ideal is zero
  // gcd of all (n-1) x (n-1) minors
  std::vector<int> rows(n - 1), cols(n - 1);
  std::vector<Int> acc;
  std::vector<int> rsel, csel;
  auto choose = [&](auto&& self, std::vector<int>& sel, int from, int total, int need, auto&& leaf) -> void {
    if (need == 0) {
      leaf();
      return;
    }
    for (int v = from; v <= total - need; ++v) {
      sel.push_back(v);
      self(self, sel, v + 1, total, need - 1, leaf);
      sel.pop_back();
    }
  };
  choose(choose, rsel, 0, r, n - 1, [&] {
    choose(choose, csel, 0, n, n - 1, [&] {
      std::vector<std::vector<LP>> minor(n - 1, std::vector<LP>(n - 1));
      for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) minor[i][j] = jac[rsel[i]][csel[j]];
      LP d = lp_det(minor);
      if (!d.zero()) acc = zpoly_gcd(acc, d.c);
    });
  });
  LaurentPoly out;
  out.c = std::move(acc);
  if (!out.c.empty() && out.c.back() < 0)
    for (Int& v : out.c) v = -v;
  return out;
}

LaurentPoly fox_alexander(const Presentation& p) { return fox_alexander(p, std::vector<int>(p.ngens, 1)); }

}  // namespace sextic
