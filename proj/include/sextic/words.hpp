#pragma once

#include <map>
#include <string>
#include <vector>

#include "sextic/lattice.hpp"

namespace sextic {

// freely reduced word in a free group; letter +i / -i is the i-th generator
// (1-based) or its inverse
struct Word {
  std::vector<int> letters;

  Word() = default;
  static Word from_letters(std::vector<int> ls);
  static Word gen(int i) { return from_letters({i}); }
  bool empty() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  Word inverse() const;
  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator<(const Word& o) const { return letters < o.letters; }
};

Word operator*(const Word& a, const Word& b);
// w x w^-1
Word conjugated(const Word& x, const Word& w);
// conjugacy test in the free group (cyclic reduction + rotation)
bool conjugate_in_free_group(const Word& a, const Word& b);

Word parse_word(const std::string& text, const std::vector<std::string>& gens);
std::string word_text(const Word& w, const std::vector<std::string>& gens);

struct Endomorphism {
  int ngens = 0;
  std::vector<Word> images;  // images[i] = image of generator i+1

  Word apply(const Word& w) const;
  Endomorphism after(const Endomorphism& inner) const;  // this . inner
  bool is_identity() const;
};

struct Presentation {
  int ngens = 0;
  std::vector<Word> relators;
  std::vector<std::string> gen_names;  // optional; defaults g1, g2, ...

  std::vector<std::string> names() const;
};

// "aba = bab" or "a b a B" style relators; '=' is l r^-1 sugar; '^-1' postfix
Presentation parse_presentation(const std::vector<std::string>& gens, const std::vector<std::string>& relators);

// the three explicit local monodromies about the special fibers, acting on the
// standard generators a1, a2, a3; the boundary product a3 a2 a1 is fixed
// exactly by each of them
enum class SpecialFiber { A0ss, A1s, A2s };  // A0**, A1*, A2*
SpecialFiber special_fiber_from_name(const std::string& s);
std::string special_fiber_name(SpecialFiber f);

Endomorphism monodromy(SpecialFiber f);
Endomorphism monodromy_inverse(SpecialFiber f);
Word monodromy_product();  // a3 a2 a1

Presentation local_presentation(SpecialFiber f);
Presentation local_presentation(const Endomorphism& m);

// SNF of the relator exponent matrix
std::pair<int, TorsionGroup> abelianization(const Presentation& p);

// integer Laurent polynomial, normalized: lowest exponent 0, positive leading
// coefficient
struct LaurentPoly {
  std::vector<Int> c;  // ascending from exponent 0 after normalization

  bool operator==(const LaurentPoly& o) const { return c == o.c; }
  std::string text() const;
};

LaurentPoly fox_alexander(const Presentation& p, const std::vector<int>& aug);
LaurentPoly fox_alexander(const Presentation& p);  // aug = all generators to 1

}  // namespace sextic
