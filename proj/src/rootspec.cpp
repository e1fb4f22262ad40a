#include "sextic/rootspec.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sextic {

ADESymbol ade(ADEFamily f, int index) {
  bool ok = (f == ADEFamily::A && index >= 1) || (f == ADEFamily::D && index >= 4) ||
            (f == ADEFamily::E && index >= 6 && index <= 8);
  if (!ok) throw std::invalid_argument("ade: index out of range for family");
  return ADESymbol{f, index};
}

int ADESymbol::branches() const {
  switch (family) {
    case ADEFamily::A:
      return index % 2 == 0 ? 1 : 2;
    case ADEFamily::D:
      return index % 2 == 0 ? 3 : 2;
    case ADEFamily::E:
      return index == 7 ? 2 : 1;
  }
  return 1;
}

int ADESymbol::delta() const { return (milnor() + branches() - 1) / 2; }

std::string ADESymbol::name() const {
  const char* f = family == ADEFamily::A ? "A" : family == ADEFamily::D ? "D" : "E";
  return f + std::to_string(index);
}

RootSystemSpec::RootSystemSpec(std::vector<ADESymbol> s) : summands(std::move(s)) {
  std::sort(summands.begin(), summands.end());
}

int RootSystemSpec::total_rank() const {
  int r = 0;
  for (const auto& s : summands) r += s.rank();
  return r;
}

std::string RootSystemSpec::name() const {
  if (summands.empty()) return "0";
  // group equal symbols with a multiplicity prefix, largest symbol first
  std::map<ADESymbol, int> mult;
  for (const auto& s : summands) ++mult[s];
  std::string out;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    if (!out.empty()) out += "+";
    if (it->second > 1) out += std::to_string(it->second);
    out += it->first.name();
  }
  return out;
}

RootSystemSpec parse_spec(const std::string& s) {
  std::vector<ADESymbol> out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= s.size() || s == "0") return RootSystemSpec{};
  while (true) {
    skip_ws();
    int mult = 1;
    if (i < s.size() && isdigit(s[i])) {
      size_t j = i;
      while (j < s.size() && isdigit(s[j])) ++j;
      mult = std::stoi(s.substr(i, j - i));
      i = j;
    }
    skip_ws();
    if (i >= s.size()) throw std::invalid_argument("parse_spec: symbol expected in '" + s + "'");
    char f = s[i++];
    ADEFamily fam;
    if (f == 'A' || f == 'a')
      fam = ADEFamily::A;
    else if (f == 'D' || f == 'd')
      fam = ADEFamily::D;
    else if (f == 'E' || f == 'e')
      fam = ADEFamily::E;
    else
      throw std::invalid_argument("parse_spec: bad family in '" + s + "'");
    skip_ws();
    size_t j = i;
    while (j < s.size() && isdigit(s[j])) ++j;
    if (j == i) throw std::invalid_argument("parse_spec: index expected in '" + s + "'");
    int idx = std::stoi(s.substr(i, j - i));
    i = j;
    for (int k = 0; k < mult; ++k) out.push_back(ade(fam, idx));
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] != '+') throw std::invalid_argument("parse_spec: '+' expected in '" + s + "'");
    ++i;
  }
  return RootSystemSpec(std::move(out));
}

std::vector<std::pair<int, int>> ade_edges(const ADESymbol& s) {
  std::vector<std::pair<int, int>> e;
  const int n = s.index;
  switch (s.family) {
    case ADEFamily::A:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case ADEFamily::D:
      // path 0-1-...-(n-3), fork to n-2 and n-1
      for (int i = 0; i + 1 < n - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 2);
      e.emplace_back(n - 3, n - 1);
      break;
    case ADEFamily::E:
      // path 0-1-2-3-(4..), node n-1 attached to vertex 2
      for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(2, n - 1);
      break;
  }
  return e;
}

GramLattice ade_gram(const ADESymbol& s) {
  const int n = s.index;
  IMat g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [i, j] : ade_edges(s)) {
    g(i, j) = 1;
    g(j, i) = 1;
  }
  return GramLattice(n, g);
}

GramLattice spec_gram(const RootSystemSpec& s) {
  GramLattice g(0, IMat(0, 0));
  for (const auto& sym : s.summands) g = direct_sum(g, ade_gram(sym));
  return g;
}

std::vector<RootSystemSpec> all_specs_up_to_rank(int max_rank) {
  std::vector<ADESymbol> symbols;
  for (int p = 1; p <= max_rank; ++p) symbols.push_back(ade(ADEFamily::A, p));
  for (int q = 4; q <= max_rank; ++q) symbols.push_back(ade(ADEFamily::D, q));
  for (int r = 6; r <= std::min(8, max_rank); ++r) symbols.push_back(ade(ADEFamily::E, r));
  std::vector<RootSystemSpec> out;
  std::vector<ADESymbol> cur;
  // multisets in nonincreasing symbol order
  auto rec = [&](auto&& self, size_t start, int left) -> void {
    if (!cur.empty()) out.push_back(RootSystemSpec(cur));
    for (size_t i = start; i < symbols.size(); ++i) {
      if (symbols[i].rank() > left) continue;
      cur.push_back(symbols[i]);
      self(self, i, left - symbols[i].rank());
      cur.pop_back();
    }
  };
  rec(rec, 0, max_rank);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sextic
