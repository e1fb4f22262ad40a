#include <cstdlib>

#include "sextic/groups.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace sextic {

namespace {

int hom_order_bound() {
  if (const char* env = std::getenv("SEXTIC_HOM_ORDER_BOUND")) return std::atoi(env);
  return 24;
}

void check_bound(const FiniteGroup& g) {
  int bound = hom_order_bound();
  if (g.order() > bound)
    throw std::invalid_argument("enumerate_homs: group order " + std::to_string(g.order()) +
                                " exceeds the configured bound " + std::to_string(bound) +
                                " (set SEXTIC_HOM_ORDER_BOUND to raise it)");
}

bool relators_hold(const Presentation& p, const FiniteGroup& g, const std::vector<int>& img) {
  for (const Word& r : p.relators) {
    int acc = g.identity();
    for (int letter : r.letters) {
      int x = img[std::abs(letter) - 1];
      acc = g.mul(acc, letter > 0 ? x : g.inverse(x));
    }
    if (acc != g.identity()) return false;
  }
  return true;
}

void enumerate_from(const Presentation& p, const FiniteGroup& g, std::vector<int>& img, size_t k,
                    std::vector<Hom>& out) {
  if (k == img.size()) {
    if (relators_hold(p, g, img)) out.push_back(Hom{img});
    return;
  }
  for (int x = 0; x < g.order(); ++x) {
    img[k] = x;
    enumerate_from(p, g, img, k + 1, out);
  }
}

}  // namespace

std::vector<Hom> enumerate_homs_serial(const Presentation& p, const FiniteGroup& g) {
  check_bound(g);
  std::vector<int> img(p.ngens, 0);
  std::vector<Hom> out;
  if (p.ngens == 0) {
    out.push_back(Hom{});
    return out;
  }
  enumerate_from(p, g, img, 0, out);
  return out;
}

std::vector<Hom> enumerate_homs(const Presentation& p, const FiniteGroup& g) {
  check_bound(g);
  if (p.ngens == 0) return {Hom{}};
#if defined(_OPENMP)
  // fan out over the image of the first generator; deterministic merge order
  std::vector<std::vector<Hom>> parts(g.order());
#pragma omp parallel for schedule(dynamic)
  for (int first = 0; first < g.order(); ++first) {
    std::vector<int> img(p.ngens, 0);
    img[0] = first;
    if (p.ngens == 1) {
      if (relators_hold(p, g, img)) parts[first].push_back(Hom{img});
    } else {
      enumerate_from(p, g, img, 1, parts[first]);
    }
  }
  std::vector<Hom> out;
  for (auto& part : parts)
    for (auto& h : part) out.push_back(std::move(h));
  return out;
#else
  return enumerate_homs_serial(p, g);
#endif
}

bool epimorphism_exists(const Presentation& p, const FiniteGroup& g) {
  for (const Hom& h : enumerate_homs(p, g))
    if (g.subgroup_order(h.images) == g.order()) return true;
  return false;
}

long hom_count(const Presentation& p, const FiniteGroup& g) {
  return static_cast<long>(enumerate_homs(p, g).size());
}

bool image_is_abelian(const Presentation& p, const FiniteGroup& g, const Hom& h) {
  (void)p;
  for (size_t i = 0; i < h.images.size(); ++i)
    for (size_t j = i + 1; j < h.images.size(); ++j)
      if (g.mul(h.images[i], h.images[j]) != g.mul(h.images[j], h.images[i])) return false;
  return true;
}

std::map<std::string, long> hom_count_spectrum(const Presentation& p, int order_bound) {
  if (order_bound > 24) throw std::invalid_argument("hom_count_spectrum: catalogue bound is 24");
  std::map<std::string, long> out;
  for (const FiniteGroup& g : group_catalogue(order_bound)) out[g.name()] = hom_count(p, g);
  return out;
}

}  // namespace sextic
