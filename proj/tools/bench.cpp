// benchmark comparing the serial reference kernels against the OpenMP ones
#include <chrono>
#include <cstdio>
#include <cstring>

#include "sextic/e8.hpp"
#include "sextic/groups.hpp"

using namespace sextic;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;

  auto odd = [](const TorsionGroup& k) { return !k.trivial() && k.order() % 2 != 0; };
  if (quick) {
    // small spectrum comparison only
    Presentation p = local_presentation(SpecialFiber::A2s);
    FiniteGroup g = symmetric4();
    std::vector<Hom> serial_out, parallel_out;
    double ts = seconds([&] { serial_out = enumerate_homs_serial(p, g); });
    double tp = seconds([&] { parallel_out = enumerate_homs(p, g); });
    if (serial_out.size() != parallel_out.size()) {
      printf("MISMATCH\n");
      return 1;
    }
    printf("hom enumeration (S4, 3 generators): serial %.3fs, parallel %.3fs, %zu homs\n", ts, tp,
           serial_out.size());
    return 0;
  }

  {
    Presentation p = local_presentation(SpecialFiber::A2s);
    const int reps = 200;
    double ts = 0, tp = 0;
    size_t n = 0;
    for (const FiniteGroup& g : group_catalogue(24)) {
      std::vector<Hom> a, b;
      ts += seconds([&] {
        for (int r = 0; r < reps; ++r) a = enumerate_homs_serial(p, g);
      });
      tp += seconds([&] {
        for (int r = 0; r < reps; ++r) b = enumerate_homs(p, g);
      });
      if (a.size() != b.size()) {
        printf("MISMATCH on %s\n", g.name().c_str());
        return 1;
      }
      n += a.size();
    }
    printf("hom spectrum up to order 24 (x%d): serial %.2fs, parallel %.2fs, %zu homs per pass\n", reps, ts, tp, n);
  }
  {
    std::vector<ClassificationRow> a, b;
    double ts = seconds([&] { a = classify_by_predicate_serial([&](const TorsionGroup& k) { return odd(k); }); });
    double tp = seconds([&] { b = classify_by_predicate([&](const TorsionGroup& k) { return odd(k); }); });
    if (a.size() != b.size()) {
      printf("MISMATCH in classification\n");
      return 1;
    }
    printf("odd-torsion classification scan: serial %.1fs, parallel %.1fs, %zu rows\n", ts, tp, a.size());
  }
  return 0;
}
