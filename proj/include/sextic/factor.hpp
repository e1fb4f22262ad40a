#pragma once

#include "sextic/poly.hpp"

namespace sextic {

bool is_probable_prime(const Int& n);
Int next_prime_above(Int n);

struct QFactor {
  QPoly factor;  // monic irreducible
  int mult;
};

// Complete factorization over Q: f = lead * prod factor_i^mult_i.
struct QFactorization {
  Rat lead;
  std::vector<QFactor> factors;  // canonically sorted
};

QFactorization factorize(const QPoly& f);
bool is_irreducible(const QPoly& f);

// primitive integer content split: f = content * primitive, primitive in Z[x] with gcd 1, lc > 0
std::pair<Rat, std::vector<Int>> primitive_z(const QPoly& f);

}  // namespace sextic
