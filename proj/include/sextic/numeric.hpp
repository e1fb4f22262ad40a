#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace sextic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

// floor division (sign-safe); b != 0
inline Int fdiv(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// nearest-integer division, ties toward zero
inline Int ndiv(const Int& a, const Int& b) {
  Int q = fdiv(2 * a + b, 2 * b);
  return q;
}

inline std::string to_string(const Int& a) { return a.str(); }

// "p/q" form; integers render without the slash
inline std::string to_string(const Rat& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

Rat rat_from_string(const std::string& s);

}  // namespace sextic
