#pragma once

#include <boost/rational.hpp>

#include <string>

namespace parahoric {

// Exact scalar type for all apartment geometry. boost::rational normalizes
// (gcd reduced, denominator > 0), which the ceil/floor code relies on.
using Rat = boost::rational<long long>;

inline long long rat_floor(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline long long rat_ceil(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

inline bool rat_is_integer(const Rat& r) { return r.denominator() == 1; }

// "p" for integers, "p/q" otherwise; used by every output path.
inline std::string rat_to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

}  // namespace parahoric
