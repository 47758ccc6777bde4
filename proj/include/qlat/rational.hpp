#pragma once

// Exact rational arithmetic for coordinates in the unit interval.
// Backed by boost::multiprecision (arbitrary precision, always reduced).

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qlat {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return numerator(r); }
inline BigInt rat_den(const Rat& r) { return denominator(r); }

inline bool in_unit_interval(const Rat& r) { return r >= 0 && r <= 1; }

inline void require_unit(const Rat& r, const char* what) {
  if (!in_unit_interval(r))
    throw std::invalid_argument(std::string(what) + " outside [0,1]: " + r.str());
}

// "p/q" or plain "p"; whitespace is not tolerated, signs are (values are
// range-checked by callers where a unit-interval coordinate is expected).
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational literal '" + s + "': " + e.what());
  }
}

// Integers print bare ("1", not "1/1") to keep serializations canonical.
inline std::string rat_show(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline BigInt rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

inline BigInt rat_ceil(const Rat& r) {
  BigInt f = rat_floor(r);
  return (Rat(f) == r) ? f : f + 1;
}

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

}  // namespace qlat
