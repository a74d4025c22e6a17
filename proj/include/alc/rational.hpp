#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace alc {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Invalid user input: bad type label, non-prime p, dimension-0 parameter space, ...
struct ConfigError : Error {
  using Error::Error;
};
// Violated geometric precondition or contract (point on a wall, alcove not on face, ...).
struct GeometryError : Error {
  using Error::Error;
};
// A verification suite found a counterexample that must never be ignored.
struct VerificationError : Error {
  using Error::Error;
};

inline int sgn(const Rat& x) { return x.sign(); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Largest integer <= x.
inline BigInt rat_floor(const Rat& x) {
  BigInt num = numerator(x), den = denominator(x);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

inline bool rat_is_integer(const Rat& x) { return denominator(x) == 1; }

// Canonical text form: "p" or "p/q" with q > 0.
inline std::string rat_str(const Rat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline bool fits_int(const BigInt& x) {
  return x >= std::numeric_limits<Int>::min() && x <= std::numeric_limits<Int>::max();
}

inline Int to_int(const BigInt& x) {
  if (!fits_int(x)) throw Error("integer overflow converting big integer");
  return x.convert_to<Int>();
}

}  // namespace alc
