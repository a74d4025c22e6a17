#pragma once

#include "alc/rational.hpp"

#include <numeric>
#include <optional>

namespace alc {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

inline Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec vscale(const Rat& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline Vec from_ints(const IVec& a) {
  Vec r;
  r.reserve(a.size());
  for (Int x : a) r.emplace_back(x);
  return r;
}

inline IVec ivadd(const IVec& a, const IVec& b) {
  IVec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

inline IVec ivsub(const IVec& a, const IVec& b) {
  IVec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

// Row rank by Gaussian elimination (exact).
inline int rank_of(Mat m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Solve A x = b for square A; nullopt when A is singular.
inline std::optional<Vec> solve_square(Mat a, Vec b) {
  int n = static_cast<int>(a.size());
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (int cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
      b[r] -= f * b[c];
    }
  }
  Vec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Scale a rational vector to a primitive integer vector with positive leading entry.
// Returns the scaled vector; `extra` (if given) is scaled by the same factor.
inline Vec make_primitive(Vec v, Rat* extra = nullptr) {
  BigInt lcm_den = 1;
  for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  BigInt gcd_num = 0;
  for (auto& x : v) {
    x *= lcm_den;
    gcd_num = boost::multiprecision::gcd(gcd_num, numerator(x));
  }
  if (gcd_num == 0) throw Error("make_primitive: zero vector");
  Rat factor = Rat(lcm_den, gcd_num);
  for (auto& x : v) x /= Rat(gcd_num);
  int lead = 1;
  for (const auto& x : v)
    if (x != 0) {
      lead = sgn(x);
      break;
    }
  if (lead < 0) {
    for (auto& x : v) x = -x;
    factor = -factor;
  }
  if (extra) *extra *= factor;
  return v;
}

inline std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s + ")";
}

inline std::string ivec_str(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace alc
