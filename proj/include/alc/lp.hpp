#pragma once

#include "alc/linalg.hpp"

#include <optional>

namespace alc {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  Vec x;
};

// A system of linear conditions over free variables.
struct LinearSystem {
  Mat ge;
  Vec ge_rhs;  // a.x >= b
  Mat eq;
  Vec eq_rhs;  // a.x == b

  void add_ge(Vec a, Rat b) {
    ge.push_back(std::move(a));
    ge_rhs.push_back(std::move(b));
  }
  void add_le(Vec a, Rat b) {
    for (auto& v : a) v = -v;
    add_ge(std::move(a), -b);
  }
  void add_eq(Vec a, Rat b) {
    eq.push_back(std::move(a));
    eq_rhs.push_back(std::move(b));
  }
  std::size_t vars() const {
    if (!ge.empty()) return ge[0].size();
    if (!eq.empty()) return eq[0].size();
    return 0;
  }
};

// Exact two-phase simplex (Bland's rule), variables unrestricted in sign.
LpResult lp_maximize(const LinearSystem& sys, const Vec& objective);

inline LpResult lp_minimize(const LinearSystem& sys, const Vec& objective) {
  Vec neg(objective);
  for (auto& v : neg) v = -v;
  LpResult r = lp_maximize(sys, neg);
  r.value = -r.value;
  return r;
}

struct StrictResult {
  bool feasible = false;
  Vec point;
  Rat slack;  // best uniform margin achieved (capped at 1)
};

// Decide whether {strict.x > strict_rhs, weak.x >= weak_rhs, eq.x == eq_rhs} has a
// solution, maximizing the uniform slack of the strict rows. The returned point
// satisfies every strict row with margin `slack` > 0.
StrictResult strict_feasible(const Mat& strict, const Vec& strict_rhs,
                             const Mat& weak = {}, const Vec& weak_rhs = {},
                             const Mat& eq = {}, const Vec& eq_rhs = {});

// Vertices of the polytope {x : A.x >= b}. The polytope must be bounded;
// brute force over d-subsets of rows, deduplicated, sorted lexicographically.
std::vector<Vec> polytope_vertices(const Mat& a, const Vec& b);

}  // namespace alc
