#include "alc/lp.hpp"

#include <algorithm>

namespace alc {
namespace {

// Dense tableau over exact rationals. Columns: structural vars, then slacks,
// then (phase 1 only) artificials; last column is the right-hand side.
struct Tableau {
  int rows = 0;
  int cols = 0;  // variable columns, excluding rhs
  std::vector<Vec> t;
  Vec obj;  // reduced-cost row; obj[cols] = -(current objective value)
  std::vector<int> basis;

  void pivot(int r, int c) {
    Rat p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rat f = t[i][c];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    if (obj[c] != 0) {
      Rat f = obj[c];
      for (int j = 0; j <= cols; ++j) obj[j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Bland's rule; true = optimal, false = unbounded.
  bool run() {
    constexpr int kMaxIters = 200000;
    for (int iter = 0; iter < kMaxIters; ++iter) {
      int enter = -1;
      for (int j = 0; j < cols; ++j)
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < rows; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = t[i][cols] / t[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    throw Error("simplex: iteration limit exceeded");
  }
};

}  // namespace

LpResult lp_maximize(const LinearSystem& sys, const Vec& objective) {
  const int n = static_cast<int>(objective.size());
  const int m_ge = static_cast<int>(sys.ge.size());
  const int m_eq = static_cast<int>(sys.eq.size());
  const int m = m_ge + m_eq;

  // Standard form: x = u - w with u,w >= 0; one surplus var per >= row.
  const int n_struct = 2 * n + m_ge;
  Tableau tb;
  tb.rows = m;
  tb.cols = n_struct + m;  // artificials appended
  tb.t.assign(m, Vec(tb.cols + 1, Rat(0)));
  tb.basis.resize(m);

  auto fill_row = [&](int r, const Vec& a, const Rat& b, int surplus_col) {
    for (int j = 0; j < n; ++j) {
      tb.t[r][j] = a[j];
      tb.t[r][n + j] = -a[j];
    }
    if (surplus_col >= 0) tb.t[r][surplus_col] = -1;  // a.x - s = b
    tb.t[r][tb.cols] = b;
  };
  for (int r = 0; r < m_ge; ++r) fill_row(r, sys.ge[r], sys.ge_rhs[r], 2 * n + r);
  for (int r = 0; r < m_eq; ++r) fill_row(m_ge + r, sys.eq[r], sys.eq_rhs[r], -1);

  // Nonnegative rhs, artificial basis.
  for (int r = 0; r < m; ++r) {
    if (tb.t[r][tb.cols] < 0)
      for (auto& v : tb.t[r]) v = -v;
    tb.t[r][n_struct + r] = 1;
    tb.basis[r] = n_struct + r;
  }

  // Phase 1: maximize -(sum of artificials); reduced costs = column sums.
  tb.obj.assign(tb.cols + 1, Rat(0));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= tb.cols; ++j)
      if (j < n_struct || j == tb.cols) tb.obj[j] += tb.t[r][j];
  if (!tb.run()) throw Error("simplex: phase 1 unbounded");
  if (tb.obj[tb.cols] != 0) return {LpStatus::Infeasible, Rat(0), {}};

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (int r = static_cast<int>(tb.basis.size()) - 1; r >= 0; --r) {
    if (tb.basis[r] < n_struct) continue;
    int c = -1;
    for (int j = 0; j < n_struct; ++j)
      if (tb.t[r][j] != 0) {
        c = j;
        break;
      }
    if (c >= 0) {
      tb.pivot(r, c);
    } else {
      tb.t.erase(tb.t.begin() + r);
      tb.basis.erase(tb.basis.begin() + r);
      --tb.rows;
    }
  }

  // Remove artificial columns.
  for (auto& row : tb.t) {
    row.erase(row.begin() + n_struct, row.begin() + n_struct + m);
  }
  tb.obj.erase(tb.obj.begin() + n_struct, tb.obj.begin() + n_struct + m);
  tb.cols = n_struct;

  // Phase 2 objective, with basic columns eliminated.
  tb.obj.assign(tb.cols + 1, Rat(0));
  for (int j = 0; j < n; ++j) {
    tb.obj[j] = objective[j];
    tb.obj[n + j] = -objective[j];
  }
  for (int r = 0; r < tb.rows; ++r) {
    int b = tb.basis[r];
    if (tb.obj[b] == 0) continue;
    Rat f = tb.obj[b];
    for (int j = 0; j <= tb.cols; ++j) tb.obj[j] -= f * tb.t[r][j];
  }
  if (!tb.run()) return {LpStatus::Unbounded, Rat(0), {}};

  Vec y(tb.cols, Rat(0));
  for (int r = 0; r < tb.rows; ++r) y[tb.basis[r]] = tb.t[r][tb.cols];
  Vec x(n);
  for (int j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
  return {LpStatus::Optimal, -tb.obj[tb.cols], std::move(x)};
}

StrictResult strict_feasible(const Mat& strict, const Vec& strict_rhs,
                             const Mat& weak, const Vec& weak_rhs,
                             const Mat& eq, const Vec& eq_rhs) {
  std::size_t n = 0;
  if (!strict.empty()) n = strict[0].size();
  else if (!weak.empty()) n = weak[0].size();
  else if (!eq.empty()) n = eq[0].size();

  // Variables (x, t): maximize t with every strict row holding margin t, t <= 1.
  LinearSystem sys;
  for (std::size_t i = 0; i < strict.size(); ++i) {
    Vec row = strict[i];
    row.push_back(-1);
    sys.add_ge(std::move(row), strict_rhs[i]);
  }
  for (std::size_t i = 0; i < weak.size(); ++i) {
    Vec row = weak[i];
    row.push_back(0);
    sys.add_ge(std::move(row), weak_rhs[i]);
  }
  for (std::size_t i = 0; i < eq.size(); ++i) {
    Vec row = eq[i];
    row.push_back(0);
    sys.add_eq(std::move(row), eq_rhs[i]);
  }
  Vec cap(n + 1, Rat(0));
  cap[n] = -1;
  sys.add_ge(std::move(cap), Rat(-1));  // t <= 1

  Vec obj(n + 1, Rat(0));
  obj[n] = 1;
  LpResult r = lp_maximize(sys, obj);
  StrictResult out;
  if (r.status != LpStatus::Optimal || r.value <= 0) return out;
  out.feasible = true;
  out.slack = r.value;
  out.point.assign(r.x.begin(), r.x.begin() + n);
  return out;
}

std::vector<Vec> polytope_vertices(const Mat& a, const Vec& b) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return {};
  const int d = static_cast<int>(a[0].size());
  std::vector<Vec> out;
  std::vector<int> idx(d);
  auto consider = [&](const std::vector<int>& rows) {
    Mat sub;
    Vec rhs;
    for (int r : rows) {
      sub.push_back(a[r]);
      rhs.push_back(b[r]);
    }
    auto x = solve_square(sub, rhs);
    if (!x) return;
    for (int r = 0; r < m; ++r)
      if (dot(a[r], *x) < b[r]) return;
    out.push_back(*x);
  };
  // All d-subsets of rows.
  std::vector<int> comb(d);
  auto rec = [&](auto&& self, int start, int k) -> void {
    if (k == d) {
      consider(comb);
      return;
    }
    for (int r = start; r < m; ++r) {
      comb[k] = r;
      self(self, r + 1, k + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace alc
