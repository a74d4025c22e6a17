#include "alc/arrangement.hpp"

#include "alc/parallel.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace alc {
namespace {

std::string signs_to_id(const std::vector<int8_t>& s) {
  std::string id(s.size(), '?');
  for (std::size_t i = 0; i < s.size(); ++i) id[i] = s[i] > 0 ? '+' : '-';
  return id;
}

// Does the sample's slab lie strictly inside the level range for every family?
bool sample_is_kept(const Window& w, const Vec& sample) {
  for (int r : w.family_roots) {
    Rat q = w.family_value(r, sample) / Rat(w.p);
    if (rat_is_integer(q)) return false;
    BigInt n = rat_floor(q);
    if (n < -w.level_bound || n + 1 > w.level_bound) return false;
  }
  return true;
}

struct SignSystem {
  Mat rows;
  Vec rhs;
};

SignSystem strict_rows(const Window& w, const std::vector<int8_t>& signs,
                       int skip = -1, const std::vector<bool>* skip_set = nullptr) {
  SignSystem s;
  for (std::size_t i = 0; i < w.hyperplanes.size(); ++i) {
    if (static_cast<int>(i) == skip) continue;
    if (skip_set && (*skip_set)[i]) continue;
    const auto& h = w.hyperplanes[i];
    Vec row = h.linear;
    Rat b = -h.offset;
    if (signs[i] < 0) {
      for (auto& v : row) v = -v;
      b = -b;
    }
    s.rows.push_back(std::move(row));
    s.rhs.push_back(std::move(b));
  }
  return s;
}

}  // namespace

std::string root_name(const RootDatum& rd, int pos_root_index) {
  const auto& c = rd.pos_roots.at(pos_root_index).root;
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (c[i] != 1) s += std::to_string(c[i]);
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

Rat Window::family_value(int root_index, const Vec& v) const {
  const auto& coroot = rd.pos_roots.at(root_index).coroot;
  Rat s(rd.pos_roots.at(root_index).coroot_height());
  for (std::size_t t = 0; t < coords.size(); ++t) s += Rat(coroot[coords[t]]) * v[t];
  return s;
}

std::string Window::describe_wall(const Hyperplane& h) const {
  std::string s;
  for (std::size_t t = 0; t < coords.size(); ++t) {
    if (h.linear[t] == 0) continue;
    if (!s.empty()) s += "+";
    if (h.linear[t] != 1) s += rat_str(h.linear[t]) + "*";
    s += "w" + std::to_string(coords[t] + 1);
  }
  if (h.offset != 0) s += (h.offset > 0 ? "+" : "") + rat_str(h.offset);
  s += "=0 [";
  for (std::size_t k = 0; k < h.sources.size(); ++k) {
    if (k) s += ", ";
    s += "H(" + root_name(rd, h.sources[k].root_index) +
         ", n=" + std::to_string(h.sources[k].level) + ")";
  }
  return s + "]";
}

Window build_window(const RootDatum& rd, const LeviSpec& levi, Int p, Int level_bound) {
  if (!is_prime(p)) throw ConfigError("p must be prime, got " + std::to_string(p));
  if (level_bound < 1) throw ConfigError("level bound must be >= 1");
  if (levi.lattice_basis.empty())
    throw ConfigError("parameter space has dimension 0 (Levi = G): no arrangement");

  Window w;
  w.rd = rd;
  w.levi = levi;
  w.p = p;
  w.level_bound = level_bound;
  w.coords = levi.lattice_basis;

  std::vector<bool> is_levi_root(rd.pos_roots.size(), false);
  for (int r : levi.levi_roots) is_levi_root[r] = true;
  for (std::size_t r = 0; r < rd.pos_roots.size(); ++r)
    if (!is_levi_root[r]) w.family_roots.push_back(static_cast<int>(r));

  std::map<std::pair<Vec, Rat>, std::vector<WallSource>> walls;
  for (int r : w.family_roots) {
    const auto& coroot = rd.pos_roots[r].coroot;
    Vec linear;
    linear.reserve(w.coords.size());
    for (int c : w.coords) linear.emplace_back(coroot[c]);
    for (Int n = -level_bound; n <= level_bound; ++n) {
      Rat offset(rd.pos_roots[r].coroot_height() - n * p);
      Rat off = offset;
      Vec lin = make_primitive(linear, &off);
      walls[{std::move(lin), std::move(off)}].push_back(WallSource{r, n});
    }
  }
  for (auto& [key, sources] : walls) {
    std::sort(sources.begin(), sources.end(), [](const WallSource& a, const WallSource& b) {
      return std::tie(a.root_index, a.level) < std::tie(b.root_index, b.level);
    });
    w.hyperplanes.push_back(Hyperplane{key.first, key.second, sources});
  }
  return w;
}

void closure_constraints(const Window& w, const std::vector<int8_t>& signs,
                         Mat* rows, Vec* rhs, const std::vector<int>* only) {
  auto add = [&](int i) {
    const auto& h = w.hyperplanes[i];
    Vec row = h.linear;
    Rat b = -h.offset;
    if (signs[i] < 0) {
      for (auto& v : row) v = -v;
      b = -b;
    }
    rows->push_back(std::move(row));
    rhs->push_back(std::move(b));
  };
  if (only) {
    for (int i : *only) add(i);
  } else {
    for (std::size_t i = 0; i < w.hyperplanes.size(); ++i) add(static_cast<int>(i));
  }
}

std::vector<int8_t> point_signs(const Window& w, const Vec& point) {
  if (static_cast<int>(point.size()) != w.dim())
    throw GeometryError("point has wrong dimension");
  std::vector<int8_t> signs(w.hyperplanes.size());
  for (std::size_t i = 0; i < w.hyperplanes.size(); ++i) {
    int s = sgn(w.hyperplanes[i].value(point));
    if (s == 0)
      throw GeometryError("point lies on wall " + w.describe_wall(w.hyperplanes[i]));
    signs[i] = static_cast<int8_t>(s);
  }
  return signs;
}

int locate_alcove(const Complex& cx, const Vec& point) {
  auto signs = point_signs(cx.window, point);
  auto it = cx.index_of.find(signs_to_id(signs));
  if (it == cx.index_of.end())
    throw GeometryError("point lies outside the enumerated window (level bound " +
                        std::to_string(cx.window.level_bound) + ")");
  return it->second;
}

namespace {

// Resolve the seed alcove: signs of the perturbed origin, ties broken toward
// '+' subject to feasibility.
std::pair<std::vector<int8_t>, Vec> seed_alcove(const Window& w, const Vec& seed_point) {
  const std::size_t m = w.hyperplanes.size();
  std::vector<int8_t> signs(m, 0);
  Mat rows;
  Vec rhs;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& h = w.hyperplanes[i];
    int s = sgn(h.value(seed_point));
    if (s == 0) {
      // Tentatively '+'; fall back to '-' if that contradicts earlier choices.
      Mat trial = rows;
      Vec trial_rhs = rhs;
      trial.push_back(h.linear);
      trial_rhs.push_back(-h.offset);
      s = strict_feasible(trial, trial_rhs).feasible ? 1 : -1;
    }
    signs[i] = static_cast<int8_t>(s);
    Vec row = h.linear;
    Rat b = -h.offset;
    if (s < 0) {
      for (auto& v : row) v = -v;
      b = -b;
    }
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  }
  auto res = strict_feasible(rows, rhs);
  if (!res.feasible) throw GeometryError("seed alcove resolution failed");
  return {signs, res.point};
}

std::vector<int> canonical_cycle(std::vector<int> star) {
  const int n = static_cast<int>(star.size());
  auto key_val = [](int v) { return v < 0 ? std::numeric_limits<int>::max() : v; };
  int best_val = std::numeric_limits<int>::max();
  for (int v : star) best_val = std::min(best_val, key_val(v));
  std::vector<int> best;
  for (int s = 0; s < n; ++s) {
    if (key_val(star[s]) != best_val) continue;
    for (int dir : {1, -1}) {
      std::vector<int> cand(n);
      for (int k = 0; k < n; ++k) cand[k] = star[((s + dir * k) % n + n) % n];
      std::vector<int> ckey(n);
      for (int k = 0; k < n; ++k) ckey[k] = key_val(cand[k]);
      if (best.empty()) {
        best = cand;
      } else {
        std::vector<int> bkey(n);
        for (int k = 0; k < n; ++k) bkey[k] = key_val(best[k]);
        if (ckey < bkey) best = cand;
      }
    }
  }
  return best;
}

struct RayDir {
  Rat a, b;  // primitive direction in the transverse plane
  int owner;
};

bool ray_less(const RayDir& x, const RayDir& y) {
  auto half = [](const RayDir& r) { return (r.b > 0 || (r.b == 0 && r.a > 0)) ? 0 : 1; };
  int hx = half(x), hy = half(y);
  if (hx != hy) return hx < hy;
  return x.a * y.b - x.b * y.a > 0;
}

}  // namespace

Complex analyze_window(const Window& w, int workers, const std::optional<Vec>& seed_override) {
  Complex cx;
  cx.window = w;
  const int d = w.dim();
  const int m = static_cast<int>(w.hyperplanes.size());
  if (w.p < 5)
    cx.notes.push_back("p = " + std::to_string(w.p) +
                       " is small; statements assume p >> 0");

  cx.notes.push_back("window truncated at |level| <= " + std::to_string(w.level_bound) +
                     "; relations come from non-truncated faces only");

  Vec seed_point(d, Rat(0));
  if (seed_override) {
    if (static_cast<int>(seed_override->size()) != d)
      throw ConfigError("seed override has wrong dimension");
    seed_point = *seed_override;
  }
  auto [seed_signs, seed_sample] = seed_alcove(w, seed_point);
  if (!sample_is_kept(w, seed_sample))
    throw ConfigError(
        "seed alcove lies outside the window's level range; increase the level "
        "bound or override the seed");

  struct Cell {
    std::vector<int8_t> signs;
    Vec sample;
    std::vector<int> facets;
  };
  std::vector<Cell> cells;
  std::map<std::string, int> index;     // kept cells
  std::set<std::string> outside;        // feasible but not kept
  std::set<std::pair<int, int>> edges;  // kept-kept, with wall via facet map
  std::map<std::pair<int, int>, int> edge_wall;

  cells.push_back(Cell{seed_signs, seed_sample, {}});
  index[signs_to_id(seed_signs)] = 0;
  std::vector<int> wave{0};

  while (!wave.empty()) {
    // Facet tests for the whole wave, parallel over (alcove, hyperplane).
    const int tasks = static_cast<int>(wave.size()) * m;
    std::vector<char> facet_ok(tasks, 0);
    parallel_for(tasks, workers, [&](int t) {
      int a = wave[t / m];
      int h = t % m;
      auto sys = strict_rows(w, cells[a].signs, h);
      Mat eq{w.hyperplanes[h].linear};
      Vec eq_rhs{-w.hyperplanes[h].offset};
      facet_ok[t] = strict_feasible(sys.rows, sys.rhs, {}, {}, eq, eq_rhs).feasible;
    });

    std::vector<int> next_wave;
    for (std::size_t wi = 0; wi < wave.size(); ++wi) {
      int a = wave[wi];
      for (int h = 0; h < m; ++h) {
        if (!facet_ok[wi * m + h]) continue;
        cells[a].facets.push_back(h);
        std::vector<int8_t> nsigns = cells[a].signs;
        nsigns[h] = -nsigns[h];
        std::string nid = signs_to_id(nsigns);
        if (outside.count(nid)) continue;
        auto it = index.find(nid);
        int b;
        if (it != index.end()) {
          b = it->second;
        } else {
          auto sys = strict_rows(w, nsigns);
          auto res = strict_feasible(sys.rows, sys.rhs);
          if (!res.feasible)
            throw GeometryError("neighbor across a verified facet is infeasible");
          if (!sample_is_kept(w, res.point)) {
            outside.insert(nid);
            continue;
          }
          b = static_cast<int>(cells.size());
          cells.push_back(Cell{std::move(nsigns), std::move(res.point), {}});
          index[nid] = b;
          next_wave.push_back(b);
        }
        auto e = std::minmax(a, b);
        edges.insert({e.first, e.second});
        edge_wall[{e.first, e.second}] = h;
      }
    }
    wave = std::move(next_wave);
  }

  // Deterministic order: sort by sign-vector id.
  std::vector<int> order(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return cells[x].signs < cells[y].signs;
  });
  std::vector<int> new_index(cells.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_index[order[k]] = static_cast<int>(k);

  cx.alcoves.resize(cells.size());
  cx.adj.assign(cells.size(), {});
  for (std::size_t old = 0; old < cells.size(); ++old) {
    Alcove al;
    al.signs = std::move(cells[old].signs);
    al.sample = std::move(cells[old].sample);
    al.id = signs_to_id(al.signs);
    al.facets = std::move(cells[old].facets);
    std::sort(al.facets.begin(), al.facets.end());
    cx.alcoves[new_index[old]] = std::move(al);
  }
  for (std::size_t k = 0; k < cx.alcoves.size(); ++k)
    cx.index_of[cx.alcoves[k].id] = static_cast<int>(k);
  for (const auto& e : edges) {
    int a = new_index[e.first], b = new_index[e.second];
    int h = edge_wall[e];
    cx.adj[a].push_back({b, h});
    cx.adj[b].push_back({a, h});
  }
  for (auto& lst : cx.adj) std::sort(lst.begin(), lst.end());

  // Vertices of each closed alcove, from the facet halfspaces.
  parallel_for(static_cast<int>(cx.alcoves.size()), workers, [&](int i) {
    Mat rows;
    Vec rhs;
    closure_constraints(w, cx.alcoves[i].signs, &rows, &rhs, &cx.alcoves[i].facets);
    cx.alcoves[i].vertices = polytope_vertices(rows, rhs);
    if (static_cast<int>(cx.alcoves[i].vertices.size()) < d + 1)
      throw GeometryError("kept alcove is not a full-dimensional polytope");
  });

  if (d < 2) {
    cx.notes.push_back("no codimension-2 faces: dim V < 2");
    return cx;
  }

  // Codimension-2 faces: for each alcove, each pair of facet walls spanning a
  // codim-2 flat; the star is walked in the transverse plane.
  struct FaceCand {
    std::vector<int> pencil;
    Vec sample;
    std::vector<int> star;
  };
  std::vector<std::vector<FaceCand>> per_alcove(cx.alcoves.size());
  parallel_for(static_cast<int>(cx.alcoves.size()), workers, [&](int ai) {
    const Alcove& al = cx.alcoves[ai];
    for (std::size_t fi = 0; fi < al.facets.size(); ++fi) {
      for (std::size_t fj = fi + 1; fj < al.facets.size(); ++fj) {
        int h1 = al.facets[fi], h2 = al.facets[fj];
        Mat pair_rows{w.hyperplanes[h1].linear, w.hyperplanes[h2].linear};
        if (rank_of(pair_rows) < 2) continue;  // parallel walls
        // Pencil: every window wall vanishing on the flat h1 ∩ h2.
        std::vector<int> pencil;
        std::vector<bool> in_pencil(m, false);
        for (int h = 0; h < m; ++h) {
          Mat aff{w.hyperplanes[h1].linear, w.hyperplanes[h2].linear,
                  w.hyperplanes[h].linear};
          aff[0].push_back(w.hyperplanes[h1].offset);
          aff[1].push_back(w.hyperplanes[h2].offset);
          aff[2].push_back(w.hyperplanes[h].offset);
          if (rank_of(aff) == 2) {
            pencil.push_back(h);
            in_pencil[h] = true;
          }
        }
        // Relative-interior point of closure(alcove) ∩ flat.
        auto sys = strict_rows(w, al.signs, -1, &in_pencil);
        Mat eq;
        Vec eq_rhs;
        for (int h : pencil) {
          eq.push_back(w.hyperplanes[h].linear);
          eq_rhs.push_back(-w.hyperplanes[h].offset);
        }
        auto res = strict_feasible(sys.rows, sys.rhs, {}, {}, eq, eq_rhs);
        if (!res.feasible) continue;
        const Vec& x = res.point;

        // Transverse plane coordinates.
        int i1 = -1, i2 = -1;
        const Vec& l1 = w.hyperplanes[h1].linear;
        const Vec& l2 = w.hyperplanes[h2].linear;
        for (int p1 = 0; p1 < d && i1 < 0; ++p1)
          for (int p2 = p1 + 1; p2 < d && i1 < 0; ++p2)
            if (l1[p1] * l2[p2] - l1[p2] * l2[p1] != 0) {
              i1 = p1;
              i2 = p2;
            }
        if (i1 < 0) throw GeometryError("degenerate transverse plane");

        std::vector<RayDir> rays;
        for (int h : pencil) {
          Rat a = w.hyperplanes[h].linear[i1];
          Rat b = w.hyperplanes[h].linear[i2];
          Vec dir1 = make_primitive(Vec{b, -a});
          rays.push_back(RayDir{dir1[0], dir1[1], h});
          rays.push_back(RayDir{-dir1[0], -dir1[1], h});
        }
        std::sort(rays.begin(), rays.end(), ray_less);

        std::vector<int> star;
        for (std::size_t s = 0; s < rays.size(); ++s) {
          const RayDir& r1 = rays[s];
          const RayDir& r2 = rays[(s + 1) % rays.size()];
          Rat m1 = r1.a + r2.a, m2 = r1.b + r2.b;
          Vec dir(d, Rat(0));
          dir[i1] = m1;
          dir[i2] = m2;
          // Step small enough to stay on the face's side of every other wall.
          Rat eps(1);
          bool have = false;
          for (int h = 0; h < m; ++h) {
            if (in_pencil[h]) continue;
            Rat drift = dot(w.hyperplanes[h].linear, dir);
            if (drift == 0) continue;
            Rat bound = rat_abs(w.hyperplanes[h].value(x)) / rat_abs(drift);
            if (!have || bound < eps) {
              eps = bound;
              have = true;
            }
          }
          eps /= 2;
          Vec q = vadd(x, vscale(eps, dir));
          auto qi = cx.index_of.find(signs_to_id(point_signs(w, q)));
          star.push_back(qi == cx.index_of.end() ? -1 : qi->second);
        }
        if (star.size() != 2 * pencil.size())
          throw GeometryError("face star has wrong size");
        per_alcove[ai].push_back(FaceCand{pencil, x, canonical_cycle(star)});
      }
    }
  });

  std::set<std::pair<std::vector<int>, std::vector<int>>> seen_faces;
  for (const auto& cands : per_alcove) {
    for (const auto& c : cands) {
      std::vector<int> kept;
      for (int v : c.star)
        if (v >= 0) kept.push_back(v);
      std::sort(kept.begin(), kept.end());
      if (!seen_faces.insert({c.pencil, kept}).second) continue;
      Face2 f;
      f.pencil = c.pencil;
      f.sample = c.sample;
      f.star = c.star;
      f.truncated = kept.size() != c.star.size();
      cx.faces.push_back(std::move(f));
    }
  }
  std::sort(cx.faces.begin(), cx.faces.end(), [](const Face2& a, const Face2& b) {
    return std::tie(a.pencil, a.star) < std::tie(b.pencil, b.star);
  });
  return cx;
}

}  // namespace alc
