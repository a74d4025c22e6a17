#include "alc/salvetti.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace alc {

std::vector<Generator> generators(const Complex& cx) {
  std::vector<Generator> out;
  for (int a = 0; a < static_cast<int>(cx.alcoves.size()); ++a)
    for (const auto& [b, wall] : cx.adj[a]) out.push_back(Generator{a, b, wall});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> gallery_walls(const Complex& cx, const Gallery& g) {
  std::vector<int> walls;
  for (std::size_t i = 0; i + 1 < g.alcoves.size(); ++i) {
    int a = g.alcoves[i], b = g.alcoves[i + 1];
    int wall = -1;
    for (const auto& [nb, wl] : cx.adj.at(a))
      if (nb == b) wall = wl;
    if (wall < 0)
      throw GeometryError("gallery step " + std::to_string(i) +
                          ": alcoves are not adjacent");
    walls.push_back(wall);
  }
  return walls;
}

namespace {

int star_position(const Face2& f, int alcove) {
  for (std::size_t i = 0; i < f.star.size(); ++i)
    if (f.star[i] == alcove) return static_cast<int>(i);
  return -1;
}

}  // namespace

int opposite_alcove(const Complex& cx, int alcove, int face) {
  const Face2& f = cx.faces.at(face);
  if (star_position(f, alcove) < 0)
    throw GeometryError("alcove is not in the star of the face");
  std::vector<int8_t> signs = cx.alcoves.at(alcove).signs;
  for (int h : f.pencil) signs[h] = -signs[h];
  std::string id(signs.size(), '?');
  for (std::size_t i = 0; i < signs.size(); ++i) id[i] = signs[i] > 0 ? '+' : '-';
  auto it = cx.index_of.find(id);
  if (it == cx.index_of.end())
    throw GeometryError("opposite alcove is outside the window (truncated star)");
  return it->second;
}

std::pair<Gallery, Gallery> minimal_positive_galleries(const Complex& cx, int alcove,
                                                       int face) {
  const Face2& f = cx.faces.at(face);
  if (f.truncated)
    throw GeometryError("face excluded from relations: star leaves the window");
  int pos_apex = star_position(f, alcove);
  if (pos_apex < 0) throw GeometryError("alcove is not in the star of the face");
  const int n = static_cast<int>(f.star.size());
  const int k = n / 2;
  int opp = opposite_alcove(cx, alcove, face);
  int pos_opp = star_position(f, opp);
  if ((pos_opp - pos_apex - k) % n != 0)
    throw GeometryError("opposite alcove is not antipodal in the star");

  auto walk = [&](int dir) {
    Gallery g;
    for (int s = 0; s <= k; ++s)
      g.alcoves.push_back(f.star[((pos_opp + dir * s) % n + n) % n]);
    return g;
  };
  Gallery g1 = walk(+1), g2 = walk(-1);
  // Deterministic order: first crossing over the smaller wall index goes left.
  int w1 = gallery_walls(cx, g1)[0];
  int w2 = gallery_walls(cx, g2)[0];
  if (w2 < w1) std::swap(g1, g2);
  return {g1, g2};
}

std::vector<Relation> relations(const Complex& cx) {
  std::vector<Relation> out;
  for (int fi = 0; fi < static_cast<int>(cx.faces.size()); ++fi) {
    const Face2& f = cx.faces[fi];
    if (f.truncated) continue;
    std::vector<int> members = f.star;
    std::sort(members.begin(), members.end());
    for (int apex : members) {
      auto [left, right] = minimal_positive_galleries(cx, apex, fi);
      int opp = opposite_alcove(cx, apex, fi);
      out.push_back(Relation{fi, apex, opp, std::move(left), std::move(right)});
    }
  }
  return out;
}

namespace {

std::vector<int> bfs_distances(const Complex& cx, int from) {
  std::vector<int> dist(cx.alcoves.size(), -1);
  std::deque<int> q{from};
  dist[from] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (const auto& [v, wall] : cx.adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

}  // namespace

int gallery_distance(const Complex& cx, int a, int b) { return bfs_distances(cx, a)[b]; }

std::vector<Gallery> all_minimal_galleries(const Complex& cx, int a, int b,
                                           std::size_t cap) {
  std::vector<int> dist_b = bfs_distances(cx, b);
  if (dist_b[a] < 0) return {};
  std::vector<Gallery> out;
  Gallery cur;
  cur.alcoves.push_back(a);
  auto rec = [&](auto&& self, int u) -> void {
    if (u == b) {
      out.push_back(cur);
      if (out.size() > cap) throw GeometryError("minimal gallery census exceeded cap");
      return;
    }
    for (const auto& [v, wall] : cx.adj[u]) {
      if (dist_b[v] != dist_b[u] - 1) continue;
      cur.alcoves.push_back(v);
      self(self, v);
      cur.alcoves.pop_back();
    }
  };
  rec(rec, a);
  std::sort(out.begin(), out.end());
  return out;
}

FirstRelationsReport verify_first_relations(const Complex& cx, std::size_t budget,
                                            int max_distance) {
  FirstRelationsReport rep;
  auto rels = relations(cx);
  // Substitution table on alcove sequences, both orientations.
  std::map<std::vector<int>, std::vector<std::vector<int>>> subst;
  for (const auto& r : rels) {
    subst[r.left.alcoves].push_back(r.right.alcoves);
    subst[r.right.alcoves].push_back(r.left.alcoves);
  }

  const int n = static_cast<int>(cx.alcoves.size());
  for (int a = 0; a < n; ++a) {
    std::vector<int> dist = bfs_distances(cx, a);
    for (int b = a + 1; b < n; ++b) {
      if (dist[b] < 1 || dist[b] > max_distance) continue;
      auto galleries = all_minimal_galleries(cx, a, b);
      FirstRelationsReport::PairResult pr{a, b, static_cast<int>(galleries.size()),
                                          true, false};
      if (galleries.size() > 1) {
        std::set<std::vector<int>> target(
            [&] {
              std::set<std::vector<int>> t;
              for (const auto& g : galleries) t.insert(g.alcoves);
              return t;
            }());
        std::set<std::vector<int>> visited{galleries[0].alcoves};
        std::deque<std::vector<int>> queue{galleries[0].alcoves};
        std::size_t expanded = 0;
        while (!queue.empty() && expanded < budget) {
          std::vector<int> g = queue.front();
          queue.pop_front();
          ++expanded;
          for (const auto& [pat, reps] : subst) {
            if (pat.size() > g.size()) continue;
            for (std::size_t s = 0; s + pat.size() <= g.size(); ++s) {
              if (!std::equal(pat.begin(), pat.end(), g.begin() + s)) continue;
              for (const auto& rep : reps) {
                std::vector<int> g2(g.begin(), g.begin() + s);
                g2.insert(g2.end(), rep.begin(), rep.end());
                g2.insert(g2.end(), g.begin() + s + pat.size(), g.end());
                if (visited.insert(g2).second) queue.push_back(g2);
              }
            }
          }
        }
        bool all_found = true;
        for (const auto& t : target)
          if (!visited.count(t)) all_found = false;
        if (all_found) {
          pr.connected = true;
        } else if (!queue.empty()) {
          pr.connected = false;
          pr.inconclusive = true;  // budget ran out first
        } else {
          pr.connected = false;
        }
      }
      ++rep.checked;
      if (pr.connected)
        ++rep.connected;
      else if (pr.inconclusive)
        ++rep.inconclusive;
      else
        ++rep.failed;
      rep.pairs.push_back(pr);
    }
  }
  return rep;
}

}  // namespace alc
