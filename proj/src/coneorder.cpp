#include "alc/coneorder.hpp"

#include "alc/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace alc {
namespace {

void add_box(LinearSystem* sys, int d) {
  for (int i = 0; i < d; ++i) {
    Vec lo(d, Rat(0)), hi(d, Rat(0));
    lo[i] = 1;
    hi[i] = -1;
    sys->add_ge(std::move(lo), Rat(-1));  // v_i >= -1
    sys->add_ge(std::move(hi), Rat(-1));  // v_i <= 1
  }
}

}  // namespace

bool cone_is_full_dim(const Cone& c, int dim) {
  if (c.facets.empty()) return true;  // whole space
  Mat box;
  Vec box_rhs;
  for (int i = 0; i < dim; ++i) {
    Vec lo(dim, Rat(0)), hi(dim, Rat(0));
    lo[i] = 1;
    hi[i] = -1;
    box.push_back(std::move(lo));
    box_rhs.emplace_back(-1);
    box.push_back(std::move(hi));
    box_rhs.emplace_back(-1);
  }
  Vec zero(c.facets.size(), Rat(0));
  return strict_feasible(c.facets, zero, box, box_rhs).feasible;
}

std::vector<Vec> central_directions(const Window& w) {
  std::set<Vec> dirs;
  for (int r : w.family_roots) {
    const auto& coroot = w.rd.pos_roots[r].coroot;
    Vec linear;
    linear.reserve(w.coords.size());
    for (int c : w.coords) linear.emplace_back(coroot[c]);
    dirs.insert(make_primitive(linear));
  }
  return {dirs.begin(), dirs.end()};
}

std::vector<ParabolicChamber> parabolic_chambers(const Window& w) {
  const auto dirs = central_directions(w);
  const int d = w.dim();
  const int m = static_cast<int>(dirs.size());

  auto chamber_rows = [&](const std::vector<int8_t>& signs) {
    Mat rows;
    for (int i = 0; i < m; ++i) {
      Vec row = dirs[i];
      if (signs[i] < 0)
        for (auto& v : row) v = -v;
      rows.push_back(std::move(row));
    }
    return rows;
  };
  Mat box;
  Vec box_rhs;
  for (int i = 0; i < d; ++i) {
    Vec lo(d, Rat(0)), hi(d, Rat(0));
    lo[i] = 1;
    hi[i] = -1;
    box.push_back(std::move(lo));
    box_rhs.emplace_back(-1);
    box.push_back(std::move(hi));
    box_rhs.emplace_back(-1);
  }
  auto feasible = [&](const std::vector<int8_t>& signs) {
    Vec zero(m, Rat(0));
    return strict_feasible(chamber_rows(signs), zero, box, box_rhs).feasible;
  };

  // Seed chamber: '+' preferred direction by direction, subject to feasibility.
  std::vector<int8_t> seed(m, 1);
  {
    Mat rows;
    Vec rhs;
    for (int i = 0; i < m; ++i) {
      Mat trial = rows;
      Vec trial_rhs = rhs;
      trial.push_back(dirs[i]);
      trial_rhs.emplace_back(0);
      int8_t s = strict_feasible(trial, trial_rhs, box, box_rhs).feasible ? 1 : -1;
      seed[i] = s;
      Vec row = dirs[i];
      if (s < 0)
        for (auto& v : row) v = -v;
      rows.push_back(std::move(row));
      rhs.emplace_back(0);
    }
  }

  std::set<std::vector<int8_t>> seen{seed};
  std::vector<std::vector<int8_t>> frontier{seed};
  while (!frontier.empty()) {
    auto signs = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < m; ++i) {
      auto flipped = signs;
      flipped[i] = -flipped[i];
      if (seen.count(flipped)) continue;
      if (feasible(flipped)) {
        seen.insert(flipped);
        frontier.push_back(flipped);
      }
    }
  }

  std::vector<ParabolicChamber> out;
  for (const auto& signs : seen) {
    ParabolicChamber pc;
    pc.signs = signs;
    pc.cone.facets = chamber_rows(signs);
    out.push_back(std::move(pc));
  }
  // Lexicographic on the sign string with '+' < '-'.
  std::sort(out.begin(), out.end(), [](const ParabolicChamber& a, const ParabolicChamber& b) {
    for (std::size_t i = 0; i < a.signs.size(); ++i)
      if (a.signs[i] != b.signs[i]) return a.signs[i] > b.signs[i];
    return false;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].label = static_cast<int>(i);
  return out;
}

bool functional_nonneg_on_cone(const Vec& f, const Cone& c) {
  const int d = static_cast<int>(f.size());
  LinearSystem sys;
  for (const auto& row : c.facets) sys.add_ge(row, Rat(0));
  add_box(&sys, d);
  LpResult r = lp_minimize(sys, f);
  if (r.status != LpStatus::Optimal) throw GeometryError("cone LP did not solve");
  return r.value >= 0;
}

bool step_leq(const Complex& cx, int a, int b, const Cone& c) {
  int wall = -1;
  for (const auto& [nb, wl] : cx.adj.at(a))
    if (nb == b) wall = wl;
  if (wall < 0) throw GeometryError("step_leq requires adjacent alcoves");
  Vec crossing = cx.window.hyperplanes[wall].linear;
  if (cx.alcoves[b].signs[wall] < 0)
    for (auto& v : crossing) v = -v;
  return functional_nonneg_on_cone(crossing, c);
}

bool cone_leq(const Complex& cx, int a, int b, const Cone& c) {
  const int d = cx.dim();
  if (!cone_is_full_dim(c, d))
    throw GeometryError("cone_leq requires a full-dimensional cone");
  Mat a_rows;
  Vec a_rhs;
  closure_constraints(cx.window, cx.alcoves.at(a).signs, &a_rows, &a_rhs,
                      &cx.alcoves.at(a).facets);
  for (const Vec& u : cx.alcoves.at(b).vertices) {
    // Feasibility of: y in closure(a), u - y in cone.
    LinearSystem sys;
    for (std::size_t i = 0; i < a_rows.size(); ++i) sys.add_ge(a_rows[i], a_rhs[i]);
    for (const auto& g : c.facets) {
      Vec row = g;
      for (auto& v : row) v = -v;
      sys.add_ge(std::move(row), -dot(g, u));
    }
    Vec zero(d, Rat(0));
    if (lp_maximize(sys, zero).status != LpStatus::Optimal) return false;
  }
  return true;
}

bool gallery_increasing(const Complex& cx, const Gallery& g, const Cone& c) {
  for (std::size_t i = 0; i + 1 < g.alcoves.size(); ++i)
    if (!step_leq(cx, g.alcoves[i], g.alcoves[i + 1], c)) return false;
  return true;
}

Cone cone_from_alcove_face(const Complex& cx, int alcove, int face) {
  const Face2& f = cx.faces.at(face);
  bool in_star = false;
  for (int v : f.star)
    if (v == alcove) in_star = true;
  if (!in_star) throw GeometryError("face is not on the boundary of the alcove");
  const Alcove& al = cx.alcoves.at(alcove);
  Cone c;
  for (int h : f.pencil) {
    if (!std::binary_search(al.facets.begin(), al.facets.end(), h)) continue;
    Vec row = cx.window.hyperplanes[h].linear;
    if (al.signs[h] < 0)
      for (auto& v : row) v = -v;
    c.facets.push_back(std::move(row));
  }
  if (c.facets.size() != 2)
    throw GeometryError("expected exactly two bounding walls through the face");
  return c;
}

Claim3Report verify_claim3(const Complex& cx, const std::vector<Relation>& rels,
                           int workers) {
  Claim3Report rep;
  rep.results.resize(rels.size());
  parallel_for(static_cast<int>(rels.size()), workers, [&](int i) {
    const Relation& r = rels[i];
    Cone c = cone_from_alcove_face(cx, r.apex, r.face);
    Claim3Result res{i, true, -1, -1};
    const Gallery* gs[2] = {&r.left, &r.right};
    for (int gi = 0; gi < 2 && res.pass; ++gi) {
      for (std::size_t s = 0; s + 1 < gs[gi]->alcoves.size(); ++s) {
        if (!step_leq(cx, gs[gi]->alcoves[s], gs[gi]->alcoves[s + 1], c)) {
          res.pass = false;
          res.witness_gallery = gi;
          res.witness_step = static_cast<int>(s);
          break;
        }
      }
    }
    rep.results[i] = res;
  });
  for (const auto& r : rep.results)
    if (!r.pass) rep.all_pass = false;
  return rep;
}

int find_parabolic(const Complex& cx, const std::vector<ParabolicChamber>& chambers,
                   const Relation& rel) {
  for (const auto& pc : chambers) {
    if (gallery_increasing(cx, rel.left, pc.cone) &&
        gallery_increasing(cx, rel.right, pc.cone))
      return pc.label;
  }
  std::string dump = "no parabolic chamber orders both galleries (face " +
                     std::to_string(rel.face) + ", apex " + std::to_string(rel.apex) +
                     ", opposite " + std::to_string(rel.opposite) + "; galleries";
  for (const Gallery* g : {&rel.left, &rel.right}) {
    dump += " [";
    for (std::size_t i = 0; i < g->alcoves.size(); ++i)
      dump += (i ? "," : "") + std::to_string(g->alcoves[i]);
    dump += "]";
  }
  throw VerificationError(dump + ")");
}

Claim4Report verify_claim4(const Complex& cx,
                           const std::vector<ParabolicChamber>& chambers,
                           const std::vector<Relation>& rels, int workers) {
  Claim4Report rep;
  rep.results.resize(rels.size());
  std::vector<std::string> errors(rels.size());
  parallel_for(static_cast<int>(rels.size()), workers, [&](int i) {
    const Relation& r = rels[i];
    Claim4Result res;
    res.relation = i;
    res.chamber = -1;
    for (const auto& pc : chambers)
      if (gallery_increasing(cx, r.left, pc.cone) &&
          gallery_increasing(cx, r.right, pc.cone))
        res.valid_chambers.push_back(pc.label);
    if (!res.valid_chambers.empty()) res.chamber = res.valid_chambers.front();

    // Every chamber whose cone sits inside the Claim-3 cone must be valid,
    // and at least one such chamber exists.
    Cone c3 = cone_from_alcove_face(cx, r.apex, r.face);
    res.subcone_chambers_valid = true;
    res.n_subcone_chambers = 0;
    for (const auto& pc : chambers) {
      bool inside = true;
      for (const auto& f : c3.facets)
        if (!functional_nonneg_on_cone(f, pc.cone)) inside = false;
      if (!inside) continue;
      ++res.n_subcone_chambers;
      if (std::find(res.valid_chambers.begin(), res.valid_chambers.end(), pc.label) ==
          res.valid_chambers.end())
        res.subcone_chambers_valid = false;
    }
    if (res.n_subcone_chambers == 0) res.subcone_chambers_valid = false;
    rep.results[i] = res;
  });
  for (const auto& r : rep.results)
    if (r.chamber < 0 || !r.subcone_chambers_valid) rep.all_pass = false;
  return rep;
}

}  // namespace alc
