#pragma once

#include "alc/lp.hpp"
#include "alc/rootdata.hpp"

#include <map>
#include <optional>
#include <string>

namespace alc {

// One (root, level) pair indexing a wall of p-singular parabolic weights.
struct WallSource {
  int root_index;
  Int level;
};

// Affine functional on V in canonical form: primitive integer linear part with
// positive leading coefficient. Two hyperplanes are equal iff (linear, offset)
// coincide exactly; provenance lists every (root, level) mapping to it.
struct Hyperplane {
  Vec linear;
  Rat offset;
  std::vector<WallSource> sources;

  Rat value(const Vec& v) const { return dot(linear, v) + offset; }
};

struct Window {
  RootDatum rd;
  LeviSpec levi;
  Int p = 0;
  Int level_bound = 0;
  std::vector<int> coords;        // fundamental-weight indices spanning V
  std::vector<int> family_roots;  // positive roots outside the Levi
  std::vector<Hyperplane> hyperplanes;  // canonical order

  int dim() const { return static_cast<int>(coords.size()); }
  // <v + rho, coroot of family root> at a point v of V.
  Rat family_value(int root_index, const Vec& v) const;
  std::string describe_wall(const Hyperplane& h) const;
};

std::string root_name(const RootDatum& rd, int pos_root_index);

Window build_window(const RootDatum& rd, const LeviSpec& levi, Int p, Int level_bound);

struct Alcove {
  std::vector<int8_t> signs;  // aligned with window.hyperplanes, +1 / -1
  Vec sample;
  std::string id;             // the sign string, e.g. "++-+"
  std::vector<int> facets;    // hyperplane indices bounding the alcove
  std::vector<Vec> vertices;  // of the closure (kept alcoves are polytopes)
};

struct Face2 {
  std::vector<int> pencil;  // hyperplanes containing the face, sorted
  Vec sample;               // relative-interior point
  std::vector<int> star;    // alcoves around the face in cyclic order; -1 = outside window
  bool truncated = false;   // star leaves the kept alcove set
};

struct Complex {
  Window window;
  std::vector<Alcove> alcoves;  // sorted by id
  std::map<std::string, int> index_of;
  std::vector<std::vector<std::pair<int, int>>> adj;  // per alcove: (neighbor, wall)
  std::vector<Face2> faces;
  std::vector<std::string> notes;

  int dim() const { return window.dim(); }
};

// Enumerate the alcoves whose defining levels lie strictly inside the window,
// by wall-crossing closure from the seed alcove, then discover codimension-2
// faces with their stars. Deterministic for any worker count.
Complex analyze_window(const Window& w, int workers = 1,
                       const std::optional<Vec>& seed_override = std::nullopt);

// Sign vector of a point; throws GeometryError naming the wall when the point
// lies on one.
std::vector<int8_t> point_signs(const Window& w, const Vec& point);

// Index of the enumerated alcove containing the point; throws when the point
// is on a wall or outside the kept set.
int locate_alcove(const Complex& cx, const Vec& point);

inline const std::vector<std::pair<int, int>>& adjacent_alcoves(const Complex& cx, int a) {
  return cx.adj.at(a);
}

// Constraint rows of the closed alcove: rows r with r.x >= rhs.
void closure_constraints(const Window& w, const std::vector<int8_t>& signs,
                         Mat* rows, Vec* rhs, const std::vector<int>* only = nullptr);

}  // namespace alc
