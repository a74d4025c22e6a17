#pragma once

#include "alc/salvetti.hpp"

namespace alc {

// Closed convex polyhedral cone {v : facets[i].v >= 0}, origin-based.
struct Cone {
  Mat facets;
};

bool cone_is_full_dim(const Cone& c, int dim);

// Distinct linear directions of the restricted coroots (the central
// arrangement underlying the parabolic chambers), canonical and sorted.
std::vector<Vec> central_directions(const Window& w);

// Closed chamber of the central restricted arrangement; stands in for a
// parabolic subgroup with the fixed Levi. Labels are lexicographic in the
// sign vector.
struct ParabolicChamber {
  std::vector<int8_t> signs;  // aligned with central_directions
  Cone cone;
  int label = -1;
};

std::vector<ParabolicChamber> parabolic_chambers(const Window& w);

// min of f over the cone is 0 (true) or -inf (false).
bool functional_nonneg_on_cone(const Vec& f, const Cone& c);

// Adjacent-pair order: crossing a -> b increases the shared wall's functional
// nonnegatively on the cone. Throws when a, b are not adjacent.
bool step_leq(const Complex& cx, int a, int b, const Cone& c);

// closure(b) ⊆ closure(a) + cone, by Minkowski-sum membership of every vertex
// of closure(b). Throws on degenerate cones.
bool cone_leq(const Complex& cx, int a, int b, const Cone& c);

bool gallery_increasing(const Complex& cx, const Gallery& g, const Cone& c);

// The cone cut out by the walls of the alcove through the face, oriented
// toward the alcove's side.
Cone cone_from_alcove_face(const Complex& cx, int alcove, int face);

struct Claim3Result {
  int relation;
  bool pass;
  int witness_gallery;  // 0 = left, 1 = right, -1 = none
  int witness_step;
};
struct Claim3Report {
  bool all_pass = true;
  std::vector<Claim3Result> results;
};

// Both minimal galleries of every relation go up with respect to the cone of
// (apex, face).
Claim3Report verify_claim3(const Complex& cx, const std::vector<Relation>& rels,
                           int workers = 1);

// Lowest-label chamber for which both galleries of the relation increase.
// Throws VerificationError with a witness dump when none exists.
int find_parabolic(const Complex& cx, const std::vector<ParabolicChamber>& chambers,
                   const Relation& rel);

struct Claim4Result {
  int relation;
  int chamber;                     // chosen by find_parabolic
  std::vector<int> valid_chambers; // all chambers whose order both galleries respect
  bool subcone_chambers_valid;     // every chamber inside the Claim-3 cone is valid
  int n_subcone_chambers;
};
struct Claim4Report {
  bool all_pass = true;
  std::vector<Claim4Result> results;
};

Claim4Report verify_claim4(const Complex& cx,
                           const std::vector<ParabolicChamber>& chambers,
                           const std::vector<Relation>& rels, int workers = 1);

}  // namespace alc
