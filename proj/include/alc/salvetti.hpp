#pragma once

#include "alc/arrangement.hpp"

namespace alc {

// Positive half-loop from one alcove to an adjacent one; source/target order
// matters, both orientations are separate generators.
struct Generator {
  int source, target, wall;
  auto operator<=>(const Generator&) const = default;
};

std::vector<Generator> generators(const Complex& cx);

struct Gallery {
  std::vector<int> alcoves;
  int length() const { return static_cast<int>(alcoves.size()) - 1; }
  bool operator==(const Gallery&) const = default;
  bool operator<(const Gallery& o) const { return alcoves < o.alcoves; }
};

// Wall crossed at each step; throws when consecutive alcoves are not adjacent.
std::vector<int> gallery_walls(const Complex& cx, const Gallery& g);

// The alcove opposite `alcove` across face `face` (signs flipped on the whole
// pencil). Throws when the alcove is not in the star.
int opposite_alcove(const Complex& cx, int alcove, int face);

// The two minimal positive galleries from the opposite alcove to `alcove`,
// walking the two ways around the star. Throws on truncated faces.
std::pair<Gallery, Gallery> minimal_positive_galleries(const Complex& cx, int alcove,
                                                       int face);

struct Relation {
  int face, apex, opposite;
  Gallery left, right;  // both from opposite to apex, equal length
};

// One relation per (non-truncated face, alcove in its star).
std::vector<Relation> relations(const Complex& cx);

int gallery_distance(const Complex& cx, int a, int b);

// Every minimal gallery from a to b (paths in the adjacency graph).
std::vector<Gallery> all_minimal_galleries(const Complex& cx, int a, int b,
                                           std::size_t cap = 100000);

// Check that any two minimal positive galleries between alcoves at distance
// <= max_distance are connected by substitutions from the relation set.
struct FirstRelationsReport {
  struct PairResult {
    int a, b;
    int n_galleries;
    bool connected;
    bool inconclusive;
  };
  std::vector<PairResult> pairs;
  int checked = 0, connected = 0, inconclusive = 0, failed = 0;
  bool all_connected() const { return failed == 0 && inconclusive == 0; }
};

FirstRelationsReport verify_first_relations(const Complex& cx, std::size_t budget,
                                            int max_distance);

}  // namespace alc
