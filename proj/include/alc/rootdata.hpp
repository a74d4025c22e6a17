#pragma once

#include "alc/linalg.hpp"

#include <string>
#include <vector>

namespace alc {

// A positive root together with its coroot. `root` and `coroot` are the
// expansions in simple roots / simple coroots; `fw` is the root written in
// fundamental-weight coordinates.
struct PosRoot {
  IVec root;
  IVec coroot;
  IVec fw;
  Int coroot_height() const {
    Int h = 0;
    for (Int k : coroot) h += k;
    return h;
  }
};

struct RootDatum {
  std::string label;
  int rank = 0;
  IMat cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<PosRoot> pos_roots;
  IVec rho;  // all ones in fundamental-weight coordinates

  // <lambda, coroot> for lambda in fundamental-weight coordinates.
  Int pair_int(const IVec& lambda, const IVec& coroot) const;
  Rat pair(const Vec& lambda, const IVec& coroot) const;

  // Simple reflection s_i acting on fundamental-weight coordinates.
  Vec reflect(int i, const Vec& lambda) const;
};

// Build from a type label like "A2", "G2", or a product "A1xA1"; throws
// ConfigError on anything it cannot parse.
RootDatum build_root_datum(const std::string& type_label);
// Build from an explicit generalized Cartan matrix; rejects non-finite type.
RootDatum build_root_datum(const IMat& cartan, const std::string& label = "custom");

struct Weight {
  Vec coords;  // fundamental-weight coordinates
  bool integral() const {
    for (const auto& c : coords)
      if (!rat_is_integer(c)) return false;
    return true;
  }
};

// Dot action w . lambda = w(lambda + rho) - rho, with w a word in simple
// reflections applied right-to-left.
Weight dot_action(const RootDatum& rd, const std::vector<int>& word, const Weight& lambda);

// All Weyl group elements as integer matrices acting on fundamental-weight
// coordinates (column-major action: v -> M v). Throws when the group exceeds
// `max_size` elements.
std::vector<IMat> weyl_elements(const RootDatum& rd, std::size_t max_size = 200000);

struct LeviSpec {
  std::vector<int> levi_simples;   // 0-based simple-root indices, sorted
  std::vector<int> levi_roots;     // indices into rd.pos_roots supported on levi_simples
  std::vector<int> lattice_basis;  // complementary fundamental-weight indices, sorted
};

LeviSpec levi_sublattice(const RootDatum& rd, std::vector<int> levi_simples);

bool is_prime(Int p);

// Both p-regularity tests of an integral weight: triviality of the dot-action
// stabilizer of lambda + p*Lambda in W, and non-vanishing mod p of every
// <lambda + rho, alpha^vee>. The two agree on all supported data.
struct PRegularity {
  bool stabilizer_trivial = false;
  bool pairings_nonzero = false;
  bool regular() const { return pairings_nonzero; }
};

PRegularity is_p_regular(const RootDatum& rd, const IVec& lambda, Int p);
// Same, reusing a precomputed Weyl enumeration (bulk scans).
PRegularity is_p_regular(const RootDatum& rd, const IVec& lambda, Int p,
                         const std::vector<IMat>& weyl);

}  // namespace alc
