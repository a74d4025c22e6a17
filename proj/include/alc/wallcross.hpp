#pragma once

#include "alc/coneorder.hpp"

#include <random>

namespace alc {

// Integral weight chosen strictly inside an alcove, in V coordinates.
struct WeightLabel {
  int alcove = -1;
  IVec lambda;
};

// Lexicographically smallest integral interior point; p-regularity enforced.
WeightLabel assign_weight(const Complex& cx, int alcove);

// nullopt when the alcove has no integral interior point (restricted windows
// can have alcoves between wall families one unit apart, which admit none for
// any p).
std::optional<WeightLabel> try_assign_weight(const Complex& cx, int alcove);

// Throws unless lambda is integral, strictly inside the alcove and p-regular.
void validate_weight_label(const Complex& cx, const WeightLabel& label);

// Formal tokens of the wall-crossing calculus, composed right-to-left; words
// store them in application order (front acts first). Endpoint weights on
// GlobalSections/Localization tokens are p-regular by construction.
struct FunctorToken {
  enum class Kind { GlobalSections, Localization, Twist, Identity };
  Kind kind = Kind::Identity;
  int chamber = -1;  // parabolic chamber label for GlobalSections/Localization
  IVec weight;       // endpoint weight, or the twist vector for Twist
  bool operator==(const FunctorToken&) const = default;
};

struct FunctorWord {
  std::vector<FunctorToken> tokens;
  IVec source, target;  // endpoint weights (module-category labels)
  bool operator==(const FunctorWord&) const = default;
};

std::string token_str(const FunctorToken& t);
std::string word_str(const FunctorWord& w);

// Endpoint typing: Localization consumes a module endpoint, Twist shifts the
// sheaf-level weight, GlobalSections produces a module endpoint.
bool well_typed(const FunctorWord& w);

// The functor word of a single positive generator: GlobalSections at the
// target weight, twist by the weight difference, Localization at the source
// weight. Requires the step to increase w.r.t. the chamber's cone.
FunctorWord generator_functor(const Complex& cx,
                              const std::vector<ParabolicChamber>& chambers,
                              int chamber, const WeightLabel& src,
                              const WeightLabel& tgt);

// Composite over a gallery with one label per alcove, all steps increasing
// w.r.t. the same chamber.
FunctorWord path_functor(const Complex& cx,
                         const std::vector<ParabolicChamber>& chambers, int chamber,
                         const Gallery& g, const std::vector<WeightLabel>& labels);

// Confluent normal form: cancel GlobalSections/Localization pairs at matching
// (chamber, weight), merge adjacent twists, drop zero twists and identities.
FunctorWord normalize(const FunctorWord& w);

// Same rules applied in random order; used to check confluence.
FunctorWord normalize_random(const FunctorWord& w, std::mt19937_64& rng);

struct RelationTrace {
  int relation = -1;
  int chamber = -1;
  FunctorWord left_raw, right_raw, left_nf, right_nf;
  bool equal = false;
  bool matches_expected = false;  // nf == GlobalSections . Twist . Localization
  std::string note;
};

// Claim-5 check for one relation under a fixed chamber: both galleries' words
// normalize to the identical token sequence. `tampered_left` substitutes the
// left gallery's labels (negative-control hook).
RelationTrace relation_check(const Complex& cx,
                             const std::vector<ParabolicChamber>& chambers,
                             const Relation& rel, int chamber,
                             const std::vector<WeightLabel>* tampered_left = nullptr);

// Negative control: corrupt one interior label of the left gallery and expect
// the check to fail.
RelationTrace corrupted_relation_check(const Complex& cx,
                                       const std::vector<ParabolicChamber>& chambers,
                                       const Relation& rel, int chamber);

// The independence-of-labels square: relabeling source and target weights
// inside their alcoves conjugates one crossing functor into the other.
bool lambda_independence_check(const Complex& cx,
                               const std::vector<ParabolicChamber>& chambers, int a,
                               int b, const IVec& lambda, const IVec& lambda2,
                               const IVec& mu, const IVec& mu2);

}  // namespace alc
