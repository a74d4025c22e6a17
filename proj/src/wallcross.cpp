#include "alc/wallcross.hpp"

#include <algorithm>

namespace alc {
namespace {

IVec embed_full_rank(const Window& w, const IVec& v) {
  IVec full(w.rd.rank, 0);
  for (std::size_t t = 0; t < w.coords.size(); ++t) full[w.coords[t]] = v[t];
  return full;
}

std::string ivec_compact(const IVec& v) { return ivec_str(v); }

}  // namespace

std::optional<WeightLabel> try_assign_weight(const Complex& cx, int alcove) {
  const Alcove& al = cx.alcoves.at(alcove);
  const Window& w = cx.window;
  const int d = w.dim();

  // Bounding box from the vertices, then lexicographic scan.
  IVec lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    Rat mn = al.vertices[0][i], mx = al.vertices[0][i];
    for (const auto& v : al.vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = to_int(rat_floor(mn));
    hi[i] = to_int(-rat_floor(-mx));
  }
  IVec pt(d);
  auto interior = [&](const IVec& candidate) {
    Vec v = from_ints(candidate);
    for (std::size_t h = 0; h < w.hyperplanes.size(); ++h)
      if (sgn(w.hyperplanes[h].value(v)) != al.signs[h]) return false;
    return true;
  };
  auto scan = [&](auto&& self, int depth) -> bool {
    if (depth == d) return interior(pt);
    for (Int x = lo[depth]; x <= hi[depth]; ++x) {
      pt[depth] = x;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  if (!scan(scan, 0)) return std::nullopt;
  WeightLabel label{alcove, pt};
  auto reg = is_p_regular(w.rd, embed_full_rank(w, pt), w.p);
  if (!reg.regular())
    throw GeometryError("assigned weight " + ivec_compact(pt) +
                        " is not p-regular; a larger p is needed");
  return label;
}

WeightLabel assign_weight(const Complex& cx, int alcove) {
  auto label = try_assign_weight(cx, alcove);
  if (!label)
    throw GeometryError("alcove " + cx.alcoves.at(alcove).id +
                        " contains no integral weight; a larger p is needed");
  return *label;
}

void validate_weight_label(const Complex& cx, const WeightLabel& label) {
  const Window& w = cx.window;
  if (label.alcove < 0 || label.alcove >= static_cast<int>(cx.alcoves.size()))
    throw GeometryError("weight label names an unknown alcove");
  if (static_cast<int>(label.lambda.size()) != w.dim())
    throw GeometryError("weight label has wrong dimension");
  const Alcove& al = cx.alcoves[label.alcove];
  Vec v = from_ints(label.lambda);
  for (std::size_t h = 0; h < w.hyperplanes.size(); ++h)
    if (sgn(w.hyperplanes[h].value(v)) != al.signs[h])
      throw GeometryError("weight " + ivec_compact(label.lambda) +
                          " is not strictly inside alcove " + al.id);
  if (!is_p_regular(w.rd, embed_full_rank(w, label.lambda), w.p).regular())
    throw GeometryError("weight " + ivec_compact(label.lambda) + " is not p-regular");
}

std::string token_str(const FunctorToken& t) {
  switch (t.kind) {
    case FunctorToken::Kind::GlobalSections:
      return "Gamma[P" + std::to_string(t.chamber) + "," + ivec_compact(t.weight) + "]";
    case FunctorToken::Kind::Localization:
      return "Loc[P" + std::to_string(t.chamber) + "," + ivec_compact(t.weight) + "]";
    case FunctorToken::Kind::Twist:
      return "O" + ivec_compact(t.weight);
    case FunctorToken::Kind::Identity:
      return "Id";
  }
  return "?";
}

std::string word_str(const FunctorWord& w) {
  if (w.tokens.empty()) return "Id";
  std::string s;  // composition order: last applied first
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
    if (!s.empty()) s += " . ";
    s += token_str(*it);
  }
  return s;
}

bool well_typed(const FunctorWord& w) {
  bool module_level = true;  // endpoints live at the module-category level
  IVec weight = w.source;
  for (const auto& t : w.tokens) {
    switch (t.kind) {
      case FunctorToken::Kind::Identity:
        break;
      case FunctorToken::Kind::Localization:
        if (!module_level || t.weight != weight) return false;
        module_level = false;
        break;
      case FunctorToken::Kind::Twist:
        if (module_level) return false;
        weight = ivadd(weight, t.weight);
        break;
      case FunctorToken::Kind::GlobalSections:
        if (module_level || t.weight != weight) return false;
        module_level = true;
        break;
    }
  }
  return module_level && weight == w.target;
}

FunctorWord generator_functor(const Complex& cx,
                              const std::vector<ParabolicChamber>& chambers,
                              int chamber, const WeightLabel& src,
                              const WeightLabel& tgt) {
  validate_weight_label(cx, src);
  validate_weight_label(cx, tgt);
  const ParabolicChamber& pc = chambers.at(chamber);
  if (!step_leq(cx, src.alcove, tgt.alcove, pc.cone))
    throw GeometryError("generator not P-increasing for chamber P" +
                        std::to_string(chamber));
  FunctorWord w;
  w.source = src.lambda;
  w.target = tgt.lambda;
  w.tokens = {
      FunctorToken{FunctorToken::Kind::Localization, chamber, src.lambda},
      FunctorToken{FunctorToken::Kind::Twist, -1, ivsub(tgt.lambda, src.lambda)},
      FunctorToken{FunctorToken::Kind::GlobalSections, chamber, tgt.lambda},
  };
  return w;
}

FunctorWord path_functor(const Complex& cx,
                         const std::vector<ParabolicChamber>& chambers, int chamber,
                         const Gallery& g, const std::vector<WeightLabel>& labels) {
  if (labels.size() != g.alcoves.size())
    throw GeometryError("path_functor needs one label per gallery alcove");
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i].alcove != g.alcoves[i])
      throw GeometryError("label/alcove mismatch at position " + std::to_string(i));
  FunctorWord w;
  w.source = labels.empty() ? IVec{} : labels.front().lambda;
  w.target = labels.empty() ? IVec{} : labels.back().lambda;
  if (g.alcoves.size() <= 1) {
    w.source = w.target = labels.empty() ? IVec(cx.dim(), 0) : labels.front().lambda;
    return w;  // empty word = identity
  }
  for (std::size_t i = 0; i + 1 < g.alcoves.size(); ++i) {
    FunctorWord step;
    try {
      step = generator_functor(cx, chambers, chamber, labels[i], labels[i + 1]);
    } catch (const GeometryError& e) {
      throw GeometryError("step " + std::to_string(i) + ": " + e.what());
    }
    w.tokens.insert(w.tokens.end(), step.tokens.begin(), step.tokens.end());
  }
  return w;
}

namespace {

struct Rewrite {
  std::size_t pos;
  enum class Rule { CancelPair, MergeTwists, DropZeroTwist, DropIdentity } rule;
};

std::vector<Rewrite> applicable_rewrites(const FunctorWord& w) {
  std::vector<Rewrite> out;
  const auto& ts = w.tokens;
  using K = FunctorToken::Kind;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i + 1 < ts.size()) {
      const auto &x = ts[i], &y = ts[i + 1];
      bool pair_gl = x.kind == K::GlobalSections && y.kind == K::Localization;
      bool pair_lg = x.kind == K::Localization && y.kind == K::GlobalSections;
      if ((pair_gl || pair_lg) && x.chamber == y.chamber && x.weight == y.weight)
        out.push_back({i, Rewrite::Rule::CancelPair});
      if (x.kind == K::Twist && y.kind == K::Twist)
        out.push_back({i, Rewrite::Rule::MergeTwists});
    }
    if (ts[i].kind == K::Twist && std::all_of(ts[i].weight.begin(), ts[i].weight.end(),
                                              [](Int v) { return v == 0; }))
      out.push_back({i, Rewrite::Rule::DropZeroTwist});
    if (ts[i].kind == K::Identity) out.push_back({i, Rewrite::Rule::DropIdentity});
  }
  return out;
}

FunctorWord apply_rewrite(FunctorWord w, const Rewrite& r) {
  auto& ts = w.tokens;
  switch (r.rule) {
    case Rewrite::Rule::CancelPair:
      ts.erase(ts.begin() + r.pos, ts.begin() + r.pos + 2);
      break;
    case Rewrite::Rule::MergeTwists:
      ts[r.pos].weight = ivadd(ts[r.pos].weight, ts[r.pos + 1].weight);
      ts.erase(ts.begin() + r.pos + 1);
      break;
    case Rewrite::Rule::DropZeroTwist:
    case Rewrite::Rule::DropIdentity:
      ts.erase(ts.begin() + r.pos);
      break;
  }
  return w;
}

}  // namespace

FunctorWord normalize(const FunctorWord& w) {
  if (!well_typed(w)) throw GeometryError("cannot normalize an ill-typed word");
  FunctorWord cur = w;
  for (;;) {
    auto rws = applicable_rewrites(cur);
    if (rws.empty()) return cur;
    cur = apply_rewrite(std::move(cur), rws.front());
  }
}

FunctorWord normalize_random(const FunctorWord& w, std::mt19937_64& rng) {
  if (!well_typed(w)) throw GeometryError("cannot normalize an ill-typed word");
  FunctorWord cur = w;
  for (;;) {
    auto rws = applicable_rewrites(cur);
    if (rws.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, rws.size() - 1);
    cur = apply_rewrite(std::move(cur), rws[pick(rng)]);
  }
}

RelationTrace relation_check(const Complex& cx,
                             const std::vector<ParabolicChamber>& chambers,
                             const Relation& rel, int chamber,
                             const std::vector<WeightLabel>* tampered_left) {
  RelationTrace tr;
  tr.chamber = chamber;
  auto label_gallery = [&](const Gallery& g) {
    std::vector<WeightLabel> labels;
    for (int a : g.alcoves) labels.push_back(assign_weight(cx, a));
    return labels;
  };
  try {
    std::vector<WeightLabel> left_labels =
        tampered_left ? *tampered_left : label_gallery(rel.left);
    std::vector<WeightLabel> right_labels = label_gallery(rel.right);
    tr.left_raw = path_functor(cx, chambers, chamber, rel.left, left_labels);
    tr.right_raw = path_functor(cx, chambers, chamber, rel.right, right_labels);
    tr.left_nf = normalize(tr.left_raw);
    tr.right_nf = normalize(tr.right_raw);
  } catch (const GeometryError& e) {
    tr.equal = false;
    tr.note = std::string("construction failure: ") + e.what();
    return tr;
  }
  tr.equal = tr.left_nf.tokens == tr.right_nf.tokens;
  if (!tr.equal)
    tr.note = "normal forms differ: " + word_str(tr.left_nf) + "  vs  " +
              word_str(tr.right_nf);

  WeightLabel apex = assign_weight(cx, rel.apex);
  WeightLabel opp = assign_weight(cx, rel.opposite);
  std::vector<FunctorToken> expected{
      FunctorToken{FunctorToken::Kind::Localization, chamber, opp.lambda},
      FunctorToken{FunctorToken::Kind::Twist, -1, ivsub(apex.lambda, opp.lambda)},
      FunctorToken{FunctorToken::Kind::GlobalSections, chamber, apex.lambda},
  };
  tr.matches_expected = tr.equal && tr.left_nf.tokens == expected;
  return tr;
}

RelationTrace corrupted_relation_check(const Complex& cx,
                                       const std::vector<ParabolicChamber>& chambers,
                                       const Relation& rel, int chamber) {
  if (rel.left.alcoves.size() < 3)
    throw GeometryError("relation gallery too short to corrupt");
  // One wrong alcove: the first interior alcove is replaced by the apex, which
  // is never adjacent to the opposite alcove (they differ on the whole pencil).
  Relation bad = rel;
  bad.left.alcoves[1] = rel.apex;
  std::vector<WeightLabel> labels;
  for (int a : bad.left.alcoves) labels.push_back(assign_weight(cx, a));
  RelationTrace tr = relation_check(cx, chambers, bad, chamber, &labels);
  tr.note = "corrupted gallery (alcove " + std::to_string(rel.left.alcoves[1]) +
            " -> " + std::to_string(rel.apex) + "); " + tr.note;
  return tr;
}

bool lambda_independence_check(const Complex& cx,
                               const std::vector<ParabolicChamber>& chambers, int a,
                               int b, const IVec& lambda, const IVec& lambda2,
                               const IVec& mu, const IVec& mu2) {
  WeightLabel la{a, lambda}, la2{a, lambda2}, mb{b, mu}, mb2{b, mu2};
  for (const auto* l : {&la, &la2, &mb, &mb2}) validate_weight_label(cx, *l);
  int chamber = -1;
  for (const auto& pc : chambers)
    if (step_leq(cx, a, b, pc.cone)) {
      chamber = pc.label;
      break;
    }
  if (chamber < 0) throw GeometryError("no increasing chamber for the step");

  auto relabel = [&](const IVec& from, const IVec& to) {
    return std::vector<FunctorToken>{
        FunctorToken{FunctorToken::Kind::Localization, chamber, from},
        FunctorToken{FunctorToken::Kind::Twist, -1, ivsub(to, from)},
        FunctorToken{FunctorToken::Kind::GlobalSections, chamber, to},
    };
  };
  // relabel(lambda2 -> lambda), cross at (lambda, mu), relabel(mu -> mu2).
  FunctorWord lhs;
  lhs.source = lambda2;
  lhs.target = mu2;
  auto append = [&](const std::vector<FunctorToken>& ts) {
    lhs.tokens.insert(lhs.tokens.end(), ts.begin(), ts.end());
  };
  append(relabel(lambda2, lambda));
  append(generator_functor(cx, chambers, chamber, la, mb).tokens);
  append(relabel(mu, mu2));

  FunctorWord rhs = generator_functor(cx, chambers, chamber, la2, mb2);
  return normalize(lhs).tokens == normalize(rhs).tokens;
}

}  // namespace alc
