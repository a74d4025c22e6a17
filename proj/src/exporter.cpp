#include "alc/exporter.hpp"

#include <algorithm>
#include <sstream>

namespace alc {

using nlohmann::json;

void RunConfig::validate() const {
  if (!is_prime(prime)) throw ConfigError("--prime must be prime");
  if (levels < 1) throw ConfigError("--levels must be >= 1");
  if (workers < 1) throw ConfigError("--parallel must be >= 1");
}

Complex build_complex(const RunConfig& cfg) {
  cfg.validate();
  RootDatum rd = build_root_datum(cfg.type_label);
  LeviSpec levi = levi_sublattice(rd, cfg.levi);
  Window w = build_window(rd, levi, cfg.prime, cfg.levels);
  return analyze_window(w, cfg.workers, cfg.seed);
}

json config_json(const RunConfig& cfg) {
  json levi = json::array();
  for (int i : cfg.levi) levi.push_back(i + 1);  // user-facing 1-based
  json j{{"type", cfg.type_label},
         {"levi", levi},
         {"prime", cfg.prime},
         {"levels", cfg.levels},
         {"workers", cfg.workers},
         {"budget", cfg.budget},
         {"max_distance", cfg.max_distance},
         {"corrupt", cfg.corrupt}};
  if (cfg.seed) {
    json s = json::array();
    for (const auto& v : *cfg.seed) s.push_back(rat_str(v));
    j["seed"] = s;
  }
  return j;
}

namespace {

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

json ivec_json(const IVec& v) {
  json a = json::array();
  for (Int x : v) a.push_back(x);
  return a;
}

}  // namespace

json export_json(const Complex& cx, const RunConfig& cfg) {
  const Window& w = cx.window;
  json j;
  j["schema_version"] = 1;
  j["config"] = config_json(cfg);

  json rd{{"rank", w.rd.rank}, {"label", w.rd.label}};
  json cart = json::array();
  for (const auto& row : w.rd.cartan) cart.push_back(ivec_json(row));
  rd["cartan"] = cart;
  json roots = json::array();
  for (std::size_t r = 0; r < w.rd.pos_roots.size(); ++r)
    roots.push_back(json{{"name", root_name(w.rd, static_cast<int>(r))},
                         {"root", ivec_json(w.rd.pos_roots[r].root)},
                         {"coroot", ivec_json(w.rd.pos_roots[r].coroot)}});
  rd["positive_roots"] = roots;
  j["root_datum"] = rd;

  json levi;
  json simples = json::array();
  for (int i : w.levi.levi_simples) simples.push_back(i + 1);
  levi["simples"] = simples;
  json basis = json::array();
  for (int i : w.levi.lattice_basis) basis.push_back(i + 1);
  levi["basis_weights"] = basis;
  j["levi"] = levi;

  json coords = json::array();
  for (int c : w.coords) coords.push_back("w" + std::to_string(c + 1));
  j["coordinates"] = coords;

  json hps = json::array();
  for (std::size_t h = 0; h < w.hyperplanes.size(); ++h) {
    const auto& hp = w.hyperplanes[h];
    json sources = json::array();
    for (const auto& s : hp.sources)
      sources.push_back(json{{"root", root_name(w.rd, s.root_index)},
                             {"level", s.level}});
    hps.push_back(json{{"id", h},
                       {"linear", vec_json(hp.linear)},
                       {"offset", rat_str(hp.offset)},
                       {"sources", sources}});
  }
  j["hyperplanes"] = hps;

  json alcs = json::array();
  for (std::size_t a = 0; a < cx.alcoves.size(); ++a) {
    const auto& al = cx.alcoves[a];
    json fac = json::array();
    for (int f : al.facets) fac.push_back(f);
    alcs.push_back(json{{"id", a},
                        {"signs", al.id},
                        {"sample", vec_json(al.sample)},
                        {"facets", fac}});
  }
  j["alcoves"] = alcs;

  auto gen_list = generators(cx);
  std::map<std::pair<int, int>, int> gen_id;
  json gens = json::array();
  for (std::size_t i = 0; i < gen_list.size(); ++i) {
    const auto& g = gen_list[i];
    gen_id[{g.source, g.target}] = static_cast<int>(i);
    gens.push_back(json{{"id", i},
                        {"source", g.source},
                        {"target", g.target},
                        {"wall", g.wall}});
  }
  j["generators"] = gens;

  json faces = json::array();
  for (std::size_t f = 0; f < cx.faces.size(); ++f) {
    const auto& fc = cx.faces[f];
    json pencil = json::array();
    for (int h : fc.pencil) pencil.push_back(h);
    json star = json::array();
    for (int s : fc.star) star.push_back(s);
    faces.push_back(json{{"id", f},
                         {"pencil", pencil},
                         {"sample", vec_json(fc.sample)},
                         {"star", star},
                         {"truncated", fc.truncated}});
  }
  j["faces"] = faces;

  json rels = json::array();
  for (const auto& r : relations(cx)) {
    json left = json::array(), right = json::array();
    for (int a : r.left.alcoves) left.push_back(a);
    for (int a : r.right.alcoves) right.push_back(a);
    // gallery words as generator ids
    auto word = [&](const Gallery& g) {
      json w = json::array();
      for (std::size_t s = 0; s + 1 < g.alcoves.size(); ++s)
        w.push_back(gen_id.at({g.alcoves[s], g.alcoves[s + 1]}));
      return w;
    };
    rels.push_back(json{{"face", r.face},
                        {"apex", r.apex},
                        {"opposite", r.opposite},
                        {"left", left},
                        {"right", right},
                        {"left_word", word(r.left)},
                        {"right_word", word(r.right)}});
  }
  j["relations"] = rels;

  json chambers = json::array();
  for (const auto& pc : parabolic_chambers(w)) {
    std::string signs(pc.signs.size(), '?');
    for (std::size_t i = 0; i < pc.signs.size(); ++i)
      signs[i] = pc.signs[i] > 0 ? '+' : '-';
    json facets = json::array();
    for (const auto& row : pc.cone.facets) facets.push_back(vec_json(row));
    chambers.push_back(json{{"label", pc.label}, {"signs", signs}, {"facets", facets}});
  }
  j["chambers"] = chambers;

  j["identifications"] = json::array(
      {"endpoint category labels depend on the alcove only, not on the chamber",
       "generator words for distinct increasing chambers are identified"});

  json notes = json::array();
  for (const auto& n : cx.notes) notes.push_back(n);
  j["notes"] = notes;
  return j;
}

std::string export_dot(const Complex& cx) {
  std::ostringstream os;
  os << "digraph alcoves {\n  node [shape=box];\n";
  for (std::size_t a = 0; a < cx.alcoves.size(); ++a)
    os << "  a" << a << " [label=\"" << a << ": " << cx.alcoves[a].id << "\"];\n";
  for (const auto& g : generators(cx))
    os << "  a" << g.source << " -> a" << g.target << " [label=\"h" << g.wall
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string export_svg(const Complex& cx, const std::optional<Gallery>& overlay) {
  if (cx.dim() != 2)
    throw ConfigError("svg export requires a 2-dimensional parameter space");
  const Window& w = cx.window;

  Rat min_x, max_x, min_y, max_y;
  bool first = true;
  for (const auto& al : cx.alcoves)
    for (const auto& v : al.vertices) {
      if (first || v[0] < min_x) min_x = v[0];
      if (first || v[0] > max_x) max_x = v[0];
      if (first || v[1] < min_y) min_y = v[1];
      if (first || v[1] > max_y) max_y = v[1];
      first = false;
    }
  Rat margin = std::max<Rat>(Rat(1), (max_x - min_x) / 10);
  min_x -= margin;
  max_x += margin;
  min_y -= margin;
  max_y += margin;

  const double width = 800, height = 800;
  auto fx = [&](const Rat& x) {
    return width * ((x - min_x) / (max_x - min_x)).convert_to<double>();
  };
  auto fy = [&](const Rat& y) {
    return height * (1.0 - ((y - min_y) / (max_y - min_y)).convert_to<double>());
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
     << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Clip each wall to the bounding box.
  for (const auto& h : w.hyperplanes) {
    std::vector<std::pair<Rat, Rat>> pts;
    auto try_pt = [&](const Rat& x, const Rat& y) {
      if (x < min_x || x > max_x || y < min_y || y > max_y) return;
      for (const auto& p : pts)
        if (p.first == x && p.second == y) return;
      pts.push_back({x, y});
    };
    const Rat &a = h.linear[0], &b = h.linear[1], &c = h.offset;
    if (b != 0) {
      try_pt(min_x, (-c - a * min_x) / b);
      try_pt(max_x, (-c - a * max_x) / b);
    }
    if (a != 0) {
      try_pt((-c - b * min_y) / a, min_y);
      try_pt((-c - b * max_y) / a, max_y);
    }
    if (pts.size() >= 2)
      os << "<line x1=\"" << fx(pts[0].first) << "\" y1=\"" << fy(pts[0].second)
         << "\" x2=\"" << fx(pts[1].first) << "\" y2=\"" << fy(pts[1].second)
         << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  }

  if (overlay) {
    os << "<polyline fill=\"none\" stroke=\"#d22\" stroke-width=\"2\" points=\"";
    for (int a : overlay->alcoves)
      os << fx(cx.alcoves.at(a).sample[0]) << "," << fy(cx.alcoves.at(a).sample[1])
         << " ";
    os << "\"/>\n";
  }

  for (std::size_t a = 0; a < cx.alcoves.size(); ++a) {
    const auto& s = cx.alcoves[a].sample;
    os << "<text x=\"" << fx(s[0]) << "\" y=\"" << fy(s[1])
       << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#225\">" << a
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace alc
