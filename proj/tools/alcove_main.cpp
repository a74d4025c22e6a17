#include "alc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace alc;

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    std::string tok = s.substr(i, j - i);
    if (!tok.empty()) out.push_back(std::stoi(tok));
    i = j + 1;
  }
  return out;
}

std::vector<int> parse_levi(const std::string& s) {
  std::vector<int> out = parse_ints(s);
  for (int& v : out) --v;  // CLI is 1-based
  return out;
}

std::optional<Vec> parse_seed(const std::string& s) {
  if (s.empty()) return std::nullopt;
  Vec v;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    v.push_back(rat_parse(s.substr(i, j - i)));
    i = j + 1;
  }
  return v;
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file " + path);
  f << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "alcove: exact-arithmetic toolkit for parabolic affine wall arrangements,\n"
      "their groupoid presentation and the wall-crossing word calculus"};
  app.require_subcommand(1);
  // Defaults come from a TOML file with one section per subcommand; explicit
  // flags always win. --config goes before the subcommand.
  app.set_config("--config");

  std::string type_label = "A1", levi_str, seed_str, out_path, format = "json",
              overlay_str;
  long long prime = 5, levels = 1;
  int workers = 1;
  std::size_t budget = 10000;
  int max_distance = 4;
  bool corrupt = false, as_json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", type_label, "root datum type, e.g. A2, A3, A1xA1");
    sub->add_option("--levi", levi_str, "Levi simple-root indices, 1-based, comma list");
    sub->add_option("--prime", prime, "the prime p");
    sub->add_option("--levels", levels, "level bound N (walls with |n| <= N)");
    sub->add_option("--parallel", workers, "worker threads");
    sub->add_option("--seed", seed_str, "seed-perturbation override, comma rationals");
  };

  auto* info = app.add_subcommand("info", "print window census");
  add_common(info);
  info->add_flag("--json", as_json, "emit JSON instead of text");
  info->add_option("--out", out_path, "output path ('-' = stdout)");

  auto* verify = app.add_subcommand("verify", "run every verification suite");
  add_common(verify);
  verify->add_option("--out", out_path, "write the JSON report here");
  verify->add_option("--budget", budget, "search budget for first-relations");
  verify->add_option("--max-distance", max_distance,
                     "distance cap for first-relations pairs");
  verify->add_flag("--corrupt", corrupt,
                   "inject a corrupted relation (negative control; must fail)");

  auto* export_cmd = app.add_subcommand("export", "write JSON/DOT/SVG artifacts");
  add_common(export_cmd);
  export_cmd->add_option("--format", format, "json | dot | svg");
  export_cmd->add_option("--out", out_path, "output path ('-' = stdout)");
  export_cmd->add_option("--overlay", overlay_str,
                         "svg only: 'a,b' draws a minimal gallery from a to b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    cfg.type_label = type_label;
    cfg.levi = parse_levi(levi_str);
    cfg.prime = prime;
    cfg.levels = levels;
    cfg.workers = workers;
    cfg.seed = parse_seed(seed_str);
    cfg.budget = budget;
    cfg.max_distance = max_distance;
    cfg.corrupt = corrupt;

    if (info->parsed()) {
      Complex cx = build_complex(cfg);
      auto gens = generators(cx);
      auto rels = relations(cx);
      auto chambers = parabolic_chambers(cx.window);
      int truncated = 0;
      for (const auto& f : cx.faces) truncated += f.truncated ? 1 : 0;
      if (as_json) {
        nlohmann::json j{{"config", config_json(cfg)},
                         {"dimension", cx.dim()},
                         {"hyperplanes", cx.window.hyperplanes.size()},
                         {"alcoves", cx.alcoves.size()},
                         {"faces", cx.faces.size()},
                         {"faces_truncated", truncated},
                         {"generators", gens.size()},
                         {"relations", rels.size()},
                         {"chambers", chambers.size()}};
        write_out(out_path, j.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << cfg.type_label << " levi={" << levi_str << "} p=" << prime
           << " N=" << levels << ": dim V = " << cx.dim() << "\n"
           << "  hyperplanes: " << cx.window.hyperplanes.size() << "\n"
           << "  alcoves:     " << cx.alcoves.size() << "\n"
           << "  faces:       " << cx.faces.size() << " (" << truncated
           << " truncated)\n"
           << "  generators:  " << gens.size() << "\n"
           << "  relations:   " << rels.size() << "\n"
           << "  chambers:    " << chambers.size() << "\n";
        for (const auto& n : cx.notes) os << "  note: " << n << "\n";
        write_out(out_path, os.str());
      }
      return 0;
    }

    if (verify->parsed()) {
      VerificationReport rep = run_verification(cfg);
      std::cout << report_text(rep);
      if (!out_path.empty()) write_out(out_path, report_json(rep).dump(2) + "\n");
      return rep.overall_pass() ? 0 : 1;
    }

    if (export_cmd->parsed()) {
      Complex cx = build_complex(cfg);
      if (format == "json") {
        write_out(out_path, export_json(cx, cfg).dump(2) + "\n");
      } else if (format == "dot") {
        write_out(out_path, export_dot(cx));
      } else if (format == "svg") {
        std::optional<Gallery> overlay;
        if (!overlay_str.empty()) {
          auto ab = parse_ints(overlay_str);  // alcove ids as printed in exports
          if (ab.size() != 2) throw ConfigError("--overlay wants 'a,b'");
          auto gs = all_minimal_galleries(cx, ab[0], ab[1]);
          if (!gs.empty()) overlay = gs.front();
        }
        write_out(out_path, export_svg(cx, overlay));
      } else {
        throw ConfigError("unknown format " + format);
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    std::cerr << "run '" << argv[0] << " --help' for usage\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
