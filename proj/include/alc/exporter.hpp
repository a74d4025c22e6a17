#pragma once

#include "alc/coneorder.hpp"
#include "alc/salvetti.hpp"

#include <json.hpp>

#include <optional>

namespace alc {

// Echo of a run's full configuration; serialized into every report.
struct RunConfig {
  std::string type_label = "A1";
  std::vector<int> levi;  // 0-based simple-root indices
  Int prime = 5;
  Int levels = 1;
  int workers = 1;
  std::optional<Vec> seed;  // seed-perturbation override
  std::size_t budget = 10000;
  int max_distance = 4;
  bool corrupt = false;  // claim-5 corrupted-relation injection

  void validate() const;
};

Complex build_complex(const RunConfig& cfg);

nlohmann::json config_json(const RunConfig& cfg);

// Full JSON export of the window: hyperplanes with provenance, alcoves,
// faces, generators, relations, chambers. Bit-exact and deterministic.
nlohmann::json export_json(const Complex& cx, const RunConfig& cfg);

// Generator digraph; one edge per generator.
std::string export_dot(const Complex& cx);

// 2-dimensional picture: walls, alcove labels, optional gallery overlay.
// Presentation-only; throws unless dim V = 2.
std::string export_svg(const Complex& cx,
                       const std::optional<Gallery>& overlay = std::nullopt);

}  // namespace alc
