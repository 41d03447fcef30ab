#pragma once

// JSON serialization for states, matrices, and product-vector lists. Numbers
// are emitted with 12 significant digits.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pptes/product_vector.hpp"
#include "pptes/state.hpp"

namespace pptes {

using json = nlohmann::json;

// Round to 12 significant digits for stable text output.
double sig12(double x);

struct Provenance {
  std::string constructor;      // "omega", "checkerboard", "choi", "upb-pyramid", ...
  std::vector<double> params;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

json matrix_to_json(const CMat& m);
CMat matrix_from_json(const json& j);

// Schema: {"schema":1,"dimA":3,"dimB":3,"rows":9,"cols":9,
//          "entries":[[re,im] x 81], "provenance": {...}?}
json state_to_json(const BipartiteState& s, const std::optional<Provenance>& prov = {});
BipartiteState state_from_json(const json& j, std::optional<Provenance>* prov = nullptr);

void save_state(const std::string& path, const BipartiteState& s,
                const std::optional<Provenance>& prov = {});
BipartiteState load_state(const std::string& path, std::optional<Provenance>* prov = nullptr);

// Array of {"A":[[re,im] x 3], "B":[[re,im] x 3]}.
json product_vectors_to_json(const std::vector<ProductVector>& vs);
std::vector<ProductVector> product_vectors_from_json(const json& j);

}  // namespace pptes
