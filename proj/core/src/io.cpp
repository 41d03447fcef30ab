#include "pptes/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace pptes {

double sig12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return std::strtod(buf, nullptr);
}

namespace {

json complex_to_json(const cplx& z) { return json::array({sig12(z.real()), sig12(z.imag())}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidParameterError("expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json matrix_to_json(const CMat& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(complex_to_json(m(i, j)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

CMat matrix_from_json(const json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw InvalidParameterError("matrix JSON needs rows, cols and entries");
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& entries = j.at("entries");
  if (rows <= 0 || cols <= 0 || !entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows * cols))
    throw InvalidParameterError("matrix JSON entry count does not match rows * cols");
  CMat m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index jj = 0; jj < cols; ++jj) m(i, jj) = complex_from_json(entries[k++]);
  return m;
}

json state_to_json(const BipartiteState& s, const std::optional<Provenance>& prov) {
  json j = matrix_to_json(s.matrix());
  j["schema"] = 1;
  j["dimA"] = BipartiteState::kDimA;
  j["dimB"] = BipartiteState::kDimB;
  if (prov) {
    json params = json::array();
    for (double v : prov->params) params.push_back(sig12(v));
    j["provenance"] = {{"constructor", prov->constructor}, {"params", std::move(params)}};
  }
  return j;
}

BipartiteState state_from_json(const json& j, std::optional<Provenance>* prov) {
  if (!j.contains("schema") || j.at("schema").get<int>() != 1)
    throw InvalidParameterError("unsupported state schema");
  if (j.at("dimA").get<int>() != BipartiteState::kDimA ||
      j.at("dimB").get<int>() != BipartiteState::kDimB)
    throw InvalidParameterError("state dimensions must be 3 x 3");
  if (prov) {
    prov->reset();
    if (j.contains("provenance")) {
      const auto& pj = j.at("provenance");
      Provenance p;
      p.constructor = pj.at("constructor").get<std::string>();
      if (pj.contains("params"))
        for (const auto& v : pj.at("params")) p.params.push_back(v.get<double>());
      *prov = std::move(p);
    }
  }
  return BipartiteState(matrix_from_json(j));
}

void save_state(const std::string& path, const BipartiteState& s,
                const std::optional<Provenance>& prov) {
  std::ofstream out(path);
  if (!out) throw InvalidParameterError("cannot open " + path + " for writing");
  out << state_to_json(s, prov).dump(2) << '\n';
  if (!out) throw InvalidParameterError("failed while writing " + path);
}

BipartiteState load_state(const std::string& path, std::optional<Provenance>* prov) {
  std::ifstream in(path);
  if (!in) throw InvalidParameterError("cannot open " + path + " for reading");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidParameterError("invalid JSON in " + path + ": " + e.what());
  }
  return state_from_json(j, prov);
}

json product_vectors_to_json(const std::vector<ProductVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json a = json::array(), b = json::array();
    for (int i = 0; i < 3; ++i) {
      a.push_back(complex_to_json(v.a(i)));
      b.push_back(complex_to_json(v.b(i)));
    }
    out.push_back({{"A", std::move(a)}, {"B", std::move(b)}});
  }
  return out;
}

std::vector<ProductVector> product_vectors_from_json(const json& j) {
  if (!j.is_array()) throw InvalidParameterError("expected an array of product vectors");
  std::vector<ProductVector> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.contains("A") || !e.contains("B") || e.at("A").size() != 3 || e.at("B").size() != 3)
      throw InvalidParameterError("each product vector needs three-entry A and B factors");
    Vec3 a, b;
    for (int i = 0; i < 3; ++i) {
      a(i) = complex_from_json(e.at("A")[i]);
      b(i) = complex_from_json(e.at("B")[i]);
    }
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace pptes
