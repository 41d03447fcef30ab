// Command line front end. Every subcommand reads and writes JSON; numbers are
// rounded to 12 significant digits. Exit codes: 0 success or true verdict,
// 1 false verdict, 2 input error, 3 numeric indeterminacy.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pptes/equivalence.hpp"
#include "pptes/invariants.hpp"
#include "pptes/io.hpp"

namespace {

using namespace pptes;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitIndeterminate = 3;

struct Global {
  double tol_rank = ToleranceProfile{}.rank_tol;
  double tol_match = ToleranceProfile{}.match_tol;
  std::uint64_t seed = FinderOptions{}.seed;
  bool compact = false;
  std::string out_path;
};

FinderOptions finder_options(const Global& g) {
  FinderOptions f;
  f.rank_tol = g.tol_rank;
  f.seed = g.seed;
  return f;
}

ToleranceProfile tolerance_profile(const Global& g) {
  ToleranceProfile t;
  t.rank_tol = g.tol_rank;
  t.match_tol = g.tol_match;
  return t;
}

void emit(const Global& g, const json& j) {
  const std::string text = g.compact ? j.dump() : j.dump(2);
  if (g.out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(g.out_path);
  if (!out) throw InvalidParameterError("cannot open " + g.out_path + " for writing");
  out << text << '\n';
  if (!out) throw InvalidParameterError("failed while writing " + g.out_path);
}

json quadruple_json(const InvariantQuadruple& q) {
  json a = json::array();
  for (double v : q.as_array()) a.push_back(sig12(v));
  return a;
}

json tuple_json(const InvariantTuple& t) {
  json a = json::array();
  for (double v : t.as_array()) a.push_back(sig12(v));
  return a;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameterError("cannot open " + path + " for reading");
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::parse_error& e) {
    throw InvalidParameterError("invalid JSON in " + path + ": " + e.what());
  }
}

double require_double(const std::vector<std::string>& params, std::size_t i,
                      const std::string& what) {
  if (i >= params.size()) throw InvalidParameterError("missing parameter: " + what);
  try {
    std::size_t pos = 0;
    const double v = std::stod(params[i], &pos);
    if (pos != params[i].size()) throw std::invalid_argument(params[i]);
    return v;
  } catch (const std::exception&) {
    throw InvalidParameterError("parameter " + what + " is not a number: " + params[i]);
  }
}

void require_count(const std::vector<std::string>& params, std::size_t n,
                   const std::string& kind) {
  if (params.size() != n)
    throw InvalidParameterError(kind + " takes " + std::to_string(n) + " parameter(s), got " +
                                std::to_string(params.size()));
}

cplx complex_entry(const json& j, const std::string& key) {
  const json& e = j.at(key);
  if (e.is_number()) return cplx(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return cplx(e[0].get<double>(), e[1].get<double>());
  throw InvalidParameterError("letter " + key + " must be a number or a [re, im] pair");
}

CheckerboardRaw raw_from_json(const json& j) {
  if (!j.is_object()) throw InvalidParameterError("raw pattern file must hold a JSON object");
  CheckerboardRaw r;
  const std::array<std::pair<const char*, cplx*>, 18> slots{{{"a", &r.a},
                                                             {"b", &r.b},
                                                             {"c", &r.c},
                                                             {"d", &r.d},
                                                             {"e", &r.e},
                                                             {"f", &r.f},
                                                             {"g", &r.g},
                                                             {"h", &r.h},
                                                             {"i", &r.i},
                                                             {"j", &r.j},
                                                             {"k", &r.k},
                                                             {"l", &r.l},
                                                             {"m", &r.m},
                                                             {"n", &r.n},
                                                             {"p", &r.p},
                                                             {"q", &r.q},
                                                             {"r", &r.r},
                                                             {"s", &r.s}}};
  for (const auto& [key, dst] : slots)
    if (j.contains(key)) *dst = complex_entry(j, key);
  for (const auto& item : j.items()) {
    const bool known = std::any_of(slots.begin(), slots.end(),
                                   [&](const auto& s) { return item.key() == s.first; });
    if (!known) throw InvalidParameterError("unknown letter in raw pattern file: " + item.key());
  }
  return r;
}

int cmd_construct(const Global& g, const std::string& kind,
                  const std::vector<std::string>& params) {
  BipartiteState state = [&]() -> BipartiteState {
    if (kind == "omega") {
      require_count(params, 4, kind);
      return omega({require_double(params, 0, "a"), require_double(params, 1, "b"),
                    require_double(params, 2, "c"), require_double(params, 3, "d")});
    }
    if (kind == "checkerboard") {
      require_count(params, 2, kind);
      return checkerboard_canonical(
          {require_double(params, 0, "u"), require_double(params, 1, "v")});
    }
    if (kind == "checkerboard-raw") {
      require_count(params, 1, kind);
      return checkerboard_raw(raw_from_json(load_json_file(params[0])));
    }
    if (kind == "choi") {
      require_count(params, 1, kind);
      return choi_state({require_double(params, 0, "lambda")});
    }
    if (kind == "upb-pyramid") {
      require_count(params, 0, kind);
      return upb_state(pyramid_fixture());
    }
    if (kind == "upb-tiles") {
      require_count(params, 0, kind);
      return upb_state(tiles_fixture());
    }
    throw InvalidParameterError("unknown construct kind: " + kind);
  }();

  Provenance prov;
  prov.constructor = kind;
  if (kind != "checkerboard-raw")
    for (std::size_t i = 0; i < params.size(); ++i)
      prov.params.push_back(require_double(params, i, "p"));
  emit(g, state_to_json(state, prov));
  return kExitTrue;
}

json finder_result_json(const PVSearchResult& res) {
  json j;
  switch (res.status) {
    case SearchStatus::Finite:
      j["status"] = "finite";
      break;
    case SearchStatus::Infinite:
      j["status"] = "infinite";
      break;
    case SearchStatus::Indeterminate:
      j["status"] = "indeterminate";
      break;
  }
  j["count"] = res.vectors.size();
  j["vectors"] = product_vectors_to_json(res.vectors);
  if (!res.note.empty()) j["note"] = res.note;
  return j;
}

int cmd_pvs(const Global& g, const std::string& path, bool kernel) {
  const BipartiteState state = load_state(path);
  const auto spec =
      kernel ? SubspaceSpec::kernel_of(state) : SubspaceSpec::range_of(state);
  const auto res = find_product_vectors(spec, finder_options(g));
  emit(g, finder_result_json(res));
  return res.status == SearchStatus::Indeterminate ? kExitIndeterminate : kExitTrue;
}

std::vector<ProductVector> apply_order(const std::vector<ProductVector>& vs,
                                       const std::vector<int>& order) {
  if (order.empty()) return vs;
  if (order.size() != vs.size())
    throw InvalidParameterError("--order must list each vector index exactly once");
  std::vector<int> seen(vs.size(), 0);
  std::vector<ProductVector> out;
  out.reserve(vs.size());
  for (int i : order) {
    if (i < 0 || i >= static_cast<int>(vs.size()) || seen[i]++)
      throw InvalidParameterError("--order must be a permutation of 0.." +
                                  std::to_string(vs.size() - 1));
    out.push_back(vs[static_cast<std::size_t>(i)]);
  }
  return out;
}

int cmd_invariants(const Global& g, const std::string& path, const std::vector<int>& order) {
  const auto vs = apply_order(product_vectors_from_json(load_json_file(path)), order);
  const ToleranceProfile tol = tolerance_profile(g);
  InvariantTuple t;
  if (vs.size() == 5)
    t = quintuple_invariants(vs, tol);
  else if (vs.size() == 6)
    t = sextuple_invariants(vs, tol);
  else
    throw InvalidParameterError("invariants needs five or six product vectors, got " +
                                std::to_string(vs.size()));
  json j;
  j["tuple"] = tuple_json(t);
  j["symbol"] = classify_symbol(t, tol.symbol_tol).str();
  j["quadruple"] = quadruple_json(quadruple_of(t));
  emit(g, j);
  return kExitTrue;
}

int cmd_equiv(const Global& g, const std::string& path_a, const std::string& path_b) {
  const BipartiteState a = load_state(path_a);
  const BipartiteState b = load_state(path_b);
  EquivalenceOptions opts;
  opts.finder = finder_options(g);
  opts.match_tol = g.tol_match;
  const auto verdict = is_equivalent(a, b, opts);
  json j;
  j["equivalent"] = verdict.equivalent;
  j["residual"] = sig12(verdict.residual);
  if (verdict.witness) {
    json w = json::array();
    for (int i : *verdict.witness) w.push_back(i);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  emit(g, j);
  return verdict.equivalent ? kExitTrue : kExitFalse;
}

int cmd_canonicalize(const Global& g, const std::string& path) {
  const BipartiteState state = load_state(path);
  const auto cand = canonicalize(state, finder_options(g));
  json j;
  j["params"] = {{"a", sig12(cand.params.a)},
                 {"b", sig12(cand.params.b)},
                 {"c", sig12(cand.params.c)},
                 {"d", sig12(cand.params.d)}};
  j["quadruple"] = quadruple_json(cand.quadruple);
  json perm = json::array();
  for (int i : cand.perm) perm.push_back(i);
  j["ordering"] = std::move(perm);
  emit(g, j);
  return kExitTrue;
}

json checkerboard_verdict_json(const CheckerboardVerdict& v) {
  json j;
  j["is_checkerboard_class"] = v.is_checkerboard_class;
  if (v.params) {
    j["params"] = {{"u", sig12(v.params->u)}, {"v", sig12(v.params->v)}};
  } else {
    j["params"] = nullptr;
  }
  if (v.lambda_mu) {
    j["lambda"] = sig12(v.lambda_mu->first);
    j["mu"] = sig12(v.lambda_mu->second);
  }
  j["residual"] = sig12(v.residual);
  return j;
}

int cmd_checkerboard(const Global& g, const std::string& path) {
  const BipartiteState state = load_state(path);
  const auto verdict = checkerboard_class(state, finder_options(g));
  emit(g, checkerboard_verdict_json(verdict));
  return verdict.is_checkerboard_class ? kExitTrue : kExitFalse;
}

int cmd_orbit(const Global& g, double x, double y, double z, double w) {
  const InvariantQuadruple q{x, y, z, w};
  if (!q.in_box())
    throw OutOfBoxError("orbit point must lie in (0,1) x (0,1) x (-inf,0) x (0,1)");
  const auto points = orbit(q, g.tol_match);
  json j;
  j["size"] = points.size();
  json arr = json::array();
  for (const auto& p : points) arr.push_back(quadruple_json(p));
  j["points"] = std::move(arr);
  emit(g, j);
  return kExitTrue;
}

int cmd_analyze(const Global& g, const std::string& path) {
  std::optional<Provenance> prov;
  const BipartiteState state = load_state(path, &prov);
  const FinderOptions fopts = finder_options(g);
  const ToleranceProfile tol = tolerance_profile(g);

  json j;
  j["trace"] = sig12(state.trace());
  const auto [r, s] = state.birank();
  j["birank"] = json::array({r, s});
  j["ppt"] = state.is_ppt();
  j["extreme_possible"] = extreme_necessary({r, s});
  if (prov) {
    json params = json::array();
    for (double v : prov->params) params.push_back(sig12(v));
    j["provenance"] = {{"constructor", prov->constructor}, {"params", std::move(params)}};
  }

  std::vector<ProductVector> six;
  try {
    six = kernel_product_vectors(state, fopts);
    j["kernel_pvs"] = six.size();
    j["kernel_vectors"] = product_vectors_to_json(six);
    j["general_position"] = in_general_position(six, fopts.rank_tol);
  } catch (const Error& e) {
    j["kernel_pvs"] = {{"error", e.what()}};
  }

  if (!six.empty()) {
    try {
      const auto census = symbol_census(six, tol);
      bool regular = census.size() == 12;
      for (const auto& [sym, count] : census) regular = regular && count == 60;
      if (regular) {
        j["census"] = "12x60";
      } else {
        json hist;
        for (const auto& [sym, count] : census) hist[sym] = count;
        j["census"] = {{"anomaly", std::move(hist)}};
      }
    } catch (const Error& e) {
      j["census"] = {{"error", e.what()}};
    }

    try {
      const InvariantEngine eng(six, tol);
      std::optional<InvariantQuadruple> best;
      Perm6 p = kIdentityPerm;
      std::sort(p.begin(), p.end());
      do {
        InvariantTuple t{};
        Symbol sym{};
        try {
          t = eng.tuple(p);
          sym = classify_symbol(t, tol.symbol_tol);
        } catch (const Error&) {
          continue;
        }
        if (sym.str() != "ppPNNp") continue;
        const auto q = quadruple_of(t);
        if (!best || q.as_array() < best->as_array()) best = q;
      } while (std::next_permutation(p.begin(), p.end()));
      if (best) {
        j["box_quadruple"] = quadruple_json(*best);
        j["box_orbit_size"] = orbit(*best, tol.match_tol).size();
      } else {
        j["box_quadruple"] = nullptr;
      }
    } catch (const Error& e) {
      j["box_quadruple"] = {{"error", e.what()}};
    }
  }

  try {
    j["checkerboard"] = checkerboard_verdict_json(checkerboard_class(state, fopts));
  } catch (const Error& e) {
    j["checkerboard"] = {{"error", e.what()}};
  }

  emit(g, j);
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Two-qutrit rank-four PPT entangled states: construction, product-vector "
      "search, projective invariants, equivalence and normal forms"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--tol-rank", g.tol_rank, "Relative singular value cutoff for rank decisions");
  app.add_option("--tol-match", g.tol_match, "Tolerance for invariant tuple matching");
  app.add_option("--seed", g.seed, "Seed for randomized internal checks");
  app.add_flag("--json", g.compact, "Compact single-line JSON output");
  app.add_option("-o,--output", g.out_path, "Write the JSON result to a file instead of stdout");

  std::string kind, path_a, path_b;
  std::vector<std::string> params;
  std::vector<int> order;
  std::array<double, 4> point{};

  auto* construct = app.add_subcommand("construct", "Build a state and emit its JSON");
  construct->add_option("kind", kind,
                        "omega | checkerboard | checkerboard-raw | choi | upb-pyramid | upb-tiles")
      ->required();
  construct->add_option("params", params, "Constructor parameters");

  auto* analyze = app.add_subcommand("analyze", "Full report for a state file");
  analyze->add_option("state", path_a, "State JSON file")->required();

  auto* kpvs = app.add_subcommand("kernel-pvs", "Product vectors in the kernel");
  kpvs->add_option("state", path_a, "State JSON file")->required();

  auto* rpvs = app.add_subcommand("range-pvs", "Product vectors in the range");
  rpvs->add_option("state", path_a, "State JSON file")->required();

  auto* inv = app.add_subcommand("invariants", "Invariants of an ordered product-vector list");
  inv->add_option("vectors", path_a, "Product-vector list JSON file")->required();
  inv->add_option("--order", order, "Reordering applied before evaluation")->delimiter(',');

  auto* equiv = app.add_subcommand("equiv", "Equivalence under invertible local operations");
  equiv->add_option("a", path_a, "First state JSON file")->required();
  equiv->add_option("b", path_b, "Second state JSON file")->required();

  auto* canon = app.add_subcommand("canonicalize", "Extract canonical family parameters");
  canon->add_option("state", path_a, "State JSON file")->required();

  auto* checker = app.add_subcommand("checkerboard", "Checkerboard family membership and parameters");
  checker->add_option("state", path_a, "State JSON file")->required();

  auto* orb = app.add_subcommand("orbit", "Orbit of a box point under the rational action");
  orb->add_option("x", point[0], "First coordinate, in (0,1)")->required();
  orb->add_option("y", point[1], "Second coordinate, in (0,1)")->required();
  orb->add_option("z", point[2], "Third coordinate, negative")->required();
  orb->add_option("w", point[3], "Fourth coordinate, in (0,1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitTrue : kExitInput;
  }

  try {
    if (*construct) return cmd_construct(g, kind, params);
    if (*analyze) return cmd_analyze(g, path_a);
    if (*kpvs) return cmd_pvs(g, path_a, true);
    if (*rpvs) return cmd_pvs(g, path_a, false);
    if (*inv) return cmd_invariants(g, path_a, order);
    if (*equiv) return cmd_equiv(g, path_a, path_b);
    if (*canon) return cmd_canonicalize(g, path_a);
    if (*checker) return cmd_checkerboard(g, path_a);
    if (*orb) return cmd_orbit(g, point[0], point[1], point[2], point[3]);
    return kExitInput;
  } catch (const IndeterminateError& e) {
    std::cerr << "indeterminate: " << e.what() << '\n';
    return kExitIndeterminate;
  } catch (const IndeterminateSymbolError& e) {
    std::cerr << "indeterminate: " << e.what() << '\n';
    return kExitIndeterminate;
  } catch (const DenominatorVanishesError& e) {
    std::cerr << "indeterminate: " << e.what() << '\n';
    return kExitIndeterminate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
