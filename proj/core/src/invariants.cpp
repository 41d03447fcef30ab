#include "pptes/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace pptes {

namespace {

bool is_perm6(const Perm6& p) {
  std::array<bool, 6> seen{};
  for (int v : p) {
    if (v < 0 || v > 5 || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// Signed lookup into a table filled for strictly increasing triples.
cplx signed_lookup(const std::array<cplx, 216>& t, int i, int j, int k) {
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (j > k) {
    std::swap(j, k);
    sign = -sign;
  }
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  return static_cast<double>(sign) * t[(i * 6 + j) * 6 + k];
}

double guard_real(cplx v, double match_tol, const char* name) {
  if (std::abs(v.imag()) > match_tol * (1.0 + std::abs(v.real())))
    throw NonRealInvariantError(std::string(name) +
                                " has a non-negligible imaginary part: " + std::to_string(v.imag()));
  return v.real();
}

}  // namespace

cplx delta(const Vec3& v1, const Vec3& v2, const Vec3& v3) {
  Mat3 m;
  m.col(0) = v1;
  m.col(1) = v2;
  m.col(2) = v3;
  return m.determinant();
}

bool InvariantQuadruple::in_box() const {
  return x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0 && z < 0.0 && w > 0.0 && w < 1.0;
}

InvariantQuadruple quadruple_of(const InvariantTuple& t) { return {t.j1a, t.j2a, t.j2b, t.j3b}; }

std::vector<ProductVector> permuted(const std::vector<ProductVector>& vs, const Perm6& p) {
  if (vs.size() != 6)
    throw InvalidParameterError("permuted: expected a sextuple of product vectors");
  if (!is_perm6(p)) throw InvalidParameterError("permuted: not a permutation of 0..5");
  std::vector<ProductVector> out;
  out.reserve(6);
  for (int i = 0; i < 6; ++i) out.push_back(vs[p[i]]);
  return out;
}

InvariantEngine::InvariantEngine(const std::vector<ProductVector>& vs, ToleranceProfile tol)
    : n_(static_cast<int>(vs.size())), tol_(tol) {
  if (n_ != 5 && n_ != 6)
    throw InvalidParameterError("InvariantEngine: expected five or six product vectors");
  std::array<Vec3, 6> ua, ub;
  for (int i = 0; i < n_; ++i) {
    ua[i] = vs[i].a.normalized();
    ub[i] = vs[i].b.normalized();
  }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) {
        da_[(i * 6 + j) * 6 + k] = delta(ua[i], ua[j], ua[k]);
        db_[(i * 6 + j) * 6 + k] = delta(ub[i], ub[j], ub[k]);
      }
}

cplx InvariantEngine::delta_a(int i, int j, int k) const { return signed_lookup(da_, i, j, k); }
cplx InvariantEngine::delta_b(int i, int j, int k) const { return signed_lookup(db_, i, j, k); }

std::array<cplx, 6> InvariantEngine::tuple_complex(const Perm6& perm) const {
  if (!is_perm6(perm)) throw InvalidParameterError("InvariantEngine: not a permutation of 0..5");
  for (int i = 0; i < 5; ++i)
    if (perm[i] >= n_)
      throw InvalidParameterError("InvariantEngine: permutation uses an absent vector");
  const auto& w = perm;
  const auto q = [&](cplx (InvariantEngine::*d)(int, int, int) const) -> std::array<cplx, 3> {
    const cplx d204 = (this->*d)(w[2], w[0], w[4]);
    const cplx d013 = (this->*d)(w[0], w[1], w[3]);
    const cplx d203 = (this->*d)(w[2], w[0], w[3]);
    const cplx d014 = (this->*d)(w[0], w[1], w[4]);
    const cplx d123 = (this->*d)(w[1], w[2], w[3]);
    const cplx d124 = (this->*d)(w[1], w[2], w[4]);
    for (const auto& [v, nm] : {std::pair{d203, "d203"}, {d014, "d014"}, {d013, "d013"},
                                {d124, "d124"}, {d123, "d123"}, {d204, "d204"}})
      if (std::abs(v) <= tol_.rank_tol)
        throw DegenerateQuintupleError(std::string("determinant ") + nm +
                                       " of the quintuple is numerically zero");
    return {d204 * d013 / (d203 * d014), d014 * d123 / (d013 * d124),
            d124 * d203 / (d123 * d204)};
  };
  const auto ja = q(&InvariantEngine::delta_a);
  const auto jb = q(&InvariantEngine::delta_b);
  return {ja[0], ja[1], ja[2], jb[0], jb[1], jb[2]};
}

InvariantTuple InvariantEngine::tuple(const Perm6& perm) const {
  const auto c = tuple_complex(perm);
  static constexpr const char* names[6] = {"J1A", "J2A", "J3A", "J1B", "J2B", "J3B"};
  InvariantTuple t{};
  double* slots[6] = {&t.j1a, &t.j2a, &t.j3a, &t.j1b, &t.j2b, &t.j3b};
  for (int i = 0; i < 6; ++i) *slots[i] = guard_real(c[i], tol_.match_tol, names[i]);
  return t;
}

InvariantTuple quintuple_invariants(const std::vector<ProductVector>& five, ToleranceProfile tol) {
  if (five.size() != 5)
    throw InvalidParameterError("quintuple_invariants: expected five product vectors");
  return InvariantEngine(five, tol).tuple();
}

InvariantTuple sextuple_invariants(const std::vector<ProductVector>& six, ToleranceProfile tol) {
  if (six.size() != 6)
    throw InvalidParameterError("sextuple_invariants: expected six product vectors");
  return InvariantEngine(six, tol).tuple();
}

Symbol classify_symbol(const InvariantTuple& t, double symbol_tol) {
  Symbol s;
  const auto vals = t.as_array();
  for (int i = 0; i < 6; ++i) {
    const double v = vals[i];
    if (std::abs(v) <= symbol_tol || std::abs(v - 1.0) <= symbol_tol)
      throw IndeterminateSymbolError("invariant " + std::to_string(i) +
                                     " sits on a letter boundary: " + std::to_string(v));
    s.letters[i] = v < 0.0 ? 'N' : (v < 1.0 ? 'p' : 'P');
  }
  return s;
}

std::map<std::string, int> symbol_census(const std::vector<ProductVector>& six,
                                         ToleranceProfile tol) {
  if (six.size() != 6)
    throw InvalidParameterError("symbol_census: expected six product vectors");
  const InvariantEngine eng(six, tol);
  std::map<std::string, int> hist;
  Perm6 p{0, 1, 2, 3, 4, 5};
  do {
    ++hist[classify_symbol(eng.tuple(p), tol.symbol_tol).str()];
  } while (std::next_permutation(p.begin(), p.end()));
  return hist;
}

Perm6 compose(const Perm6& p, const Perm6& q) {
  Perm6 r{};
  for (int i = 0; i < 6; ++i) r[i] = q[p[i]];
  return r;
}

const std::vector<Perm6>& stabilizer() {
  static const std::vector<Perm6> group = [] {
    std::set<Perm6> seen{kIdentityPerm};
    std::vector<Perm6> frontier{kIdentityPerm};
    while (!frontier.empty()) {
      std::vector<Perm6> next;
      for (const auto& p : frontier)
        for (const Perm6& g : {kAlphaPerm, kBetaPerm}) {
          const Perm6 c = compose(g, p);
          if (seen.insert(c).second) next.push_back(c);
        }
      frontier = std::move(next);
    }
    return std::vector<Perm6>(seen.begin(), seen.end());
  }();
  return group;
}

namespace {

double checked_div(double num, double den, const char* factor) {
  if (std::abs(den) < 1e-14)
    throw DenominatorVanishesError(std::string("factor ") + factor + " vanishes");
  return num / den;
}

}  // namespace

InvariantQuadruple act_alpha(const InvariantQuadruple& q) {
  const double a = q.x, b = q.y, c = q.z, d = q.w;
  const double e = (1 - a) + a * d * (1 - b);
  const double core = (1 - a * b) - c * e;
  InvariantQuadruple r{};
  r.x = d * checked_div(1 - c, 1 - c * d, "(1-cd)");
  r.y = checked_div(core, (1 - c) * (1 - a * b * d), "(1-c)(1-abd)");
  r.z = checked_div(b * core, c * (1 - b) * (1 - a * b * d), "c(1-b)(1-abd)");
  r.w = -c * checked_div((1 - a) * (1 - a * b * d), core, "(1-ab)-ce");
  return r;
}

InvariantQuadruple act_beta(const InvariantQuadruple& q) {
  const double a = q.x, b = q.y, c = q.z, d = q.w;
  InvariantQuadruple r{};
  r.x = checked_div((1 - d) * (b - c), (1 - c) * (1 - a * b * d), "(1-c)(1-abd)");
  r.y = b * checked_div((1 - c) * (1 - a * c * d), (1 - c * d) * (b - c), "(1-cd)(b-c)");
  r.z = -checked_div((1 - b) * (1 - a * c * d), d * (1 - a) * (b - c), "d(1-a)(b-c)");
  r.w = checked_div((1 - a) * (1 - a * b * d), (1 - a * b) * (1 - a * c * d), "(1-ab)(1-acd)");
  return r;
}

namespace {

bool quad_close(const InvariantQuadruple& p, const InvariantQuadruple& q, double tol) {
  const auto pa = p.as_array(), qa = q.as_array();
  for (int i = 0; i < 4; ++i)
    if (std::abs(pa[i] - qa[i]) > tol * (1.0 + std::abs(qa[i]))) return false;
  return true;
}

bool quad_less(const InvariantQuadruple& p, const InvariantQuadruple& q) {
  const auto pa = p.as_array(), qa = q.as_array();
  for (int i = 0; i < 4; ++i) {
    if (pa[i] < qa[i]) return true;
    if (pa[i] > qa[i]) return false;
  }
  return false;
}

}  // namespace

std::vector<InvariantQuadruple> orbit(const InvariantQuadruple& q, double match_tol) {
  std::vector<InvariantQuadruple> points{q};
  std::vector<InvariantQuadruple> frontier{q};
  while (!frontier.empty() && points.size() <= 60) {
    std::vector<InvariantQuadruple> next;
    for (const auto& p : frontier)
      for (int g = 0; g < 2; ++g) {
        const InvariantQuadruple im = g == 0 ? act_alpha(p) : act_beta(p);
        bool known = false;
        for (const auto& s : points)
          if (quad_close(im, s, match_tol)) {
            known = true;
            break;
          }
        if (!known) {
          points.push_back(im);
          next.push_back(im);
        }
      }
    frontier = std::move(next);
  }
  if (points.size() > 60)
    throw IndeterminateError("orbit failed to close within 60 points; match_tol too tight");
  std::sort(points.begin(), points.end(), quad_less);
  return points;
}

CanonicalParams phi(const InvariantQuadruple& q) {
  if (!q.in_box())
    throw OutOfBoxError("phi: quadruple must lie in (0,1) x (0,1) x (-inf,0) x (0,1)");
  const double x = q.x, y = q.y, z = q.z, w = q.w;
  const double b2 = -(z * w / y) * (1 - y) * (1 - x * y) / ((1 - z * w) * (1 - x * z * w));
  const double c2 = -(1 / z) * (1 - x * z) * (y - z * w) / ((1 - w) * (1 - x * y));
  const double d2 = x * (1 - z) * (1 - w) / ((1 - x) * (1 - x * z * w));
  if (!(b2 > 0.0) || !(c2 > 0.0) || !(d2 > 0.0))
    throw OutOfBoxError("phi: a squared parameter came out non-positive at the box boundary");
  const double b = std::sqrt(b2), c = std::sqrt(c2), d = std::sqrt(d2);
  const double a = (b * c * d / w) * (1 - x) * (1 - x * z * w) * (y - z * w) /
                   ((1 - y) * (1 - x * z) * (1 - x * z));
  return {a, b, c, d};
}

}  // namespace pptes
