#include "pptes/finder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pptes/detail/polynomial.hpp"

namespace pptes {
namespace {

using detail::Poly1;
using detail::Poly2;

// Constraint rows are orthonormal, so pencil coefficients are O(1) and the
// cutoffs below are absolute.
constexpr double kZeroMinor = 1e-12;
constexpr double kZeroResultant = 1e-10;
constexpr double kSliceZero = 1e-8;
constexpr double kCoordCap = 1e8;
// Pre-polish sieve. Companion-matrix roots of multiplicity m wander by
// eps^(1/m), so raw candidates can sit ~1e-3 off the variety; the Newton
// polish and the final residual gates do the actual accepting.
constexpr double kPrePolishKeep = 1e-2;

double point_scale(cplx x, cplx y) {
  const double s = 1.0 + std::abs(x) + std::abs(y);
  return s * s * s;
}

int degree_x(const Poly2& p, double rel_tol = 1e-12) {
  const double cut = rel_tol * p.max_abs();
  for (int i = p.nx; i >= 0; --i)
    for (int j = 0; j <= p.ny; ++j)
      if (std::abs(p.at(i, j)) > cut) return i;
  return -1;
}

Poly2 det3(const std::array<std::array<Poly2, 3>, 3>& m) {
  using detail::add;
  using detail::mul;
  using detail::sub;
  const Poly2 t0 = mul(m[0][0], sub(mul(m[1][1], m[2][2]), mul(m[1][2], m[2][1])));
  const Poly2 t1 = mul(m[0][1], sub(mul(m[1][0], m[2][2]), mul(m[1][2], m[2][0])));
  const Poly2 t2 = mul(m[0][2], sub(mul(m[1][0], m[2][1]), mul(m[1][1], m[2][0])));
  return add(sub(t0, t1), t2);
}

// The k x 3 pencil M(a) with M(a) b = K (a (x) b), restricted to the affine
// chart a = (1, x, y) (chart 0) or a = (0, 1, y) (chart 1). Returns all 3x3
// minors, each normalized to unit max coefficient; negligible minors dropped.
std::vector<Poly2> chart_minors(const CMat& k, int chart) {
  const int rows = static_cast<int>(k.rows());
  std::vector<std::array<Poly2, 3>> pencil(rows);
  for (int j = 0; j < rows; ++j)
    for (int l = 0; l < 3; ++l)
      pencil[j][l] = chart == 0 ? Poly2::linear(k(j, l), k(j, 3 + l), k(j, 6 + l))
                                : Poly2::linear(k(j, 3 + l), 0.0, k(j, 6 + l));
  std::vector<Poly2> out;
  for (int r0 = 0; r0 < rows; ++r0)
    for (int r1 = r0 + 1; r1 < rows; ++r1)
      for (int r2 = r1 + 1; r2 < rows; ++r2) {
        Poly2 d = det3({pencil[r0], pencil[r1], pencil[r2]});
        const double ma = d.max_abs();
        if (ma <= kZeroMinor) continue;
        d.scale_by(1.0 / ma);
        out.push_back(std::move(d));
      }
  return out;
}

CMat pencil_at(const CMat& k, const Vec3& a) {
  const int rows = static_cast<int>(k.rows());
  CMat m(rows, 3);
  for (int j = 0; j < rows; ++j)
    for (int l = 0; l < 3; ++l)
      m(j, l) = a(0) * k(j, l) + a(1) * k(j, 3 + l) + a(2) * k(j, 6 + l);
  return m;
}

struct SliceYs {
  bool line = false;  // every minor vanishes on the whole slice
  std::vector<cplx> ys;
};

// Candidate y values on the slice x = x0: the union of roots of every
// surviving restriction, kept only where every minor stays below keep_rel.
// A single slice cannot be trusted on its own: a minor whose restriction
// degenerates at x0 contributes a nearly zero slice whose roots say nothing.
SliceYs ys_at(const std::vector<Poly2>& minors, cplx x0, const FinderOptions& o,
              double keep_rel) {
  const double s1 = 1.0 + std::abs(x0);
  const double xscale = s1 * s1 * s1;
  std::vector<Poly1> slices;
  bool all_zero = true;
  for (const auto& m : minors) {
    Poly1 s = m.eval_at_x(x0);
    if (detail::max_abs_coeff(s) <= kSliceZero * xscale) continue;
    all_zero = false;
    slices.push_back(std::move(s));
  }
  SliceYs out;
  if (all_zero) {
    out.line = true;
    return out;
  }
  for (const Poly1& s : slices) {
    if (detail::degree(s, 1e-8) < 1) continue;
    for (cplx y : detail::roots(detail::trimmed(s, 1e-8))) {
      if (std::abs(y) > kCoordCap) continue;
      const double ps = keep_rel * point_scale(x0, y);
      bool keep = true;
      for (const auto& m : minors)
        if (std::abs(m.eval(x0, y)) > ps) {
          keep = false;
          break;
        }
      if (!keep) continue;
      bool dup = false;
      for (cplx u : out.ys)
        if (std::abs(y - u) <= 1e-8 * (1.0 + std::abs(u))) {
          dup = true;
          break;
        }
      if (!dup) out.ys.push_back(y);
    }
  }
  return out;
}

struct Polished {
  cplx x, y;
  double resid;
};

// Damped Gauss-Newton on the minor system. Variables with identically zero
// derivative columns (chart 1 has no x) stay put under the least-squares step.
Polished polish(const std::vector<Poly2>& minors, cplx x, cplx y, const FinderOptions& o) {
  const int t = static_cast<int>(minors.size());
  Eigen::VectorXcd f(t), nf(t);
  Eigen::MatrixXcd jac(t, 2);
  auto fill = [&](cplx xx, cplx yy, Eigen::VectorXcd& ff) {
    for (int i = 0; i < t; ++i) ff(i) = minors[i].eval(xx, yy);
  };
  fill(x, y, f);
  double fn = f.cwiseAbs().maxCoeff();
  for (int it = 0; it < o.newton_max_iter; ++it) {
    if (fn <= o.newton_target * point_scale(x, y)) break;
    for (int i = 0; i < t; ++i) {
      jac(i, 0) = minors[i].eval_dx(x, y);
      jac(i, 1) = minors[i].eval_dy(x, y);
    }
    const Eigen::Vector2cd step =
        jac.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(f);
    double lambda = 1.0;
    bool improved = false;
    for (int bt = 0; bt < 6; ++bt, lambda *= 0.5) {
      const cplx xn = x - lambda * step(0);
      const cplx yn = y - lambda * step(1);
      fill(xn, yn, nf);
      const double nfn = nf.cwiseAbs().maxCoeff();
      if (nfn < fn) {
        x = xn;
        y = yn;
        f = nf;
        fn = nfn;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return {x, y, fn};
}

struct ChartOutcome {
  int status = 0;  // 0 finite, 1 infinite, 2 indeterminate
  std::string note;
  std::vector<ProductVector> sols;
};

// Kernel direction of the pencil at a. Returns 0 accepted, 1 rejected,
// 2 infinite (the pencil drops below rank two, giving a line of partners),
// 3 unconfirmable (residual between acceptance and the candidate window).
int extract_b(const SubspaceSpec& spec, const CMat& k, const Vec3& a, const FinderOptions& o,
              ChartOutcome& out) {
  const CMat m = pencil_at(k, a);
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(0) <= o.rank_tol) {
    out.note = "pencil vanishes at a solution: a plane of partners";
    return 2;
  }
  if (sv(1) <= o.rank_tol * sv(0)) {
    out.note = "rank-one pencil at a solution: a line of partners";
    return 2;
  }
  const Vec3 b = svd.matrixV().col(2);
  const ProductVector pv(a, b);
  const double resid = spec.residual(pv.full());
  if (resid <= o.residual_accept) {
    out.sols.push_back(pv);
    return 0;
  }
  if (resid <= o.candidate_keep) {
    out.note = "a candidate neither met the acceptance residual nor cleared the keep window";
    return 3;
  }
  return 1;
}

ChartOutcome solve_chart0(const SubspaceSpec& spec, const CMat& k, const FinderOptions& o) {
  ChartOutcome out;
  const std::vector<Poly2> minors = chart_minors(k, 0);
  if (minors.empty()) {
    out.status = 1;
    out.note = "every pencil direction is rank-deficient";
    return out;
  }
  for (const auto& m : minors)
    if (degree_x(m) <= 0 && m.degree_y() <= 0) return out;  // nonvanishing minor: no solutions
  if (minors.size() == 1) {
    out.status = 1;
    out.note = "solutions fill a curve";
    return out;
  }

  std::vector<const Poly2*> ypos;
  std::vector<Poly1> constraints;  // univariate in x
  for (const auto& m : minors) {
    if (m.degree_y() >= 1)
      ypos.push_back(&m);
    else
      constraints.push_back(detail::trimmed(m.coeff_of_y(0)));
  }
  // All pairs: structured subspaces can hand a shared factor to every minor
  // through one constraint row, so no fixed subset of pairs is safe.
  const int nyp = static_cast<int>(ypos.size());
  for (int i = 0; i < nyp; ++i)
    for (int j = i + 1; j < nyp; ++j) {
      Poly1 r = detail::resultant_y(*ypos[i], *ypos[j]);
      if (detail::max_abs_coeff(r) > kZeroResultant) constraints.push_back(std::move(r));
    }

  if (constraints.empty()) {
    // Every elimination collapsed; decide between a shared curve and noise.
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> ur(-1.5, 1.5);
    int hits = 0;
    for (int s = 0; s < o.infinite_samples; ++s) {
      const cplx xs(ur(rng), ur(rng));
      const SliceYs sy = ys_at(minors, xs, o, o.candidate_keep);
      if (sy.line || !sy.ys.empty()) ++hits;
    }
    if (hits == o.infinite_samples) {
      out.status = 1;
      out.note = "common factor: solutions fill a curve";
    } else {
      out.status = 2;
      out.note = "eliminations vanish but sampling finds no solution curve";
    }
    return out;
  }

  std::vector<cplx> xcand;
  for (const Poly1& src : constraints)
    for (cplx x : detail::roots(src)) {
      if (std::abs(x) > kCoordCap) continue;
      bool ok = true;
      for (const Poly1& r : constraints) {
        const double sc = detail::max_abs_coeff(r) *
                          std::pow(std::max(1.0, std::abs(x)), detail::degree(r));
        if (std::abs(detail::eval(r, x)) > kPrePolishKeep * sc) {
          ok = false;
          break;
        }
      }
      if (ok) {
        bool dup = false;
        for (cplx u : xcand)
          if (std::abs(x - u) <= 1e-8 * (1.0 + std::abs(u))) {
            dup = true;
            break;
          }
        if (!dup) xcand.push_back(x);
      }
    }

  for (cplx x0 : xcand) {
    const SliceYs sy = ys_at(minors, x0, o, kPrePolishKeep);
    if (sy.line) {
      out.status = 1;
      out.note = "solutions fill a line";
      return out;
    }
    for (cplx y0 : sy.ys) {
      const Polished p = polish(minors, x0, y0, o);
      if (std::abs(p.x) > kCoordCap || std::abs(p.y) > kCoordCap) continue;
      if (p.resid > o.candidate_keep * point_scale(p.x, p.y)) continue;
      const Vec3 a(1.0, p.x, p.y);
      const int rc = extract_b(spec, k, a, o, out);
      if (rc == 2 || rc == 3) {
        out.status = rc == 2 ? 1 : 2;
        return out;
      }
    }
  }
  return out;
}

ChartOutcome solve_chart1(const SubspaceSpec& spec, const CMat& k, const FinderOptions& o) {
  ChartOutcome out;
  const std::vector<Poly2> minors = chart_minors(k, 1);
  if (minors.empty()) {
    out.status = 1;
    out.note = "the pencil line at infinity is everywhere rank-deficient";
    return out;
  }
  for (const auto& m : minors)
    if (degree_x(m) <= 0 && m.degree_y() <= 0) return out;
  const SliceYs sy = ys_at(minors, 0.0, o, kPrePolishKeep);
  if (sy.line) {
    out.status = 1;
    out.note = "solutions fill the line at infinity";
    return out;
  }
  for (cplx y0 : sy.ys) {
    const Polished p = polish(minors, 0.0, y0, o);
    if (std::abs(p.y) > kCoordCap) continue;
    if (p.resid > o.candidate_keep * point_scale(0.0, p.y)) continue;
    const Vec3 a(0.0, 1.0, p.y);
    const int rc = extract_b(spec, k, a, o, out);
    if (rc == 2 || rc == 3) {
      out.status = rc == 2 ? 1 : 2;
      return out;
    }
  }
  return out;
}

ChartOutcome solve_chart2(const SubspaceSpec& spec, const CMat& k, const FinderOptions& o) {
  ChartOutcome out;
  const int rc = extract_b(spec, k, Vec3(0.0, 0.0, 1.0), o, out);
  if (rc == 2 || rc == 3) out.status = rc == 2 ? 1 : 2;
  return out;
}

}  // namespace

PVSearchResult find_product_vectors(const SubspaceSpec& spec, const FinderOptions& opts) {
  PVSearchResult res;
  if (spec.dimension() >= 6) {
    res.status = SearchStatus::Infinite;
    res.note = "subspace dimension six or more always carries a positive-dimensional family";
    return res;
  }
  const CMat& k = spec.constraints();
  for (int chart = 0; chart < 3; ++chart) {
    ChartOutcome c = chart == 0   ? solve_chart0(spec, k, opts)
                     : chart == 1 ? solve_chart1(spec, k, opts)
                                  : solve_chart2(spec, k, opts);
    if (c.status == 1) {
      res.status = SearchStatus::Infinite;
      res.note = c.note;
      return res;
    }
    if (c.status == 2) {
      res.status = SearchStatus::Indeterminate;
      res.note = c.note;
      return res;
    }
    for (auto& pv : c.sols) {
      bool dup = false;
      for (auto& q : res.vectors)
        if (product_distance(pv, q) <= opts.dedup_tol) {
          // The same point reached through different eliminations polishes to
          // different accuracy; keep the cleaner copy.
          if (spec.residual(pv.full()) < spec.residual(q.full())) q = std::move(pv);
          dup = true;
          break;
        }
      if (!dup) res.vectors.push_back(std::move(pv));
    }
  }
  std::sort(res.vectors.begin(), res.vectors.end(), product_vector_less);
  return res;
}

bool is_ces(const SubspaceSpec& spec, const FinderOptions& opts) {
  const PVSearchResult r = find_product_vectors(spec, opts);
  if (r.status == SearchStatus::Indeterminate)
    throw IndeterminateError("is_ces: search could not classify the subspace: " + r.note);
  return r.status == SearchStatus::Finite && r.vectors.empty();
}

bool in_general_position(const std::vector<ProductVector>& vs, double rank_tol) {
  const int n = static_cast<int>(vs.size());
  const auto side_ok = [&](bool a_side) {
    std::vector<Vec3> u(n);
    for (int i = 0; i < n; ++i) {
      const Vec3& v = a_side ? vs[i].a : vs[i].b;
      u[i] = v.normalized();
    }
    if (n >= 3) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int l = j + 1; l < n; ++l) {
            Mat3 m;
            m.col(0) = u[i];
            m.col(1) = u[j];
            m.col(2) = u[l];
            Eigen::JacobiSVD<Mat3> svd(m);
            if (svd.singularValues()(2) <= rank_tol) return false;
          }
    } else if (n == 2) {
      Eigen::Matrix<cplx, 3, 2> m;
      m.col(0) = u[0];
      m.col(1) = u[1];
      Eigen::JacobiSVD<Eigen::Matrix<cplx, 3, 2>> svd(m);
      if (svd.singularValues()(1) <= rank_tol) return false;
    }
    return true;
  };
  return side_ok(true) && side_ok(false);
}

}  // namespace pptes
