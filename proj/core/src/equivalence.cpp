#include "pptes/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "pptes/detail/polynomial.hpp"
#include "pptes/matrix_ops.hpp"
#include "pptes/subspace.hpp"

namespace pptes {

namespace {

constexpr double kSnapTol = 1e-8;

ToleranceProfile tol_from(const FinderOptions& f, double match_tol = ToleranceProfile{}.match_tol) {
  ToleranceProfile t{};
  t.rank_tol = f.rank_tol;
  t.match_tol = match_tol;
  return t;
}

double tuple_distance(const std::array<cplx, 6>& p, const std::array<cplx, 6>& q) {
  double d = 0.0;
  for (int i = 0; i < 6; ++i) d = std::max(d, std::abs(p[i] - q[i]) / (1.0 + std::abs(q[i])));
  return d;
}

bool matches_up_to_scale(const CMat& a, const CMat& b, double tol) {
  const double na = a.norm(), nb = b.norm();
  if (!(na > 0.0) || !(nb > 0.0)) return false;
  return (a / na - b / nb).norm() <= tol;
}

}  // namespace

std::vector<ProductVector> kernel_product_vectors(const BipartiteState& rho,
                                                  const FinderOptions& opts) {
  if (!rho.is_ppt()) throw NotPPTError("state has a negative partial transpose");
  if (rho.birank() != std::pair<int, int>(4, 4))
    throw UnsupportedClassError("state does not have birank (4,4)");
  if (!is_ces(SubspaceSpec::range_of(rho), opts))
    throw NotEntangledError("range contains a product vector");
  const auto res = find_product_vectors(SubspaceSpec::kernel_of(rho), opts);
  if (res.status == SearchStatus::Indeterminate)
    throw IndeterminateError("kernel search is indeterminate: " + res.note);
  if (res.status == SearchStatus::Infinite)
    throw UnsupportedClassError("kernel carries infinitely many product vectors");
  if (res.vectors.size() != 6)
    throw UnsupportedClassError("kernel holds " + std::to_string(res.vectors.size()) +
                                " product vectors instead of six");
  if (!in_general_position(res.vectors, opts.rank_tol))
    throw UnsupportedClassError("kernel product vectors are not in general position");
  return res.vectors;
}

EquivalenceVerdict is_equivalent(const BipartiteState& a, const BipartiteState& b,
                                 const EquivalenceOptions& opts) {
  const auto ka = kernel_product_vectors(a, opts.finder);
  const auto kb = kernel_product_vectors(b, opts.finder);
  const ToleranceProfile tol = tol_from(opts.finder, opts.match_tol);

  if (opts.symbol_prefilter) {
    try {
      if (symbol_census(ka, tol) != symbol_census(kb, tol))
        return {false, std::nullopt, std::numeric_limits<double>::infinity()};
    } catch (const IndeterminateSymbolError&) {
      // a boundary symbol makes the censuses incomparable; fall through
    }
  }

  const InvariantEngine ea(ka, tol), eb(kb, tol);
  const auto target = eb.tuple_complex();
  EquivalenceVerdict v;
  v.residual = std::numeric_limits<double>::infinity();
  Perm6 p{0, 1, 2, 3, 4, 5};
  do {
    double d;
    try {
      d = tuple_distance(ea.tuple_complex(p), target);
    } catch (const DegenerateQuintupleError&) {
      continue;
    }
    if (d < v.residual) {
      v.residual = d;
      v.witness = p;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  v.equivalent = v.residual <= opts.match_tol;
  if (!v.equivalent) v.witness.reset();
  return v;
}

namespace {

bool quad_close(const InvariantQuadruple& p, const InvariantQuadruple& q, double tol) {
  const auto pa = p.as_array(), qa = q.as_array();
  for (int i = 0; i < 4; ++i)
    if (std::abs(pa[i] - qa[i]) > tol * (1.0 + std::abs(qa[i]))) return false;
  return true;
}

}  // namespace

std::vector<CanonicalCandidate> canonical_candidates(const BipartiteState& rho,
                                                     const FinderOptions& opts) {
  const auto six = kernel_product_vectors(rho, opts);
  const ToleranceProfile tol = tol_from(opts);
  const InvariantEngine eng(six, tol);
  const Symbol want{{'p', 'p', 'P', 'N', 'N', 'p'}};

  std::vector<CanonicalCandidate> out;
  Perm6 p{0, 1, 2, 3, 4, 5};
  do {
    InvariantTuple t{};
    try {
      t = eng.tuple(p);
      if (!(classify_symbol(t, tol.symbol_tol) == want)) continue;
    } catch (const DegenerateQuintupleError&) {
      continue;
    } catch (const NonRealInvariantError&) {
      continue;
    } catch (const IndeterminateSymbolError&) {
      continue;
    }
    const InvariantQuadruple q = quadruple_of(t);
    if (!q.in_box()) continue;
    bool known = false;
    for (const auto& c : out)
      if (quad_close(q, c.quadruple, tol.match_tol)) {
        known = true;
        break;
      }
    if (known) continue;
    try {
      out.push_back({p, q, phi(q)});
    } catch (const OutOfBoxError&) {
      // radicand collapsed at the boundary; drop the ordering
    }
  } while (std::next_permutation(p.begin(), p.end()));

  std::sort(out.begin(), out.end(), [](const CanonicalCandidate& l, const CanonicalCandidate& r) {
    const auto la = l.quadruple.as_array(), ra = r.quadruple.as_array();
    return std::lexicographical_compare(la.begin(), la.end(), ra.begin(), ra.end());
  });
  return out;
}

CanonicalCandidate canonicalize(const BipartiteState& rho, const FinderOptions& opts) {
  const auto cands = canonical_candidates(rho, opts);
  if (cands.empty())
    throw ReconstructionFailedError("no kernel ordering yields an admissible box point");
  EquivalenceOptions eq;
  eq.finder = opts;
  for (const auto& c : cands)
    if (is_equivalent(omega(c.params), rho, eq).equivalent) return c;
  throw ReconstructionFailedError("no candidate parameter set reproduces the state");
}

CubicRoots cubic_roots_check(const CanonicalParams& p, const InvariantQuadruple& q,
                             double root_tol) {
  using detail::Poly1;
  const double a = p.a, b = p.b, c = p.c, d = p.d;
  const Poly1 f = detail::add(
      detail::mul(detail::mul(Poly1{0.0, a * b}, Poly1{-(1.0 + d * d), c}),
                  Poly1{c, -(1.0 + c * c)}),
      detail::mul(detail::scale(Poly1{-1.0, c}, d),
                  Poly1{b * b * c, -(1.0 + b * b + b * b * c * c)}));
  const double fscale = detail::max_abs_coeff(f);

  const double x = q.x, y = q.y, z = q.z, w = q.w;
  CubicRoots r{};
  r.z1 = (w / c) * (1 - x * z) / (1 - x * z * w);
  r.z2 = r.z1 / w;
  r.z3 = -(1 / c) * (1 - y) * (1 - x * z) / ((1 - x) * (y - z));

  for (const auto& [zi, nm] :
       {std::pair{r.z1, "z1"}, {r.z2, "z2"}, {r.z3, "z3"}})
    if (std::abs(detail::eval(f, zi)) > root_tol * fscale)
      throw RootMismatchError(std::string("predicted root ") + nm +
                              " does not annihilate the cubic");

  const double lambda = b * b * c / (1.0 + b * b + b * b * c * c);
  if (!(r.z3 < 0.0)) throw RootMismatchError("z3 is not negative");
  if (!(lambda < r.z1 && r.z1 < c / (1.0 + c * c)))
    throw RootMismatchError("z1 leaves the interval (lambda, c/(1+c^2))");
  if (!(1.0 / c < r.z2 && r.z2 < (1.0 + d * d) / c))
    throw RootMismatchError("z2 leaves the interval (1/c, (1+d^2)/c)");
  return r;
}

CheckerboardVerdict checkerboard_class(const BipartiteState& rho, const FinderOptions& opts) {
  const auto six = kernel_product_vectors(rho, opts);
  const ToleranceProfile tol = tol_from(opts);
  const InvariantEngine eng(six, tol);
  const double mtol = tol.match_tol;
  const auto near = [&](double u, double v) { return std::abs(u - v) <= mtol * (1.0 + std::abs(v)); };

  // The parametrization is two-to-one: (u, v) and (1/u, v) describe equivalent
  // states, and the census of either carries both (lambda, mu) and the partner
  // (1/mu, 1/lambda). Collect every distinct family-shaped candidate first.
  struct Candidate {
    double lambda, mu, u, v;
    bool literal;
  };
  std::vector<Candidate> cands;
  Perm6 p{0, 1, 2, 3, 4, 5};
  do {
    InvariantTuple t{};
    try {
      t = eng.tuple(p);
    } catch (const DegenerateQuintupleError&) {
      continue;
    } catch (const NonRealInvariantError&) {
      continue;
    }
    // Family shape: (1/mu^2, -mu, -mu, 1/lambda^2, lambda, lambda), 0 < mu < 1 < lambda.
    if (!(t.j2a < 0.0 && -t.j2a < 1.0 && t.j2b > 1.0)) continue;
    const double mu = -t.j2a, lambda = t.j2b;
    if (!near(t.j3a, t.j2a) || !near(t.j3b, t.j2b)) continue;
    if (!near(t.j1a, 1.0 / (mu * mu)) || !near(t.j1b, 1.0 / (lambda * lambda))) continue;

    const double v = 2.0 * std::sqrt(lambda * mu) / (lambda - mu);
    const double w = 2.0 * ((lambda - mu) / (lambda + mu)) * ((lambda * lambda + 1.0) /
                                                              (lambda * lambda - 1.0));
    const double urad = (1.0 + v * v) * (w - 1.0) - 1.0;
    if (!(urad > 0.0)) continue;
    const double u = v / std::sqrt(urad);

    bool seen = false;
    for (const auto& c : cands)
      if (std::abs(c.lambda - lambda) <= mtol * (1.0 + lambda) &&
          std::abs(c.mu - mu) <= mtol * (1.0 + mu))
        seen = true;
    if (seen) continue;
    const bool literal =
        matches_up_to_scale(checkerboard_canonical({u, v}).matrix(), rho.matrix(), kSnapTol);
    cands.push_back({lambda, mu, u, v, literal});
  } while (std::next_permutation(p.begin(), p.end()));

  if (cands.empty()) return {};

  // A state already in canonical form reports its own parameters; otherwise the
  // u >= 1 representative is the pinned choice (ties broken by smaller lambda).
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.literal != b.literal) return a.literal;
    const bool ag = a.u >= 1.0, bg = b.u >= 1.0;
    if (ag != bg) return ag;
    return a.lambda < b.lambda;
  });
  for (const auto& c : cands) {
    EquivalenceOptions eq;
    eq.finder = opts;
    const auto verdict = is_equivalent(checkerboard_canonical({c.u, c.v}), rho, eq);
    if (verdict.equivalent)
      return {true, CheckerboardParams{c.u, c.v}, std::pair{c.lambda, c.mu}, verdict.residual};
  }
  throw ReconstructionFailedError(
      "a family-shaped ordering exists but no reconstructed state verified as equivalent");
}

namespace {

constexpr int kOdd[5] = {0, 2, 4, 6, 8};
constexpr int kEven[4] = {1, 3, 5, 7};

// Rows r0, r1 of c on the two given columns, as a 2x2 block.
Eigen::Matrix2cd two_by_two(const CMat& c, int r0, int r1, int c0, int c1) {
  Eigen::Matrix2cd m;
  m << c(r0, c0), c(r0, c1), c(r1, c0), c(r1, c1);
  return m;
}

void apply_rows(CMat& c, int r0, int r1, const Eigen::Matrix2cd& l) {
  Eigen::Matrix<cplx, 2, Eigen::Dynamic> rows(2, c.cols());
  rows.row(0) = c.row(r0);
  rows.row(1) = c.row(r1);
  rows = l * rows;
  c.row(r0) = rows.row(0);
  c.row(r1) = rows.row(1);
}

// B-side operation on the two odd columns of every block: cols {0,2}, {3,5}, {6,8}.
void apply_odd_cols(CMat& c, const Eigen::Matrix2cd& w) {
  for (int blk = 0; blk < 3; ++blk) {
    Eigen::Matrix<cplx, Eigen::Dynamic, 2> cols(c.rows(), 2);
    cols.col(0) = c.col(3 * blk);
    cols.col(1) = c.col(3 * blk + 2);
    cols = cols * w;
    c.col(3 * blk) = cols.col(0);
    c.col(3 * blk + 2) = cols.col(1);
  }
}

}  // namespace

CheckerboardParams checkerboard_reduce(const BipartiteState& rho, const FinderOptions& opts) {
  if (!rho.is_ppt()) throw NotPPTError("state has a negative partial transpose");
  const CMat& m = rho.matrix();
  const double mscale = m.cwiseAbs().maxCoeff();
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if ((i + j) % 2 == 1 && std::abs(m(i, j)) > kSnapTol * mscale)
        throw UnsupportedClassError("matrix does not have the checkerboard zero pattern");
  if (rho.birank() != std::pair<int, int>(4, 4))
    throw UnsupportedClassError("state does not have birank (4,4)");
  if (!is_ces(SubspaceSpec::range_of(rho), opts))
    throw NotEntangledError("range contains a product vector");

  // The pattern splits rho into a 5x5 block on the odd-sum-free indices and a
  // 4x4 block on the rest; birank (4,4) forces each block to have rank two,
  // giving a 4x9 factorization with rows {0,2} on one support, {1,3} on the other.
  Eigen::MatrixXcd oo(5, 5), ee(4, 4);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) oo(i, j) = m(kOdd[i], kOdd[j]);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ee(i, j) = m(kEven[i], kEven[j]);
  if (numerical_rank(oo, opts.rank_tol) != 2 || numerical_rank(ee, opts.rank_tol) != 2)
    throw UnsupportedClassError("pattern blocks do not both have rank two");

  CMat c = CMat::Zero(4, 9);
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> so(oo);
    for (int k = 0; k < 2; ++k) {
      const auto row = std::sqrt(std::max(0.0, so.eigenvalues()(4 - k))) *
                       so.eigenvectors().col(4 - k).adjoint();
      for (int j = 0; j < 5; ++j) c(2 * k, kOdd[j]) = row(j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> se(ee);
    for (int k = 0; k < 2; ++k) {
      const auto row = std::sqrt(std::max(0.0, se.eigenvalues()(3 - k))) *
                       se.eigenvectors().col(3 - k).adjoint();
      for (int j = 0; j < 4; ++j) c(2 * k + 1, kEven[j]) = row(j);
    }
  }

  // Step 1: mix blocks 1 and 3 on the A side so the new first block has a
  // singular odd part. det(alpha O1 + beta O3) is homogeneous quadratic.
  {
    const Eigen::Matrix2cd o1 = two_by_two(c, 0, 2, 0, 2);
    const Eigen::Matrix2cd o3 = two_by_two(c, 0, 2, 6, 8);
    const cplx det1 = o1.determinant(), det3 = o3.determinant();
    const cplx mix = o1(0, 0) * o3(1, 1) + o3(0, 0) * o1(1, 1) - o1(0, 1) * o3(1, 0) -
                     o3(0, 1) * o1(1, 0);
    std::vector<std::pair<cplx, cplx>> cands;
    for (const cplx& alpha : detail::roots(detail::trimmed({det3, mix, det1})))
      cands.emplace_back(alpha, 1.0);
    const double hs = std::max({std::abs(det1), std::abs(mix), std::abs(det3)});
    if (std::abs(det1) <= 1e-12 * std::max(hs, 1e-300)) cands.emplace_back(1.0, 0.0);

    const double cscale = c.cwiseAbs().maxCoeff();
    bool done = false;
    for (auto [alpha, beta] : cands) {
      const double nrm = std::max(std::abs(alpha), std::abs(beta));
      alpha /= nrm;
      beta /= nrm;
      CMat nb1 = alpha * c.middleCols(0, 3) + beta * c.middleCols(6, 3);
      const double odd_norm = std::max({std::abs(nb1(0, 0)), std::abs(nb1(0, 2)),
                                        std::abs(nb1(2, 0)), std::abs(nb1(2, 2))});
      const double even_norm = std::max(std::abs(nb1(1, 1)), std::abs(nb1(3, 1)));
      if (odd_norm <= kSnapTol * cscale || even_norm <= kSnapTol * cscale) continue;
      const CMat third =
          std::abs(alpha) >= std::abs(beta) ? c.middleCols(6, 3) : c.middleCols(0, 3);
      c.middleCols(6, 3) = third;
      c.middleCols(0, 3) = nb1;
      done = true;
      break;
    }
    if (!done)
      throw DegenerateCombinationError("no block combination has a usable singular odd part");
  }

  // Step 2: normalize the first block to [[1,0,0],[0,1,0],[0,0,0],[0,0,0]].
  {
    const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(two_by_two(c, 0, 2, 0, 2),
                                                 Eigen::ComputeFullU);
    apply_rows(c, 0, 2, svd.matrixU().adjoint());

    const cplx g = c(1, 1), qv = c(3, 1);
    const double gn = std::sqrt(std::norm(g) + std::norm(qv));
    Eigen::Matrix2cd ue;
    ue << std::conj(g) / gn, std::conj(qv) / gn, -qv / gn, g / gn;
    apply_rows(c, 1, 3, ue);

    const cplx ap = c(0, 0), dp = c(0, 2);
    const double s2 = std::norm(ap) + std::norm(dp);
    Eigen::Matrix2cd wo;
    wo << std::conj(ap) / s2, -dp, std::conj(dp) / s2, ap;
    apply_odd_cols(c, wo);

    const cplx ge = c(1, 1);
    for (int j : {1, 4, 7}) c.col(j) /= ge;

    const double cscale = c.cwiseAbs().maxCoeff();
    const CMat e_block = (CMat(4, 3) << 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0).finished();
    if ((c.middleCols(0, 3) - e_block).cwiseAbs().maxCoeff() > kSnapTol * cscale)
      throw DegenerateCombinationError("first block failed to reduce to the standard form");
    c.middleCols(0, 3) = e_block;
  }

  // Step 3: positivity of the partial transpose forces two corner entries out.
  {
    const double cscale = c.cwiseAbs().maxCoeff();
    if (std::abs(c(0, 8)) > kSnapTol * cscale || std::abs(c(1, 5)) > kSnapTol * cscale)
      throw NotPPTError("factorization corners incompatible with a positive partial transpose");
    c(0, 8) = 0.0;
    c(1, 5) = 0.0;
  }

  // Step 4: clear the remaining off-form entries by block and column operations.
  {
    const cplx bb = c(0, 6);
    c.middleCols(6, 3) -= bb * c.middleCols(0, 3);

    const double cscale = c.cwiseAbs().maxCoeff();
    if (std::abs(c(3, 5)) <= kSnapTol * cscale)
      throw DegenerateCombinationError("second block has no usable corner entry");
    const cplx ratio = c(3, 3) / c(3, 5);
    for (int blk = 0; blk < 3; ++blk) c.col(3 * blk) -= ratio * c.col(3 * blk + 2);

    if (std::abs(c(1, 3)) <= kSnapTol * cscale)
      throw DegenerateCombinationError("second block has no usable pivot entry");
    const cplx f = c(1, 3);
    c.middleCols(3, 3) /= f;
    const cplx s = c(3, 5);
    for (int j : {2, 5, 8}) c.col(j) /= s;

    const cplx nn = c(2, 8);
    if (std::abs(nn) <= kSnapTol * std::max(1.0, c.cwiseAbs().maxCoeff()))
      throw DegenerateCombinationError("third block has no usable corner entry");
    c.middleCols(6, 3) /= nn;
  }

  // Step 5: the five surviving letters and the internal identities of the family.
  const cplx cc = c(0, 4), h = c(1, 7), k = c(2, 6), l = c(2, 4), r = c(3, 7);
  {
    const double cscale = c.cwiseAbs().maxCoeff();
    for (const cplx& letter : {cc, h, k, l, r})
      if (std::abs(letter) <= kSnapTol * cscale)
        throw NotEntangledError("a family letter vanished during the reduction");
    if (std::abs(std::abs(cc) - 1.0) > kSnapTol ||
        std::abs(h - r * std::conj(k)) > kSnapTol * cscale ||
        std::abs(l - cc * std::conj(r) * k / std::conj(k)) > kSnapTol * cscale)
      throw NotPPTError("reduced letters violate the family identities");
  }

  // Step 6: diagonal phases land the letters on the (u, v) normal form exactly.
  // The normal form is two-to-one ((u, v) and (1/u, v) are equivalent); when the
  // input is itself a scaled canonical matrix, report its own parameters.
  CheckerboardParams params{1.0 / std::abs(r), std::abs(k)};
  const CheckerboardParams partner{std::abs(r), std::abs(k)};
  if (!matches_up_to_scale(checkerboard_canonical(params).matrix(), rho.matrix(), kSnapTol) &&
      matches_up_to_scale(checkerboard_canonical(partner).matrix(), rho.matrix(), kSnapTol))
    params = partner;
  EquivalenceOptions eq;
  eq.finder = opts;
  if (!is_equivalent(checkerboard_canonical(params), rho, eq).equivalent)
    throw ReconstructionFailedError("normal form does not reproduce the state");
  return params;
}

CheckerboardParams checkerboard_reduce(const CheckerboardRaw& raw, const FinderOptions& opts) {
  return checkerboard_reduce(checkerboard_raw(raw), opts);
}

}  // namespace pptes
