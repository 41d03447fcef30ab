#include "pptes/subspace.hpp"

#include <utility>

#include <Eigen/Dense>

#include "pptes/matrix_ops.hpp"

namespace pptes {

namespace {

// Orthonormalize the rows of k (as bras) and drop numerically dependent rows.
CMat orthonormal_rows(const CMat& k, double rank_tol) {
  if (k.rows() == 0) return CMat(0, k.cols());
  Eigen::JacobiSVD<CMat> svd(k, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cut = rank_tol * (sv.size() ? sv(0) : 0.0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  // Rows of V^H spanning the row space.
  return svd.matrixV().leftCols(r).adjoint();
}

}  // namespace

SubspaceSpec::SubspaceSpec(CMat constraints, double rank_tol) : rank_tol_(rank_tol) {
  if (constraints.cols() != 9)
    throw DimensionError("SubspaceSpec: constraint rows must have 9 entries");
  k_ = orthonormal_rows(constraints, rank_tol_);
  if (k_.rows() != constraints.rows())
    throw InvalidParameterError("SubspaceSpec: constraint rows are linearly dependent");
}

SubspaceSpec SubspaceSpec::kernel_of(const BipartiteState& s) {
  // Constraints on the kernel are the range vectors: rho v = 0 iff v is
  // orthogonal to every eigenvector with nonzero eigenvalue.
  Eigen::SelfAdjointEigenSolver<CMat> es(s.matrix());
  const auto& evals = es.eigenvalues();
  const double scale = std::max(evals.cwiseAbs().maxCoeff(), 1e-300);
  const double cut = s.tol().rank_tol * scale;
  std::vector<int> keep;
  for (int i = 0; i < evals.size(); ++i)
    if (evals(i) > cut) keep.push_back(i);
  CMat k(static_cast<int>(keep.size()), 9);
  for (int r = 0; r < static_cast<int>(keep.size()); ++r)
    k.row(r) = es.eigenvectors().col(keep[r]).adjoint();
  return SubspaceSpec(std::move(k), s.tol().rank_tol);
}

SubspaceSpec SubspaceSpec::range_of(const BipartiteState& s) {
  // Constraints on the range are the kernel vectors.
  Eigen::SelfAdjointEigenSolver<CMat> es(s.matrix());
  const auto& evals = es.eigenvalues();
  const double scale = std::max(evals.cwiseAbs().maxCoeff(), 1e-300);
  const double cut = s.tol().rank_tol * scale;
  std::vector<int> keep;
  for (int i = 0; i < evals.size(); ++i)
    if (evals(i) <= cut) keep.push_back(i);
  CMat k(static_cast<int>(keep.size()), 9);
  for (int r = 0; r < static_cast<int>(keep.size()); ++r)
    k.row(r) = es.eigenvectors().col(keep[r]).adjoint();
  return SubspaceSpec(std::move(k), s.tol().rank_tol);
}

SubspaceSpec SubspaceSpec::spanned_by(const CMat& basis_columns, double rank_tol) {
  if (basis_columns.rows() != 9)
    throw DimensionError("SubspaceSpec::spanned_by: basis columns must have 9 entries");
  Eigen::JacobiSVD<CMat> svd(basis_columns, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double cut = rank_tol * (sv.size() ? sv(0) : 0.0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  // Orthogonal complement columns become constraint bras.
  return SubspaceSpec(svd.matrixU().rightCols(9 - r).adjoint(), rank_tol);
}

double SubspaceSpec::residual(const CVec& v) const {
  if (v.size() != 9) throw DimensionError("SubspaceSpec::residual: vector must have 9 entries");
  const double n = v.norm();
  if (n == 0.0) return 0.0;
  return (k_ * v).norm() / n;
}

SubspaceSpec SubspaceSpec::transformed(const Mat3& v, const Mat3& w) const {
  // If S' = (V (x) W) S then K' = K (V^-1 (x) W^-1) annihilates S'.
  const Mat3 vi = v.inverse();
  const Mat3 wi = w.inverse();
  return SubspaceSpec(k_ * kron(vi, wi), rank_tol_);
}

}  // namespace pptes
