#include "pptes/matrix_ops.hpp"

#include <Eigen/Dense>

namespace pptes {

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

bool approx_equal(const CMat& a, const CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).norm() <= tol * std::max(1.0, b.norm());
}

CMat partial_transpose(const CMat& m, int dim_a, int dim_b) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b)
    throw DimensionError("partial_transpose: matrix does not match dim_a * dim_b");
  CMat out(m.rows(), m.cols());
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      out.block(j * dim_b, i * dim_b, dim_b, dim_b) = m.block(i * dim_b, j * dim_b, dim_b, dim_b);
  return out;
}

CMat reduced_a(const CMat& m, int dim_a, int dim_b) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b)
    throw DimensionError("reduced_a: matrix does not match dim_a * dim_b");
  CMat out = CMat::Zero(dim_a, dim_a);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
  return out;
}

CMat reduced_b(const CMat& m, int dim_a, int dim_b) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b)
    throw DimensionError("reduced_b: matrix does not match dim_a * dim_b");
  CMat out = CMat::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_a; ++i) out += m.block(i * dim_b, i * dim_b, dim_b, dim_b);
  return out;
}

int numerical_rank(const CMat& m, double rank_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = rank_tol * sv(0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

double min_eigenvalue_hermitian(const CMat& m, double herm_tol) {
  if (m.rows() != m.cols()) throw DimensionError("min_eigenvalue_hermitian: matrix not square");
  const double asym = (m - m.adjoint()).norm();
  if (asym > herm_tol * std::max(1.0, m.norm()))
    throw InvalidStateError("min_eigenvalue_hermitian: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

bool is_psd(const CMat& m, double psd_tol, double herm_tol) {
  const double scale = std::max(1.0, m.norm());
  return min_eigenvalue_hermitian(m, herm_tol) >= -psd_tol * scale;
}

}  // namespace pptes
