#include "pptes/state.hpp"

#include <utility>

#include "pptes/matrix_ops.hpp"

namespace pptes {

BipartiteState::BipartiteState(CMat m, ToleranceProfile tol)
    : m_(std::move(m)), tol_(tol) {
  if (m_.rows() != kDim || m_.cols() != kDim)
    throw DimensionError("BipartiteState: matrix must be 9x9");
  const double scale = std::max(1.0, m_.norm());
  if ((m_ - m_.adjoint()).norm() > 1e-10 * scale)
    throw InvalidStateError("BipartiteState: matrix is not Hermitian");
  // Symmetrize so downstream eigensolvers see an exactly Hermitian matrix.
  m_ = (m_ + m_.adjoint().eval()) / 2.0;
  if (min_eigenvalue_hermitian(m_) < -tol_.psd_tol * scale)
    throw InvalidStateError("BipartiteState: matrix is not positive semidefinite");
  if (!(m_.trace().real() > 0.0))
    throw InvalidStateError("BipartiteState: matrix must have positive trace");
}

double BipartiteState::trace() const { return m_.trace().real(); }

int BipartiteState::rank() const { return numerical_rank(m_, tol_.rank_tol); }

std::pair<int, int> BipartiteState::birank() const {
  return {rank(), numerical_rank(partial_transposed(), tol_.rank_tol)};
}

bool BipartiteState::is_ppt() const {
  return is_psd(partial_transposed(), tol_.psd_tol);
}

bool extreme_necessary(std::pair<int, int> birank, int dim_a, int dim_b) {
  // States whose birank (r,s) satisfies r^2 + s^2 > (dim_a * dim_b)^2 + 1
  // cannot be extreme in the PPT convex body.
  const double r = birank.first, s = birank.second;
  const double n = static_cast<double>(dim_a) * dim_b;
  return r * r + s * s <= n * n + 1.0;
}

}  // namespace pptes
