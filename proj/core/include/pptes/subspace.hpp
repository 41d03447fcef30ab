#pragma once

// Subspaces of C9 described by orthonormal constraints: S = { v : <w_j|v> = 0 }
// where the rows of the stored k x 9 matrix are the bras <w_j|. The subspace
// dimension is 9 - k.

#include "pptes/state.hpp"

namespace pptes {

class SubspaceSpec {
 public:
  // Rows of `constraints` are the constraint bras; they are re-orthonormalized
  // internally and must be linearly independent.
  explicit SubspaceSpec(CMat constraints, double rank_tol = ToleranceProfile{}.rank_tol);

  // Kernel of rho; constraints are an orthonormal basis of the range.
  static SubspaceSpec kernel_of(const BipartiteState& rho);

  // Range of rho; constraints are an orthonormal basis of the kernel.
  static SubspaceSpec range_of(const BipartiteState& rho);

  // The span of the given vectors (columns); constraints are an orthonormal
  // basis of the orthogonal complement of that span.
  static SubspaceSpec spanned_by(const CMat& basis_columns,
                                 double rank_tol = ToleranceProfile{}.rank_tol);

  int dimension() const { return 9 - static_cast<int>(k_.rows()); }
  int num_constraints() const { return static_cast<int>(k_.rows()); }

  // k x 9, orthonormal rows.
  const CMat& constraints() const { return k_; }

  // max_j |<w_j|v>| / ||v||.
  double residual(const CVec& v) const;
  bool contains(const CVec& v, double tol) const { return residual(v) <= tol; }

  // Image subspace (V ⊗ W) S for invertible V, W.
  SubspaceSpec transformed(const Mat3& v, const Mat3& w) const;

 private:
  CMat k_;
  double rank_tol_;
};

}  // namespace pptes
