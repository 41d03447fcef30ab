#pragma once

// BipartiteState: an unnormalized two-qutrit density operator. Construction
// validates Hermiticity, positive semidefiniteness and positive trace; all
// operations are pure and the matrix is immutable afterwards.

#include <utility>

#include "pptes/matrix_ops.hpp"

namespace pptes {

class BipartiteState {
 public:
  static constexpr int kDimA = 3;
  static constexpr int kDimB = 3;
  static constexpr int kDim = kDimA * kDimB;

  explicit BipartiteState(CMat m, ToleranceProfile tol = {});

  const CMat& matrix() const { return m_; }
  const ToleranceProfile& tol() const { return tol_; }

  double trace() const;
  CMat partial_transposed() const { return partial_transpose(m_, kDimA, kDimB); }
  CMat reduced_a() const { return pptes::reduced_a(m_, kDimA, kDimB); }
  CMat reduced_b() const { return pptes::reduced_b(m_, kDimA, kDimB); }

  int rank() const;
  // (rank rho, rank of the partial transpose of rho)
  std::pair<int, int> birank() const;
  bool is_ppt() const;

 private:
  CMat m_;
  ToleranceProfile tol_;
};

// Necessary condition for extremality in the PPT cone from the birank alone:
// a state with r^2 + s^2 > dim_a^2 * dim_b^2 + 1 cannot be extreme.
bool extreme_necessary(std::pair<int, int> birank, int dim_a = 3, int dim_b = 3);

}  // namespace pptes
