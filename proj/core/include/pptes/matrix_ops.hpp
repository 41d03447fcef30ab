#pragma once

// Dense complex matrix helpers for bipartite operators: Kronecker products,
// partial transpose, partial traces, numerical rank and positivity tests.

#include "pptes/types.hpp"

namespace pptes {

CMat kron(const CMat& a, const CMat& b);

// Relative Frobenius comparison: ||a - b|| <= tol * max(1, ||b||).
bool approx_equal(const CMat& a, const CMat& b, double tol);

// Block transpose over the first factor: sigma_{ij} = rho_{ji} on dim_b x dim_b
// blocks. Hermiticity of the input is not required. An involution that
// preserves the trace and acts linearly.
CMat partial_transpose(const CMat& m, int dim_a = 3, int dim_b = 3);

// Partial traces of a (dim_a * dim_b) square matrix.
CMat reduced_a(const CMat& m, int dim_a = 3, int dim_b = 3);
CMat reduced_b(const CMat& m, int dim_a = 3, int dim_b = 3);

// Number of singular values above rank_tol * sigma_max; the zero matrix has rank 0.
int numerical_rank(const CMat& m, double rank_tol = ToleranceProfile{}.rank_tol);

// Smallest eigenvalue of the Hermitian part (m + m^dagger) / 2. Asymmetry
// beyond herm_tol * ||m|| is an error rather than silently averaged away.
double min_eigenvalue_hermitian(const CMat& m, double herm_tol = 1e-10);

// lambda_min >= -psd_tol * ||m|| on the Hermitian part.
bool is_psd(const CMat& m, double psd_tol = ToleranceProfile{}.psd_tol, double herm_tol = 1e-10);

}  // namespace pptes
