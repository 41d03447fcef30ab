#pragma once

// Finds every product vector |a> ⊗ |b> inside a subspace of C3 ⊗ C3. With
// constraint bras w_j, membership reads M(a) b = 0 for the k x 3 matrix
// M(a)_{j,l} = sum_i conj(w_j[3 i + l-th of block i]) a_i, so solutions are the
// projective points a where rank M(a) <= 2. Per affine chart of |a> the 3 x 3
// minors of M form a system of polynomials of total degree <= 3; two of them
// are eliminated through a resultant, roots come from companion matrices, and
// every candidate is verified against all minors and polished by Newton steps.

#include <cstdint>
#include <string>
#include <vector>

#include "pptes/product_vector.hpp"
#include "pptes/subspace.hpp"

namespace pptes {

enum class SearchStatus { Finite, Infinite, Indeterminate };

struct FinderOptions {
  double rank_tol = 1e-9;
  // Projective distance below which two solutions are the same point.
  double dedup_tol = 1e-8;
  // Constraint residual accepted for a reported vector.
  double residual_accept = 1e-10;
  // Minor residual below which a raw candidate enters polishing; candidates
  // that polish no further than this are reported as indeterminate rather
  // than dropped.
  double candidate_keep = 1e-6;
  int newton_max_iter = 50;
  // Convergence: residual < newton_target * (1 + coefficient norm).
  double newton_target = 1e-12;
  // A positive-dimensional solution set is declared when all minor pairs have
  // an identically vanishing resultant and every one of these random chart
  // samples still admits a solution.
  int infinite_samples = 20;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

struct PVSearchResult {
  SearchStatus status = SearchStatus::Finite;
  // Populated for Finite only: pairwise projectively distinct, sorted by the
  // canonical lexicographic order.
  std::vector<ProductVector> vectors;
  std::string note;
};

PVSearchResult find_product_vectors(const SubspaceSpec& s, const FinderOptions& opt = {});

// True when the subspace contains no product vector at all. Propagates an
// IndeterminateError when the search cannot classify the subspace.
bool is_ces(const SubspaceSpec& s, const FinderOptions& opt = {});

// Every subset of at most three A-side factors is linearly independent, and
// the same on the B side. Independence is tested by the smallest singular
// value staying above rank_tol times the largest.
bool in_general_position(const std::vector<ProductVector>& vs, double rank_tol = 1e-9);

}  // namespace pptes
