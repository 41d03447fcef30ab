#pragma once

// SLOCC equivalence of rank-four PPT entangled states via kernel invariants,
// canonical-form extraction, cubic root cross-checks, and the checkerboard
// subclass detection and reduction.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pptes/builders.hpp"
#include "pptes/finder.hpp"
#include "pptes/invariants.hpp"
#include "pptes/state.hpp"

namespace pptes {

// Kernel product vectors of a rank-four PPT entangled state. Validates the
// full class membership: PPT, birank (4,4), range contains no product vector,
// kernel finder Finite with exactly six vectors in general position. Anything
// else raises UnsupportedClassError (NotPPTError / NotEntangledError for the
// first two gates).
std::vector<ProductVector> kernel_product_vectors(const BipartiteState& rho,
                                                  const FinderOptions& opts = {});

struct EquivalenceOptions {
  bool symbol_prefilter = false;  // reject early on disjoint symbol censuses
  FinderOptions finder;
  double match_tol = ToleranceProfile{}.match_tol;
};

struct EquivalenceVerdict {
  bool equivalent = false;
  // Witness ordering: invariants of permuted(kernel(a), *witness) match the
  // identity ordering of kernel(b) within residual.
  std::optional<Perm6> witness;
  double residual = 0.0;
};

// Invertible-local-operation equivalence test between two rank-four PPT
// entangled states, decided on kernel sextuple invariants over all orderings.
EquivalenceVerdict is_equivalent(const BipartiteState& a, const BipartiteState& b,
                                 const EquivalenceOptions& opts = {});

struct CanonicalCandidate {
  Perm6 perm;
  InvariantQuadruple quadruple;
  CanonicalParams params;
};

// All kernel orderings of rho whose symbol is ppPNNp, one representative per
// distinct quadruple, each mapped through phi; sorted by quadruple.
std::vector<CanonicalCandidate> canonical_candidates(const BipartiteState& rho,
                                                     const FinderOptions& opts = {});

// First candidate whose omega(params) is equivalent to rho. Raises
// ReconstructionFailedError if none verifies.
CanonicalCandidate canonicalize(const BipartiteState& rho, const FinderOptions& opts = {});

struct CubicRoots {
  double z1, z2, z3;
};

// Roots of f(z) = a b z (c z - 1 - d^2)(c - (1 + c^2) z)
//              + d (c z - 1)(b^2 c - (1 + b^2 + b^2 c^2) z)
// predicted by the box point of the state: z1 = (w/c)(1-xz)/(1-xzw),
// z2 = z1 / w, z3 = -(1/c)(1-y)(1-xz)/((1-x)(y-z)). Raises RootMismatchError
// when any |f(zi)| exceeds root_tol * max coefficient, or when the interval
// constraints z3 < 0, lambda < z1 < c/(1+c^2), 1/c < z2 < (1+d^2)/c fail with
// lambda = b^2 c / (1 + b^2 + b^2 c^2).
CubicRoots cubic_roots_check(const CanonicalParams& p, const InvariantQuadruple& q,
                             double root_tol = 1e-9);

struct CheckerboardVerdict {
  bool is_checkerboard_class = false;
  std::optional<CheckerboardParams> params;
  std::optional<std::pair<double, double>> lambda_mu;
  double residual = 0.0;
};

// Detects membership in the checkerboard family from kernel invariants alone:
// some ordering must satisfy the family identities, and the recovered (u,v)
// must reproduce an equivalent state.
CheckerboardVerdict checkerboard_class(const BipartiteState& rho,
                                       const FinderOptions& opts = {});

// Reduces a state with the checkerboard zero pattern to its (u,v) normal form
// by explicit local operations on the 4x9 factorization. Raises NotPPTError,
// NotEntangledError, DegenerateCombinationError, or ReconstructionFailedError
// when the input leaves the family.
CheckerboardParams checkerboard_reduce(const BipartiteState& rho,
                                       const FinderOptions& opts = {});

// Same reduction starting from the raw sparsity-pattern letters.
CheckerboardParams checkerboard_reduce(const CheckerboardRaw& raw,
                                       const FinderOptions& opts = {});

}  // namespace pptes
