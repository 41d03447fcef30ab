#pragma once

// Projective invariants of ordered product-vector quintuples and sextuples:
// ratios of 3x3 determinants on each tensor factor, their classification into
// symbols over the letters p = (0,1), P = (1,inf), N = (-inf,0), the order-60
// stabilizer of the symbol ppPNNp, its rational action on the box
// R = (0,1) x (0,1) x (-inf,0) x (0,1), and the map phi from R back to
// canonical family parameters.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pptes/builders.hpp"
#include "pptes/product_vector.hpp"

namespace pptes {

// det [v1 v2 v3] as columns.
cplx delta(const Vec3& v1, const Vec3& v2, const Vec3& v3);

struct InvariantTuple {
  double j1a, j2a, j3a;
  double j1b, j2b, j3b;
  std::array<double, 6> as_array() const { return {j1a, j2a, j3a, j1b, j2b, j3b}; }
};

// (J1A, J2A, J2B, J3B); the box R collects the quadruples of ppPNNp orderings.
struct InvariantQuadruple {
  double x, y, z, w;
  bool in_box() const;
  std::array<double, 4> as_array() const { return {x, y, z, w}; }
};

InvariantQuadruple quadruple_of(const InvariantTuple& t);

// Position i of a permuted sextuple holds vector perm[i] of the original.
using Perm6 = std::array<int, 6>;
inline constexpr Perm6 kIdentityPerm{0, 1, 2, 3, 4, 5};

std::vector<ProductVector> permuted(const std::vector<ProductVector>& vs, const Perm6& p);

// Shared determinant tables for one ordered family of 5 or 6 product vectors;
// evaluates the invariant tuple of any ordering in constant time.
class InvariantEngine {
 public:
  explicit InvariantEngine(const std::vector<ProductVector>& vs, ToleranceProfile tol = {});

  int size() const { return n_; }

  // Invariants of the quintuple (perm[0], ..., perm[4]). Denominator
  // determinants below rank_tol raise DegenerateQuintupleError.
  std::array<cplx, 6> tuple_complex(const Perm6& perm = kIdentityPerm) const;

  // Same, validated real: imaginary parts up to match_tol * (1 + |value|) are
  // truncated, anything larger raises NonRealInvariantError.
  InvariantTuple tuple(const Perm6& perm = kIdentityPerm) const;

 private:
  cplx delta_a(int i, int j, int k) const;
  cplx delta_b(int i, int j, int k) const;

  int n_;
  ToleranceProfile tol_;
  std::array<cplx, 216> da_{};
  std::array<cplx, 216> db_{};
};

// Invariants of an ordered quintuple; both J1 J2 J3 products equal one.
InvariantTuple quintuple_invariants(const std::vector<ProductVector>& five,
                                    ToleranceProfile tol = {});

// Invariants of an ordered sextuple; the sixth vector does not enter, so any
// reordering of position 5 alone leaves the tuple unchanged.
InvariantTuple sextuple_invariants(const std::vector<ProductVector>& six,
                                   ToleranceProfile tol = {});

struct Symbol {
  std::array<char, 6> letters{};
  std::string str() const { return std::string(letters.begin(), letters.end()); }
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// Letter of each invariant; values within symbol_tol of 0 or 1 raise
// IndeterminateSymbolError.
Symbol classify_symbol(const InvariantTuple& t,
                       double symbol_tol = ToleranceProfile{}.symbol_tol);

// Symbol histogram over all 720 orderings of a sextuple, keyed by symbol
// string. Kernels of rank-four PPT entangled states yield exactly 12 symbols
// with multiplicity 60 each.
std::map<std::string, int> symbol_census(const std::vector<ProductVector>& six,
                                         ToleranceProfile tol = {});

// Generators of the stabilizer of ppPNNp: the five-cycle sending the sextuple
// (f0,...,f5) to (f5, f0, f1, f2, f4, f3) and the double transposition
// swapping positions 1,2 and 4,5.
inline constexpr Perm6 kAlphaPerm{5, 0, 1, 2, 4, 3};
inline constexpr Perm6 kBetaPerm{0, 2, 1, 3, 5, 4};

Perm6 compose(const Perm6& p, const Perm6& q);  // permuted(s, compose(p,q)) == permuted(permuted(s,q), p)

// Closure of {alpha, beta}: 60 permutations, lexicographically sorted.
const std::vector<Perm6>& stabilizer();

// Rational action on the box matching the generators; factors of a vanishing
// denominator raise DenominatorVanishesError with the factor named.
InvariantQuadruple act_alpha(const InvariantQuadruple& q);
InvariantQuadruple act_beta(const InvariantQuadruple& q);

// Orbit closure under act_alpha and act_beta, deduplicated at match_tol and
// sorted lexicographically; at most 60 points.
std::vector<InvariantQuadruple> orbit(const InvariantQuadruple& q,
                                      double match_tol = ToleranceProfile{}.match_tol);

// Canonical family parameters of a box point: the inverse of taking the
// quadruple of a ppPNNp kernel ordering of omega(a,b,c,d). Throws
// OutOfBoxError outside the box.
CanonicalParams phi(const InvariantQuadruple& q);

}  // namespace pptes
