#pragma once

// Constructors for the concrete state families: the four-parameter canonical
// family omega(a,b,c,d), checkerboard states, the one-parameter Choi family
// and projectors complementary to unextendible product bases, with the
// pyramid and tiles bases as fixtures.

#include <array>

#include "pptes/product_vector.hpp"
#include "pptes/state.hpp"

namespace pptes {

// Parameters of the canonical family; all four must be positive.
struct CanonicalParams {
  double a;
  double b;
  double c;
  double d;
};

// Parameters of the two-parameter checkerboard normal form; both positive.
struct CheckerboardParams {
  double u;
  double v;
};

// One-parameter Choi family; requires 0 < lambda < 1 strictly.
struct ChoiParam {
  double lambda;
};

// Entries of the checkerboard sparsity pattern. Row-major slot layout of the
// three 4x3 blocks:
//   block 1: [[a,0,d],[0,g,0],[j,0,m],[0,q,0]]
//   block 2: [[0,c,0],[f,0,i],[0,l,0],[p,0,s]]
//   block 3: [[b,0,e],[0,h,0],[k,0,n],[0,r,0]]
struct CheckerboardRaw {
  cplx a{}, b{}, c{}, d{}, e{}, f{}, g{}, h{}, i{};
  cplx j{}, k{}, l{}, m{}, n{}, p{}, q{}, r{}, s{};

  static CheckerboardRaw from_canonical(const CheckerboardParams& p);
};

// The 4 x 9 block matrix [C0 C1 C2] whose Gram matrix is omega(a,b,c,d).
CMat omega_blocks(const CanonicalParams& p);

// omega(a,b,c,d): an unnormalized rank-four state, invariant under partial
// transpose, whose kernel holds |00>, |11>, |22> and three further product
// vectors.
BipartiteState omega(const CanonicalParams& p);

CMat checkerboard_blocks(const CheckerboardRaw& r);
BipartiteState checkerboard_raw(const CheckerboardRaw& r);
BipartiteState checkerboard_canonical(const CheckerboardParams& p);

BipartiteState choi_state(const ChoiParam& p);

// The six product vectors spanning the kernel of choi_state, in the fixed
// column order of the family.
std::vector<ProductVector> choi_kernel_vectors(const ChoiParam& p);

// Five pairwise orthogonal product vectors whose orthogonal complement
// contains no product vector. Orthogonality is validated on construction;
// unextendibility is checked with the product-vector finder on the range of
// upb_state, which this header cannot depend on.
class UPBQuintuple {
 public:
  explicit UPBQuintuple(std::array<ProductVector, 5> vs);
  const std::array<ProductVector, 5>& vectors() const { return vs_; }

 private:
  std::array<ProductVector, 5> vs_;
};

// Projector onto the complement of the span, scaled to unit trace.
BipartiteState upb_state(const UPBQuintuple& q);

UPBQuintuple pyramid_fixture();
UPBQuintuple tiles_fixture();

}  // namespace pptes
