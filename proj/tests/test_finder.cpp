#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pptes/builders.hpp"
#include "pptes/finder.hpp"
#include "test_support.hpp"

using namespace pptes;
namespace ts = test_support;

namespace {

bool contains_vector(const std::vector<ProductVector>& vs, const ProductVector& target,
                     double tol = 1e-8) {
  return std::any_of(vs.begin(), vs.end(),
                     [&](const ProductVector& v) { return product_distance(v, target) < tol; });
}

}  // namespace

TEST_CASE("kernel of a canonical state holds exactly six product vectors") {
  const BipartiteState s = omega({1.0, 2.0, 3.0, 4.0});
  const SubspaceSpec ker = SubspaceSpec::kernel_of(s);
  CHECK(ker.dimension() == 5);
  const auto res = find_product_vectors(ker);
  REQUIRE(res.status == SearchStatus::Finite);
  REQUIRE(res.vectors.size() == 6);
  for (int i = 0; i < 3; ++i) CHECK(contains_vector(res.vectors, ProductVector::basis(i, i)));
  for (const auto& v : res.vectors) CHECK(ker.residual(v.full()) < 1e-9);
  CHECK(in_general_position(res.vectors));
}

TEST_CASE("kernel solutions match independently computed coordinates") {
  // Non-basis kernel members of omega(0.9, 1.3, 0.7, 1.1), solved symbolically
  // in exact arithmetic outside this code base and frozen here.
  const BipartiteState s = omega({0.9, 1.3, 0.7, 1.1});
  const auto res = find_product_vectors(SubspaceSpec::kernel_of(s));
  REQUIRE(res.status == SearchStatus::Finite);
  REQUIRE(res.vectors.size() == 6);
  const double xs[3] = {-5.360807358395397, -0.732832806923525, -0.21986554373712275};
  const double ys[3] = {3.030874129335436, 0.2617388481250206, 0.3903365068800121};
  for (int i = 0; i < 3; ++i) {
    const Vec3 a(cplx(1.0), cplx(xs[i]), cplx(ys[i]));
    const bool found = std::any_of(res.vectors.begin(), res.vectors.end(), [&](const auto& v) {
      return projective_distance(v.a, a) < 1e-8;
    });
    CHECK(found);
  }
}

TEST_CASE("finder reports stable results across the parameter range") {
  auto g = ts::rng(51);
  for (int trial = 0; trial < 6; ++trial) {
    const BipartiteState s = omega(ts::random_omega_params(g));
    const auto res = find_product_vectors(SubspaceSpec::kernel_of(s));
    REQUIRE(res.status == SearchStatus::Finite);
    CHECK(res.vectors.size() == 6);
    CHECK(in_general_position(res.vectors));
    CHECK(std::is_sorted(res.vectors.begin(), res.vectors.end(), product_vector_less));
  }
}

TEST_CASE("range of a canonical state is completely entangled") {
  const BipartiteState s = omega({0.9, 1.3, 0.7, 1.1});
  const SubspaceSpec range = SubspaceSpec::range_of(s);
  const auto res = find_product_vectors(range);
  CHECK(res.status == SearchStatus::Finite);
  CHECK(res.vectors.empty());
  CHECK(is_ces(range));
}

TEST_CASE("range of a checkerboard state is completely entangled") {
  for (double u : {0.5, 1.0, 2.0}) {
    const BipartiteState s = checkerboard_canonical({u, 2.0});
    CHECK(is_ces(SubspaceSpec::range_of(s)));
  }
}

TEST_CASE("upb complements contain no product vector") {
  for (const auto& fixture : {pyramid_fixture(), tiles_fixture()}) {
    const BipartiteState s = upb_state(fixture);
    CHECK(is_ces(SubspaceSpec::range_of(s)));
  }
}

TEST_CASE("span of an unextendible quintuple holds exactly six product vectors") {
  for (const auto& fixture : {pyramid_fixture(), tiles_fixture()}) {
    CMat basis(9, 5);
    for (int i = 0; i < 5; ++i) basis.col(i) = fixture.vectors()[i].full();
    const auto res = find_product_vectors(SubspaceSpec::spanned_by(basis));
    REQUIRE(res.status == SearchStatus::Finite);
    CHECK(res.vectors.size() == 6);
    for (const auto& v : fixture.vectors()) CHECK(contains_vector(res.vectors, v));
  }
}

TEST_CASE("choi kernels are recovered for the whole parameter range") {
  for (double l : {0.1, 0.25, 0.5, 0.9}) {
    const BipartiteState s = choi_state({l});
    const auto res = find_product_vectors(SubspaceSpec::kernel_of(s));
    REQUIRE(res.status == SearchStatus::Finite);
    REQUIRE(res.vectors.size() == 6);
    for (const auto& v : choi_kernel_vectors({l})) CHECK(contains_vector(res.vectors, v));
  }
}

TEST_CASE("a subspace with a product-vector curve is classified infinite") {
  CMat basis(9, 3);
  basis.setZero();
  basis(0, 0) = 1.0;  // |0>|0>
  basis(1, 1) = 1.0;  // |0>|1>
  basis(2, 2) = 1.0;  // |0>|2>
  const auto res = find_product_vectors(SubspaceSpec::spanned_by(basis));
  CHECK(res.status == SearchStatus::Infinite);
}

TEST_CASE("two-dimensional product subspace on both factors is infinite") {
  CMat basis(9, 4);
  basis.setZero();
  basis(0, 0) = 1.0;  // |0>|0>
  basis(1, 1) = 1.0;  // |0>|1>
  basis(3, 2) = 1.0;  // |1>|0>
  basis(4, 3) = 1.0;  // |1>|1>
  const auto res = find_product_vectors(SubspaceSpec::spanned_by(basis));
  CHECK(res.status == SearchStatus::Infinite);
}

TEST_CASE("general position fails when three A factors align") {
  std::vector<ProductVector> vs;
  const auto v3 = [](double x, double y, double z) { return Vec3(cplx(x), cplx(y), cplx(z)); };
  vs.emplace_back(v3(1, 0, 0), v3(1, 0, 0));
  vs.emplace_back(v3(1, 0, 0), v3(0, 1, 0));
  vs.emplace_back(v3(1, 0, 0), v3(0, 0, 1));
  vs.emplace_back(v3(0, 1, 0), v3(1, 1, 0));
  CHECK(!in_general_position(vs));
  std::vector<ProductVector> ok;
  ok.emplace_back(v3(1, 0, 0), v3(1, 0, 0));
  ok.emplace_back(v3(0, 1, 0), v3(0, 1, 0));
  ok.emplace_back(v3(0, 0, 1), v3(0, 0, 1));
  ok.emplace_back(v3(1, 1, 1), v3(1, 1, 1));
  CHECK(in_general_position(ok));
}

TEST_CASE("finder results are deterministic") {
  const BipartiteState s = omega({1.7, 0.4, 2.2, 0.8});
  const auto r1 = find_product_vectors(SubspaceSpec::kernel_of(s));
  const auto r2 = find_product_vectors(SubspaceSpec::kernel_of(s));
  REQUIRE(r1.vectors.size() == r2.vectors.size());
  for (std::size_t i = 0; i < r1.vectors.size(); ++i)
    CHECK(product_distance(r1.vectors[i], r2.vectors[i]) == 0.0);
}
