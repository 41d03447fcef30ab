#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pptes/builders.hpp"
#include "pptes/equivalence.hpp"
#include "pptes/finder.hpp"
#include "pptes/invariants.hpp"
#include "test_support.hpp"

using namespace pptes;
namespace ts = test_support;

namespace {

std::vector<ProductVector> rational_quintuple() {
  const auto v3 = [](double x, double y, double z) { return Vec3(cplx(x), cplx(y), cplx(z)); };
  std::vector<ProductVector> vs;
  vs.emplace_back(v3(1, 0, 0), v3(1, 0, 0));
  vs.emplace_back(v3(0, 1, 0), v3(0, 1, 0));
  vs.emplace_back(v3(0, 0, 1), v3(0, 0, 1));
  vs.emplace_back(v3(1, 1, 1), v3(1, 2, 3));
  vs.emplace_back(v3(1, 2, 4), v3(1, 1, 2));
  return vs;
}

std::vector<ProductVector> kernel_sextuple(const CanonicalParams& p) {
  return kernel_product_vectors(omega(p));
}

}  // namespace

TEST_CASE("delta is the determinant of the three columns") {
  const Vec3 e0(cplx(1), cplx(0), cplx(0)), e1(cplx(0), cplx(1), cplx(0)),
      e2(cplx(0), cplx(0), cplx(1));
  CHECK(std::abs(delta(e0, e1, e2) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(delta(e1, e0, e2) + cplx(1.0)) < 1e-15);
  CHECK(std::abs(delta(e0, e0, e2)) < 1e-15);
  auto g = ts::rng(61);
  const Vec3 a = ts::random_vec3(g), b = ts::random_vec3(g), c = ts::random_vec3(g);
  Mat3 m;
  m.col(0) = a;
  m.col(1) = b;
  m.col(2) = c;
  CHECK(std::abs(delta(a, b, c) - m.determinant()) < 1e-12);
}

TEST_CASE("quintuple invariants equal the defining determinant ratios") {
  const auto vs = rational_quintuple();
  const auto det3 = [](const Vec3& x, const Vec3& y, const Vec3& z) {
    Mat3 m;
    m.col(0) = x;
    m.col(1) = y;
    m.col(2) = z;
    return m.determinant();
  };
  const auto da = [&](int i, int j, int k) { return det3(vs[i].a, vs[j].a, vs[k].a); };
  const auto db = [&](int i, int j, int k) { return det3(vs[i].b, vs[j].b, vs[k].b); };

  const cplx j1a = da(2, 0, 4) * da(0, 1, 3) / (da(2, 0, 3) * da(0, 1, 4));
  const cplx j2a = da(0, 1, 4) * da(1, 2, 3) / (da(0, 1, 3) * da(1, 2, 4));
  const cplx j3a = da(1, 2, 4) * da(2, 0, 3) / (da(1, 2, 3) * da(2, 0, 4));
  const cplx j1b = db(2, 0, 4) * db(0, 1, 3) / (db(2, 0, 3) * db(0, 1, 4));
  const cplx j2b = db(0, 1, 4) * db(1, 2, 3) / (db(0, 1, 3) * db(1, 2, 4));
  const cplx j3b = db(1, 2, 4) * db(2, 0, 3) / (db(1, 2, 3) * db(2, 0, 4));

  const auto t = quintuple_invariants(vs);
  CHECK(t.j1a == doctest::Approx(j1a.real()).epsilon(1e-12));
  CHECK(t.j2a == doctest::Approx(j2a.real()).epsilon(1e-12));
  CHECK(t.j3a == doctest::Approx(j3a.real()).epsilon(1e-12));
  CHECK(t.j1b == doctest::Approx(j1b.real()).epsilon(1e-12));
  CHECK(t.j2b == doctest::Approx(j2b.real()).epsilon(1e-12));
  CHECK(t.j3b == doctest::Approx(j3b.real()).epsilon(1e-12));
}

TEST_CASE("both invariant triples multiply to one") {
  const auto vs = kernel_sextuple({1.4, 0.6, 2.3, 0.9});
  const InvariantEngine eng(vs);
  auto g = ts::rng(62);
  Perm6 p{0, 1, 2, 3, 4, 5};
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(p.begin(), p.end(), g);
    InvariantTuple t{};
    try {
      t = eng.tuple(p);
    } catch (const Error&) {
      continue;
    }
    CHECK(t.j1a * t.j2a * t.j3a == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(t.j1b * t.j2b * t.j3b == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("sextuple invariants ignore the sixth vector") {
  const auto vs = kernel_sextuple({0.8, 1.9, 0.5, 1.2});
  REQUIRE(vs.size() == 6);
  const auto t = sextuple_invariants(vs);
  const auto five = std::vector<ProductVector>(vs.begin(), vs.begin() + 5);
  CHECK(ts::tuple_distance(t, quintuple_invariants(five)) < 1e-14);
  auto replaced = vs;
  replaced[5] = ProductVector(Vec3(cplx(1), cplx(2), cplx(-1)), Vec3(cplx(2), cplx(1), cplx(1)));
  CHECK(ts::tuple_distance(t, sextuple_invariants(replaced)) < 1e-14);
}

TEST_CASE("permuted places source vector p[i] at position i") {
  const auto vs = rational_quintuple();
  std::vector<ProductVector> six = vs;
  six.emplace_back(Vec3(cplx(2), cplx(3), cplx(5)), Vec3(cplx(1), cplx(4), cplx(2)));
  const Perm6 p{3, 0, 5, 1, 4, 2};
  const auto out = permuted(six, p);
  REQUIRE(out.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(product_distance(out[i], six[p[i]]) == 0.0);
}

TEST_CASE("engine tuples agree with direct evaluation of permuted families") {
  const auto vs = kernel_sextuple({2.1, 0.7, 1.1, 3.0});
  const InvariantEngine eng(vs);
  auto g = ts::rng(63);
  Perm6 p{0, 1, 2, 3, 4, 5};
  for (int trial = 0; trial < 12; ++trial) {
    std::shuffle(p.begin(), p.end(), g);
    InvariantTuple direct{}, via_engine{};
    bool direct_threw = false, engine_threw = false;
    try {
      direct = sextuple_invariants(permuted(vs, p));
    } catch (const Error&) {
      direct_threw = true;
    }
    try {
      via_engine = eng.tuple(p);
    } catch (const Error&) {
      engine_threw = true;
    }
    REQUIRE(direct_threw == engine_threw);
    if (!direct_threw) CHECK(ts::tuple_distance(direct, via_engine) < 1e-10);
  }
}

TEST_CASE("symbol classification letters") {
  const InvariantTuple t{0.5, 2.0, -1.0, 1.5, 0.1, -0.2};
  CHECK(classify_symbol(t).str() == "pPNPpN");
  CHECK_THROWS_AS((void)classify_symbol(InvariantTuple{1.0, 0.5, 0.5, 0.5, 0.5, 0.5}),
                  IndeterminateSymbolError);
  CHECK_THROWS_AS((void)classify_symbol(InvariantTuple{0.5, 1e-12, 0.5, 0.5, 0.5, 0.5}),
                  IndeterminateSymbolError);
}

TEST_CASE("census of a kernel sextuple is twelve symbols of multiplicity sixty") {
  const auto vs = kernel_sextuple({1.0, 2.0, 3.0, 4.0});
  const auto census = symbol_census(vs);
  CHECK(census.size() == 12);
  int total = 0;
  for (const auto& [sym, count] : census) {
    CHECK(count == 60);
    total += count;
  }
  CHECK(total == 720);
  CHECK(census.count("ppPNNp") == 1);
}

TEST_CASE("quadruple extraction and box membership") {
  const InvariantTuple t{0.3, 0.7, -2.0, 0.25, -1.5, 0.6};
  const auto q = quadruple_of(t);
  CHECK(q.x == doctest::Approx(0.3));
  CHECK(q.y == doctest::Approx(0.7));
  CHECK(q.z == doctest::Approx(-1.5));
  CHECK(q.w == doctest::Approx(0.6));
  CHECK(q.in_box());
  CHECK(!InvariantQuadruple{1.2, 0.5, -1.0, 0.5}.in_box());
  CHECK(!InvariantQuadruple{0.5, 0.5, 1.0, 0.5}.in_box());
  CHECK(!InvariantQuadruple{0.5, 0.5, -1.0, 0.0}.in_box());
}

TEST_CASE("degenerate quintuples are rejected") {
  auto vs = rational_quintuple();
  vs[1] = vs[0];
  CHECK_THROWS_AS((void)quintuple_invariants(vs), DegenerateQuintupleError);
}

TEST_CASE("complex invariants are rejected as non-real") {
  auto g = ts::rng(64);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<ProductVector> vs;
    for (int i = 0; i < 5; ++i) vs.emplace_back(ts::random_vec3(g), ts::random_vec3(g));
    CHECK_THROWS_AS((void)quintuple_invariants(vs), NonRealInvariantError);
  }
}

TEST_CASE("phi inverts the quadruple of a canonical state") {
  auto g = ts::rng(65);
  const auto q = ts::random_box_point(g);
  const auto params = phi(q);
  CHECK(params.a > 0.0);
  CHECK(params.b > 0.0);
  CHECK(params.c > 0.0);
  CHECK(params.d > 0.0);
  const auto vs = kernel_product_vectors(omega(params));
  const InvariantEngine eng(vs);
  Perm6 p{0, 1, 2, 3, 4, 5};
  std::sort(p.begin(), p.end());
  double best = 1e9;
  do {
    try {
      const auto t = eng.tuple(p);
      if (classify_symbol(t).str() != "ppPNNp") continue;
      best = std::min(best, ts::quadruple_distance(quadruple_of(t), q));
    } catch (const Error&) {
    }
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(best < 1e-7);
}

TEST_CASE("phi rejects points outside the box") {
  CHECK_THROWS_AS((void)phi(InvariantQuadruple{0.5, 0.5, 1.0, 0.5}), OutOfBoxError);
  CHECK_THROWS_AS((void)phi(InvariantQuadruple{-0.1, 0.5, -1.0, 0.5}), OutOfBoxError);
}
