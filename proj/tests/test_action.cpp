#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "pptes/builders.hpp"
#include "pptes/equivalence.hpp"
#include "pptes/invariants.hpp"
#include "test_support.hpp"

using namespace pptes;
namespace ts = test_support;

namespace {

Perm6 perm_power(const Perm6& p, int n) {
  Perm6 r = kIdentityPerm;
  for (int i = 0; i < n; ++i) r = compose(p, r);
  return r;
}

}  // namespace

TEST_CASE("generator permutations have orders five and two") {
  CHECK(perm_power(kAlphaPerm, 5) == kIdentityPerm);
  CHECK(perm_power(kAlphaPerm, 1) != kIdentityPerm);
  CHECK(compose(kBetaPerm, kBetaPerm) == kIdentityPerm);
  CHECK(kBetaPerm != kIdentityPerm);
}

TEST_CASE("compose matches sequential permutation application") {
  auto g = ts::rng(71);
  std::vector<ProductVector> six;
  for (int i = 0; i < 6; ++i) six.emplace_back(ts::random_vec3(g), ts::random_vec3(g));
  Perm6 p{2, 0, 1, 5, 3, 4}, q{1, 3, 0, 2, 5, 4};
  const auto lhs = permuted(six, compose(p, q));
  const auto rhs = permuted(permuted(six, q), p);
  for (int i = 0; i < 6; ++i) CHECK(product_distance(lhs[i], rhs[i]) == 0.0);
}

TEST_CASE("stabilizer closure has exactly sixty elements and is a group") {
  const auto& stab = stabilizer();
  REQUIRE(stab.size() == 60);
  CHECK(std::is_sorted(stab.begin(), stab.end()));
  const std::set<Perm6> members(stab.begin(), stab.end());
  CHECK(members.count(kIdentityPerm) == 1);
  CHECK(members.count(kAlphaPerm) == 1);
  CHECK(members.count(kBetaPerm) == 1);
  for (const auto& p : stab)
    for (const auto& q : {kAlphaPerm, kBetaPerm}) CHECK(members.count(compose(p, q)) == 1);
}

TEST_CASE("stabilizer permutations preserve the distinguished symbol") {
  const auto vs = kernel_product_vectors(omega({1.3, 0.8, 2.4, 0.6}));
  const InvariantEngine eng(vs);
  Perm6 base = kIdentityPerm;
  std::sort(base.begin(), base.end());
  bool found = false;
  do {
    try {
      if (classify_symbol(eng.tuple(base)).str() == "ppPNNp") {
        found = true;
        break;
      }
    } catch (const Error&) {
    }
  } while (std::next_permutation(base.begin(), base.end()));
  REQUIRE(found);
  for (const auto& s : stabilizer())
    CHECK(classify_symbol(eng.tuple(compose(s, base))).str() == "ppPNNp");
}

TEST_CASE("rational maps track the generator permutations on kernel orderings") {
  const auto vs = kernel_product_vectors(omega({0.7, 1.8, 0.45, 1.15}));
  const InvariantEngine eng(vs);
  Perm6 base = kIdentityPerm;
  std::sort(base.begin(), base.end());
  do {
    InvariantTuple t{};
    try {
      t = eng.tuple(base);
      if (classify_symbol(t).str() != "ppPNNp") continue;
    } catch (const Error&) {
      continue;
    }
    const auto q = quadruple_of(t);
    const auto qa = quadruple_of(eng.tuple(compose(kAlphaPerm, base)));
    const auto qb = quadruple_of(eng.tuple(compose(kBetaPerm, base)));
    CHECK(ts::quadruple_distance(act_alpha(q), qa) < 1e-9);
    CHECK(ts::quadruple_distance(act_beta(q), qb) < 1e-9);
  } while (std::next_permutation(base.begin(), base.end()));
}

TEST_CASE("alpha has order five and beta order two on the box") {
  auto g = ts::rng(72);
  for (int trial = 0; trial < 25; ++trial) {
    const auto q = ts::random_box_point(g);
    auto a = q;
    for (int i = 0; i < 5; ++i) a = act_alpha(a);
    CHECK(ts::quadruple_distance(a, q) < 1e-9);
    CHECK(ts::quadruple_distance(act_beta(act_beta(q)), q) < 1e-9);
  }
}

TEST_CASE("the golden point is fixed by both generators") {
  const double s5 = std::sqrt(5.0);
  const InvariantQuadruple golden{(s5 - 1) / 2, (s5 - 1) / 2, -(s5 + 1) / 2, (3 - s5) / 2};
  CHECK(ts::quadruple_distance(act_alpha(golden), golden) < 1e-10);
  CHECK(ts::quadruple_distance(act_beta(golden), golden) < 1e-10);
  CHECK(orbit(golden).size() == 1);
}

TEST_CASE("pyramid quintuple invariants in the published orders") {
  const double s5 = std::sqrt(5.0);
  const auto fixture = pyramid_fixture();
  const auto five = std::vector<ProductVector>(fixture.vectors().begin(),
                                               fixture.vectors().end());
  const InvariantQuadruple printed{-(s5 - 1) / 2, (3 + s5) / 2, (3 - s5) / 2, (s5 + 1) / 2};
  const auto t0 = quintuple_invariants(five);
  CHECK(classify_symbol(t0).str() == "NPNPpP");
  CHECK(ts::quadruple_distance(quadruple_of(t0), printed) < 1e-10);

  // Rearranged as second, first, fourth, third, fifth the quadruple lands on
  // the common fixed point of the rational action.
  const InvariantQuadruple golden{(s5 - 1) / 2, (s5 - 1) / 2, -(s5 + 1) / 2, (3 - s5) / 2};
  const std::vector<ProductVector> re{five[1], five[0], five[3], five[2], five[4]};
  CHECK(ts::quadruple_distance(quadruple_of(quintuple_invariants(re)), golden) < 1e-10);
}

TEST_CASE("tiles quintuple invariants, orbit of size five") {
  const auto fixture = tiles_fixture();
  const auto five = std::vector<ProductVector>(fixture.vectors().begin(),
                                               fixture.vectors().end());
  const InvariantQuadruple printed{-0.5, 2.0, 1.0 / 3.0, 1.5};
  const auto t0 = quintuple_invariants(five);
  CHECK(classify_symbol(t0).str() == "NPNPpP");
  CHECK(ts::quadruple_distance(quadruple_of(t0), printed) < 1e-10);

  const InvariantQuadruple boxpt{0.5, 2.0 / 3.0, -1.0, 0.5};
  const std::vector<ProductVector> re{five[1], five[0], five[3], five[2], five[4]};
  CHECK(ts::quadruple_distance(quadruple_of(quintuple_invariants(re)), boxpt) < 1e-10);

  const auto orb = orbit(boxpt);
  REQUIRE(orb.size() == 5);
  const InvariantQuadruple want[5] = {{0.5, 0.5, -2.0, 0.25},
                                      {0.5, 2.0 / 3.0, -1.0, 0.5},
                                      {2.0 / 3.0, 0.5, -2.0, 0.5},
                                      {2.0 / 3.0, 0.75, -3.0, 1.0 / 3.0},
                                      {0.75, 2.0 / 3.0, -1.0, 1.0 / 3.0}};
  for (const auto& w : want) {
    const bool hit = std::any_of(orb.begin(), orb.end(), [&](const InvariantQuadruple& o) {
      return ts::quadruple_distance(o, w) < 1e-8;
    });
    CHECK(hit);
  }
}

TEST_CASE("orbit size is at most sixty and contains the seed") {
  auto g = ts::rng(73);
  const auto q = ts::random_box_point(g);
  const auto orb = orbit(q);
  CHECK(orb.size() <= 60);
  const bool has_seed = std::any_of(orb.begin(), orb.end(), [&](const InvariantQuadruple& o) {
    return ts::quadruple_distance(o, q) < 1e-9;
  });
  CHECK(has_seed);
  for (const auto& o : orb) CHECK(o.in_box());
}

TEST_CASE("vanishing denominators are reported") {
  CHECK_THROWS_AS((void)act_beta(InvariantQuadruple{0.5, 0.5, 1.0, 0.5}),
                  DenominatorVanishesError);
}
