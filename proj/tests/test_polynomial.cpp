#include <doctest.h>

#include <algorithm>
#include <complex>
#include <vector>

#include "pptes/detail/polynomial.hpp"
#include "test_support.hpp"

using namespace pptes;
using namespace pptes::detail;
namespace ts = test_support;

namespace {

// Max over expected roots of the distance to the closest computed root, plus
// a count mismatch penalty.
double root_set_distance(std::vector<cplx> got, const std::vector<cplx>& want) {
  if (got.size() != want.size()) return 1e9;
  double worst = 0.0;
  for (const cplx& w : want) {
    auto best = std::min_element(got.begin(), got.end(), [&](const cplx& a, const cplx& b) {
      return std::abs(a - w) < std::abs(b - w);
    });
    worst = std::max(worst, std::abs(*best - w));
    got.erase(best);
  }
  return worst;
}

}  // namespace

TEST_CASE("roots of a cubic with known complex roots") {
  // (x - 1)(x - 2i)(x + 3) = x^3 + (2 - 2i) x^2 + (-3 - 4i) x + 6i
  const Poly1 p{cplx(0, 6), cplx(-3, -4), cplx(2, -2), cplx(1, 0)};
  CHECK(root_set_distance(roots(p), {cplx(1, 0), cplx(0, 2), cplx(-3, 0)}) < 1e-10);
}

TEST_CASE("roots handles leading zeros and constants") {
  CHECK(roots(Poly1{cplx(1.0)}).empty());
  CHECK(roots(Poly1{}).empty());
  // 2x + 1 with vanishing formal degree-2 coefficient
  const auto r = roots(Poly1{cplx(1.0), cplx(2.0), cplx(0.0)});
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0] - cplx(-0.5)) < 1e-12);
}

TEST_CASE("polynomial arithmetic is consistent at sample points") {
  auto g = ts::rng(31);
  Poly1 p(4), q(3);
  for (auto& c : p) c = ts::random_complex(g);
  for (auto& c : q) c = ts::random_complex(g);
  const cplx x = ts::random_complex(g);
  CHECK(std::abs(eval(mul(p, q), x) - eval(p, x) * eval(q, x)) < 1e-12);
  CHECK(std::abs(eval(add(p, q), x) - (eval(p, x) + eval(q, x))) < 1e-12);
  CHECK(std::abs(eval(scale(p, cplx(2, 1)), x) - cplx(2, 1) * eval(p, x)) < 1e-12);
  // derivative via first-order difference in a complex direction
  const cplx h(1e-7, 0);
  CHECK(std::abs(eval(derivative(p), x) - (eval(p, x + h) - eval(p, x - h)) / (2.0 * h)) < 1e-6);
}

TEST_CASE("trimming drops only negligible leading coefficients") {
  const Poly1 p{cplx(1.0), cplx(2.0), cplx(1e-15)};
  CHECK(degree(p) == 1);
  CHECK(trimmed(p).size() == 2);
  const Poly1 z{cplx(0.0), cplx(0.0)};
  CHECK(degree(z) == -1);
}

TEST_CASE("bivariate evaluation, slices and coefficient extraction agree") {
  auto g = ts::rng(32);
  Poly2 p(3, 2);
  for (auto& c : p.c) c = ts::random_complex(g);
  const cplx x = ts::random_complex(g), y = ts::random_complex(g);
  CHECK(std::abs(eval(p.eval_at_x(x), y) - p.eval(x, y)) < 1e-12);
  cplx via_coeffs = 0.0;
  cplx ypow = 1.0;
  for (int j = 0; j <= p.ny; ++j, ypow *= y) via_coeffs += eval(p.coeff_of_y(j), x) * ypow;
  CHECK(std::abs(via_coeffs - p.eval(x, y)) < 1e-12);
  const cplx h(1e-7, 0);
  CHECK(std::abs(p.eval_dx(x, y) - (p.eval(x + h, y) - p.eval(x - h, y)) / (2.0 * h)) < 1e-6);
  CHECK(std::abs(p.eval_dy(x, y) - (p.eval(x, y + h) - p.eval(x, y - h)) / (2.0 * h)) < 1e-6);
}

TEST_CASE("resultant vanishes exactly at shared-root abscissas") {
  // p = (y - x)(y + 1), q = (y - 2x)(y - 3): common roots at x = 0 (y = 0),
  // x = 3 (y = 3) and x = -1/2 (y = -1).
  const Poly2 ymx = Poly2::linear(0, cplx(-1), cplx(1));
  const Poly2 yp1 = Poly2::linear(cplx(1), 0, cplx(1));
  const Poly2 ym2x = Poly2::linear(0, cplx(-2), cplx(1));
  const Poly2 ym3 = Poly2::linear(cplx(-3), 0, cplx(1));
  const Poly1 res = resultant_y(mul(ymx, yp1), mul(ym2x, ym3));
  REQUIRE(degree(res) == 3);
  CHECK(root_set_distance(roots(trimmed(res)), {cplx(0), cplx(3), cplx(-0.5)}) < 1e-9);
}

TEST_CASE("resultant of polynomials sharing a factor is identically zero") {
  const Poly2 shared = Poly2::linear(cplx(0.3), cplx(-1), cplx(1));
  const Poly2 p = mul(shared, Poly2::linear(cplx(1), 0, cplx(1)));
  const Poly2 q = mul(shared, Poly2::linear(cplx(-2), cplx(1), cplx(1)));
  const Poly1 res = resultant_y(p, q);
  CHECK(max_abs_coeff(res) <
        1e-10 * std::max(1.0, p.max_abs() * q.max_abs()));
}

TEST_CASE("resultant detects disjoint root sets") {
  // p = (y - 1)(y - x), q = y + x^2 + 1: common root needs -x^2 - 1 ∈ {1, x}.
  const Poly2 p = mul(Poly2::linear(cplx(-1), 0, cplx(1)), Poly2::linear(0, cplx(-1), cplx(1)));
  Poly2 q(2, 1);
  q.at(0, 0) = cplx(1);
  q.at(2, 0) = cplx(1);
  q.at(0, 1) = cplx(1);
  const Poly1 res = resultant_y(p, q);
  // roots of res: x^2 + 2 = 0 and x^2 + x + 1 = 0
  const std::vector<cplx> want{cplx(0, std::sqrt(2.0)), cplx(0, -std::sqrt(2.0)),
                               cplx(-0.5, std::sqrt(3.0) / 2), cplx(-0.5, -std::sqrt(3.0) / 2)};
  CHECK(root_set_distance(roots(trimmed(res)), want) < 1e-9);
}
