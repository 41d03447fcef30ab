#include "pptes/builders.hpp"

#include <cmath>
#include <utility>

#include "pptes/matrix_ops.hpp"

namespace pptes {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw InvalidParameterError(std::string(name) + " must be a positive finite number");
}

}  // namespace

CMat omega_blocks(const CanonicalParams& p) {
  require_positive(p.a, "a");
  require_positive(p.b, "b");
  require_positive(p.c, "c");
  require_positive(p.d, "d");
  CMat c = CMat::Zero(4, 9);
  // block 0 (columns 0..2)
  c(0, 1) = p.a;
  c(0, 2) = p.b;
  c(1, 2) = 1.0;
  // block 1 (columns 3..5)
  c(1, 5) = p.c;
  c(2, 5) = 1.0;
  c(3, 3) = 1.0;
  c(3, 5) = -1.0 / p.d;
  // block 2 (columns 6..8)
  c(0, 7) = -1.0 / p.b;
  c(1, 7) = 1.0;
  c(2, 6) = 1.0;
  c(2, 7) = -p.c;
  c(3, 6) = p.d;
  return c;
}

BipartiteState omega(const CanonicalParams& p) {
  const CMat c = omega_blocks(p);
  return BipartiteState(c.adjoint() * c);
}

CheckerboardRaw CheckerboardRaw::from_canonical(const CheckerboardParams& p) {
  require_positive(p.u, "u");
  require_positive(p.v, "v");
  CheckerboardRaw r;
  r.a = 1.0;
  r.g = p.u;
  r.c = p.u;
  r.f = 1.0;
  r.l = 1.0;
  r.s = 1.0;
  r.h = p.v;
  r.k = p.v;
  r.n = 1.0;
  r.r = 1.0;
  return r;
}

CMat checkerboard_blocks(const CheckerboardRaw& w) {
  CMat c = CMat::Zero(4, 9);
  // block 1 (columns 0..2)
  c(0, 0) = w.a;
  c(0, 2) = w.d;
  c(1, 1) = w.g;
  c(2, 0) = w.j;
  c(2, 2) = w.m;
  c(3, 1) = w.q;
  // block 2 (columns 3..5)
  c(0, 4) = w.c;
  c(1, 3) = w.f;
  c(1, 5) = w.i;
  c(2, 4) = w.l;
  c(3, 3) = w.p;
  c(3, 5) = w.s;
  // block 3 (columns 6..8)
  c(0, 6) = w.b;
  c(0, 8) = w.e;
  c(1, 7) = w.h;
  c(2, 6) = w.k;
  c(2, 8) = w.n;
  c(3, 7) = w.r;
  return c;
}

BipartiteState checkerboard_raw(const CheckerboardRaw& w) {
  const CMat c = checkerboard_blocks(w);
  if (c.norm() == 0.0) throw InvalidParameterError("checkerboard entries are all zero");
  return BipartiteState(c.adjoint() * c);
}

BipartiteState checkerboard_canonical(const CheckerboardParams& p) {
  return checkerboard_raw(CheckerboardRaw::from_canonical(p));
}

namespace {

void require_choi_lambda(double l) {
  if (!(l > 0.0) || !(l < 1.0))
    throw InvalidParameterError("lambda must lie strictly between zero and one");
}

}  // namespace

BipartiteState choi_state(const ChoiParam& p) {
  require_choi_lambda(p.lambda);
  const double l2 = p.lambda * p.lambda;
  const double il2 = 1.0 / l2;
  CMat m = CMat::Zero(9, 9);
  const double diag[9] = {1.0, l2, il2, il2, 1.0, l2, l2, il2, 1.0};
  for (int i = 0; i < 9; ++i) m(i, i) = diag[i];
  const auto couple = [&m](int i, int j) {
    m(i, j) = 1.0;
    m(j, i) = 1.0;
  };
  couple(0, 4);
  couple(0, 8);
  couple(4, 8);
  couple(1, 3);
  couple(2, 6);
  couple(5, 7);
  return BipartiteState(m);
}

std::vector<ProductVector> choi_kernel_vectors(const ChoiParam& p) {
  require_choi_lambda(p.lambda);
  const double l = p.lambda;
  const auto v3 = [](double x, double y, double z) { return Vec3(cplx(x), cplx(y), cplx(z)); };
  std::vector<ProductVector> out;
  out.emplace_back(v3(1, l, 0), v3(-l, 1, 0));
  out.emplace_back(v3(0, 1, l), v3(0, -l, 1));
  out.emplace_back(v3(l, 0, 1), v3(1, 0, -l));
  out.emplace_back(v3(1, -l, 0), v3(l, 1, 0));
  out.emplace_back(v3(0, 1, -l), v3(0, l, 1));
  out.emplace_back(v3(-l, 0, 1), v3(1, 0, l));
  return out;
}

UPBQuintuple::UPBQuintuple(std::array<ProductVector, 5> vs) : vs_(std::move(vs)) {
  std::array<CVec, 5> f;
  for (int i = 0; i < 5; ++i) {
    f[i] = vs_[i].full();
    f[i] /= f[i].norm();
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (std::abs(f[i].dot(f[j])) > 1e-10)
        throw InvalidParameterError("product vectors must be mutually orthogonal");
}

BipartiteState upb_state(const UPBQuintuple& q) {
  CMat proj = CMat::Zero(9, 9);
  for (const auto& v : q.vectors()) {
    CVec f = v.full();
    f /= f.norm();
    proj += f * f.adjoint();
  }
  return BipartiteState((CMat::Identity(9, 9) - proj) / 4.0);
}

UPBQuintuple pyramid_fixture() {
  const double h = 0.5 * std::sqrt(1.0 + std::sqrt(5.0));
  std::array<Vec3, 5> v;
  for (int j = 0; j < 5; ++j) {
    const double t = 2.0 * M_PI * j / 5.0;
    v[j] = Vec3(cplx(std::cos(t)), cplx(std::sin(t)), cplx(h));
  }
  // Pair j is (v_{2j mod 5}, v_{4j mod 5}); this enumeration makes the
  // quintuple invariants land on the classical values in the standard order.
  std::array<ProductVector, 5> vs{
      ProductVector(v[0], v[0]), ProductVector(v[2], v[4]), ProductVector(v[4], v[3]),
      ProductVector(v[1], v[2]), ProductVector(v[3], v[1])};
  return UPBQuintuple(vs);
}

UPBQuintuple tiles_fixture() {
  const auto v3 = [](double x, double y, double z) { return Vec3(cplx(x), cplx(y), cplx(z)); };
  // Enumeration order chosen so the quintuple invariants land on the
  // classical values in the standard order.
  std::array<ProductVector, 5> vs{
      ProductVector(v3(1, -1, 0), v3(0, 0, 1)), ProductVector(v3(0, 0, 1), v3(0, 1, -1)),
      ProductVector(v3(1, 0, 0), v3(1, -1, 0)), ProductVector(v3(0, 1, -1), v3(1, 0, 0)),
      ProductVector(v3(1, 1, 1), v3(1, 1, 1))};
  return UPBQuintuple(vs);
}

}  // namespace pptes
