#include "pptes/product_vector.hpp"

#include <algorithm>
#include <cmath>

namespace pptes {

Vec3 projective_canonical(const Vec3& v, double zero_clip) {
  double maxmod = 0.0;
  for (int i = 0; i < 3; ++i) maxmod = std::max(maxmod, std::abs(v(i)));
  if (maxmod == 0.0) throw InvalidParameterError("projective_canonical: zero vector");
  Vec3 out = v;
  for (int i = 0; i < 3; ++i)
    if (std::abs(out(i)) < zero_clip * maxmod) out(i) = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (out(i) != 0.0) {
      out /= out(i);
      return out;
    }
  }
  throw InvalidParameterError("projective_canonical: zero vector");
}

double projective_distance(const Vec3& a, const Vec3& b) {
  const Vec3 ca = projective_canonical(a);
  const Vec3 cb = projective_canonical(b);
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    d = std::max(d, std::abs(ca(i) - cb(i)) / (1.0 + std::abs(ca(i)) + std::abs(cb(i))));
  return d;
}

ProductVector::ProductVector(const Vec3& a_in, const Vec3& b_in)
    : a(projective_canonical(a_in)), b(projective_canonical(b_in)) {}

CVec ProductVector::full() const {
  CVec out(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(3 * i + j) = a(i) * b(j);
  return out;
}

ProductVector ProductVector::basis(int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2)
    throw InvalidParameterError("ProductVector::basis: index out of range");
  Vec3 a = Vec3::Zero(), b = Vec3::Zero();
  a(i) = 1.0;
  b(j) = 1.0;
  return ProductVector(a, b);
}

double product_distance(const ProductVector& x, const ProductVector& y) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) {
    d = std::max(d, std::abs(x.a(i) - y.a(i)) / (1.0 + std::abs(x.a(i)) + std::abs(y.a(i))));
    d = std::max(d, std::abs(x.b(i) - y.b(i)) / (1.0 + std::abs(x.b(i)) + std::abs(y.b(i))));
  }
  return d;
}

bool operator==(const ProductVector& x, const ProductVector& y) {
  return product_distance(x, y) == 0.0;
}

namespace {

// Lexicographic on (re, im) pairs of the canonical representative.
int cplx_cmp(const cplx& u, const cplx& v) {
  if (u.real() < v.real()) return -1;
  if (u.real() > v.real()) return 1;
  if (u.imag() < v.imag()) return -1;
  if (u.imag() > v.imag()) return 1;
  return 0;
}

int vec_cmp(const Vec3& u, const Vec3& v) {
  for (int i = 0; i < 3; ++i)
    if (int c = cplx_cmp(u(i), v(i)); c != 0) return c;
  return 0;
}

}  // namespace

bool product_vector_less(const ProductVector& x, const ProductVector& y) {
  if (int c = vec_cmp(x.a, y.a); c != 0) return c < 0;
  return vec_cmp(x.b, y.b) < 0;
}

}  // namespace pptes
