#include "pptes/detail/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace pptes::detail {

double max_abs_coeff(const Poly1& p) {
  double m = 0.0;
  for (const auto& c : p) m = std::max(m, std::abs(c));
  return m;
}

Poly1 trimmed(Poly1 p, double rel_tol) {
  const double cut = rel_tol * max_abs_coeff(p);
  while (!p.empty() && std::abs(p.back()) <= cut) p.pop_back();
  return p;
}

int degree(const Poly1& p, double rel_tol) {
  return static_cast<int>(trimmed(p, rel_tol).size()) - 1;
}

cplx eval(const Poly1& p, cplx x) {
  cplx v = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

Poly1 derivative(const Poly1& p) {
  if (p.size() <= 1) return {};
  Poly1 d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = static_cast<double>(i) * p[i];
  return d;
}

Poly1 mul(const Poly1& p, const Poly1& q) {
  if (p.empty() || q.empty()) return {};
  Poly1 r(p.size() + q.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

Poly1 add(const Poly1& p, const Poly1& q) {
  Poly1 r(std::max(p.size(), q.size()), cplx(0.0));
  for (std::size_t i = 0; i < p.size(); ++i) r[i] += p[i];
  for (std::size_t i = 0; i < q.size(); ++i) r[i] += q[i];
  return r;
}

Poly1 scale(Poly1 p, cplx s) {
  for (auto& c : p) c *= s;
  return p;
}

std::vector<cplx> roots(const Poly1& p_in) {
  const Poly1 p = trimmed(p_in);
  const int d = static_cast<int>(p.size()) - 1;
  if (d <= 0) return {};
  CMat companion = CMat::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p[i] / p[d];
  Eigen::ComplexEigenSolver<CMat> es(companion, false);
  std::vector<cplx> out(d);
  for (int i = 0; i < d; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

Poly2 Poly2::linear(cplx c00, cplx cx, cplx cy) {
  Poly2 p(1, 1);
  p.at(0, 0) = c00;
  p.at(1, 0) = cx;
  p.at(0, 1) = cy;
  return p;
}

cplx Poly2::eval(cplx x, cplx y) const {
  // Horner in x over Horner-in-y row polynomials.
  cplx v = 0.0;
  for (int i = nx; i >= 0; --i) {
    cplx row = 0.0;
    for (int j = ny; j >= 0; --j) row = row * y + at(i, j);
    v = v * x + row;
  }
  return v;
}

cplx Poly2::eval_dx(cplx x, cplx y) const {
  cplx v = 0.0;
  for (int i = nx; i >= 1; --i) {
    cplx row = 0.0;
    for (int j = ny; j >= 0; --j) row = row * y + at(i, j);
    v = v * x + static_cast<double>(i) * row;
  }
  return v;
}

cplx Poly2::eval_dy(cplx x, cplx y) const {
  cplx v = 0.0;
  for (int i = nx; i >= 0; --i) {
    cplx row = 0.0;
    for (int j = ny; j >= 1; --j) row = row * y + static_cast<double>(j) * at(i, j);
    v = v * x + row;
  }
  return v;
}

Poly1 Poly2::eval_at_x(cplx x) const {
  Poly1 out(ny + 1, cplx(0.0));
  for (int j = 0; j <= ny; ++j) {
    cplx v = 0.0;
    for (int i = nx; i >= 0; --i) v = v * x + at(i, j);
    out[j] = v;
  }
  return out;
}

Poly1 Poly2::coeff_of_y(int j) const {
  Poly1 out(nx + 1, cplx(0.0));
  for (int i = 0; i <= nx; ++i) out[i] = at(i, j);
  return out;
}

double Poly2::max_abs() const {
  double m = 0.0;
  for (const auto& v : c) m = std::max(m, std::abs(v));
  return m;
}

int Poly2::degree_y(double rel_tol) const {
  const double cut = rel_tol * max_abs();
  for (int j = ny; j >= 0; --j)
    for (int i = 0; i <= nx; ++i)
      if (std::abs(at(i, j)) > cut) return j;
  return -1;
}

void Poly2::scale_by(cplx s) {
  for (auto& v : c) v *= s;
}

Poly2 mul(const Poly2& p, const Poly2& q) {
  Poly2 r(p.nx + q.nx, p.ny + q.ny);
  for (int i = 0; i <= p.nx; ++i)
    for (int j = 0; j <= p.ny; ++j) {
      const cplx pij = p.at(i, j);
      if (pij == cplx(0.0)) continue;
      for (int k = 0; k <= q.nx; ++k)
        for (int l = 0; l <= q.ny; ++l) r.at(i + k, j + l) += pij * q.at(k, l);
    }
  return r;
}

Poly2 add(const Poly2& p, const Poly2& q) {
  Poly2 r(std::max(p.nx, q.nx), std::max(p.ny, q.ny));
  for (int i = 0; i <= p.nx; ++i)
    for (int j = 0; j <= p.ny; ++j) r.at(i, j) += p.at(i, j);
  for (int i = 0; i <= q.nx; ++i)
    for (int j = 0; j <= q.ny; ++j) r.at(i, j) += q.at(i, j);
  return r;
}

Poly2 sub(const Poly2& p, const Poly2& q) {
  Poly2 r(std::max(p.nx, q.nx), std::max(p.ny, q.ny));
  for (int i = 0; i <= p.nx; ++i)
    for (int j = 0; j <= p.ny; ++j) r.at(i, j) += p.at(i, j);
  for (int i = 0; i <= q.nx; ++i)
    for (int j = 0; j <= q.ny; ++j) r.at(i, j) -= q.at(i, j);
  return r;
}

Poly1 resultant_y(const Poly2& p, const Poly2& q) {
  const int m = p.degree_y();
  const int n = q.degree_y();
  if (m < 1 || n < 1)
    throw InvalidParameterError("resultant_y: both polynomials need positive degree in y");

  // The resultant in x has degree at most nx(p) * n + nx(q) * m; sample the
  // Sylvester determinant on a power-of-two root-of-unity grid and recover
  // coefficients with an inverse DFT.
  const int deg_bound = p.nx * n + q.nx * m;
  int samples = 32;
  while (samples <= deg_bound) samples *= 2;

  std::vector<cplx> values(samples);
  const double two_pi = 6.283185307179586476925286766559;
  CMat syl = CMat::Zero(m + n, m + n);
  for (int s = 0; s < samples; ++s) {
    const cplx xs = std::polar(1.0, two_pi * s / samples);
    const Poly1 ps = p.eval_at_x(xs);
    const Poly1 qs = q.eval_at_x(xs);
    syl.setZero();
    // Rows 0..n-1: coefficients of p descending from y^m, shifted.
    for (int r = 0; r < n; ++r)
      for (int k = 0; k <= m; ++k) syl(r, r + k) = ps[m - k];
    for (int r = 0; r < m; ++r)
      for (int k = 0; k <= n; ++k) syl(n + r, r + k) = qs[n - k];
    values[s] = Eigen::PartialPivLU<CMat>(syl).determinant();
  }

  Poly1 out(samples, cplx(0.0));
  for (int k = 0; k < samples; ++k) {
    cplx acc = 0.0;
    for (int s = 0; s < samples; ++s)
      acc += values[s] * std::polar(1.0, -two_pi * k * s / samples);
    out[k] = acc / static_cast<double>(samples);
  }
  if (deg_bound + 1 < samples) out.resize(deg_bound + 1);
  return trimmed(out);
}

}  // namespace pptes::detail
