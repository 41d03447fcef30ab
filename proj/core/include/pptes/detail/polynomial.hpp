#pragma once

// Small dense complex polynomials in one and two variables, companion-matrix
// root finding and Sylvester resultants. Internal machinery for the
// product-vector finder; exposed under detail for white-box tests.

#include <vector>

#include "pptes/types.hpp"

namespace pptes::detail {

// Coefficients in ascending degree: p[i] multiplies x^i.
using Poly1 = std::vector<cplx>;

double max_abs_coeff(const Poly1& p);

// Drop leading coefficients below rel_tol times the largest coefficient.
Poly1 trimmed(Poly1 p, double rel_tol = 1e-12);

// Degree after trimming; -1 for the zero polynomial.
int degree(const Poly1& p, double rel_tol = 1e-12);

cplx eval(const Poly1& p, cplx x);
Poly1 derivative(const Poly1& p);
Poly1 mul(const Poly1& p, const Poly1& q);
Poly1 add(const Poly1& p, const Poly1& q);
Poly1 scale(Poly1 p, cplx s);

// All complex roots of a trimmed polynomial via the companion matrix.
std::vector<cplx> roots(const Poly1& p);

// Bivariate polynomial on a dense (nx+1) x (ny+1) coefficient grid,
// c[i * (ny+1) + j] multiplying x^i y^j.
struct Poly2 {
  int nx = 0;
  int ny = 0;
  std::vector<cplx> c;

  Poly2() : c(1, cplx(0.0)) {}
  Poly2(int nx_in, int ny_in) : nx(nx_in), ny(ny_in), c((nx_in + 1) * (ny_in + 1), cplx(0.0)) {}

  static Poly2 linear(cplx c00, cplx cx, cplx cy);

  cplx at(int i, int j) const { return c[i * (ny + 1) + j]; }
  cplx& at(int i, int j) { return c[i * (ny + 1) + j]; }

  cplx eval(cplx x, cplx y) const;
  cplx eval_dx(cplx x, cplx y) const;
  cplx eval_dy(cplx x, cplx y) const;

  // Restriction to fixed x, as a polynomial in y (length ny + 1, untrimmed).
  Poly1 eval_at_x(cplx x) const;
  // Coefficient of y^j, as a polynomial in x (length nx + 1, untrimmed).
  Poly1 coeff_of_y(int j) const;

  double max_abs() const;
  int degree_y(double rel_tol = 1e-12) const;
  void scale_by(cplx s);
};

Poly2 mul(const Poly2& p, const Poly2& q);
Poly2 add(const Poly2& p, const Poly2& q);
Poly2 sub(const Poly2& p, const Poly2& q);

// Resultant of p and q with respect to y: a polynomial in x that vanishes
// exactly at those x for which p(x, .) and q(x, .) share a root (or both lose
// their formal leading coefficient). Computed by evaluating the Sylvester
// determinant on a root-of-unity grid and interpolating. Both inputs need
// positive formal degree in y.
Poly1 resultant_y(const Poly2& p, const Poly2& q);

}  // namespace pptes::detail
