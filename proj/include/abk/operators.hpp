#pragma once

#include "abk/series.hpp"
#include "abk/splinefun.hpp"
#include "abk/superpoly.hpp"

namespace abk {

// Delta = sum_i d/dx^i d/dxi^i (left odd derivative).
inline SuperPoly delta_op(const SuperPoly& f, int n) {
  SuperPoly r;
  for (int i = 0; i < n; ++i)
    r = r + f.partial_odd_left(sym_xi(i)).partial_even(sym_x(i));
  return r;
}
inline SplineFun delta_op(const SplineFun& f, int /*n*/ = 1) {
  return f.partial_odd_left(0).partial_even(0);
}

// Euler operator N_z = z^A d/dz^A; eigenvalue = total z-degree.
inline SuperPoly euler_z(const SuperPoly& f, int n) {
  SuperPoly r;
  for (int i = 0; i < n; ++i) {
    r = r + SuperPoly::x(i) * f.partial_even(sym_x(i));
    r = r + SuperPoly::xi(i) * f.partial_odd_left(sym_xi(i));
  }
  return r;
}
inline SplineFun euler_z(const SplineFun& f, int /*n*/ = 1) {
  PiecewisePolynomial x(UniPoly::x());
  SplineFun xdx(x * f.c0().derivative(), x * f.c1().derivative());
  // xi d/dxi reproduces the xi component
  return xdx + SplineFun({}, f.c1());
}

// N_xi = sum_i xi^i d/dxi^i.
inline SuperPoly n_xi(const SuperPoly& f, int n) {
  SuperPoly r;
  for (int i = 0; i < n; ++i)
    r = r + SuperPoly::xi(i) * f.partial_odd_left(sym_xi(i));
  return r;
}
inline SplineFun n_xi(const SplineFun& f, int /*n*/ = 1) {
  return SplineFun({}, f.c1());
}

// Companion operator of the even cocycle: E_z = 1 - N_z / 2.
template <class F>
F script_e(const F& f, int n) {
  return f - Rational(1, 2) * euler_z(f, n);
}

// hbar c / (1 + hbar c N_z / 2) applied after Delta, acting diagonally on
// N_z-eigenmonomials.  Requires polynomial input; c is an even hbar-series.
inline PolySeries diagonal_series_op(const RatSeries& c, const SuperPoly& f,
                                     int n, int order) {
  RatSeries hc = (RatSeries::constant(order, RatScalar(Rational(1))) * c)
                     .shifted(1);  // hbar * c
  SuperPoly g = delta_op(f, n);
  PolySeries out(order);
  for (int d = 0; d <= g.max_z_degree(n); ++d) {
    SuperPoly gd = g.z_degree_part(n, d);
    if (gd.is_zero()) continue;
    // hc / (1 + hc d/2)
    RatSeries denom = RatSeries::constant(order, RatScalar(Rational(1))) +
                      Rational(d, 2) * hc;
    RatSeries s = hc * series_inverse(denom);
    for (int k = 0; k <= order; ++k)
      out[k] = out[k] + s[k].value() * gd;
  }
  return out;
}

// The diagonal series operator needs N_z eigen-decompositions, which only
// polynomial inputs provide.
inline PolySeries diagonal_series_op(const RatSeries&, const SplineFun&, int,
                                     int) {
  throw RepresentationError(
      "diagonal series operator is defined on polynomial inputs only");
}

}  // namespace abk
