#pragma once

#include <functional>
#include <string>

#include "abk/operators.hpp"

namespace abk {

// epsilon-parity (the Lie grading, inverse Grassmann parity) of an element;
// zero counts as even, genuinely mixed elements are rejected.
template <class F>
int eps_of(const F& f) {
  if (f.is_zero()) return 0;
  auto p = f.grassmann_parity();
  if (!p) throw ParityError("argument has no definite parity");
  return (*p + 1) & 1;
}

template <class F>
int grass_of(const F& f) {
  if (f.is_zero()) return 0;
  auto p = f.grassmann_parity();
  if (!p) throw ParityError("argument has no definite parity");
  return *p;
}

// The antibracket, Schouten form: sum_i (f d/dx^i from the right) d/dxi^i g
// minus (f d/dxi^i from the right) d/dx^i g.
inline SuperPoly antibracket(const SuperPoly& f, const SuperPoly& g, int n) {
  SuperPoly r;
  for (int i = 0; i < n; ++i) {
    r = r + f.partial_even(sym_x(i)) * g.partial_odd_left(sym_xi(i));
    r = r - f.partial_odd_right(sym_xi(i)) * g.partial_even(sym_x(i));
  }
  return r;
}
inline SplineFun antibracket(const SplineFun& f, const SplineFun& g,
                             int /*n*/ = 1) {
  SplineFun r = f.partial_even(0) * g.partial_odd_left(0);
  return r - f.partial_odd_right(0) * g.partial_even(0);
}

// Same bracket rewritten through the constant metric omega^{AB}
// (omega^{x_i xi_i} = 1, omega^{xi_i x_i} = -1):
//   [f,g] = (-1)^{eps_A eps(f)} d_A (f omega^{AB} d_B g) - 2 f Delta g.
template <class F>
F antibracket_divergence_form(const F& f, const F& g, int n) {
  F r;
  for (int part = 0; part <= 1; ++part) {
    F fp = f.parity_part(part);
    if (fp.is_zero()) continue;
    int eps_f = (part + 1) & 1;
    for (int i = 0; i < n; ++i) {
      // A = x^i: Grassmann-even coordinate, no sign; omega^{x xi} = 1
      r = r + (fp * g.partial_odd_left(i)).partial_even(i);
      // A = xi^i: Grassmann-odd coordinate, sign (-1)^{eps(f)};
      // omega^{xi x} = -1 gives the overall subtraction
      F t = (fp * g.partial_even(i)).partial_odd_left(i);
      if (eps_f & 1) t = -t;
      r = r - t;
    }
  }
  return r - Rational(2) * (f * delta_op(g, n));
}

// Splits f into Grassmann-homogeneous parts and applies op with the sign
// (-1)^{eps(f_part)}; implements the (-1)^{eps(f)} prefactors bilinearly.
template <class F, class Op>
F signed_by_grassmann(const F& f, Op op) {
  F r;
  for (int part = 0; part <= 1; ++part) {
    F fp = f.parity_part(part);
    if (fp.is_zero()) continue;
    F v = op(fp);
    r = (part & 1) ? r - v : r + v;
  }
  return r;
}

// Theorem-form even deformation:
//   [f,g] + (-1)^{eps(f)} {hc/(1+hc N_z/2) Delta f} E_z g
//         + {E_z f} hc/(1+hc N_z/2) Delta g.
inline PolySeries even_deformed(const SuperPoly& f, const SuperPoly& g,
                                const RatSeries& c, int n, int order) {
  PolySeries out = poly_series_constant(order, antibracket(f, g, n));
  SuperPoly eg = script_e(g, n);
  for (int part = 0; part <= 1; ++part) {
    SuperPoly fp = f.parity_part(part);
    if (fp.is_zero()) continue;
    PolySeries gf = diagonal_series_op(c, fp, n, order);
    for (int k = 0; k <= order; ++k) {
      SuperPoly v = gf[k] * eg;
      out[k] = (part & 1) ? out[k] - v : out[k] + v;
    }
  }
  SuperPoly ef = script_e(f, n);
  PolySeries gg = diagonal_series_op(c, g, n, order);
  PolySeries t(order);
  for (int k = 0; k <= order; ++k) t[k] = ef * gg[k];
  return out + t;
}

// Theorem-form odd deformation: [f,g] + theta ((-1)^{eps(f)} {Delta f} E_z g
// + {E_z f} Delta g); theta is carried inside the algebra so all signs are
// automatic downstream.
inline SuperPoly odd_deformed(const SuperPoly& f, const SuperPoly& g, int n) {
  SuperPoly corr = signed_by_grassmann(f, [&](const SuperPoly& fp) {
    return delta_op(fp, n) * script_e(g, n);
  });
  corr = corr + script_e(f, n) * delta_op(g, n);
  return antibracket(f, g, n) + SuperPoly::theta() * corr;
}

// A bilinear bracket evaluator with values in truncated hbar-series (theta
// components, when present, live inside the SuperPoly coefficients).
struct Bracket {
  std::string kind;
  int order;
  int n;
  std::function<PolySeries(const SuperPoly&, const SuperPoly&)> eval;
};

inline Bracket classical_bracket(int n, int order) {
  return {"classical", order, n,
          [n, order](const SuperPoly& f, const SuperPoly& g) {
            return poly_series_constant(order, antibracket(f, g, n));
          }};
}

inline Bracket even_deformed_bracket(const RatSeries& c, int n, int order) {
  return {"even-deformed", order, n,
          [c, n, order](const SuperPoly& f, const SuperPoly& g) {
            return even_deformed(f, g, c, n, order);
          }};
}

inline Bracket odd_deformed_bracket(int n, int order) {
  return {"odd-deformed", order, n,
          [n, order](const SuperPoly& f, const SuperPoly& g) {
            return poly_series_constant(order, odd_deformed(f, g, n));
          }};
}

// Applies a series-valued bilinear map to series arguments, order by order.
inline PolySeries lift_bilinear(const Bracket& B, const PolySeries& F,
                                const PolySeries& G) {
  PolySeries out(std::min(F.order(), G.order()));
  for (int k = 0; k <= out.order(); ++k)
    for (int l = 0; k + l <= out.order(); ++l) {
      if (F[k].is_zero() || G[l].is_zero()) continue;
      PolySeries v = B.eval(F[k], G[l]);
      for (int m = 0; k + l + m <= out.order(); ++m)
        out[k + l + m] = out[k + l + m] + v[m];
    }
  return out;
}

// (-1)^{eps(f)eps(h)} B(B(f,g),h) + cycle(f,g,h); vanishes identically for a
// genuine bracket.
inline PolySeries jacobiator(const Bracket& B, const SuperPoly& f,
                             const SuperPoly& g, const SuperPoly& h) {
  const SuperPoly* a[3] = {&f, &g, &h};
  int eps[3] = {eps_of(f), eps_of(g), eps_of(h)};
  PolySeries out(B.order);
  for (int c = 0; c < 3; ++c) {
    const SuperPoly& p = *a[c];
    const SuperPoly& q = *a[(c + 1) % 3];
    const SuperPoly& r = *a[(c + 2) % 3];
    PolySeries inner = B.eval(p, q);
    PolySeries term =
        lift_bilinear(B, inner, poly_series_constant(B.order, r));
    if (eps[c] * eps[(c + 2) % 3] % 2)
      out = out - term;
    else
      out = out + term;
  }
  return out;
}

// Classical Jacobiator for any value type (polynomials or splines).
template <class F>
F jacobiator_classical(const F& f, const F& g, const F& h, int n) {
  const F* a[3] = {&f, &g, &h};
  int eps[3] = {eps_of(f), eps_of(g), eps_of(h)};
  F out;
  for (int c = 0; c < 3; ++c) {
    F term = antibracket(antibracket(*a[c], *a[(c + 1) % 3], n),
                         *a[(c + 2) % 3], n);
    if (eps[c] * eps[(c + 2) % 3] % 2)
      out = out - term;
    else
      out = out + term;
  }
  return out;
}

// T = id + correction; correction vanishes at hbar = theta = 0.
struct SimilarityOperator {
  int order;
  std::function<PolySeries(const SuperPoly&)> apply;
};

inline SimilarityOperator similarity_identity(int order) {
  return {order, [order](const SuperPoly& f) {
            return poly_series_constant(order, f);
          }};
}

inline PolySeries apply_to_series(const SimilarityOperator& T,
                                  const PolySeries& F) {
  PolySeries out(std::min(T.order, F.order()));
  for (int k = 0; k <= out.order(); ++k) {
    if (F[k].is_zero()) continue;
    PolySeries v = T.apply(F[k]);
    for (int m = 0; k + m <= out.order(); ++m)
      out[k + m] = out[k + m] + v[m];
  }
  return out;
}

// Inverse as a truncated geometric series: the correction raises the
// combined (hbar, theta) filtration, so the fixed-point iteration
// terminates within 2(order+1) steps.
inline SimilarityOperator similarity_inverse(const SimilarityOperator& T) {
  int order = T.order;
  auto apply = [T, order](const SuperPoly& g) {
    PolySeries acc = poly_series_constant(order, g);
    for (int it = 0; it < 2 * (order + 1); ++it) {
      PolySeries correction = apply_to_series(T, acc) - acc;
      acc = poly_series_constant(order, g) - correction;
    }
    return acc;
  };
  return {order, apply};
}

// C_T(f,g) = T^{-1} B(Tf, Tg).
inline Bracket similarity_transform(const Bracket& B,
                                    const SimilarityOperator& T) {
  SimilarityOperator Tinv = similarity_inverse(T);
  return {"similarity(" + B.kind + ")", B.order, B.n,
          [B, T, Tinv](const SuperPoly& f, const SuperPoly& g) {
            PolySeries v = lift_bilinear(B, T.apply(f), T.apply(g));
            return apply_to_series(Tinv, v);
          }};
}

}  // namespace abk
