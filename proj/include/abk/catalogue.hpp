#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "abk/cohomology.hpp"

namespace abk {

// ---------------------------------------------------------------------------
// Local 2-cocycles, valid for every n.

// m3(f,g) = (-1)^{grassmann(f)} {(1-N_xi)f} (1-N_xi)g.
template <class F>
F m23(const F& f, const F& g, int n) {
  F g1 = g - n_xi(g, n);
  return signed_by_grassmann(
      f, [&](const F& fp) { return (fp - n_xi(fp, n)) * g1; });
}

// m4(f,g) = (-1)^{grassmann(f)} {Delta f} E_z g + {E_z f} Delta g.
template <class F>
F m24(const F& f, const F& g, int n) {
  F r = signed_by_grassmann(
      f, [&](const F& fp) { return delta_op(fp, n) * script_e(g, n); });
  return r + script_e(f, n) * delta_op(g, n);
}

// ---------------------------------------------------------------------------
// Nonlocal 2-cocycles on R^{1|1}.  Signs follow the appendix displays; the
// main-text displays are provided separately as *_main_text.

namespace detail {
// f split into Grassmann-homogeneous parts, op applied with (-1)^{eps(f)}
// where eps is the Lie parity (Grassmann parity + 1).
template <class Op>
SplineFun signed_by_eps(const SplineFun& f, Op op) {
  SplineFun r;
  for (int part = 0; part <= 1; ++part) {
    SplineFun fp = f.parity_part(part);
    if (fp.is_zero()) continue;
    SplineFun v = op(fp);
    r = (part & 1) ? r + v : r - v;  // eps = grassmann + 1
  }
  return r;
}

inline SplineFun d3(const SplineFun& f) {
  if (!f.is_zero() && f.smoothness() < 3)
    throw SmoothnessError("third derivative requires smoothness >= 3");
  return f.partial_even(0).partial_even(0).partial_even(0);
}
}  // namespace detail

// m1(z|f,g) = int du (-1)^{eps(f)} [d^3_y f(u)] d_eta g(u); constant in z.
inline SplineFun m21(const SplineFun& f, const SplineFun& g) {
  SplineFun integrand = detail::signed_by_eps(f, [&](const SplineFun& fp) {
    return detail::d3(fp) * g.partial_odd_left(0);
  });
  return SplineFun::constant(integrand.integrate_full());
}

// m2(z|f,g) = int du theta(x-y) (-1)^{eps(f)} { [d^3_y f] d_eta g
//   + (-1)^{grassmann(g)} [d_eta f] d^3_y g }
//   - x { [d_x^2 d_xi f] d_x d_xi g - [d_x d_xi f] d_x^2 d_xi g }.
inline SplineFun m22(const SplineFun& f, const SplineFun& g) {
  SplineFun integrand = detail::signed_by_eps(f, [&](const SplineFun& fp) {
    SplineFun t = detail::d3(fp) * g.partial_odd_left(0);
    SplineFun fe = fp.partial_odd_left(0);
    for (int pg = 0; pg <= 1; ++pg) {
      SplineFun gp = g.parity_part(pg);
      if (gp.is_zero()) continue;
      SplineFun u = fe * detail::d3(gp);
      t = (pg & 1) ? t - u : t + u;
    }
    return t;
  });
  PiecewisePolynomial nonlocal = integrand.c1().cumulative();

  PiecewisePolynomial f1 = f.partial_odd_left(0).c0();
  PiecewisePolynomial g1 = g.partial_odd_left(0).c0();
  PiecewisePolynomial x(UniPoly::x());
  PiecewisePolynomial local =
      x * (f1.derivative().derivative() * g1.derivative() -
           f1.derivative() * g1.derivative().derivative());
  return SplineFun::even_part_of(nonlocal - local);
}

// m5(z|f,g) = int du (-1)^{eps(f)} [d_y f(u)] d_y g(u); constant in z.
inline SplineFun m25(const SplineFun& f, const SplineFun& g) {
  SplineFun integrand = detail::signed_by_eps(f, [&](const SplineFun& fp) {
    return fp.partial_even(0) * g.partial_even(0);
  });
  return SplineFun::constant(integrand.integrate_full());
}

// m6(z|f,g): same integrand as m5 under the theta(x-y) kernel.
inline SplineFun m26(const SplineFun& f, const SplineFun& g) {
  SplineFun integrand = detail::signed_by_eps(f, [&](const SplineFun& fp) {
    return fp.partial_even(0) * g.partial_even(0);
  });
  return SplineFun::even_part_of(integrand.c1().cumulative());
}

// Main-text displays of m1 and m2 (different factor order and sign
// arrangement).  Kept as aliases; the tests record how they relate to the
// canonical forms above.
inline SplineFun m21_main_text(const SplineFun& f, const SplineFun& g) {
  SplineFun integrand = g.partial_odd_left(0) * detail::d3(f);
  return SplineFun::constant(integrand.integrate_full());
}

inline SplineFun m22_main_text(const SplineFun& f, const SplineFun& g) {
  SplineFun integrand = g.partial_odd_left(0) * detail::d3(f) -
                        f.partial_odd_left(0) * detail::d3(g);
  PiecewisePolynomial nonlocal = integrand.c1().cumulative();
  PiecewisePolynomial f1 = f.partial_odd_left(0).c0();
  PiecewisePolynomial g1 = g.partial_odd_left(0).c0();
  PiecewisePolynomial x(UniPoly::x());
  PiecewisePolynomial local =
      x * (f1.derivative().derivative() * g1.derivative() -
           f1.derivative() * g1.derivative().derivative());
  return SplineFun::even_part_of(nonlocal + local);
}

// ---------------------------------------------------------------------------
// Named catalogue.

struct CatalogueEntry {
  std::string name;
  int eps;      // epsilon-parity of the cochain
  bool all_n;   // false: defined on R^{1|1} only
  std::function<SuperPoly(const SuperPoly&, const SuperPoly&, int)> poly;
  std::function<SplineFun(const SplineFun&, const SplineFun&)> spline;

  Cochain<SplineFun> spline_cochain() const {
    return cochain_bilinear<SplineFun>(
        name, eps,
        [s = spline](const SplineFun& f, const SplineFun& g) {
          return s(f, g);
        });
  }
  Cochain<SuperPoly> poly_cochain(int n) const {
    return cochain_bilinear<SuperPoly>(
        name, eps,
        [p = poly, n](const SuperPoly& f, const SuperPoly& g) {
          return p(f, g, n);
        });
  }
};

inline const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = {
      {"m2_1", 1, false, nullptr,
       [](const SplineFun& f, const SplineFun& g) { return m21(f, g); }},
      {"m2_2", 1, false, nullptr,
       [](const SplineFun& f, const SplineFun& g) { return m22(f, g); }},
      {"m2_3", 1, true,
       [](const SuperPoly& f, const SuperPoly& g, int n) {
         return m23(f, g, n);
       },
       [](const SplineFun& f, const SplineFun& g) { return m23(f, g, 1); }},
      {"m2_4", 0, true,
       [](const SuperPoly& f, const SuperPoly& g, int n) {
         return m24(f, g, n);
       },
       [](const SplineFun& f, const SplineFun& g) { return m24(f, g, 1); }},
      {"m2_5", 0, false, nullptr,
       [](const SplineFun& f, const SplineFun& g) { return m25(f, g); }},
      {"m2_6", 0, false, nullptr,
       [](const SplineFun& f, const SplineFun& g) { return m26(f, g); }},
  };
  return entries;
}

inline const CatalogueEntry* catalogue_find(const std::string& name) {
  for (const CatalogueEntry& e : catalogue())
    if (e.name == name) return &e;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Component decomposition at n = 1.  With f = f0 + xi f1, a bilinear form
// splits as
//   M(z|f,g) = M1(x|f0,g0) + M2(x|f0,g1) - M2(x|g0,f1) + M3(x|f1,g1)
//     + xi [ M4(x|f0,g0) + M5(x|f0,g1) - M5(x|g0,f1) + M6(x|f1,g1) ],
// with M1, M4 symmetric and M3, M6 antisymmetric.

using ScalarForm1 =
    std::function<PiecewisePolynomial(const PiecewisePolynomial&)>;
using ScalarForm2 = std::function<PiecewisePolynomial(
    const PiecewisePolynomial&, const PiecewisePolynomial&)>;

struct ComponentDecomposition {
  std::array<ScalarForm2, 6> comp;  // components 1..6 at indices 0..5

  const ScalarForm2& operator[](int i) const { return comp[i - 1]; }
};

inline ComponentDecomposition decompose_n1(const Cochain<SplineFun>& M) {
  auto ev = M.eval;
  auto probe = [ev](bool f_odd, bool g_odd, bool xi_comp) {
    return [ev, f_odd, g_odd, xi_comp](const PiecewisePolynomial& a,
                                       const PiecewisePolynomial& b) {
      SplineFun f = f_odd ? SplineFun::odd_part_of(a)
                          : SplineFun::even_part_of(a);
      SplineFun g = g_odd ? SplineFun::odd_part_of(b)
                          : SplineFun::even_part_of(b);
      SplineFun v = ev({f, g});
      return xi_comp ? v.c1() : v.c0();
    };
  };
  ComponentDecomposition D;
  D.comp[0] = probe(false, false, false);
  D.comp[1] = probe(false, true, false);
  D.comp[2] = probe(true, true, false);
  D.comp[3] = probe(false, false, true);
  D.comp[4] = probe(false, true, true);
  D.comp[5] = probe(true, true, true);
  return D;
}

// Auxiliary scalar brackets: [phi,psi]_0 = phi' psi, [phi,psi]_1 = phi' psi -
// phi psi'.
inline PiecewisePolynomial scalar_bracket0(const PiecewisePolynomial& a,
                                           const PiecewisePolynomial& b) {
  return a.derivative() * b;
}
inline PiecewisePolynomial scalar_bracket1(const PiecewisePolynomial& a,
                                           const PiecewisePolynomial& b) {
  return a.derivative() * b - a * b.derivative();
}

// Components of the coboundary of M1(z|f) = T1(f0) + T2(f1)
// + xi [T3(f0) + T4(f1)], written out explicitly.
inline ComponentDecomposition coboundary_components(ScalarForm1 T1,
                                                    ScalarForm1 T2,
                                                    ScalarForm1 T3,
                                                    ScalarForm1 T4) {
  ComponentDecomposition D;
  D.comp[0] = [T3](const PiecewisePolynomial& a,
                   const PiecewisePolynomial& b) {
    return -(T3(a) * b.derivative()) - T3(b) * a.derivative();
  };
  D.comp[1] = [T1, T4](const PiecewisePolynomial& a,
                       const PiecewisePolynomial& b) {
    return T1(a).derivative() * b + T4(b) * a.derivative() -
           T1(scalar_bracket0(a, b));
  };
  D.comp[2] = [T2](const PiecewisePolynomial& a,
                   const PiecewisePolynomial& b) {
    return T2(a).derivative() * b - T2(b).derivative() * a -
           T2(scalar_bracket1(a, b));
  };
  D.comp[3] = [](const PiecewisePolynomial&, const PiecewisePolynomial&) {
    return PiecewisePolynomial();
  };
  D.comp[4] = [T3](const PiecewisePolynomial& a,
                   const PiecewisePolynomial& b) {
    return T3(a).derivative() * b - T3(a) * b.derivative() -
           T3(scalar_bracket0(a, b));
  };
  D.comp[5] = [T4](const PiecewisePolynomial& a,
                   const PiecewisePolynomial& b) {
    return T4(a).derivative() * b - T4(b).derivative() * a +
           T4(b) * a.derivative() - T4(a) * b.derivative() -
           T4(scalar_bracket1(a, b));
  };
  return D;
}

// M1 rebuilt from its components, split by epsilon-parity: the (T1, T4)
// sector is an even 1-cochain, the (T2, T3) sector an odd one.
inline Cochain<SplineFun> m1_even_sector(ScalarForm1 T1, ScalarForm1 T4) {
  return cochain_unary<SplineFun>(
      "m1-even", 0, [T1, T4](const SplineFun& f) {
        return SplineFun(T1(f.c0()), T4(f.c1()));
      });
}
inline Cochain<SplineFun> m1_odd_sector(ScalarForm1 T2, ScalarForm1 T3) {
  return cochain_unary<SplineFun>(
      "m1-odd", 1, [T2, T3](const SplineFun& f) {
        return SplineFun(T2(f.c1()), T3(f.c0()));
      });
}

}  // namespace abk
