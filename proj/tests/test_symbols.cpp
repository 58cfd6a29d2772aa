#include "doctest.h"

#include "abk/symbols.hpp"
#include "testutil.hpp"

using namespace abk;

namespace {

SuperPoly u(int i = 0) { return SuperPoly::even_sym(sym_u(i)); }
SuperPoly v(int i = 0) { return SuperPoly::even_sym(sym_v(i)); }
SuperPoly al(int i = 0) { return SuperPoly::odd_sym(sym_alpha(i)); }
SuperPoly be(int i = 0) { return SuperPoly::odd_sym(sym_beta(i)); }

// Simultaneous swap p <-> q (u <-> v, alpha <-> beta) through the spare
// r-momentum slots.
SuperPoly swap_pq(SuperPoly f, int n) {
  for (int i = 0; i < n; ++i) {
    f = subst_even(f, sym_u(i), SuperPoly::even_sym(sym_t(i)));
    f = subst_even(f, sym_v(i), SuperPoly::even_sym(sym_u(i)));
    f = subst_even(f, sym_t(i), SuperPoly::even_sym(sym_v(i)));
    f = subst_odd(f, sym_alpha(i), SuperPoly::odd_sym(sym_gamma(i)));
    f = subst_odd(f, sym_beta(i), SuperPoly::odd_sym(sym_alpha(i)));
    f = subst_odd(f, sym_gamma(i), SuperPoly::odd_sym(sym_beta(i)));
  }
  return f;
}

// The displayed closed forms of the two composite expressions.
SuperPoly display_m23_of_m24(int n) {
  SuperPoly one = SuperPoly::one();
  SuperPoly half = SuperPoly(rat(1, 2));
  SuperPoly xa = xi_pair(0, n), xb = xi_pair(1, n), xg = xi_pair(2, n);
  SuperPoly zp = zp_poly(Momentum::p(), n), zq = zp_poly(Momentum::q(), n);
  SuperPoly app = angle_bracket(Momentum::p(), Momentum::p(), n);
  SuperPoly aqq = angle_bracket(Momentum::q(), Momentum::q(), n);
  SuperPoly inner = (app * (one - half * zq) + aqq * (one - half * zp)) *
                        (one - xa - xb) +
                    half * (app * xb) + half * (aqq * xa);
  return rat(-1, 2) * (inner * (one - xg));
}

SuperPoly display_m24_of_m23(int n) {
  SuperPoly one = SuperPoly::one();
  SuperPoly half = SuperPoly(rat(1, 2));
  SuperPoly xa = xi_pair(0, n), xb = xi_pair(1, n);
  SuperPoly zp = zp_poly(Momentum::p(), n), zq = zp_poly(Momentum::q(), n);
  SuperPoly zr = zp_poly(Momentum::r(), n);
  SuperPoly arr = angle_bracket(Momentum::r(), Momentum::r(), n);
  SuperPoly ua = mom_pair(0, 0, n), va = mom_pair(1, 0, n);
  SuperPoly ub = mom_pair(0, 1, n), vb = mom_pair(1, 1, n);
  return (xa * (xb - one) * (ua + va) + xb * (xa - one) * (ub + vb)) *
             (one - half * zr) +
         half * ((one - half * xa - half * xb -
                  half * ((one - xa) * (one - xb) * (zp + zq))) *
                 arr);
}

SuperPoly display_p4(int n) {
  SuperPoly ua = mom_pair(0, 0, n), va = mom_pair(1, 0, n);
  SuperPoly ub = mom_pair(0, 1, n), vb = mom_pair(1, 1, n);
  SuperPoly xa = xi_pair(0, n), xb = xi_pair(1, n);
  return -ua - vb + ua * xb + vb * xa - ub * xb - va * xa +
         ub * (xa * xb) + va * (xa * xb);
}

}  // namespace

TEST_CASE("exponential symbols") {
  // zero momentum gives the constant 1
  CHECK(exp_symbol(Momentum::zero(), 2) ==
        ExpPolynomial(SuperPoly::one()));
  // at n = 1 the body is 1 + xi alpha attached to the e^{x u} exponent
  ExpPolynomial ep = exp_symbol(Momentum::p(), 1);
  ExpPolynomial want = ExpPolynomial::exponential(
      {1, 0, 0}, SuperPoly::one() + SuperPoly::xi(0) * al());
  CHECK(ep == want);
  // exact inverses: e^{zp} e^{-zp} = 1
  CHECK(ep * exp_symbol(-Momentum::p(), 1) ==
        ExpPolynomial(SuperPoly::one()));
  for (int n = 1; n <= 2; ++n) {
    Momentum pq = Momentum::p() + Momentum::q();
    ExpPolynomial prod =
        exp_symbol(Momentum::p(), n) * exp_symbol(Momentum::q(), n);
    // the product carries the summed exponent and differs from e^{z(p+q)}
    // only through odd-momentum cross terms
    ExpPolynomial diff = prod - exp_symbol(pq, n);
    for (const auto& [k, b] : diff.terms()) {
      CHECK(k == ExpPolynomial::Key{1, 1, 0});
      for (const auto& [m, c] : b.terms())
        CHECK(momentum_degree(m, n) >= 2);
    }
  }
  // mismatched exponentials cannot be read off as a plain polynomial
  CHECK_THROWS_AS(exp_symbol(Momentum::p(), 1).constant_body(),
                  ContextError);
}

TEST_CASE("derivatives of exponential symbols") {
  ExpPolynomial ep = exp_symbol(Momentum::p(), 1);
  // d/dx e^{zp} = u e^{zp}
  CHECK(ep.partial_x(0) == u() * ep);
  // left xi-derivative picks out the alpha part
  CHECK(ep.partial_xi_left(0) ==
        ExpPolynomial::exponential({1, 0, 0}, al()));
  // Taylor expansions commute with the bracket through x-degree 6
  for (int n = 1; n <= 2; ++n) {
    ExpPolynomial f = exp_symbol(Momentum::p(), n);
    ExpPolynomial g =
        SuperPoly::x(0) * exp_symbol(Momentum::q() + Momentum::r(), n);
    SuperPoly lhs = x_degree_truncate(
        antibracket(taylor(f, 9, n), taylor(g, 9, n), n), 6, n);
    SuperPoly rhs =
        x_degree_truncate(taylor(antibracket(f, g, n), 8, n), 6, n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("angle bracket") {
  // bracket with a constant vanishes
  CHECK(angle_bracket(Momentum::p(), Momentum::zero(), 2).is_zero());
  // frozen n = 1 value: <p,q> = v alpha + u beta
  CHECK(angle_bracket(Momentum::p(), Momentum::q(), 1) ==
        v() * al() + u() * be());
  // diagonal value <p,p> = 2 u alpha
  CHECK(angle_bracket(Momentum::p(), Momentum::p(), 1) ==
        rat(2) * (u() * al()));
  for (int n = 1; n <= 2; ++n) {
    // symmetric under p <-> q
    SuperPoly apq = angle_bracket(Momentum::p(), Momentum::q(), n);
    CHECK(angle_bracket(Momentum::q(), Momentum::p(), n) ==
          swap_pq(apq, n));
    // superantisymmetry of the underlying bracket on parity parts
    ExpPolynomial ep = exp_symbol(Momentum::p(), n);
    ExpPolynomial eq = exp_symbol(Momentum::q(), n);
    for (int pf = 0; pf <= 1; ++pf)
      for (int pg = 0; pg <= 1; ++pg) {
        ExpPolynomial f = ep.parity_part(pf), g = eq.parity_part(pg);
        ExpPolynomial rhs = antibracket(g, f, n);
        if (((pf + 1) & 1) * ((pg + 1) & 1) % 2 == 0) rhs = -rhs;
        CHECK(antibracket(f, g, n) == rhs);
      }
  }
}

TEST_CASE("composite expressions match their displayed closed forms") {
  // Both displays hold verbatim at n = 1 and n = 2.  In particular the
  // literal (u alpha + v alpha) / (u beta + v beta) grouping in the second
  // display is correct: the cross-paired variant (u alpha + v beta) agrees
  // only at n = 1, where the difference happens to cancel, and fails at
  // n = 2.
  for (int n = 1; n <= 2; ++n) {
    CHECK(composite_m23_of_m24(Momentum::p(), Momentum::q(), Momentum::r(),
                               n) == display_m23_of_m24(n));
    CHECK(composite_m24_of_m23(Momentum::p(), Momentum::q(), Momentum::r(),
                               n) == display_m24_of_m23(n));
  }
  // frozen n = 1 witness terms of the first composite
  SuperPoly c1 =
      composite_m23_of_m24(Momentum::p(), Momentum::q(), Momentum::r(), 1);
  SuperPoly rest = c1 + u() * al() + v() * be();
  for (const auto& [m, c] : rest.terms())
    CHECK((momentum_degree(m, 1) >= 3 ||
           (m.odd & (1u << sym_beta(0))) || (m.odd & (1u << sym_gamma(0)))));
}

TEST_CASE("the quartic polynomial") {
  for (int n = 1; n <= 2; ++n) {
    SuperPoly P4 = p4(n);
    // term-for-term equality with the displayed eight-term expression
    CHECK(P4 == display_p4(n));
    // invariance under p <-> q
    CHECK(P4 == swap_pq(P4, n));
    // every term is at least quadratic in the momenta, so P4 vanishes when
    // the momenta are set to zero
    for (const auto& [m, c] : P4.terms())
      CHECK(momentum_degree(m, n) >= 2);
  }
}

TEST_CASE("the r = 0 reduction") {
  // trivial ansatz
  CHECK(reduce_at_r_zero(SuperPoly(), rat(0), 1).is_zero());
  // the second-order slice of the residual for a sample ansatz equals the
  // displayed reduced equation (with the residual's overall sign):
  //   -{ m00 <p,q>_2 + [m^A p_A, zq] + [m^A q_A, zp] - c(u alpha + v beta) }
  SuperPoly m00 = SuperPoly::x(0, 2);
  SuperPoly F = m00 + SuperPoly::x(0) * u() + SuperPoly::xi(0) * al();
  SuperPoly res = reduce_at_r_zero(F, rat(3), 1);
  SuperPoly slice = momentum_degree_part(res, 2, 1);
  SuperPoly fp1 = SuperPoly::x(0) * u() + SuperPoly::xi(0) * al();
  SuperPoly fq1 = SuperPoly::x(0) * v() + SuperPoly::xi(0) * be();
  SuperPoly apq2 =
      momentum_degree_part(angle_bracket(Momentum::p(), Momentum::q(), 1), 2,
                           1);
  SuperPoly displayed = m00 * apq2 +
                        antibracket(fp1, zp_poly(Momentum::q(), 1), 1) +
                        antibracket(fq1, zp_poly(Momentum::p(), 1), 1) -
                        rat(3) * (mom_pair(0, 0, 1) + mom_pair(1, 1, 1));
  CHECK(slice == -displayed);
  // frozen explicit value of the slice
  SuperPoly x2 = SuperPoly::x(0, 2);
  SuperPoly want = rat(-2) * (v() * al()) + rat(3) * (u() * al()) -
                   x2 * (v() * al()) + rat(3) * (v() * be()) -
                   rat(2) * (u() * be()) - x2 * (u() * be());
  CHECK(slice == want);
}

TEST_CASE("the slice forces the deformation constant to vanish") {
  for (int d = 2; d <= 5; ++d) {
    Prop2Conclusion c = prop2_forces_c_zero(d);
    CHECK(c.c_forced_zero);
    CHECK(c.solution_dim > 0);  // the homogeneous system is not rigid
    CHECK(c.ansatz_dim == 6 * (d + 1));
  }
  CHECK(prop2_forces_c_zero(4).solution_dim == 15);
}

TEST_CASE("exact echelon forms") {
  Echelon e(3);
  CHECK(e.add_row({rat(1), rat(2), rat(3)}));
  CHECK(!e.add_row({rat(2), rat(4), rat(6)}));
  CHECK(e.add_row({rat(0), rat(1), rat(1)}));
  CHECK(e.rank() == 2);
  CHECK(e.in_span({rat(1), rat(3), rat(4)}));
  CHECK(!e.in_span({rat(0), rat(0), rat(1)}));
  auto ns = e.nullspace();
  REQUIRE(ns.size() == 1);
  // the kernel vector annihilates both rows
  CHECK(ns[0][0] * rat(1) + ns[0][1] * rat(2) + ns[0][2] * rat(3) == 0);
  CHECK(ns[0][1] * rat(1) + ns[0][2] * rat(1) == 0);
}
