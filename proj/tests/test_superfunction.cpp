#include "doctest.h"

#include "abk/sampling.hpp"
#include "testutil.hpp"

using namespace abk;

TEST_CASE("bump splines have the advertised smoothness class") {
  PiecewisePolynomial b = bump(rat(0), rat(1), 4);
  CHECK(b.smoothness() == 4);
  CHECK(b.compactly_supported());
  CHECK(bump(rat(-2), rat(3), 2).smoothness() == 2);
}

TEST_CASE("exact integration of a bump") {
  // int_0^1 x^5 (1-x)^5 dx = 1/2772
  CHECK(bump(rat(0), rat(1), 4).integrate() == rat(1, 2772));
  CHECK(PiecewisePolynomial().integrate() == 0);
}

TEST_CASE("cumulative integral") {
  PiecewisePolynomial b = bump(rat(0), rat(1), 4);
  Rational mass = b.integrate();
  PiecewisePolynomial c = b.cumulative();
  CHECK(c.eval(rat(-1)) == 0);
  CHECK(c.eval(rat(5)) == mass);
  // cumulative of the derivative recovers the function
  CHECK(b.derivative().cumulative() == b);
  CHECK(PiecewisePolynomial().cumulative() == PiecewisePolynomial());
}

TEST_CASE("smoothness and divergence errors") {
  // discontinuous step
  PiecewisePolynomial step({rat(0)}, {UniPoly(), UniPoly(Rational(1))});
  CHECK(step.smoothness() == -1);
  CHECK_THROWS_AS(step.derivative(), SmoothnessError);
  CHECK_THROWS_AS(step.integrate(), DivergenceError);
  PiecewisePolynomial global(UniPoly::x());
  CHECK_THROWS_AS(global.integrate(), DivergenceError);
  CHECK_THROWS_AS(global.cumulative(), DivergenceError);
}

TEST_CASE("canonicalization makes equality structural") {
  // same polynomial on both sides of a redundant breakpoint
  UniPoly p({rat(1), rat(2)});
  PiecewisePolynomial redundant({rat(0)}, {p, p});
  CHECK(redundant == PiecewisePolynomial(p));
  CHECK(redundant.breakpoints().empty());
}

TEST_CASE("superfunction product and parity") {
  PiecewisePolynomial b = bump(rat(0), rat(1), 4);
  SplineFun f(b, b);  // f0 + xi f1, mixed parity
  CHECK(!f.grassmann_parity().has_value());
  SplineFun e = SplineFun::even_part_of(b), o = SplineFun::odd_part_of(b);
  CHECK(e.grassmann_parity() == 0);
  CHECK(o.grassmann_parity() == 1);
  CHECK((o * o).is_zero());
  // unit
  CHECK(f * SplineFun::constant(1) == f);
}

TEST_CASE("full integral over the superspace") {
  PiecewisePolynomial b = bump(rat(0), rat(1), 4);
  // the Berezin part selects the xi coefficient
  CHECK(SplineFun::odd_part_of(b).integrate_full() == b.integrate());
  CHECK(SplineFun::even_part_of(b).integrate_full() == 0);
  // odd integrand about 0 integrates to zero
  PiecewisePolynomial sym = bump(rat(-1), rat(1), 4);
  PiecewisePolynomial x(UniPoly::x());
  CHECK(SplineFun::odd_part_of(x * sym).integrate_full() == 0);
}

TEST_CASE("support of a superfunction") {
  PiecewisePolynomial a = bump(rat(0), rat(1), 4);
  PiecewisePolynomial c = bump(rat(2), rat(3), 4);
  SplineFun f(a, c);
  SupportSet s = f.support();
  REQUIRE(s.size() == 2);
  CHECK(s[0].lo == 0);
  CHECK(s[0].hi == 1);
  CHECK(s[1].lo == 2);
  CHECK(s[1].hi == 3);
  CHECK(SplineFun().support().empty());
}

TEST_CASE("Leibniz rule for splines") {
  Sampler s(testutil::quick_plan(5));
  for (int it = 0; it < 15; ++it) {
    SplineFun f = s.random_spline(static_cast<int>(s.rng()() % 2));
    SplineFun g = s.random_spline(static_cast<int>(s.rng()() % 2));
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(((f * g).partial_even(0)) ==
          f.partial_even(0) * g + f * g.partial_even(0));
    // odd Leibniz: d_xi(fg) = (d_xi f) g + (-1)^{par f} f (d_xi g)
    int pf = *f.grassmann_parity();
    SplineFun odd_part = f * g.partial_odd_left(0);
    if (pf & 1) odd_part = -odd_part;
    CHECK((f * g).partial_odd_left(0) ==
          f.partial_odd_left(0) * g + odd_part);
  }
}

TEST_CASE("Leibniz rule for polynomials") {
  Sampler s(testutil::quick_plan(6));
  for (int it = 0; it < 15; ++it) {
    SuperPoly f = s.random_poly(2, static_cast<int>(s.rng()() % 2));
    SuperPoly g = s.random_poly(2, static_cast<int>(s.rng()() % 2));
    if (f.is_zero() || g.is_zero()) continue;
    CHECK((f * g).partial_even(sym_x(0)) ==
          f.partial_even(sym_x(0)) * g + f * g.partial_even(sym_x(0)));
    int pf = *f.grassmann_parity();
    for (int i = 0; i < 2; ++i) {
      SuperPoly t = f * g.partial_odd_left(sym_xi(i));
      if (pf & 1) t = -t;
      CHECK((f * g).partial_odd_left(sym_xi(i)) ==
            f.partial_odd_left(sym_xi(i)) * g + t);
    }
  }
}

TEST_CASE("integration by parts") {
  Sampler s(testutil::quick_plan(9));
  for (int it = 0; it < 10; ++it) {
    SplineFun f = s.random_spline(static_cast<int>(s.rng()() % 2));
    SplineFun g = s.random_spline(static_cast<int>(s.rng()() % 2));
    CHECK((f.partial_even(0) * g).integrate_full() ==
          -(f * g.partial_even(0)).integrate_full());
  }
}
