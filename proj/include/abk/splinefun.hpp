#pragma once

#include <optional>

#include "abk/piecewise.hpp"

namespace abk {

// Grassmann-valued function on R^{1|1} with piecewise-polynomial
// coefficients: f(z) = f0(x) + xi * f1(x).
class SplineFun {
 public:
  SplineFun() = default;
  SplineFun(PiecewisePolynomial f0, PiecewisePolynomial f1)
      : c0_(std::move(f0)), c1_(std::move(f1)) {}

  static SplineFun even_part_of(PiecewisePolynomial f0) {
    return SplineFun(std::move(f0), PiecewisePolynomial());
  }
  static SplineFun odd_part_of(PiecewisePolynomial f1) {
    return SplineFun(PiecewisePolynomial(), std::move(f1));
  }
  static SplineFun constant(Rational c) {
    return even_part_of(PiecewisePolynomial::constant(std::move(c)));
  }

  const PiecewisePolynomial& c0() const { return c0_; }
  const PiecewisePolynomial& c1() const { return c1_; }

  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

  std::optional<int> grassmann_parity() const {
    bool e = !c0_.is_zero(), o = !c1_.is_zero();
    if (e && o) return std::nullopt;
    if (!e && !o) return std::nullopt;
    return o ? 1 : 0;
  }

  SplineFun parity_part(int eps) const {
    return eps == 0 ? SplineFun(c0_, {}) : SplineFun({}, c1_);
  }

  SplineFun partial_even(int) const {
    return SplineFun(c0_.derivative(), c1_.derivative());
  }
  // d/dxi from the left: (f0 + xi f1) -> f1.
  SplineFun partial_odd_left(int) const { return SplineFun(c1_, {}); }
  // Right derivative coincides with the left one for a single generator.
  SplineFun partial_odd_right(int) const { return SplineFun(c1_, {}); }

  friend SplineFun operator+(const SplineFun& a, const SplineFun& b) {
    return SplineFun(a.c0_ + b.c0_, a.c1_ + b.c1_);
  }
  friend SplineFun operator-(const SplineFun& a, const SplineFun& b) {
    return SplineFun(a.c0_ - b.c0_, a.c1_ - b.c1_);
  }
  SplineFun operator-() const { return SplineFun(-c0_, -c1_); }
  friend SplineFun operator*(const Rational& s, const SplineFun& a) {
    return SplineFun(s * a.c0_, s * a.c1_);
  }
  // (a0 + xi a1)(b0 + xi b1) = a0 b0 + xi (a1 b0 + a0 b1); xi^2 = 0.
  friend SplineFun operator*(const SplineFun& a, const SplineFun& b) {
    return SplineFun(a.c0_ * b.c0_, a.c1_ * b.c0_ + a.c0_ * b.c1_);
  }

  friend bool operator==(const SplineFun& a, const SplineFun& b) {
    return a.c0_ == b.c0_ && a.c1_ == b.c1_;
  }

  // Integral over R^{1|1}: the Berezin part selects the xi coefficient.
  Rational integrate_full() const { return c1_.integrate(); }

  SupportSet support() const {
    SupportSet s = c0_.support();
    for (const Interval& iv : c1_.support()) {
      // merge, keeping intervals sorted and disjoint where they already are
      s.push_back(iv);
    }
    return merge_support(std::move(s));
  }

  int smoothness() const {
    return std::min(c0_.is_zero() ? PiecewisePolynomial::kSmoothInf
                                  : c0_.smoothness(),
                    c1_.is_zero() ? PiecewisePolynomial::kSmoothInf
                                  : c1_.smoothness());
  }

 private:
  static SupportSet merge_support(SupportSet s) {
    std::sort(s.begin(), s.end(), [](const Interval& a, const Interval& b) {
      if (a.neg_inf != b.neg_inf) return a.neg_inf;
      return a.lo < b.lo;
    });
    SupportSet out;
    for (Interval& iv : s) {
      if (!out.empty()) {
        Interval& last = out.back();
        bool overlaps = last.pos_inf || iv.neg_inf ||
                        !(last.hi < iv.lo);
        if (overlaps) {
          last.pos_inf = last.pos_inf || iv.pos_inf;
          if (!last.pos_inf && last.hi < iv.hi) last.hi = iv.hi;
          continue;
        }
      }
      out.push_back(iv);
    }
    return out;
  }

  PiecewisePolynomial c0_, c1_;
};

}  // namespace abk
