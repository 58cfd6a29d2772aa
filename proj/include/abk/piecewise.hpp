#pragma once

#include <climits>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <vector>

#include "abk/unipoly.hpp"

namespace abk {

// One closed interval of the real line; unbounded ends are flagged.
struct Interval {
  bool neg_inf = false;
  bool pos_inf = false;
  Rational lo{0};
  Rational hi{0};
  friend bool operator==(const Interval&, const Interval&) = default;
};
using SupportSet = std::vector<Interval>;

// Piecewise polynomial on the real line: strictly increasing rational
// breakpoints b_0 < ... < b_{m-1} and m+1 polynomial pieces, including the
// two unbounded tails.  Canonical form merges pieces that agree.
class PiecewisePolynomial {
 public:
  static constexpr int kSmoothInf = INT_MAX / 2;

  PiecewisePolynomial() : pieces_(1) {}
  explicit PiecewisePolynomial(UniPoly global) : pieces_{std::move(global)} {}
  PiecewisePolynomial(std::vector<Rational> breaks, std::vector<UniPoly> pieces)
      : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
    if (pieces_.size() != breaks_.size() + 1)
      throw std::invalid_argument("piece/breakpoint count mismatch");
    for (size_t i = 1; i < breaks_.size(); ++i)
      if (!(breaks_[i - 1] < breaks_[i]))
        throw std::invalid_argument("breakpoints not strictly increasing");
    canonicalize();
  }

  static PiecewisePolynomial constant(Rational c) {
    return PiecewisePolynomial(UniPoly(std::move(c)));
  }

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<UniPoly>& pieces() const { return pieces_; }

  bool is_zero() const {
    for (const auto& p : pieces_)
      if (!p.is_zero()) return false;
    return true;
  }

  bool left_tail_zero() const { return pieces_.front().is_zero(); }
  bool right_tail_zero() const { return pieces_.back().is_zero(); }
  bool compactly_supported() const {
    return left_tail_zero() && right_tail_zero();
  }

  Rational eval(const Rational& x) const {
    return pieces_[piece_index(x)].eval(x);
  }

  // Largest k with matching value and first k derivatives at every
  // breakpoint; kSmoothInf when globally polynomial, -1 when discontinuous.
  int smoothness() const {
    if (breaks_.empty()) return kSmoothInf;
    int maxdeg = 0;
    for (const auto& p : pieces_) maxdeg = std::max(maxdeg, p.degree());
    int k = kSmoothInf;
    for (size_t i = 0; i < breaks_.size(); ++i) {
      UniPoly l = pieces_[i], r = pieces_[i + 1];
      int match = -1;
      for (int d = 0; d <= maxdeg + 1; ++d) {
        if (l.eval(breaks_[i]) != r.eval(breaks_[i])) break;
        match = d;
        l = l.derivative();
        r = r.derivative();
        if (l.is_zero() && r.is_zero()) {
          match = kSmoothInf;
          break;
        }
      }
      k = std::min(k, match);
    }
    return k;
  }

  PiecewisePolynomial derivative() const {
    if (smoothness() < 0)
      throw SmoothnessError("derivative of a discontinuous spline");
    std::vector<UniPoly> d(pieces_.size());
    for (size_t i = 0; i < pieces_.size(); ++i) d[i] = pieces_[i].derivative();
    return PiecewisePolynomial(breaks_, std::move(d));
  }

  // Exact integral over the whole line; requires compact support.
  Rational integrate() const {
    if (!compactly_supported())
      throw DivergenceError("integral of a non-compact spline");
    Rational acc(0);
    for (size_t i = 1; i + 1 < pieces_.size(); ++i) {
      UniPoly a = pieces_[i].antiderivative();
      acc += a.eval(breaks_[i]) - a.eval(breaks_[i - 1]);
    }
    return acc;
  }

  // x |-> integral over (-inf, x]; requires a vanishing left tail.  The
  // result generally has a constant (nonzero) right tail.
  PiecewisePolynomial cumulative() const {
    if (!left_tail_zero())
      throw DivergenceError("cumulative integral with non-vanishing left tail");
    std::vector<UniPoly> c(pieces_.size());
    Rational carry(0);
    c[0] = {};
    for (size_t i = 1; i < pieces_.size(); ++i) {
      UniPoly a = pieces_[i].antiderivative();
      // shift so the piece continues the running value at breaks_[i-1]
      c[i] = a + UniPoly(carry - a.eval(breaks_[i - 1]));
      if (i < breaks_.size() + 1 && i < pieces_.size() - 1)
        carry = c[i].eval(breaks_[i]);
    }
    return PiecewisePolynomial(breaks_, std::move(c));
  }

  SupportSet support() const {
    SupportSet s;
    if (!pieces_.front().is_zero()) {
      Interval iv;
      iv.neg_inf = true;
      if (breaks_.empty())
        iv.pos_inf = true;
      else
        iv.hi = breaks_.front();
      s.push_back(iv);
    }
    for (size_t i = 1; i + 1 < pieces_.size(); ++i) {
      if (pieces_[i].is_zero()) continue;
      Interval iv;
      iv.lo = breaks_[i - 1];
      iv.hi = breaks_[i];
      if (!s.empty() && !s.back().pos_inf &&
          (s.back().neg_inf || s.back().hi == iv.lo)) {
        s.back().hi = iv.hi;
      } else {
        s.push_back(iv);
      }
    }
    if (!breaks_.empty() && !pieces_.back().is_zero()) {
      if (!s.empty() && !s.back().pos_inf && s.back().hi == breaks_.back()) {
        s.back().pos_inf = true;
      } else {
        Interval iv;
        iv.lo = breaks_.back();
        iv.pos_inf = true;
        s.push_back(iv);
      }
    }
    return s;
  }

  friend PiecewisePolynomial operator+(const PiecewisePolynomial& a,
                                       const PiecewisePolynomial& b) {
    return combine(a, b, [](const UniPoly& x, const UniPoly& y) {
      return x + y;
    });
  }
  friend PiecewisePolynomial operator-(const PiecewisePolynomial& a,
                                       const PiecewisePolynomial& b) {
    return combine(a, b, [](const UniPoly& x, const UniPoly& y) {
      return x - y;
    });
  }
  friend PiecewisePolynomial operator*(const PiecewisePolynomial& a,
                                       const PiecewisePolynomial& b) {
    return combine(a, b, [](const UniPoly& x, const UniPoly& y) {
      return x * y;
    });
  }
  PiecewisePolynomial operator-() const {
    std::vector<UniPoly> p(pieces_.size());
    for (size_t i = 0; i < pieces_.size(); ++i) p[i] = -pieces_[i];
    return PiecewisePolynomial(breaks_, std::move(p));
  }
  friend PiecewisePolynomial operator*(const Rational& s,
                                       const PiecewisePolynomial& a) {
    std::vector<UniPoly> p(a.pieces_.size());
    for (size_t i = 0; i < a.pieces_.size(); ++i) p[i] = s * a.pieces_[i];
    return PiecewisePolynomial(a.breaks_, std::move(p));
  }

  // Equality after canonicalization (both sides are canonical already).
  friend bool operator==(const PiecewisePolynomial& a,
                         const PiecewisePolynomial& b) {
    return a.breaks_ == b.breaks_ && a.pieces_ == b.pieces_;
  }

 private:
  size_t piece_index(const Rational& x) const {
    size_t i = 0;
    while (i < breaks_.size() && !(x < breaks_[i])) ++i;
    return i;
  }

  template <class Op>
  static PiecewisePolynomial combine(const PiecewisePolynomial& a,
                                     const PiecewisePolynomial& b, Op op) {
    std::vector<Rational> breaks;
    std::merge(a.breaks_.begin(), a.breaks_.end(), b.breaks_.begin(),
               b.breaks_.end(), std::back_inserter(breaks));
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<UniPoly> pieces(breaks.size() + 1);
    size_t ia = 0, ib = 0;
    for (size_t i = 0; i <= breaks.size(); ++i) {
      pieces[i] = op(a.pieces_[ia], b.pieces_[ib]);
      if (i < breaks.size()) {
        if (ia < a.breaks_.size() && a.breaks_[ia] == breaks[i]) ++ia;
        if (ib < b.breaks_.size() && b.breaks_[ib] == breaks[i]) ++ib;
      }
    }
    return PiecewisePolynomial(std::move(breaks), std::move(pieces));
  }

  void canonicalize() {
    for (size_t i = 0; i < breaks_.size();) {
      if (pieces_[i] == pieces_[i + 1]) {
        breaks_.erase(breaks_.begin() + static_cast<long>(i));
        pieces_.erase(pieces_.begin() + static_cast<long>(i));
      } else {
        ++i;
      }
    }
  }

  std::vector<Rational> breaks_;
  std::vector<UniPoly> pieces_;
};

}  // namespace abk
