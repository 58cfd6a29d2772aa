#pragma once

#include <vector>

#include "abk/superpoly.hpp"

namespace abk {

// Truncated formal power series in hbar with coefficients in T.  The
// truncation order is carried by the value; binary operations truncate to the
// smaller order.
template <class T>
class Series {
 public:
  Series() : order_(0), c_(1) {}
  explicit Series(int order) : order_(order), c_(order + 1) {}
  Series(int order, std::vector<T> c) : order_(order), c_(std::move(c)) {
    c_.resize(static_cast<size_t>(order) + 1);
  }

  static Series constant(int order, T v) {
    Series s(order);
    s.c_[0] = std::move(v);
    return s;
  }

  int order() const { return order_; }
  const T& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  T& operator[](int k) { return c_[static_cast<size_t>(k)]; }

  bool is_zero() const {
    for (const T& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  Series truncated(int order) const {
    Series s(order);
    for (int k = 0; k <= std::min(order, order_); ++k) s.c_[k] = c_[k];
    return s;
  }

  // Multiplication by hbar^k.
  Series shifted(int k) const {
    Series s(order_);
    for (int j = k; j <= order_; ++j) s.c_[j] = c_[j - k];
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series s(std::min(a.order_, b.order_));
    for (int k = 0; k <= s.order_; ++k) s.c_[k] = a.c_[k] + b.c_[k];
    return s;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series s(std::min(a.order_, b.order_));
    for (int k = 0; k <= s.order_; ++k) s.c_[k] = a.c_[k] - b.c_[k];
    return s;
  }
  Series operator-() const {
    Series s(order_);
    for (int k = 0; k <= order_; ++k) s.c_[k] = -c_[k];
    return s;
  }
  friend Series operator*(const Series& a, const Series& b) {
    Series s(std::min(a.order_, b.order_));
    for (int i = 0; i <= s.order_; ++i)
      for (int j = 0; i + j <= s.order_ && j <= b.order_; ++j)
        s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
    return s;
  }
  friend Series operator*(const Rational& r, const Series& a) {
    Series s(a.order_);
    for (int k = 0; k <= a.order_; ++k) s.c_[k] = r * a.c_[k];
    return s;
  }

  friend bool operator==(const Series& a, const Series& b) {
    if (a.order_ != b.order_) return false;
    for (int k = 0; k <= a.order_; ++k)
      if (!(a.c_[k] == b.c_[k])) return false;
    return true;
  }

 private:
  int order_;
  std::vector<T> c_;
};

// Rational scalars need is_zero for the template above.
class RatScalar {
 public:
  RatScalar(Rational v = Rational(0)) : v_(std::move(v)) {}
  const Rational& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  friend RatScalar operator+(const RatScalar& a, const RatScalar& b) {
    return RatScalar(a.v_ + b.v_);
  }
  friend RatScalar operator-(const RatScalar& a, const RatScalar& b) {
    return RatScalar(a.v_ - b.v_);
  }
  RatScalar operator-() const { return RatScalar(-v_); }
  friend RatScalar operator*(const RatScalar& a, const RatScalar& b) {
    return RatScalar(a.v_ * b.v_);
  }
  friend RatScalar operator*(const Rational& r, const RatScalar& a) {
    return RatScalar(r * a.v_);
  }
  friend bool operator==(const RatScalar&, const RatScalar&) = default;

 private:
  Rational v_;
};

using RatSeries = Series<RatScalar>;

inline RatSeries rat_series(int order, std::vector<Rational> c) {
  std::vector<RatScalar> v(c.size());
  for (size_t i = 0; i < c.size(); ++i) v[i] = RatScalar(std::move(c[i]));
  return RatSeries(order, std::move(v));
}

// Multiplicative inverse of a series with unit constant term.
inline RatSeries series_inverse(const RatSeries& a) {
  if (!(a[0].value() == 1))
    throw RepresentationError("series inverse requires unit constant term");
  RatSeries inv(a.order());
  inv[0] = RatScalar(Rational(1));
  for (int k = 1; k <= a.order(); ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += a[j].value() * inv[k - j].value();
    inv[k] = RatScalar(-acc);
  }
  return inv;
}

// Element of K[[hbar]] + theta * K[[hbar]] with theta^2 = 0.
struct DeformationScalar {
  RatSeries even;
  RatSeries odd;

  explicit DeformationScalar(int order)
      : even(order), odd(order) {}
  DeformationScalar(RatSeries e, RatSeries o)
      : even(std::move(e)), odd(std::move(o)) {}

  bool is_zero() const { return even.is_zero() && odd.is_zero(); }

  friend DeformationScalar operator+(const DeformationScalar& a,
                                     const DeformationScalar& b) {
    return {a.even + b.even, a.odd + b.odd};
  }
  friend DeformationScalar operator-(const DeformationScalar& a,
                                     const DeformationScalar& b) {
    return {a.even - b.even, a.odd - b.odd};
  }
  // theta^2 = 0: the odd part of the product has no odd*odd contribution.
  friend DeformationScalar operator*(const DeformationScalar& a,
                                     const DeformationScalar& b) {
    return {a.even * b.even, a.even * b.odd + a.odd * b.even};
  }
  friend bool operator==(const DeformationScalar&,
                         const DeformationScalar&) = default;
};

using PolySeries = Series<SuperPoly>;

inline PolySeries poly_series_constant(int order, SuperPoly p) {
  return PolySeries::constant(order, std::move(p));
}

// Scales a polynomial series by a rational series, order by order.
inline PolySeries scale_series(const RatSeries& s, const PolySeries& p) {
  PolySeries r(std::min(s.order(), p.order()));
  for (int i = 0; i <= r.order(); ++i)
    for (int j = 0; i + j <= r.order() && j <= p.order(); ++j)
      r[i + j] = r[i + j] + s[i].value() * p[j];
  return r;
}

}  // namespace abk
