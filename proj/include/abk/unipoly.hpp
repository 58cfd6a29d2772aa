#pragma once

#include <algorithm>
#include <vector>

#include "abk/rational.hpp"

namespace abk {

// Univariate polynomial with exact rational coefficients, c[k] * x^k.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Rational c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
      d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(d));
  }

  // Antiderivative with zero constant term.
  UniPoly antiderivative() const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> a(coeffs_.size() + 1);
    a[0] = 0;
    for (size_t k = 0; k < coeffs_.size(); ++k)
      a[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
    return UniPoly(std::move(a));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                            Rational(0));
    for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                            Rational(0));
    for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
    return UniPoly(std::move(c));
  }
  UniPoly operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] = -coeffs_[k];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const Rational& s, const UniPoly& a) {
    if (s == 0) return {};
    std::vector<Rational> c(a.coeffs_.size());
    for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] = s * a.coeffs_[k];
    return UniPoly(std::move(c));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

}  // namespace abk
