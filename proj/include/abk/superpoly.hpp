#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "abk/rational.hpp"

namespace abk {

// Fixed symbol tables for the supercommutative polynomial ring.  Supports up
// to kMaxN even/odd coordinate pairs plus the deformation parameter theta and
// one triple of momenta (u_i, alpha_i), (v_i, beta_i), (t_i, gamma_i).
inline constexpr int kMaxN = 3;
inline constexpr int kEvenSymbols = 12;
inline constexpr int kOddSymbols = 13;

constexpr int sym_x(int i) { return i; }
constexpr int sym_u(int i) { return kMaxN + i; }
constexpr int sym_v(int i) { return 2 * kMaxN + i; }
constexpr int sym_t(int i) { return 3 * kMaxN + i; }

constexpr int sym_xi(int i) { return i; }
inline constexpr int kSymTheta = kMaxN;
constexpr int sym_alpha(int i) { return kMaxN + 1 + i; }
constexpr int sym_beta(int i) { return 2 * kMaxN + 1 + i; }
constexpr int sym_gamma(int i) { return 3 * kMaxN + 1 + i; }

// Monomial: even exponents plus a bitmask of odd generators in canonical
// (ascending id) order.
struct Mono {
  std::array<uint8_t, kEvenSymbols> even{};
  uint16_t odd = 0;

  friend bool operator==(const Mono&, const Mono&) = default;
  friend bool operator<(const Mono& a, const Mono& b) {
    if (a.odd != b.odd) return a.odd < b.odd;
    return a.even < b.even;
  }

  int grassmann_parity() const { return std::popcount(odd) & 1; }
  int z_degree(int n) const {
    int d = std::popcount(static_cast<unsigned>(odd & ((1u << n) - 1)));
    for (int i = 0; i < n; ++i) d += even[sym_x(i)];
    return d;
  }
};

// Element of the supercommutative polynomial algebra.  Values are immutable
// in spirit: all operations return new elements.
class SuperPoly {
 public:
  SuperPoly() = default;
  explicit SuperPoly(Rational c) {
    if (c != 0) terms_.emplace(Mono{}, std::move(c));
  }

  static SuperPoly one() { return SuperPoly(Rational(1)); }
  static SuperPoly even_sym(int id, int power = 1) {
    Mono m;
    m.even[id] = static_cast<uint8_t>(power);
    SuperPoly p;
    if (power == 0) return one();
    p.terms_.emplace(m, Rational(1));
    return p;
  }
  static SuperPoly odd_sym(int id) {
    Mono m;
    m.odd = static_cast<uint16_t>(1u << id);
    SuperPoly p;
    p.terms_.emplace(m, Rational(1));
    return p;
  }
  static SuperPoly x(int i, int power = 1) { return even_sym(sym_x(i), power); }
  static SuperPoly xi(int i) { return odd_sym(sym_xi(i)); }
  static SuperPoly theta() { return odd_sym(kSymTheta); }

  static SuperPoly monomial(Mono m, Rational c) {
    SuperPoly p;
    if (c != 0) p.terms_.emplace(m, std::move(c));
    return p;
  }

  const std::map<Mono, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Grassmann parity (number of odd generators mod 2); nullopt when mixed.
  std::optional<int> grassmann_parity() const {
    if (terms_.empty()) return std::nullopt;
    int p = terms_.begin()->first.grassmann_parity();
    for (const auto& [m, c] : terms_)
      if (m.grassmann_parity() != p) return std::nullopt;
    return p;
  }

  friend SuperPoly operator+(const SuperPoly& a, const SuperPoly& b) {
    SuperPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend SuperPoly operator-(const SuperPoly& a, const SuperPoly& b) {
    SuperPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  SuperPoly operator-() const {
    SuperPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend SuperPoly operator*(const Rational& s, const SuperPoly& a) {
    SuperPoly r;
    if (s == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
    return r;
  }

  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
    SuperPoly r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (ma.odd & mb.odd) continue;  // repeated odd generator
        Mono m;
        for (int k = 0; k < kEvenSymbols; ++k)
          m.even[k] = static_cast<uint8_t>(ma.even[k] + mb.even[k]);
        m.odd = ma.odd | mb.odd;
        Rational c = ca * cb;
        if (merge_sign(ma.odd, mb.odd) < 0) c = -c;
        r.add_term(m, c);
      }
    }
    return r;
  }

  friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
    return a.terms_ == b.terms_;
  }

  SuperPoly partial_even(int id) const {
    SuperPoly r;
    for (const auto& [m, c] : terms_) {
      if (m.even[id] == 0) continue;
      Mono d = m;
      d.even[id] -= 1;
      r.add_term(d, c * Rational(static_cast<long>(m.even[id])));
    }
    return r;
  }

  // Left derivative with respect to an odd generator: the generator is moved
  // to the front of the canonical monomial and stripped there.
  SuperPoly partial_odd_left(int id) const {
    SuperPoly r;
    const uint16_t bit = static_cast<uint16_t>(1u << id);
    for (const auto& [m, c] : terms_) {
      if (!(m.odd & bit)) continue;
      Mono d = m;
      d.odd = static_cast<uint16_t>(m.odd & ~bit);
      int below = std::popcount(static_cast<unsigned>(m.odd & (bit - 1)));
      r.add_term(d, (below & 1) ? -c : c);
    }
    return r;
  }

  // Right derivative: the generator is stripped from the back instead.
  SuperPoly partial_odd_right(int id) const {
    SuperPoly r;
    const uint16_t bit = static_cast<uint16_t>(1u << id);
    for (const auto& [m, c] : terms_) {
      if (!(m.odd & bit)) continue;
      Mono d = m;
      d.odd = static_cast<uint16_t>(m.odd & ~bit);
      int above = std::popcount(static_cast<unsigned>(m.odd & ~(bit | (bit - 1))));
      r.add_term(d, (above & 1) ? -c : c);
    }
    return r;
  }

  // Both sign conventions for the odd derivative, selectable at the call
  // site.  kCanonical is the one locked in by the Jacobi identity and the
  // left/right relation tests; kMirrored negates the stripped-generator sign.
  enum class OddSignConvention { kCanonical, kMirrored };
  SuperPoly partial_odd(int id, bool from_right,
                        OddSignConvention conv) const {
    SuperPoly r = from_right ? partial_odd_right(id) : partial_odd_left(id);
    return conv == OddSignConvention::kCanonical ? r : -r;
  }

  // Berezin integral over the listed odd generators, read as an iterated
  // integral with the rightmost differential acting first; each single
  // integral is the right derivative, which yields the normalization
  // "integral of the top monomial equals one" for ascending generator lists.
  SuperPoly berezin(const std::vector<int>& gens) const {
    SuperPoly r = *this;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it)
      r = r.partial_odd_right(*it);
    return r;
  }

  // Projection onto the terms of the given Grassmann parity.
  SuperPoly parity_part(int eps) const {
    SuperPoly r;
    for (const auto& [m, c] : terms_)
      if (m.grassmann_parity() == eps) r.terms_.emplace(m, c);
    return r;
  }

  // Projection onto terms of total z-degree d (x powers plus xi count).
  SuperPoly z_degree_part(int n, int d) const {
    SuperPoly r;
    for (const auto& [m, c] : terms_)
      if (m.z_degree(n) == d) r.terms_.emplace(m, c);
    return r;
  }
  int max_z_degree(int n) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.z_degree(n));
    return d;
  }

  // Drops every term containing one of the listed symbols.
  SuperPoly without_symbols(const std::vector<int>& even_ids,
                            const std::vector<int>& odd_ids) const {
    SuperPoly r;
    for (const auto& [m, c] : terms_) {
      bool keep = true;
      for (int id : even_ids)
        if (m.even[id] != 0) keep = false;
      for (int id : odd_ids)
        if (m.odd & (1u << id)) keep = false;
      if (keep) r.terms_.emplace(m, c);
    }
    return r;
  }

  std::string str() const;

 private:
  void add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Sign of concatenating two canonical odd monomials (masks disjoint):
  // parity of the number of inversions between the two sorted lists.
  static int merge_sign(uint16_t a, uint16_t b) {
    int inv = 0;
    while (b) {
      uint16_t low = static_cast<uint16_t>(b & (~b + 1));
      inv += std::popcount(static_cast<unsigned>(a & ~(low | (low - 1))));
      b = static_cast<uint16_t>(b & ~low);
    }
    return (inv & 1) ? -1 : 1;
  }

  std::map<Mono, Rational> terms_;
};

inline const char* const kEvenNames[kEvenSymbols] = {
    "x1", "x2", "x3", "u1", "u2", "u3", "v1", "v2", "v3", "t1", "t2", "t3"};
inline const char* const kOddNames[kOddSymbols] = {
    "xi1", "xi2", "xi3", "theta", "a1", "a2", "a3",
    "b1",  "b2",  "b3",  "c1",    "c2", "c3"};

inline std::string SuperPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (int k = 0; k < kEvenSymbols; ++k)
      if (m.even[k]) {
        os << "*" << kEvenNames[k];
        if (m.even[k] > 1) os << "^" << int(m.even[k]);
      }
    for (int k = 0; k < kOddSymbols; ++k)
      if (m.odd & (1u << k)) os << "*" << kOddNames[k];
  }
  return os.str();
}

}  // namespace abk
