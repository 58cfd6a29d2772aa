#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "abk/catalogue.hpp"

namespace abk {

// Knobs for randomized identity checks.  Parity patterns are generated
// exhaustively for the needed arity; trials counts random inputs per pattern.
struct SamplingPlan {
  uint64_t seed = 1;
  int trials = 20;
  int max_x_degree = 4;
  int terms_per_function = 3;
  int smoothness = 4;  // C^k class of random bump splines
};

// C^k bump supported on [a,b]: (x-a)^{k+1} (b-x)^{k+1}.
inline PiecewisePolynomial bump(const Rational& a, const Rational& b,
                                int k = 4) {
  if (!(a < b)) throw std::invalid_argument("bump needs a < b");
  UniPoly xa = UniPoly::x() - UniPoly(a);
  UniPoly bx = UniPoly(b) - UniPoly::x();
  UniPoly p(Rational(1));
  for (int i = 0; i <= k; ++i) p = p * xa;
  for (int i = 0; i <= k; ++i) p = p * bx;
  return PiecewisePolynomial({a, b}, {UniPoly(), p, UniPoly()});
}

class Sampler {
 public:
  explicit Sampler(const SamplingPlan& plan) : plan_(plan), rng_(plan.seed) {}

  std::mt19937_64& rng() { return rng_; }

  Rational small_rational() {
    long num = static_cast<long>(rng_() % 9) - 4;
    long den = 1 + static_cast<long>(rng_() % 3);
    return rat(num, den);
  }

  // Random Grassmann-homogeneous polynomial in the coordinates of R^{n|n}.
  SuperPoly random_poly(int n, int grassmann_parity) {
    SuperPoly p;
    for (int t = 0; t < plan_.terms_per_function; ++t) {
      Mono m;
      for (int i = 0; i < n; ++i)
        m.even[sym_x(i)] =
            static_cast<uint8_t>(rng_() % (plan_.max_x_degree + 1));
      int want = grassmann_parity & 1;
      uint16_t mask = 0;
      int avail = n;
      // choose a random xi subset of the right parity
      for (int i = 0; i < avail; ++i)
        if (rng_() % 2) mask |= static_cast<uint16_t>(1u << sym_xi(i));
      if ((std::popcount(static_cast<unsigned>(mask)) & 1) != want) {
        // flip one generator to fix parity
        uint16_t bit = static_cast<uint16_t>(
            1u << sym_xi(static_cast<int>(rng_() % avail)));
        mask ^= bit;
      }
      m.odd = mask;
      p = p + SuperPoly::monomial(m, small_rational());
    }
    return p.parity_part(grassmann_parity & 1);
  }

  // Random compactly supported C^k spline: small combination of bumps with
  // rational knots.
  PiecewisePolynomial random_scalar_spline() {
    PiecewisePolynomial p;
    int nb = 1 + static_cast<int>(rng_() % 2);
    for (int t = 0; t < nb; ++t) {
      long a = static_cast<long>(rng_() % 7) - 3;
      long w = 1 + static_cast<long>(rng_() % 3);
      Rational c = small_rational();
      if (c == 0) c = 1;
      p = p + c * bump(rat(a), rat(a + w), plan_.smoothness);
    }
    return p;
  }

  SplineFun random_spline(int grassmann_parity) {
    PiecewisePolynomial p = random_scalar_spline();
    return (grassmann_parity & 1) ? SplineFun::odd_part_of(p)
                                  : SplineFun::even_part_of(p);
  }

 private:
  SamplingPlan plan_;
  std::mt19937_64 rng_;
};

struct Verdict {
  bool pass = true;
  std::string witness;  // description of the violating inputs, if any
};

namespace detail {
inline void all_patterns(int arity, std::vector<std::vector<int>>& out) {
  out.clear();
  for (int mask = 0; mask < (1 << arity); ++mask) {
    std::vector<int> pat(arity);
    for (int i = 0; i < arity; ++i) pat[i] = (mask >> i) & 1;
    out.push_back(std::move(pat));
  }
}

template <class F, class Gen>
Verdict check_cocycle(const Cochain<F>& M, int n, const SamplingPlan& plan,
                      Gen gen) {
  Sampler s(plan);
  std::vector<std::vector<int>> patterns;
  all_patterns(M.arity + 1, patterns);
  for (const auto& pat : patterns) {
    for (int t = 0; t < plan.trials; ++t) {
      std::vector<F> args;
      for (int par : pat) args.push_back(gen(s, par));
      F d = differential_apply(M, args, n);
      if (!d.is_zero()) {
        Verdict v;
        v.pass = false;
        std::string p;
        for (int b : pat) p += b ? "1" : "0";
        v.witness = "cochain " + M.name + ": nonzero differential at parity pattern " + p +
                    ", trial " + std::to_string(t) + ", seed " +
                    std::to_string(plan.seed);
        return v;
      }
    }
  }
  return {};
}
}  // namespace detail

inline Verdict is_cocycle(const Cochain<SuperPoly>& M, int n,
                          const SamplingPlan& plan) {
  return detail::check_cocycle(M, n, plan, [n](Sampler& s, int par) {
    return s.random_poly(n, par);
  });
}

inline Verdict is_cocycle(const Cochain<SplineFun>& M,
                          const SamplingPlan& plan) {
  return detail::check_cocycle(M, 1, plan, [](Sampler& s, int par) {
    return s.random_spline(par);
  });
}

}  // namespace abk
