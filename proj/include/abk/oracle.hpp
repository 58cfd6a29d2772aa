#pragma once

#include <string>
#include <vector>

#include "abk/catalogue.hpp"
#include "abk/linalg.hpp"
#include "abk/sampling.hpp"

namespace abk {

// Brute-force local cohomology on R^{1|1}: enumerate bounded local bilinear
// ansatze, impose the cocycle equation exactly on a spanning monomial family,
// and quotient by the coboundaries of bounded local 1-forms.  All linear
// algebra is exact.

// One superantisymmetrized generator of the local ansatz space:
//   coeff(z) [(d/dx)^{dx1} (d/dxi)^{dxi1} f] [(d/dx)^{dx2} (d/dxi)^{dxi2} g]
//   antisymmetrized in (f, g) with the Lie-parity sign, coefficient
//   coeff(z) = x^{coeff_deg} (xi if coeff_xi).
struct AnsatzTerm {
  int coeff_deg = 0;
  bool coeff_xi = false;
  int dx1 = 0, dxi1 = 0, dx2 = 0, dxi2 = 0;
};

// Lie parity of the bilinear map generated by the term.
inline int term_eps(const AnsatzTerm& t) {
  return (static_cast<int>(t.coeff_xi) + t.dxi1 + t.dxi2 + 1) & 1;
}

inline SuperPoly apply_derivs(SuperPoly f, int dx, int dxi) {
  for (int k = 0; k < dx; ++k) f = f.partial_even(sym_x(0));
  for (int k = 0; k < dxi; ++k) f = f.partial_odd_left(sym_xi(0));
  return f;
}

// Evaluation of one (superantisymmetrized) term, extended bilinearly over
// the parity parts of the arguments.
inline SuperPoly eval_ansatz_term(const AnsatzTerm& t, const SuperPoly& f,
                                  const SuperPoly& g) {
  SuperPoly m = SuperPoly::x(0, t.coeff_deg);
  if (t.coeff_xi) m = m * SuperPoly::xi(0);
  SuperPoly out;
  for (int pf = 0; pf <= 1; ++pf)
    for (int pg = 0; pg <= 1; ++pg) {
      SuperPoly fp = f.parity_part(pf);
      SuperPoly gp = g.parity_part(pg);
      if (fp.is_zero() || gp.is_zero()) continue;
      SuperPoly direct =
          m * apply_derivs(fp, t.dx1, t.dxi1) * apply_derivs(gp, t.dx2, t.dxi2);
      SuperPoly swapped =
          m * apply_derivs(gp, t.dx1, t.dxi1) * apply_derivs(fp, t.dx2, t.dxi2);
      int s = ((pf + 1) & 1) * ((pg + 1) & 1);  // eps(f) eps(g)
      SuperPoly v = (s & 1) ? direct + swapped : direct - swapped;
      out = out + rat(1, 2) * v;
    }
  return out;
}

// All generators with derivative order <= Q per argument (at most first
// order in d/dxi, which squares to zero), coefficient degree <= D, in the
// given Lie-parity sector.  Deterministic order.
inline std::vector<AnsatzTerm> enumerate_local_terms(int Q, int D, int eps) {
  std::vector<AnsatzTerm> out;
  for (int d = 0; d <= D; ++d)
    for (int cx = 0; cx <= 1; ++cx)
      for (int a = 0; a <= Q; ++a)
        for (int ja = 0; ja <= 1; ++ja)
          for (int b = 0; b <= Q; ++b)
            for (int jb = 0; jb <= 1; ++jb) {
              AnsatzTerm t{d, cx == 1, a, ja, b, jb};
              if (term_eps(t) == eps) out.push_back(t);
            }
  return out;
}

inline Cochain<SuperPoly> ansatz_cochain(const std::vector<AnsatzTerm>& terms,
                                         const std::vector<Rational>& coeffs,
                                         int eps, const std::string& name) {
  return cochain_bilinear<SuperPoly>(
      name, eps,
      [terms, coeffs](const SuperPoly& f, const SuperPoly& g) {
        SuperPoly out;
        for (size_t k = 0; k < terms.size(); ++k) {
          if (coeffs[k] == 0) continue;
          out = out + coeffs[k] * eval_ansatz_term(terms[k], f, g);
        }
        return out;
      });
}

// Monomial test functions x^a xi^b with a <= max_deg.
inline std::vector<SuperPoly> monomial_family(int max_deg) {
  std::vector<SuperPoly> out;
  for (int a = 0; a <= max_deg; ++a) {
    out.push_back(SuperPoly::x(0, a));
    out.push_back(SuperPoly::x(0, a) * SuperPoly::xi(0));
  }
  return out;
}

struct CocycleSolution {
  int Q = 0, D = 0, eps = 0;
  std::vector<AnsatzTerm> terms;
  // Nullspace basis of the exact constraint system; spans the bounded local
  // cocycles (possibly redundantly, if distinct coefficient vectors realize
  // the same bilinear form).
  std::vector<std::vector<Rational>> coeff_vectors;
  int constraint_rank = 0;

  Cochain<SuperPoly> cochain(size_t k) const {
    return ansatz_cochain(terms, coeff_vectors[k], eps,
                          "oracle-solution-" + std::to_string(k));
  }
};

// Imposes d2 M = 0 exactly on every unordered triple of test monomials of
// degree <= Q + D + 2.  A bounded ansatz whose differential kills this
// family vanishes identically: d2 M (f,g,h) is generated by differential
// operators of x-order <= Q + 1 with coefficients of degree <= D + 1, so
// matching all monomials through that degree plus one margin determines it.
inline CocycleSolution solve_cocycle_system(int Q, int D, int eps,
                                            long max_terms = 2000) {
  CocycleSolution sol;
  sol.Q = Q;
  sol.D = D;
  sol.eps = eps;
  sol.terms = enumerate_local_terms(Q, D, eps);
  const int K = static_cast<int>(sol.terms.size());
  if (K > max_terms)
    throw SizeGuardError("local ansatz basis exceeds the size guard");

  std::vector<SuperPoly> fam = monomial_family(Q + D + 2);
  const int F = static_cast<int>(fam.size());

  // Per basis term, a cochain wrapper used by the differential.
  std::vector<Cochain<SuperPoly>> base;
  base.reserve(static_cast<size_t>(K));
  for (int k = 0; k < K; ++k) {
    AnsatzTerm t = sol.terms[static_cast<size_t>(k)];
    base.push_back(cochain_bilinear<SuperPoly>(
        "e", eps, [t](const SuperPoly& f, const SuperPoly& g) {
          return eval_ansatz_term(t, f, g);
        }));
  }

  Echelon ech(K);
  for (int i = 0; i < F; ++i)
    for (int j = i; j < F; ++j)
      for (int l = j; l < F; ++l) {
        // d2 of each generator on the triple; group rows by output monomial.
        std::map<Mono, std::vector<Rational>> rows;
        for (int k = 0; k < K; ++k) {
          SuperPoly d = differential_apply(base[static_cast<size_t>(k)],
                                           {fam[static_cast<size_t>(i)],
                                            fam[static_cast<size_t>(j)],
                                            fam[static_cast<size_t>(l)]},
                                           1);
          for (const auto& [m, c] : d.terms()) {
            auto [it, fresh] = rows.try_emplace(
                m, std::vector<Rational>(static_cast<size_t>(K), Rational(0)));
            it->second[static_cast<size_t>(k)] = c;
          }
        }
        for (auto& [m, row] : rows) ech.add_row(std::move(row));
        if (ech.rank() == K) goto saturated;
      }
saturated:
  sol.constraint_rank = ech.rank();
  sol.coeff_vectors = ech.nullspace();
  return sol;
}

// ---------------------------------------------------------------------------
// Evaluation vectors: a bilinear form flattened over (monomial pair, output
// monomial) coordinates; used for exact rank computations over a fixed pair
// family so different generating sets can be compared.

class PairEvaluator {
 public:
  explicit PairEvaluator(int max_deg) : fam_(monomial_family(max_deg)) {}

  // Dense coordinates of the form on the pair family; the coordinate
  // dictionary grows on first sight, so vectors are comparable only through
  // the same evaluator (densify pads earlier vectors with zeros).
  std::vector<Rational> vector_of(const Cochain<SuperPoly>& M) {
    std::vector<std::pair<int, Rational>> sparse;
    const int F = static_cast<int>(fam_.size());
    for (int i = 0; i < F; ++i)
      for (int j = i; j < F; ++j) {
        SuperPoly v = M.eval({fam_[static_cast<size_t>(i)],
                              fam_[static_cast<size_t>(j)]});
        for (const auto& [m, c] : v.terms()) {
          auto key = std::pair<int, Mono>(i * F + j, m);
          auto [it, fresh] = index_.try_emplace(
              key, static_cast<int>(index_.size()));
          sparse.emplace_back(it->second, c);
        }
      }
    std::vector<Rational> dense(index_.size(), Rational(0));
    for (auto& [k, c] : sparse) dense[static_cast<size_t>(k)] = c;
    return dense;
  }

  int dimension() const { return static_cast<int>(index_.size()); }

 private:
  std::vector<SuperPoly> fam_;
  std::map<std::pair<int, Mono>, int> index_;
};

inline std::vector<Rational> pad(std::vector<Rational> v, int len) {
  v.resize(static_cast<size_t>(len), Rational(0));
  return v;
}

// Local 1-forms m(z) (d/dx)^a (d/dxi)^j with the given Lie parity.
inline std::vector<Cochain<SuperPoly>> local_one_forms(int Q, int D,
                                                       int eps) {
  std::vector<Cochain<SuperPoly>> out;
  for (int d = 0; d <= D; ++d)
    for (int cx = 0; cx <= 1; ++cx)
      for (int a = 0; a <= Q; ++a)
        for (int j = 0; j <= 1; ++j) {
          if (((cx + j) & 1) != eps) continue;
          SuperPoly m = SuperPoly::x(0, d);
          if (cx) m = m * SuperPoly::xi(0);
          out.push_back(cochain_unary<SuperPoly>(
              "m1", eps, [m, a, j](const SuperPoly& f) {
                return m * apply_derivs(f, a, j);
              }));
        }
  return out;
}

struct QuotientResult {
  int coboundary_rank = 0;
  int cocycle_rank = 0;    // rank of the solution span together with the
                           // coboundaries
  int dimension = 0;       // cocycle_rank - coboundary_rank
  std::vector<size_t> representative_indices;  // solutions that enlarge the
                                               // span modulo coboundaries
};

// Quotient of the solution span by the span of d1 of all local 1-forms
// within (Qp, Dp), computed through evaluation vectors on monomial pairs.
inline QuotientResult quotient_by_coboundaries(const CocycleSolution& sol,
                                               int Qp, int Dp) {
  PairEvaluator ev(Qp + Dp + 2);
  std::vector<std::vector<Rational>> cob_vecs;
  for (const Cochain<SuperPoly>& m1 : local_one_forms(Qp, Dp, sol.eps))
    cob_vecs.push_back(ev.vector_of(differential_cochain(m1, 1)));
  std::vector<std::vector<Rational>> sol_vecs;
  for (size_t k = 0; k < sol.coeff_vectors.size(); ++k)
    sol_vecs.push_back(ev.vector_of(sol.cochain(k)));

  const int dim = ev.dimension();
  Echelon ech(dim);
  for (auto& v : cob_vecs) ech.add_row(pad(std::move(v), dim));
  QuotientResult out;
  out.coboundary_rank = ech.rank();
  for (size_t k = 0; k < sol_vecs.size(); ++k)
    if (ech.add_row(pad(std::move(sol_vecs[k]), dim)))
      out.representative_indices.push_back(k);
  out.cocycle_rank = ech.rank();
  out.dimension = out.cocycle_rank - out.coboundary_rank;
  return out;
}

// Membership of a named cochain in span(coboundaries + solutions), and its
// independence from the coboundaries alone.
struct MembershipVerdict {
  bool in_solution_span = false;   // lies in coboundaries + solutions
  bool nontrivial = false;         // not a coboundary by itself
};

inline MembershipVerdict check_membership(const CocycleSolution& sol, int Qp,
                                          int Dp,
                                          const Cochain<SuperPoly>& M) {
  PairEvaluator ev(Qp + Dp + 2);
  std::vector<std::vector<Rational>> cob_vecs;
  for (const Cochain<SuperPoly>& m1 : local_one_forms(Qp, Dp, sol.eps))
    cob_vecs.push_back(ev.vector_of(differential_cochain(m1, 1)));
  std::vector<std::vector<Rational>> sol_vecs;
  for (size_t k = 0; k < sol.coeff_vectors.size(); ++k)
    sol_vecs.push_back(ev.vector_of(sol.cochain(k)));
  std::vector<Rational> target = ev.vector_of(M);

  const int dim = ev.dimension();
  Echelon cob(dim);
  for (auto& v : cob_vecs) cob.add_row(pad(v, dim));
  MembershipVerdict out;
  out.nontrivial = !cob.in_span(pad(target, dim));
  Echelon full(dim);
  for (auto& v : cob_vecs) full.add_row(pad(std::move(v), dim));
  for (auto& v : sol_vecs) full.add_row(pad(std::move(v), dim));
  out.in_solution_span = full.in_span(pad(target, dim));
  return out;
}

// ---------------------------------------------------------------------------
// Independence of a family of spline-valued 2-cochains, certified through
// exact linear functionals: outputs on a fixed probe family are sampled at
// fixed rational points (plus the constant tails), and the resulting exact
// vectors are tested for full rank.  Full rank of functionals implies
// linear independence of the forms.
inline bool independent_on_probes(
    const std::vector<Cochain<SplineFun>>& forms,
    const std::vector<std::pair<SplineFun, SplineFun>>& probes,
    const std::vector<Rational>& sample_points) {
  std::vector<std::vector<Rational>> vecs;
  for (const Cochain<SplineFun>& M : forms) {
    std::vector<Rational> v;
    for (const auto& [f, g] : probes) {
      SplineFun out = M.eval({f, g});
      for (const Rational& x : sample_points) {
        v.push_back(out.c0().eval(x));
        v.push_back(out.c1().eval(x));
      }
    }
    vecs.push_back(std::move(v));
  }
  if (vecs.empty()) return true;
  Echelon ech(static_cast<int>(vecs[0].size()));
  for (auto& v : vecs)
    if (!ech.add_row(std::move(v))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// The momentum kill pattern: S_q(p, k) = p (p+k)^q - p (-k)^q - (p+2k) p^q
// vanishes identically in (p, k) exactly for q = 2.  (p, k are modelled by
// two spare even symbols.)
inline bool momentum_pattern_vanishes(int q) {
  SuperPoly P = SuperPoly::even_sym(sym_u(0));
  SuperPoly K = SuperPoly::even_sym(sym_v(0));
  auto pow = [](const SuperPoly& b, int e) {
    SuperPoly r = SuperPoly::one();
    for (int k = 0; k < e; ++k) r = r * b;
    return r;
  };
  SuperPoly s = P * pow(P + K, q) - P * pow(-K, q) -
                (P + rat(2) * K) * pow(P, q);
  return s.is_zero();
}

}  // namespace abk
