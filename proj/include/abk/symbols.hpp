#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "abk/catalogue.hpp"
#include "abk/linalg.hpp"

namespace abk {

// ---------------------------------------------------------------------------
// Momenta.  Three fixed momentum symbols are available, with components
// (u_i, alpha_i), (v_i, beta_i), (t_i, gamma_i); a Momentum is an integer
// combination of them, which is all the exponential calculus needs.

struct Momentum {
  std::array<long, 3> c{};

  static Momentum zero() { return {}; }
  static Momentum p() { return {{1, 0, 0}}; }
  static Momentum q() { return {{0, 1, 0}}; }
  static Momentum r() { return {{0, 0, 1}}; }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

  friend Momentum operator+(const Momentum& a, const Momentum& b) {
    return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}};
  }
  Momentum operator-() const { return {{-c[0], -c[1], -c[2]}}; }
  friend bool operator==(const Momentum&, const Momentum&) = default;
};

constexpr int momentum_even_id(int m, int i) {
  return m == 0 ? sym_u(i) : m == 1 ? sym_v(i) : sym_t(i);
}
constexpr int momentum_odd_id(int m, int i) {
  return m == 0 ? sym_alpha(i) : m == 1 ? sym_beta(i) : sym_gamma(i);
}

// z^A p_A = sum_i { x^i (even part)_i + xi^i (odd part)_i } as a polynomial.
inline SuperPoly zp_poly(const Momentum& m, int n) {
  SuperPoly r;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 3; ++k) {
      if (m.c[k] == 0) continue;
      Rational s(m.c[k]);
      r = r + s * (SuperPoly::x(i) *
                   SuperPoly::even_sym(momentum_even_id(k, i)));
      r = r + s * (SuperPoly::xi(i) *
                   SuperPoly::odd_sym(momentum_odd_id(k, i)));
    }
  return r;
}

// sum_i (even momentum)_i (odd momentum)_i; e.g. mom_pair(0, 1, n) is
// "u alpha" with alpha replaced by the second odd momentum, i.e. u.beta.
inline SuperPoly mom_pair(int e, int o, int n) {
  SuperPoly r;
  for (int i = 0; i < n; ++i)
    r = r + SuperPoly::even_sym(momentum_even_id(e, i)) *
                SuperPoly::odd_sym(momentum_odd_id(o, i));
  return r;
}

// sum_i xi^i (odd momentum)_i; e.g. xi_pair(0, n) = xi.alpha.
inline SuperPoly xi_pair(int o, int n) {
  SuperPoly r;
  for (int i = 0; i < n; ++i)
    r = r + SuperPoly::xi(i) * SuperPoly::odd_sym(momentum_odd_id(o, i));
  return r;
}

// ---------------------------------------------------------------------------
// ExpPolynomial: a sum of terms body(z; momenta) * e^{x.L}, where L is an
// integer combination of the even momenta tied coordinatewise to x
// (e^{x.L} means exp(sum_i x_i (c0 u_i + c1 v_i + c2 t_i))).  Exponentials
// are never expanded: e^{x.L} is a formal Grassmann-even symbol with
// d/dx_i e^{x.L} = L_i e^{x.L}, and identities are compared per exponent.
class ExpPolynomial {
 public:
  using Key = std::array<long, 3>;

  ExpPolynomial() = default;
  explicit ExpPolynomial(const SuperPoly& body) { add(Key{}, body); }
  explicit ExpPolynomial(const Rational& c) : ExpPolynomial(SuperPoly(c)) {}

  static ExpPolynomial exponential(const Key& k, const SuperPoly& body) {
    ExpPolynomial e;
    e.add(k, body);
    return e;
  }

  const std::map<Key, SuperPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Exponentials are Grassmann-even, so the parity is that of the bodies.
  std::optional<int> grassmann_parity() const {
    std::optional<int> p;
    for (const auto& [k, b] : terms_) {
      std::optional<int> q = b.grassmann_parity();
      if (!q) return std::nullopt;
      if (p && *p != *q) return std::nullopt;
      p = q;
    }
    return p;
  }

  ExpPolynomial parity_part(int eps) const {
    ExpPolynomial r;
    for (const auto& [k, b] : terms_) r.add(k, b.parity_part(eps));
    return r;
  }

  friend ExpPolynomial operator+(const ExpPolynomial& a,
                                 const ExpPolynomial& b) {
    ExpPolynomial r = a;
    for (const auto& [k, v] : b.terms_) r.add(k, v);
    return r;
  }
  friend ExpPolynomial operator-(const ExpPolynomial& a,
                                 const ExpPolynomial& b) {
    ExpPolynomial r = a;
    for (const auto& [k, v] : b.terms_) r.add(k, -v);
    return r;
  }
  ExpPolynomial operator-() const {
    ExpPolynomial r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
  }
  friend ExpPolynomial operator*(const Rational& s, const ExpPolynomial& a) {
    ExpPolynomial r;
    for (const auto& [k, v] : a.terms_) r.add(k, s * v);
    return r;
  }
  friend ExpPolynomial operator*(const ExpPolynomial& a,
                                 const ExpPolynomial& b) {
    ExpPolynomial r;
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_)
        r.add(Key{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, va * vb);
    return r;
  }
  friend ExpPolynomial operator*(const SuperPoly& s, const ExpPolynomial& a) {
    return ExpPolynomial(s) * a;
  }
  friend ExpPolynomial operator*(const ExpPolynomial& a, const SuperPoly& s) {
    return a * ExpPolynomial(s);
  }
  friend bool operator==(const ExpPolynomial& a, const ExpPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  // d/dx_i: acts on the body and brings down the exponent's linear form.
  ExpPolynomial partial_x(int i) const {
    ExpPolynomial out;
    for (const auto& [k, b] : terms_) {
      SuperPoly L;
      for (int m = 0; m < 3; ++m)
        if (k[m] != 0)
          L = L + Rational(k[m]) *
                      SuperPoly::even_sym(momentum_even_id(m, i));
      out.add(k, b.partial_even(sym_x(i)) + b * L);
    }
    return out;
  }
  // Odd derivatives pass through the (xi-free, even) exponential factors.
  ExpPolynomial partial_xi_left(int i) const {
    ExpPolynomial out;
    for (const auto& [k, b] : terms_)
      out.add(k, b.partial_odd_left(sym_xi(i)));
    return out;
  }
  ExpPolynomial partial_xi_right(int i) const {
    ExpPolynomial out;
    for (const auto& [k, b] : terms_)
      out.add(k, b.partial_odd_right(sym_xi(i)));
    return out;
  }

  // The body attached to the trivial exponent; any surviving nontrivial
  // exponential means the caller forgot a compensating factor.
  SuperPoly constant_body() const {
    SuperPoly r;
    for (const auto& [k, b] : terms_) {
      if (k != Key{})
        throw ContextError("unmatched exponential factors remain");
      r = b;
    }
    return r;
  }

 private:
  void add(const Key& k, const SuperPoly& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, v);
    if (!inserted) {
      it->second = it->second + v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Key, SuperPoly> terms_;
};

// e^{zp} = e^{x.u} prod_i (1 + xi_i (odd part)_i); exact because the odd
// part of the exponent is nilpotent.
inline ExpPolynomial exp_symbol(const Momentum& m, int n) {
  SuperPoly body = SuperPoly::one();
  for (int i = 0; i < n; ++i) {
    SuperPoly eta;
    for (int k = 0; k < 3; ++k)
      if (m.c[k] != 0)
        eta = eta + Rational(m.c[k]) *
                        SuperPoly::odd_sym(momentum_odd_id(k, i));
    body = body * (SuperPoly::one() + SuperPoly::xi(i) * eta);
  }
  return ExpPolynomial::exponential({m.c[0], m.c[1], m.c[2]}, body);
}

// The operator suite on exponential symbols, mirroring the polynomial case.
inline ExpPolynomial delta_op(const ExpPolynomial& f, int n) {
  ExpPolynomial r;
  for (int i = 0; i < n; ++i) r = r + f.partial_xi_left(i).partial_x(i);
  return r;
}
inline ExpPolynomial euler_z(const ExpPolynomial& f, int n) {
  ExpPolynomial r;
  for (int i = 0; i < n; ++i) {
    r = r + SuperPoly::x(i) * f.partial_x(i);
    r = r + SuperPoly::xi(i) * f.partial_xi_left(i);
  }
  return r;
}
inline ExpPolynomial n_xi(const ExpPolynomial& f, int n) {
  ExpPolynomial r;
  for (int i = 0; i < n; ++i)
    r = r + SuperPoly::xi(i) * f.partial_xi_left(i);
  return r;
}
inline ExpPolynomial antibracket(const ExpPolynomial& f,
                                 const ExpPolynomial& g, int n) {
  ExpPolynomial r;
  for (int i = 0; i < n; ++i) {
    r = r + f.partial_x(i) * g.partial_xi_left(i);
    r = r - f.partial_xi_right(i) * g.partial_x(i);
  }
  return r;
}

// <p,q> = [e^{zp}, e^{zq}] e^{-z(p+q)}: a polynomial in momenta and xi.
inline SuperPoly angle_bracket(const Momentum& a, const Momentum& b, int n) {
  ExpPolynomial br = antibracket(exp_symbol(a, n), exp_symbol(b, n), n);
  return (br * exp_symbol(-(a + b), n)).constant_body();
}

// The two composite expressions entering the obstruction analysis:
// m3(z | m4(e^{za}, e^{zb}), e^{zc}) e^{-z(a+b+c)} and its mirror image.
inline SuperPoly composite_m23_of_m24(const Momentum& a, const Momentum& b,
                                      const Momentum& c, int n) {
  ExpPolynomial inner = m24(exp_symbol(a, n), exp_symbol(b, n), n);
  ExpPolynomial full = m23(inner, exp_symbol(c, n), n);
  return (full * exp_symbol(-(a + b + c), n)).constant_body();
}
inline SuperPoly composite_m24_of_m23(const Momentum& a, const Momentum& b,
                                      const Momentum& c, int n) {
  ExpPolynomial inner = m23(exp_symbol(a, n), exp_symbol(b, n), n);
  ExpPolynomial full = m24(inner, exp_symbol(c, n), n);
  return (full * exp_symbol(-(a + b + c), n)).constant_body();
}

// [ m3(z|m4; p,q,r) + m4(z|m3; p,q,r) + cycle(p,q,r) ] restricted to r = 0.
inline SuperPoly p4(int n) {
  const Momentum P = Momentum::p(), Q = Momentum::q(), R = Momentum::r();
  const Momentum cyc[3][3] = {{P, Q, R}, {Q, R, P}, {R, P, Q}};
  SuperPoly s;
  for (const auto& abc : cyc) {
    s = s + composite_m23_of_m24(abc[0], abc[1], abc[2], n);
    s = s + composite_m24_of_m23(abc[0], abc[1], abc[2], n);
  }
  std::vector<int> ev, od;
  for (int i = 0; i < n; ++i) {
    ev.push_back(sym_t(i));
    od.push_back(sym_gamma(i));
  }
  return s.without_symbols(ev, od);
}

// ---------------------------------------------------------------------------
// Substitution helpers for the local-ansatz symbols.

// f with the even symbol replaced by the given (even) polynomial.
inline SuperPoly subst_even(const SuperPoly& f, int id,
                            const SuperPoly& repl) {
  SuperPoly out;
  for (const auto& [m, coef] : f.terms()) {
    Mono base = m;
    int k = base.even[id];
    base.even[id] = 0;
    SuperPoly t = SuperPoly::monomial(base, coef);
    for (int j = 0; j < k; ++j) t = t * repl;
    out = out + t;
  }
  return out;
}

// f with the odd generator replaced by the odd element repl (which must not
// contain the generator): f = gen.A + B  ->  repl.A + B.
inline SuperPoly subst_odd(const SuperPoly& f, int id,
                           const SuperPoly& repl) {
  SuperPoly A = f.partial_odd_left(id);
  SuperPoly B = f - SuperPoly::odd_sym(id) * A;
  return repl * A + B;
}

// Total degree in the momentum symbols.
inline int momentum_degree(const Mono& m, int n) {
  int d = 0;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < n; ++i) {
      d += m.even[momentum_even_id(k, i)];
      if (m.odd & (1u << momentum_odd_id(k, i))) d += 1;
    }
  return d;
}
inline SuperPoly momentum_degree_part(const SuperPoly& f, int d, int n) {
  SuperPoly out;
  for (const auto& [m, c] : f.terms())
    if (momentum_degree(m, n) == d)
      out = out + SuperPoly::monomial(m, c);
  return out;
}

// ---------------------------------------------------------------------------
// The r = 0 reduction.  F is a local-ansatz symbol F(z|p,q): a polynomial in
// x, xi and the p-, q-momenta, read so that F(z|p) = F(z|p,0).  The residual
//   Phi(z|p,q) <p,q> - [F(z|p), zq] - [F(z|q), zp] - c P4(p,q),
// Phi(z|p,q) = F(z|p+q) - F(z|p) - F(z|q),
// vanishes identically when F and c solve the reduced obstruction equation.
inline SuperPoly reduce_at_r_zero(const SuperPoly& F, const Rational& c,
                                  int n) {
  std::vector<int> ev, od;
  for (int i = 0; i < n; ++i) {
    ev.push_back(sym_v(i));
    od.push_back(sym_beta(i));
  }
  SuperPoly Fp = F.without_symbols(ev, od);
  SuperPoly Fq = Fp;
  SuperPoly Fpq = Fp;
  for (int i = 0; i < n; ++i) {
    SuperPoly u = SuperPoly::even_sym(sym_u(i));
    SuperPoly v = SuperPoly::even_sym(sym_v(i));
    SuperPoly al = SuperPoly::odd_sym(sym_alpha(i));
    SuperPoly be = SuperPoly::odd_sym(sym_beta(i));
    Fq = subst_even(Fq, sym_u(i), v);
    Fq = subst_odd(Fq, sym_alpha(i), be);
    Fpq = subst_even(Fpq, sym_u(i), u + v);
    Fpq = subst_odd(Fpq, sym_alpha(i), al + be);
  }
  SuperPoly phi = Fpq - Fp - Fq;
  SuperPoly res = phi * angle_bracket(Momentum::p(), Momentum::q(), n);
  res = res - antibracket(Fp, zp_poly(Momentum::q(), n), n);
  res = res - antibracket(Fq, zp_poly(Momentum::p(), n), n);
  res = res - c * p4(n);
  return res;
}

// ---------------------------------------------------------------------------
// The second-momentum-order slice of the residual is linear in the low-order
// part of the ansatz, F = m00(z) + mx(z) u + mxi(z) alpha + O(momenta^2)
// (higher orders cannot reach the slice).  Solving the slice exactly over
// all coefficient polynomials of degree <= max_degree shows that every
// solution has c = 0.
struct Prop2Conclusion {
  int ansatz_dim = 0;
  int solution_dim = 0;
  bool c_forced_zero = false;
};

inline Prop2Conclusion prop2_forces_c_zero(int max_degree) {
  const int n = 1;
  // Ansatz basis: coefficient monomials {x^d, x^d xi} times {1, u, alpha}.
  std::vector<SuperPoly> basis;
  for (int d = 0; d <= max_degree; ++d) {
    SuperPoly xd = SuperPoly::x(0, d);
    SuperPoly xdxi = xd * SuperPoly::xi(0);
    for (const SuperPoly& m : {xd, xdxi}) {
      basis.push_back(m);
      basis.push_back(m * SuperPoly::even_sym(sym_u(0)));
      basis.push_back(m * SuperPoly::odd_sym(sym_alpha(0)));
    }
  }
  const int K = static_cast<int>(basis.size());
  // Columns: K ansatz coefficients plus c.  Rows: one per monomial that
  // appears in any slice.
  std::vector<SuperPoly> slices;
  for (const SuperPoly& b : basis)
    slices.push_back(momentum_degree_part(reduce_at_r_zero(b, 0, n), 2, n));
  slices.push_back(
      momentum_degree_part(reduce_at_r_zero(SuperPoly(), 1, n), 2, n));

  std::map<Mono, int> row_of;
  for (const SuperPoly& s : slices)
    for (const auto& [m, c] : s.terms())
      row_of.emplace(m, static_cast<int>(row_of.size()));

  // Assemble the transposed system: unknown vector (coeffs, c) must send
  // every monomial row to zero; solve for the nullspace.
  std::vector<std::vector<Rational>> rows(
      row_of.size(), std::vector<Rational>(static_cast<size_t>(K + 1),
                                           Rational(0)));
  for (int j = 0; j <= K; ++j)
    for (const auto& [m, c] : slices[static_cast<size_t>(j)].terms())
      rows[static_cast<size_t>(row_of[m])][static_cast<size_t>(j)] = c;

  Echelon ech(K + 1);
  for (auto& r : rows) ech.add_row(std::move(r));
  Prop2Conclusion out;
  out.ansatz_dim = K;
  auto null_basis = ech.nullspace();
  out.solution_dim = static_cast<int>(null_basis.size());
  out.c_forced_zero = true;
  for (const auto& v : null_basis)
    if (v[static_cast<size_t>(K)] != 0) out.c_forced_zero = false;
  return out;
}

// ---------------------------------------------------------------------------
// Taylor cross-check support: expand every exponential factor through total
// x-degree <= deg.
inline SuperPoly taylor(const ExpPolynomial& F, int deg, int n) {
  SuperPoly out;
  for (const auto& [k, b] : F.terms()) {
    SuperPoly L;
    for (int i = 0; i < n; ++i)
      for (int m = 0; m < 3; ++m)
        if (k[m] != 0)
          L = L + Rational(k[m]) *
                      (SuperPoly::x(i) *
                       SuperPoly::even_sym(momentum_even_id(m, i)));
    SuperPoly e = SuperPoly::one();
    SuperPoly pw = SuperPoly::one();
    Rational fact(1);
    for (int j = 1; j <= deg; ++j) {
      pw = pw * L;
      fact *= j;
      e = e + (Rational(1) / fact) * pw;
    }
    out = out + b * e;
  }
  return out;
}

inline int x_degree(const Mono& m, int n) {
  int d = 0;
  for (int i = 0; i < n; ++i) d += m.even[sym_x(i)];
  return d;
}
inline SuperPoly x_degree_truncate(const SuperPoly& f, int deg, int n) {
  SuperPoly out;
  for (const auto& [m, c] : f.terms())
    if (x_degree(m, n) <= deg) out = out + SuperPoly::monomial(m, c);
  return out;
}

}  // namespace abk
