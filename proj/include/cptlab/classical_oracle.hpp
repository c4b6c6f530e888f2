#pragma once

#include "cptlab/group_actions.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cptlab {

// Multivariate polynomial in the d spacetime coordinates.
template <class S>
class Polynomial {
public:
  using Traits = ScalarTraits<S>;
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(int vars) : vars_(vars) {}

  static Polynomial constant(int vars, const S& c) {
    Polynomial p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
  }
  static Polynomial coordinate(int vars, int k) {
    Polynomial p(vars);
    Exponents e(vars, 0);
    e.at(k) = 1;
    p.add_term(e, Traits::one());
    return p;
  }

  int vars() const { return vars_; }
  const std::map<Exponents, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const S& c) {
    if (Traits::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const S& s) {
    Polynomial out(a.vars_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, c * s);
    return out;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(std::max(a.vars_, b.vars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial derivative(int k) const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      Exponents f(e);
      f[k] -= 1;
      out.add_term(f, c * from_int<S>(e[k]));
    }
    return out;
  }

  // p(L x): substitute x_i -> sum_j L(i,j) x_j.
  Polynomial compose_linear(const Matrix<S>& l) const {
    std::vector<Polynomial> forms;
    for (int i = 0; i < vars_; ++i) {
      Polynomial f(vars_);
      for (int j = 0; j < vars_; ++j) f += coordinate(vars_, j) * l(i, j);
      forms.push_back(f);
    }
    std::map<std::pair<int, int>, Polynomial> powers;
    auto power = [&](int i, int n) -> const Polynomial& {
      auto key = std::make_pair(i, n);
      auto it = powers.find(key);
      if (it != powers.end()) return it->second;
      Polynomial p = constant(vars_, Traits::one());
      for (int k = 0; k < n; ++k) p = p * forms[i];
      return powers.emplace(key, p).first->second;
    };
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      Polynomial t = constant(vars_, c);
      for (int i = 0; i < vars_; ++i)
        if (e[i]) t = t * power(i, e[i]);
      out += t;
    }
    return out;
  }

  Complex evaluate(const std::vector<double>& x) const {
    Complex acc = 0;
    for (const auto& [e, c] : terms_) {
      Complex t = Traits::to_complex(c);
      for (int i = 0; i < vars_; ++i) t *= std::pow(x[i], e[i]);
      acc += t;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + Traits::str(c) + ")";
      for (int i = 0; i < vars_; ++i)
        if (e[i]) out += "*x" + std::to_string(i) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return out;
  }

private:
  int vars_ = 0;
  std::map<Exponents, S> terms_;
};

// V-valued polynomial field: one polynomial per real coordinate of V.
template <class S>
using PolyField = std::vector<Polynomial<S>>;

template <class S>
PolyField<S> convert_field(const PolyField<GaussianRational>& phi) {
  PolyField<S> out;
  for (const auto& p : phi) {
    Polynomial<S> q(p.vars());
    for (const auto& [e, c] : p.terms()) q.add_term(e, from_exact<S>(c));
    out.push_back(q);
  }
  return out;
}

// Random field with small rational coefficients, total degree <= max_degree.
inline PolyField<GaussianRational> random_field(std::uint64_t seed, std::size_t components, int vars, int max_degree, int terms = 4) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-6, 6), den(1, 3), var(0, vars - 1), deg(0, max_degree);
  PolyField<GaussianRational> out;
  for (std::size_t k = 0; k < components; ++k) {
    Polynomial<GaussianRational> p(vars);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> e(vars, 0);
      int d = deg(rng);
      for (int i = 0; i < d; ++i) e[var(rng)] += 1;
      p.add_term(e, GaussianRational(mpq_class(coef(rng), den(rng))));
    }
    out.push_back(p);
  }
  return out;
}

// Operators with more than one odd factor per monomial have no commuting-field semantics.
template <class S>
bool has_classical_semantics(const Element<S>& f) {
  if (f.mode() != Mode::supercommutative) return f.mode() == Mode::commutative;
  for (const auto& [m, c] : f.terms())
    if (odd_count(m, *f.space()) > 1) return false;
  return true;
}

// D_F(phi): each symbol lambda_j with derivatives xi becomes d_xi (lambda_j o phi).
template <class S>
Polynomial<S> apply_operator(const FieldContent& fc, const Element<S>& f, const PolyField<S>& phi) {
  if (!has_classical_semantics(f)) throw std::invalid_argument("operator has no classical semantics (odd symbols in a nonlinear term)");
  if (phi.size() != fc.v_dim()) throw std::invalid_argument("field has the wrong number of components");
  const int d = fc.spacetime().dim();
  Matrix<S> b = convert_matrix<S>(fc.space()->coords());
  std::map<FieldSymbol, Polynomial<S>> cache;
  auto component = [&](const FieldSymbol& s) -> const Polynomial<S>& {
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;
    Polynomial<S> out(d);
    for (std::size_t k = 0; k < phi.size(); ++k) {
      if (ScalarTraits<S>::is_zero(b(s.lambda, k))) continue;
      Polynomial<S> p = phi[k];
      for (auto mu : s.derivs) p = p.derivative(mu);
      out += p * b(s.lambda, k);
    }
    return cache.emplace(s, out).first->second;
  };
  Polynomial<S> total(d);
  for (const auto& [m, c] : f.terms()) {
    Polynomial<S> t = Polynomial<S>::constant(d, c);
    for (const auto& s : m) t = t * component(s);
    total += t;
  }
  return total;
}

// (rho Phi o omega^{-1}) for explicit matrices.
template <class S>
PolyField<S> pullback(const Matrix<S>& rho, const Matrix<S>& omega_inv, const PolyField<S>& phi) {
  std::vector<Polynomial<S>> moved;
  for (const auto& p : phi) moved.push_back(p.compose_linear(omega_inv));
  PolyField<S> out;
  for (std::size_t k = 0; k < rho.rows(); ++k) {
    Polynomial<S> acc(moved.empty() ? 0 : moved.front().vars());
    for (std::size_t l = 0; l < rho.cols(); ++l)
      if (!ScalarTraits<S>::is_zero(rho(k, l))) acc += moved[l] * rho(k, l);
    out.push_back(acc);
  }
  return out;
}

// u(g) Phi = rho(g) o Phi o omega(g)^{-1}.
template <class S>
PolyField<S> pullback_transform(const FieldContent& fc, const GroupElement<S>& g, const PolyField<S>& phi, bool declared = false) {
  return pullback(rho_on_v(fc, g, declared), inverse(g.omega), phi);
}

struct CorrespondenceReport {
  bool pass = false;
  double residual = 0;
  std::string detail;
};

// D_F(u(g^-1) Phi) = D_{rho(g) F}(Phi) o omega(g), for any action given as (V matrix of
// g^-1, symbol map of g). Exact mode compares polynomials; float mode compares values.
template <class S>
CorrespondenceReport verify_correspondence(const FieldContent& fc, const Matrix<S>& rho_g_inv, const SymbolMap<S>& map_g,
                                           const Element<S>& f, const PolyField<S>& phi,
                                           const std::vector<std::vector<double>>& points = {}) {
  if (!map_g.omega) throw std::invalid_argument("correspondence needs a geometric action");
  Polynomial<S> lhs = apply_operator(fc, f, pullback(rho_g_inv, *map_g.omega, phi));
  Polynomial<S> rhs = apply_operator(fc, apply_map(map_g, f), phi).compose_linear(*map_g.omega);
  CorrespondenceReport r;
  if constexpr (ScalarTraits<S>::exact) {
    r.pass = lhs == rhs;
    if (!r.pass) r.detail = "difference " + abbreviate((lhs - rhs).str());
  } else {
    double worst = 0;
    for (const auto& x : points) {
      Complex a = lhs.evaluate(x), b = rhs.evaluate(x);
      worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))));
    }
    r.residual = worst;
    r.pass = worst < 1e-8;
  }
  return r;
}

template <class S>
CorrespondenceReport verify_correspondence(const FieldContent& fc, const GroupElement<S>& g, const Element<S>& f,
                                           const PolyField<S>& phi, const std::vector<std::vector<double>>& points = {},
                                           bool declared = false) {
  return verify_correspondence(fc, rho_on_v(fc, g.inverse(), declared), classical_action(fc, g, declared), f, phi, points);
}

inline std::vector<std::vector<double>> sample_points(std::uint64_t seed, int vars, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<std::vector<double>> out(n, std::vector<double>(vars));
  for (auto& p : out)
    for (auto& x : p) x = u(rng);
  return out;
}

// Exact rational elements of the proper group for a content: identity, the PT
// representative, a rational rotation and boost (or cover elements), and products.
inline std::vector<ExactElementG> exact_elements(const FieldContent& fc) {
  using G = GaussianRational;
  std::vector<ExactElementG> out;
  const Spacetime& st = fc.spacetime();
  if (fc.spinorial()) {
    ExactMatrix rot{{G(mpq_class(3, 5), mpq_class(4, 5)), G(0)}, {G(0), G(mpq_class(3, 5), mpq_class(-4, 5))}};
    ExactMatrix boost{{G(2), G(0)}, {G(0), G(mpq_class(1, 2))}};
    ExactMatrix null{{G(1), G(mpq_class(1, 2), mpq_class(1, 3))}, {G(0), G(1)}};
    out.push_back(ExactElementG::of_cover("1", ExactCover::identity()));
    out.push_back(ExactElementG::of_cover("rot", ExactCover{rot, rot.conj()}));
    out.push_back(ExactElementG::of_cover("boost", ExactCover{boost, boost.conj()}));
    out.push_back(ExactElementG::of_cover("null", ExactCover{null, null.conj()}));
  } else {
    const int d = st.dim();
    out.push_back(ExactElementG::of_matrix("1", ExactMatrix::identity(d)));
    if (st.galilean) {
      ExactMatrix b = ExactMatrix::identity(d);
      b(1, 0) = G(mpq_class(2, 3));
      out.push_back(ExactElementG::of_matrix("galilean-boost", b));
    } else if (rep::uses(fc.rep(), RepKind::character)) {
      ExactMatrix b{{G(mpq_class(257, 32)), G(mpq_class(255, 32))}, {G(mpq_class(255, 32)), G(mpq_class(257, 32))}};
      out.push_back(ExactElementG::of_matrix("boost", b));
    } else {
      ExactMatrix b = ExactMatrix::identity(d);
      b(0, 0) = b(st.p, st.p) = G(mpq_class(5, 3));
      b(0, st.p) = b(st.p, 0) = G(mpq_class(4, 3));
      if (is_isometry(st, b)) out.push_back(ExactElementG::of_matrix("boost", b));
    }
    if (d - (st.galilean ? 1 : st.p) >= 2) {
      int i = st.galilean ? 1 : st.p, j = i + 1;
      ExactMatrix r = ExactMatrix::identity(d);
      r(i, i) = r(j, j) = G(mpq_class(3, 5));
      r(i, j) = G(mpq_class(-4, 5));
      r(j, i) = G(mpq_class(4, 5));
      out.push_back(ExactElementG::of_matrix("rot", r));
    }
  }
  bool has_pt = !(rep::uses(fc.rep(), RepKind::character));
  if (has_pt) {
    ExactElementG pt = pt_element(fc);
    std::size_t n = out.size();
    out.push_back(pt);
    for (std::size_t k = 1; k < n; ++k) out.push_back(pt * out[k]);
  }
  return out;
}

}  // namespace cptlab
