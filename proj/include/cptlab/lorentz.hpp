#pragma once

#include "cptlab/linsolve.hpp"
#include "cptlab/matrix.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cptlab {

enum class Component { up_plus, up_minus, down_plus, down_minus };

inline const char* component_name(Component c) {
  switch (c) {
    case Component::up_plus: return "L^+_up";
    case Component::up_minus: return "L^-_up";
    case Component::down_plus: return "L^+_down";
    case Component::down_minus: return "L^-_down";
  }
  return "?";
}

inline bool time_reversing(Component c) { return c == Component::down_plus || c == Component::down_minus; }
inline bool proper(Component c) { return c == Component::up_plus || c == Component::down_plus; }

inline Component make_component(bool orthochronous, bool is_proper) {
  if (orthochronous) return is_proper ? Component::up_plus : Component::up_minus;
  return is_proper ? Component::down_plus : Component::down_minus;
}

// Spacetime (M, eta) of signature (p, q), or a Galilean spacetime of dimension d
// whose group fixes the time coordinate up to sign.
struct Spacetime {
  int p = 1;
  int q = 3;
  bool galilean = false;

  static Spacetime lorentzian(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("signature needs p >= 1 and q >= 1");
    return {p, q, false};
  }
  static Spacetime galilean_space(int d) {
    if (d < 2) throw std::invalid_argument("galilean spacetime needs d >= 2");
    return {1, d - 1, true};
  }

  int dim() const { return p + q; }
  bool minkowski4() const { return !galilean && p == 1 && q == 3; }

  int eta(int i) const { return i < p ? 1 : -1; }

  ExactMatrix metric() const {
    ExactMatrix m(dim(), dim());
    for (int i = 0; i < dim(); ++i) m(i, i) = eta(i);
    return m;
  }

  std::string str() const {
    if (galilean) return "galilean(" + std::to_string(dim()) + ")";
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }

  bool operator==(const Spacetime&) const = default;
};

template <class S>
bool is_isometry(const Spacetime& st, const Matrix<S>& g) {
  using T = ScalarTraits<S>;
  const int d = st.dim();
  if (static_cast<int>(g.rows()) != d || !g.square()) return false;
  if (st.galilean) {
    if (!(T::approx_equal(g(0, 0), T::one()) || T::approx_equal(g(0, 0), -T::one()))) return false;
    for (int k = 1; k < d; ++k)
      if (!T::approx_equal(g(0, k), T::zero())) return false;
    Matrix<S> r = g.block(1, 1, d - 1, d - 1);
    return approx_equal(Matrix<S>(r.transpose() * r), Matrix<S>::identity(d - 1));
  }
  Matrix<S> eta = convert_matrix<S>(st.metric());
  return approx_equal(Matrix<S>(g.transpose() * eta * g), eta);
}

namespace detail {
inline double real_sign_value(const GaussianRational& x) { return sgn(x.re()); }
inline double real_sign_value(const Complex& x) { return x.real(); }
}  // namespace detail

template <class S>
Component classify_component(const Spacetime& st, const Matrix<S>& g) {
  if (!is_isometry(st, g)) throw std::invalid_argument("classify_component: not an isometry of " + st.str());
  bool is_proper = detail::real_sign_value(determinant(g)) > 0;
  bool ortho;
  if (st.galilean || st.p == 1) {
    ortho = detail::real_sign_value(g(0, 0)) > 0;
  } else {
    ortho = detail::real_sign_value(determinant(g.block(0, 0, st.p, st.p))) > 0;
  }
  return make_component(ortho, is_proper);
}

// Integer generators: F_ij = E_ij eta_jj - E_ji eta_ii for i < j (Lorentzian);
// spatial rotations and boosts E_k0 (Galilean).
inline std::vector<ExactMatrix> lie_basis(const Spacetime& st) {
  const int d = st.dim();
  std::vector<ExactMatrix> out;
  if (st.galilean) {
    for (int i = 1; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        ExactMatrix f(d, d);
        f(i, j) = 1;
        f(j, i) = -1;
        out.push_back(f);
      }
    for (int k = 1; k < d; ++k) {
      ExactMatrix f(d, d);
      f(k, 0) = 1;
      out.push_back(f);
    }
    return out;
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      ExactMatrix f(d, d);
      f(i, j) = st.eta(j);
      f(j, i) = -st.eta(i);
      out.push_back(f);
    }
  return out;
}

inline std::vector<std::pair<int, int>> lie_basis_planes(const Spacetime& st) {
  std::vector<std::pair<int, int>> out;
  const int d = st.dim();
  int lo = st.galilean ? 1 : 0;
  for (int i = lo; i < d; ++i)
    for (int j = i + 1; j < d; ++j) out.emplace_back(i, j);
  if (st.galilean)
    for (int k = 1; k < d; ++k) out.emplace_back(k, 0);
  return out;
}

inline bool in_lie_algebra(const Spacetime& st, const ExactMatrix& f) {
  if (st.galilean) {
    for (int j = 0; j < st.dim(); ++j)
      if (!f(0, j).is_zero()) return false;
    ExactMatrix r = f.block(1, 1, st.dim() - 1, st.dim() - 1);
    return (r + r.transpose()).is_zero();
  }
  ExactMatrix eta = st.metric();
  return (f * eta + eta * f.transpose()).is_zero();
}

inline std::vector<double> gaussian_coefficients(std::uint64_t seed, std::size_t n, double scale) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, scale);
  std::vector<double> c(n);
  for (auto& x : c) x = dist(rng);
  return c;
}

inline FloatMatrix lie_combination(const Spacetime& st, const std::vector<double>& coeffs) {
  auto basis = lie_basis(st);
  FloatMatrix x(st.dim(), st.dim());
  for (std::size_t k = 0; k < basis.size() && k < coeffs.size(); ++k) x += to_float(basis[k]) * Complex(coeffs[k], 0);
  return x;
}

struct LorentzSample {
  FloatMatrix g;
  Component component;
};

// exp of a random Lie-algebra combination: lands in the identity component.
inline LorentzSample sample_proper_ortho(std::uint64_t seed, const Spacetime& st, double scale = 0.5) {
  auto coeffs = gaussian_coefficients(seed, lie_basis(st).size(), scale);
  FloatMatrix g = real_part(expm(lie_combination(st, coeffs)));
  return {g, classify_component(st, g)};
}

// Exact element of the time-reversing proper component. -1 when it lies there
// (d even, p odd); otherwise reflect timelike axis 0 and spacelike axis p.
inline ExactMatrix pt_representative(const Spacetime& st) {
  const int d = st.dim();
  if (st.galilean) {
    ExactMatrix g = ExactMatrix::identity(d);
    g(0, 0) = -1;
    g(1, 1) = -1;
    return g;
  }
  if (d % 2 == 0 && st.p % 2 == 1) return -ExactMatrix::identity(d);
  ExactMatrix g = ExactMatrix::identity(d);
  g(0, 0) = -1;
  g(st.p, st.p) = -1;
  return g;
}

// ---------------------------------------------------------------------------
// 4D covers: pairs (A, B) of 2x2 complex matrices with det A = det B = +-1.

template <class S>
struct CoverElement {
  Matrix<S> a;
  Matrix<S> b;

  static CoverElement identity() { return {Matrix<S>::identity(2), Matrix<S>::identity(2)}; }
  static CoverElement scalar(const S& x, const S& y) {
    return {Matrix<S>::identity(2) * x, Matrix<S>::identity(2) * y};
  }
  static CoverElement tau() { return scalar(-ScalarTraits<S>::one(), -ScalarTraits<S>::one()); }
  static CoverElement big_i() {
    S i = ScalarTraits<S>::imag_unit();
    return scalar(i, -i);
  }

  friend CoverElement operator*(const CoverElement& x, const CoverElement& y) { return {x.a * y.a, x.b * y.b}; }
  friend bool operator==(const CoverElement& x, const CoverElement& y) { return x.a == y.a && x.b == y.b; }

  CoverElement inverse() const { return {cptlab::inverse(a), cptlab::inverse(b)}; }
  std::string str() const { return "(" + a.str() + ", " + b.str() + ")"; }
};

using ExactCover = CoverElement<GaussianRational>;
using FloatCover = CoverElement<Complex>;

template <class S>
CoverElement<S> convert_cover(const ExactCover& c) {
  return {convert_matrix<S>(c.a), convert_matrix<S>(c.b)};
}

template <class S>
bool approx_equal(const CoverElement<S>& x, const CoverElement<S>& y) {
  return approx_equal(x.a, y.a) && approx_equal(x.b, y.b);
}

template <class S>
Matrix<S> bracket(int mu) {
  using T = ScalarTraits<S>;
  S one = T::one(), i = T::imag_unit(), z = T::zero();
  switch (mu) {
    case 0: return Matrix<S>{{one, z}, {z, one}};
    case 1: return Matrix<S>{{z, one}, {one, z}};
    case 2: return Matrix<S>{{z, -i}, {i, z}};
    case 3: return Matrix<S>{{one, z}, {z, -one}};
  }
  throw std::out_of_range("bracket index");
}

// x with <x> = m.
template <class S>
std::vector<S> unbracket(const Matrix<S>& m) {
  using T = ScalarTraits<S>;
  S half = from_exact<S>(GaussianRational::ratio(1, 2));
  S i = T::imag_unit();
  return {(m(0, 0) + m(1, 1)) * half, (m(1, 0) + m(0, 1)) * half, (m(1, 0) - m(0, 1)) * half / i,
          (m(0, 0) - m(1, 1)) * half};
}

// <pi(A,B) x> = A <x> B^T, as a complex 4x4 matrix.
template <class S>
Matrix<S> cover_project_complex(const CoverElement<S>& c) {
  Matrix<S> out(4, 4);
  Matrix<S> bt = c.b.transpose();
  for (int mu = 0; mu < 4; ++mu) {
    auto col = unbracket(Matrix<S>(c.a * bracket<S>(mu) * bt));
    for (int nu = 0; nu < 4; ++nu) out(nu, mu) = col[nu];
  }
  return out;
}

template <class S>
bool is_real(const Matrix<S>& m) {
  for (const auto& x : m.data())
    if (!ScalarTraits<S>::approx_equal(x, ScalarTraits<S>::conj(x))) return false;
  return true;
}

template <class S>
Matrix<S> cover_project(const CoverElement<S>& c) {
  Matrix<S> m = cover_project_complex(c);
  if (!is_real(m)) throw std::invalid_argument("cover_project: element lies in the complex group");
  return m;
}

template <class S>
CoverElement<S> cover_conjugate(const CoverElement<S>& c) {
  return {c.b.conj(), c.a.conj()};
}

enum class CoverComponent { orthochronous, i_orthochronous, down_a, down, complex_only };

inline const char* cover_component_name(CoverComponent c) {
  switch (c) {
    case CoverComponent::orthochronous: return "L~^+_up";
    case CoverComponent::i_orthochronous: return "I.L~^+_up";
    case CoverComponent::down_a: return "L~^+_down,a";
    case CoverComponent::down: return "L~^+_down";
    case CoverComponent::complex_only: return "complex";
  }
  return "?";
}

template <class S>
CoverComponent classify_cover(const CoverElement<S>& c) {
  using T = ScalarTraits<S>;
  S da = determinant(c.a), db = determinant(c.b);
  if (!T::approx_equal(da, db)) throw std::invalid_argument("cover element with det A != det B");
  bool det_one = T::approx_equal(da, T::one());
  if (!det_one && !T::approx_equal(da, -T::one())) throw std::invalid_argument("cover element with det not +-1");
  Matrix<S> abar = c.a.conj();
  if (approx_equal(c.b, abar)) return det_one ? CoverComponent::orthochronous : CoverComponent::i_orthochronous;
  if (approx_equal(c.b, Matrix<S>(-abar))) return det_one ? CoverComponent::down_a : CoverComponent::down;
  return CoverComponent::complex_only;
}

// Traceless a with a<x> + <x>a^dagger = <X x>: the sl2 image of a real Lie algebra element.
inline ExactMatrix spin_generator(const ExactMatrix& x) {
  // Unknowns: real and imaginary parts of a00, a01, a10 (a11 = -a00).
  using G = GaussianRational;
  auto unit = [](int k) {
    ExactMatrix a(2, 2);
    G v = (k % 2 == 0) ? G(1) : G::i();
    int slot = k / 2;
    if (slot == 0) {
      a(0, 0) = v;
      a(1, 1) = -v;
    } else if (slot == 1) {
      a(0, 1) = v;
    } else {
      a(1, 0) = v;
    }
    return a;
  };
  ExactMatrix sys(32, 6);
  std::vector<G> rhs(32);
  for (int mu = 0; mu < 4; ++mu) {
    ExactMatrix target(2, 2);
    for (int nu = 0; nu < 4; ++nu) target += bracket<G>(nu) * x(nu, mu);
    for (int k = 0; k < 6; ++k) {
      ExactMatrix a = unit(k);
      ExactMatrix img = a * bracket<G>(mu) + bracket<G>(mu) * a.adjoint();
      for (int e = 0; e < 4; ++e) {
        sys(mu * 8 + e * 2, k) = G(img.data()[e].re());
        sys(mu * 8 + e * 2 + 1, k) = G(img.data()[e].im());
      }
    }
    for (int e = 0; e < 4; ++e) {
      rhs[mu * 8 + e * 2] = G(target.data()[e].re());
      rhs[mu * 8 + e * 2 + 1] = G(target.data()[e].im());
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw std::invalid_argument("spin_generator: not in the Lorentz Lie algebra");
  ExactMatrix a(2, 2);
  for (int k = 0; k < 6; ++k) a += unit(k) * (*sol)[k];
  return a;
}

inline FloatMatrix sample_sl2(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> dist(0.0, scale);
  Complex u(dist(rng), dist(rng)), v(dist(rng), dist(rng)), w(dist(rng), dist(rng));
  return FloatMatrix{{u, v}, {w, -u}};
}

// Element (A, conj A) of the orthochronous cover, A = exp(random sl2).
inline FloatCover sample_cover(std::uint64_t seed, double scale = 0.5) {
  std::mt19937_64 rng(seed);
  FloatMatrix a = expm(sample_sl2(rng, scale));
  return {a, a.conj()};
}

// Independent (A, B) in the complex group.
inline FloatCover sample_complex_cover(std::uint64_t seed, double scale = 0.5) {
  std::mt19937_64 rng(seed);
  FloatMatrix a = expm(sample_sl2(rng, scale));
  FloatMatrix b = expm(sample_sl2(rng, scale));
  return {a, b};
}

}  // namespace cptlab
