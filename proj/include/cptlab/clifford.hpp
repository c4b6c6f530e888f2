#pragma once

#include "cptlab/lorentz.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cptlab {

// Sign and blade of e_a * e_b for basis blades given as bitmasks.
inline std::pair<int, std::uint32_t> blade_product(std::uint32_t a, std::uint32_t b, const std::vector<int>& eta) {
  int swaps = 0;
  for (std::uint32_t rest = a >> 1; rest; rest >>= 1) swaps += std::popcount(rest & b);
  int sign = (swaps % 2) ? -1 : 1;
  std::uint32_t common = a & b;
  for (std::size_t k = 0; k < eta.size(); ++k)
    if ((common >> k) & 1u) sign *= eta[k];
  return {sign, a ^ b};
}

// Element of the complex Clifford algebra of (C^d, eta), dense over 2^d blades.
template <class S>
class Clifford {
public:
  using Traits = ScalarTraits<S>;

  explicit Clifford(std::vector<int> eta) : eta_(std::move(eta)), coef_(std::size_t{1} << eta_.size(), Traits::zero()) {
    if (eta_.size() > 8) throw std::invalid_argument("clifford dimension too large");
  }

  static Clifford scalar(const std::vector<int>& eta, const S& s) {
    Clifford c(eta);
    c.coef_[0] = s;
    return c;
  }
  static Clifford blade(const std::vector<int>& eta, std::uint32_t mask, const S& s = Traits::one()) {
    Clifford c(eta);
    c.coef_.at(mask) = s;
    return c;
  }
  static Clifford vector(const std::vector<int>& eta, const std::vector<S>& v) {
    Clifford c(eta);
    for (std::size_t k = 0; k < v.size(); ++k) c.coef_[std::size_t{1} << k] = v[k];
    return c;
  }

  const std::vector<int>& eta() const { return eta_; }
  std::size_t dim() const { return eta_.size(); }
  const S& operator[](std::uint32_t mask) const { return coef_.at(mask); }
  S& operator[](std::uint32_t mask) { return coef_.at(mask); }
  std::size_t blades() const { return coef_.size(); }

  friend Clifford operator*(const Clifford& a, const Clifford& b) {
    Clifford out(a.eta_);
    for (std::uint32_t i = 0; i < a.coef_.size(); ++i) {
      if (Traits::is_zero(a.coef_[i])) continue;
      for (std::uint32_t j = 0; j < b.coef_.size(); ++j) {
        if (Traits::is_zero(b.coef_[j])) continue;
        auto [sign, k] = blade_product(i, j, a.eta_);
        S t = a.coef_[i] * b.coef_[j];
        out.coef_[k] += sign > 0 ? t : -t;
      }
    }
    return out;
  }
  friend Clifford operator+(Clifford a, const Clifford& b) {
    for (std::size_t k = 0; k < a.coef_.size(); ++k) a.coef_[k] += b.coef_[k];
    return a;
  }
  friend Clifford operator-(Clifford a, const Clifford& b) {
    for (std::size_t k = 0; k < a.coef_.size(); ++k) a.coef_[k] -= b.coef_[k];
    return a;
  }
  friend Clifford operator*(Clifford a, const S& s) {
    for (auto& c : a.coef_) c *= s;
    return a;
  }
  friend Clifford operator-(Clifford a) { return a * (-Traits::one()); }

  Clifford conj() const {
    Clifford c = *this;
    for (auto& x : c.coef_) x = Traits::conj(x);
    return c;
  }
  // Reverses the order of vector factors in each blade.
  Clifford reverse() const {
    Clifford c = *this;
    for (std::uint32_t m = 0; m < c.coef_.size(); ++m) {
      int r = std::popcount(m);
      if ((r * (r - 1) / 2) % 2) c.coef_[m] = -c.coef_[m];
    }
    return c;
  }

  bool is_scalar() const {
    for (std::size_t k = 1; k < coef_.size(); ++k)
      if (!Traits::is_zero(coef_[k])) return false;
    return true;
  }
  bool is_vector() const {
    for (std::uint32_t k = 0; k < coef_.size(); ++k)
      if (std::popcount(k) != 1 && !Traits::is_zero(coef_[k])) return false;
    return true;
  }
  bool is_even() const {
    for (std::uint32_t k = 0; k < coef_.size(); ++k)
      if (std::popcount(k) % 2 && !Traits::is_zero(coef_[k])) return false;
    return true;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& c : coef_) m = std::max(m, Traits::magnitude(c));
    return m;
  }

  friend bool approx_equal(const Clifford& a, const Clifford& b) {
    double scale = std::max({1.0, a.max_abs(), b.max_abs()});
    for (std::size_t k = 0; k < a.coef_.size(); ++k) {
      if constexpr (Traits::exact) {
        if (a.coef_[k] != b.coef_[k]) return false;
      } else {
        if (std::abs(a.coef_[k] - b.coef_[k]) > 1e-9 * scale) return false;
      }
    }
    return true;
  }

  // Inverse of a versor (product of non-null vectors or exp of a bivector).
  Clifford versor_inverse() const {
    Clifford r = reverse();
    Clifford n = (*this) * r;
    if (!n.is_scalar() || Traits::is_zero(n.coef_[0])) throw std::domain_error("not an invertible versor");
    return r * (Traits::one() / n.coef_[0]);
  }

private:
  std::vector<int> eta_;
  std::vector<S> coef_;
};

inline std::vector<int> metric_diagonal(const Spacetime& st) {
  std::vector<int> eta(st.dim());
  for (int k = 0; k < st.dim(); ++k) eta[k] = st.eta(k);
  return eta;
}

template <class S>
S eta_form(const std::vector<int>& eta, const std::vector<S>& x, const std::vector<S>& y) {
  S s = ScalarTraits<S>::zero();
  for (std::size_t k = 0; k < eta.size(); ++k) s += (eta[k] > 0 ? x[k] * y[k] : -(x[k] * y[k]));
  return s;
}

// x -> 2 eta(x,v)/eta(v,v) v - x, composed over the factors (first factor outermost).
template <class S>
Matrix<S> pin_project(const std::vector<int>& eta, const std::vector<std::vector<S>>& factors) {
  using T = ScalarTraits<S>;
  const std::size_t d = eta.size();
  Matrix<S> g = Matrix<S>::identity(d);
  for (const auto& v : factors) {
    S n = eta_form(eta, v, v);
    if (T::is_zero(n)) throw std::invalid_argument("pin_project: null factor vector");
    Matrix<S> r(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        S ev = eta[j] > 0 ? v[j] : -v[j];
        r(i, j) = from_int<S>(2) * v[i] * ev / n;
      }
    g = g * (r - Matrix<S>::identity(d));
  }
  return g;
}

// x -> g x g^{-1} on vectors, via the algebra product.
template <class S>
Matrix<S> clifford_adjoint(const Clifford<S>& g) {
  const std::size_t d = g.dim();
  Clifford<S> inv = g.versor_inverse();
  Matrix<S> m(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    Clifford<S> img = g * Clifford<S>::blade(g.eta(), 1u << k) * inv;
    if (!img.is_vector()) throw std::domain_error("clifford_adjoint: element does not preserve vectors");
    for (std::size_t i = 0; i < d; ++i) m(i, k) = img[1u << i];
  }
  return m;
}

template <class S>
Clifford<S> clifford_product(const std::vector<int>& eta, const std::vector<std::vector<S>>& factors) {
  Clifford<S> g = Clifford<S>::scalar(eta, ScalarTraits<S>::one());
  for (const auto& v : factors) g = g * Clifford<S>::vector(eta, v);
  return g;
}

inline Clifford<Complex> clifford_exp(const Clifford<Complex>& b) {
  double norm = b.max_abs() * static_cast<double>(b.blades());
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  Clifford<Complex> x = b * Complex(std::ldexp(1.0, -squarings), 0.0);
  Clifford<Complex> result = Clifford<Complex>::scalar(b.eta(), 1.0);
  Clifford<Complex> term = result;
  for (int k = 1; k < 40; ++k) {
    term = term * x * Complex(1.0 / k, 0.0);
    result = result + term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

// Bivector (1/2) sum c_ij e_i e_j lifting X = sum c_ij F_ij.
template <class S>
Clifford<S> spin_bivector(const Spacetime& st, const std::vector<S>& coeffs) {
  auto eta = metric_diagonal(st);
  Clifford<S> b(eta);
  auto planes = lie_basis_planes(st);
  S half = from_exact<S>(GaussianRational::ratio(1, 2));
  for (std::size_t k = 0; k < planes.size() && k < coeffs.size(); ++k) {
    auto [i, j] = planes[k];
    b[(1u << i) | (1u << j)] += coeffs[k] * half;
  }
  return b;
}

inline std::vector<std::vector<GaussianRational>> pt_lift_factors(const Spacetime& st) {
  auto eta = metric_diagonal(st);
  ExactMatrix g0 = pt_representative(st);
  const int d = st.dim();
  bool total = true;
  for (int k = 0; k < d; ++k) total = total && g0(k, k) == GaussianRational(-1);
  std::vector<std::vector<GaussianRational>> factors;
  for (int k = 0; k < d; ++k) {
    if (!total && g0(k, k) != GaussianRational(-1)) continue;
    std::vector<GaussianRational> v(d);
    v[k] = eta[k] > 0 ? GaussianRational(1) : GaussianRational::i();
    factors.push_back(v);
  }
  return factors;
}

// Exact lift of pt_representative in the even Pin group; every factor has
// eta-norm +1 (axes with eta = -1 carry a factor i).
inline Clifford<GaussianRational> pt_lift(const Spacetime& st) {
  return clifford_product(metric_diagonal(st), pt_lift_factors(st));
}

}  // namespace cptlab
