#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cptlab {

// Exact complex scalar a + b*i with a, b rational.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit on purpose
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational ratio(long num, long den) { return {mpq_class(num, den), mpq_class(0)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    mpq_class n = norm2();
    if (sgn(n) == 0) throw std::domain_error("division by zero scalar");
    return {re_ / n, -im_ / n};
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  std::string str() const {
    auto q = [](const mpq_class& x) { return x.get_str(); };
    if (sgn(im_) == 0) return q(re_);
    std::string imag = (im_ == 1) ? "i" : (im_ == -1 ? "-i" : q(im_) + "*i");
    if (sgn(re_) == 0) return imag;
    if (sgn(im_) > 0) return q(re_) + "+" + imag;
    return q(re_) + imag;
  }

private:
  mpq_class re_;
  mpq_class im_;
};

using Complex = std::complex<double>;

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr bool exact = true;
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return 1; }
  static GaussianRational imag_unit() { return GaussianRational::i(); }
  static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
  static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
  static bool approx_equal(const GaussianRational& a, const GaussianRational& b) { return a == b; }
  static double magnitude(const GaussianRational& x) { return std::abs(x.to_complex()); }
  static GaussianRational from_exact(const GaussianRational& x) { return x; }
  static Complex to_complex(const GaussianRational& x) { return x.to_complex(); }
  static std::string str(const GaussianRational& x) { return x.str(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  // Relative tolerance for comparisons and absolute floor for dropping coefficients.
  static constexpr double tolerance = 1e-9;
  static constexpr double drop = 1e-13;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex imag_unit() { return {0.0, 1.0}; }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static bool is_zero(const Complex& x) { return std::abs(x) < drop; }
  static bool approx_equal(const Complex& a, const Complex& b) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tolerance * scale;
  }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static Complex from_exact(const GaussianRational& x) { return x.to_complex(); }
  static Complex to_complex(const Complex& x) { return x; }
  static std::string str(const Complex& x) {
    std::ostringstream os;
    os.precision(12);
    if (x.imag() == 0.0) {
      os << x.real();
    } else if (x.real() == 0.0) {
      os << x.imag() << "*i";
    } else {
      os << x.real() << (x.imag() < 0 ? "" : "+") << x.imag() << "*i";
    }
    return os.str();
  }
};

template <class S>
S from_exact(const GaussianRational& x) {
  return ScalarTraits<S>::from_exact(x);
}

template <class S>
S from_int(long v) {
  return ScalarTraits<S>::from_exact(GaussianRational(v));
}

// Sign used when printing a sum: a term is "negative" if its leading nonzero part is.
inline bool leading_negative(const GaussianRational& x) {
  return sgn(x.re()) < 0 || (sgn(x.re()) == 0 && sgn(x.im()) < 0);
}
inline bool leading_negative(const Complex& x) { return x.real() < 0 || (x.real() == 0.0 && x.imag() < 0); }

// Exact integer power of a rational, k-th root if it exists.
inline bool exact_root(const mpq_class& x, unsigned long k, mpq_class& out) {
  if (sgn(x) < 0 && k % 2 == 0) return false;
  mpz_class num = x.get_num(), den = x.get_den();
  mpz_class rn, rd;
  bool neg = sgn(num) < 0;
  if (neg) num = -num;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return false;
  out = mpq_class(neg ? -rn : rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace cptlab
