#pragma once

#include "cptlab/matrix.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cptlab {

enum class Charge { plus, zero, minus };

inline const char* charge_name(Charge c) {
  switch (c) {
    case Charge::plus: return "+";
    case Charge::zero: return "0";
    case Charge::minus: return "-";
  }
  return "?";
}

inline Charge flip(Charge c) {
  return c == Charge::plus ? Charge::minus : (c == Charge::minus ? Charge::plus : Charge::zero);
}

struct BasisEntry {
  std::string name;
  int grade = 0;
  Charge charge = Charge::zero;
};

// Basis of W = Hom(V, C). Row j of coords() expresses the j-th basis functional
// in the coordinate functionals of V.
class SymbolSpace {
public:
  SymbolSpace(int spacetime_dim, std::vector<BasisEntry> basis, ExactMatrix coords)
      : dim_(spacetime_dim), basis_(std::move(basis)), coords_(std::move(coords)) {
    if (coords_.rows() != basis_.size() || coords_.cols() != basis_.size())
      throw std::invalid_argument("symbol space: coordinate matrix must be square of basis size");
    coords_inv_ = inverse(coords_);
    conj_ = coords_.conj() * coords_inv_;
    partner_.assign(basis_.size(), -1);
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      int nonzero = 0;
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (conj_(j, k).is_zero()) continue;
        ++nonzero;
        partner_[j] = static_cast<int>(k);
        if (basis_[k].charge != flip(basis_[j].charge))
          throw std::invalid_argument("symbol space: conjugation does not swap charge sectors");
        if (basis_[k].grade != basis_[j].grade)
          throw std::invalid_argument("symbol space: conjugation mixes grades");
      }
      if (nonzero != 1) partner_[j] = -1;
    }
  }

  int spacetime_dim() const { return dim_; }
  std::size_t size() const { return basis_.size(); }
  const BasisEntry& entry(std::size_t j) const { return basis_.at(j); }
  const std::vector<BasisEntry>& basis() const { return basis_; }
  const ExactMatrix& coords() const { return coords_; }
  const ExactMatrix& coords_inv() const { return coords_inv_; }
  // Matrix of lambda -> *o lambda on the basis (anti-linear extension).
  const ExactMatrix& conjugation() const { return conj_; }
  int conjugate_partner(std::size_t j) const { return partner_.at(j); }

  int find(const std::string& name) const {
    for (std::size_t j = 0; j < basis_.size(); ++j)
      if (basis_[j].name == name) return static_cast<int>(j);
    return -1;
  }

private:
  int dim_;
  std::vector<BasisEntry> basis_;
  ExactMatrix coords_;
  ExactMatrix coords_inv_;
  ExactMatrix conj_;
  std::vector<int> partner_;
};

using SpacePtr = std::shared_ptr<const SymbolSpace>;

struct FieldSymbol {
  std::uint32_t lambda = 0;
  std::vector<std::uint8_t> derivs;  // sorted multiset of spacetime directions

  FieldSymbol() = default;
  FieldSymbol(std::uint32_t l, std::vector<std::uint8_t> d = {}) : lambda(l), derivs(std::move(d)) {
    std::sort(derivs.begin(), derivs.end());
  }
  auto operator<=>(const FieldSymbol&) const = default;
  bool operator==(const FieldSymbol&) const = default;
};

using Monomial = std::vector<FieldSymbol>;

enum class Mode { free_algebra, commutative, supercommutative };

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::free_algebra: return "free";
    case Mode::commutative: return "commutative";
    case Mode::supercommutative: return "supercommutative";
  }
  return "?";
}

inline std::string abbreviate(std::string s, std::size_t n = 240) {
  if (s.size() > n) s = s.substr(0, n) + " ...";
  return s;
}

inline std::string symbol_string(const SymbolSpace& space, const FieldSymbol& s) {
  std::string out;
  if (!s.derivs.empty()) {
    out = "d[";
    for (std::size_t k = 0; k < s.derivs.size(); ++k) out += (k ? "," : "") + std::to_string(s.derivs[k]);
    out += "]";
  }
  return out + space.entry(s.lambda).name;
}

// Sorts a monomial into canonical order for the mode. Returns the sign picked up
// (+1/-1), or 0 if the monomial vanishes.
inline int canonicalize(Monomial& m, Mode mode, const SymbolSpace& space) {
  if (mode == Mode::free_algebra) return 1;
  if (mode == Mode::commutative) {
    std::sort(m.begin(), m.end());
    return 1;
  }
  int sign = 1;
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (std::size_t j = i; j > 0 && m[j] < m[j - 1]; --j) {
      if (space.entry(m[j].lambda).grade == 1 && space.entry(m[j - 1].lambda).grade == 1) sign = -sign;
      std::swap(m[j], m[j - 1]);
    }
  }
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] == m[i - 1] && space.entry(m[i].lambda).grade == 1) return 0;
  return sign;
}

inline int odd_count(const Monomial& m, const SymbolSpace& space) {
  int n = 0;
  for (const auto& s : m) n += space.entry(s.lambda).grade;
  return n;
}

template <class S>
class Element {
public:
  using Traits = ScalarTraits<S>;
  using Terms = std::map<Monomial, S>;

  Element() = default;
  Element(SpacePtr space, Mode mode) : space_(std::move(space)), mode_(mode) {}

  static Element constant(SpacePtr space, Mode mode, const S& c) {
    Element e(std::move(space), mode);
    e.add_term({}, c);
    return e;
  }
  static Element symbol(SpacePtr space, Mode mode, FieldSymbol s, const S& c = Traits::one()) {
    Element e(std::move(space), mode);
    e.add_term({std::move(s)}, c);
    return e;
  }

  // Adds c * m after bringing m to canonical form.
  void add_term(Monomial m, const S& c) {
    if (Traits::is_zero(c)) return;
    int sign = canonicalize(m, mode_, *space_);
    if (sign == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), sign > 0 ? c : -c);
    if (!inserted) {
      it->second += sign > 0 ? c : -c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  const SpacePtr& space() const { return space_; }
  Mode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return d;
  }

  Element& operator+=(const Element& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_canonical(m, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_canonical(m, -c);
    return *this;
  }
  Element& operator*=(const S& s) {
    if (Traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      if (Traits::is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= -Traits::one(); }
  friend Element operator*(Element a, const S& s) { return a *= s; }
  friend Element operator*(const S& s, Element a) { return a *= s; }
  friend Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

  friend Element multiply(const Element& a, const Element& b) {
    a.check_compatible(b);
    Element out(a.space_, a.mode_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        m.reserve(ma.size() + mb.size());
        m.insert(m.end(), ma.begin(), ma.end());
        m.insert(m.end(), mb.begin(), mb.end());
        out.add_term(std::move(m), ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool neg = leading_negative(c);
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      out += term_string(m, neg ? -c : c);
      first = false;
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    if (m.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) s += (k ? "*" : "") + symbol_string(*space_, m[k]);
    return s;
  }

  void check_compatible(const Element& o) const {
    if (mode_ != o.mode_) throw std::invalid_argument("algebra elements in different modes");
    if (space_ != o.space_)
      throw std::invalid_argument("algebra elements over different symbol spaces");
  }

private:
  void add_canonical(const Monomial& m, const S& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  std::string term_string(const Monomial& m, const S& c) const {
    if (m.empty()) return Traits::str(c);
    std::string ms = monomial_string(m);
    if (c == Traits::one()) return ms;
    std::string cs = Traits::str(c);
    bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    return (compound ? "(" + cs + ")" : cs) + "*" + ms;
  }

  SpacePtr space_;
  Mode mode_ = Mode::commutative;
  Terms terms_;
};

using ExactElement = Element<GaussianRational>;
using FloatElement = Element<Complex>;

template <class S>
Element<S> convert_element(const ExactElement& x) {
  if constexpr (std::is_same_v<S, GaussianRational>) {
    return x;
  } else {
    Element<S> out(x.space(), x.mode());
    for (const auto& [m, c] : x.terms()) out.add_term(m, from_exact<S>(c));
    return out;
  }
}

template <class S>
bool approx_equal(const Element<S>& a, const Element<S>& b) {
  if constexpr (ScalarTraits<S>::exact) {
    return a == b;
  } else {
    double scale = 1.0;
    for (const auto& [m, c] : a.terms()) scale = std::max(scale, std::abs(c));
    for (const auto& [m, c] : b.terms()) scale = std::max(scale, std::abs(c));
    Element<S> d = a - b;
    for (const auto& [m, c] : d.terms())
      if (std::abs(c) > ScalarTraits<S>::tolerance * scale) return false;
    return true;
  }
}

template <class S>
using SymbolImage = std::function<Element<S>(const FieldSymbol&)>;

// Extends a map on field symbols to an algebra (anti-)automorphism. With
// antilinear set, coefficients are conjugated; with reverse set, factor order is
// reversed before multiplying the images.
template <class S>
Element<S> apply_morphism(const Element<S>& x, const SymbolImage<S>& image, bool antilinear, bool reverse) {
  using T = ScalarTraits<S>;
  std::map<FieldSymbol, Element<S>> cache;
  auto img = [&](const FieldSymbol& s) -> const Element<S>& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, image(s)).first;
    return it->second;
  };
  Element<S> out(x.space(), x.mode());
  for (const auto& [m, c] : x.terms()) {
    Element<S> term = Element<S>::constant(x.space(), x.mode(), antilinear ? T::conj(c) : c);
    if (reverse) {
      for (auto it = m.rbegin(); it != m.rend(); ++it) term = multiply(term, img(*it));
    } else {
      for (const auto& s : m) term = multiply(term, img(s));
    }
    out += term;
  }
  return out;
}

// Extends a map on field symbols to an even derivation (Leibniz rule).
template <class S>
Element<S> apply_derivation(const Element<S>& x, const SymbolImage<S>& image) {
  std::map<FieldSymbol, Element<S>> cache;
  Element<S> out(x.space(), x.mode());
  for (const auto& [m, c] : x.terms()) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      auto it = cache.find(m[k]);
      if (it == cache.end()) it = cache.emplace(m[k], image(m[k])).first;
      Element<S> left(x.space(), x.mode());
      left.add_term(Monomial(m.begin(), m.begin() + static_cast<long>(k)), c);
      Element<S> right(x.space(), x.mode());
      right.add_term(Monomial(m.begin() + static_cast<long>(k) + 1, m.end()), ScalarTraits<S>::one());
      out += multiply(multiply(left, it->second), right);
    }
  }
  return out;
}

template <class S>
Element<S> strong_reflection(const Element<S>& x) {
  SymbolImage<S> id = [&](const FieldSymbol& s) { return Element<S>::symbol(x.space(), x.mode(), s); };
  return apply_morphism(x, id, false, true);
}

// A complex-linear or anti-linear map on W given by its matrix on the basis:
// $(lambda_j) = sum_k matrix(j,k) lambda_k.
struct Involution {
  std::string name;
  ExactMatrix matrix;
  bool linear = true;

  static Involution identity(const SymbolSpace& w) { return {"id", ExactMatrix::identity(w.size()), true}; }
  static Involution star(const SymbolSpace& w) { return {"star", w.conjugation(), false}; }
  // hash_on_v acts on V coordinates (real matrix).
  static Involution hash(const SymbolSpace& w, const ExactMatrix& hash_on_v) {
    return {"hash", w.coords() * hash_on_v * w.coords_inv(), true};
  }
  static Involution star_hash(const SymbolSpace& w, const ExactMatrix& hash_on_v) {
    return {"starhash", w.coords().conj() * hash_on_v * w.coords_inv(), false};
  }

  bool involutive() const {
    ExactMatrix sq = linear ? matrix * matrix : matrix.conj() * matrix;
    return sq == ExactMatrix::identity(matrix.rows());
  }
  void validate() const {
    if (!involutive()) throw std::invalid_argument("involution '" + name + "' does not square to the identity on W");
  }
};

template <class S>
Element<S> lambda_combination(const SpacePtr& space, Mode mode, const std::vector<S>& row,
                              const std::vector<std::uint8_t>& derivs) {
  Element<S> e(space, mode);
  for (std::size_t k = 0; k < row.size(); ++k)
    if (!ScalarTraits<S>::is_zero(row[k])) e.add_term({FieldSymbol(static_cast<std::uint32_t>(k), derivs)}, row[k]);
  return e;
}

template <class S>
Element<S> conjugation_C(const Involution& dollar, const Element<S>& x) {
  dollar.validate();
  Matrix<S> m = convert_matrix<S>(dollar.matrix);
  SymbolImage<S> img = [&](const FieldSymbol& s) {
    return lambda_combination<S>(x.space(), x.mode(), m.row(s.lambda), s.derivs);
  };
  return apply_morphism(x, img, !dollar.linear, false);
}

template <class S>
Element<S> dagger(const Involution& dollar, const Element<S>& x) {
  return strong_reflection(conjugation_C(dollar, x));
}

}  // namespace cptlab
