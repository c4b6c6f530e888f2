#pragma once

#include "cptlab/lorentz.hpp"
#include "cptlab/tensor_algebra.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cptlab {

enum class RepKind { trivial, vector, weyl_left, weyl_right, character, dual, tensor, direct_sum, antisym2, sym2, pseudo };

struct RepNode;
using RepPtr = std::shared_ptr<const RepNode>;

// Combinator tree for a real representation. `pseudo` multiplies by -1 on
// time-reversing elements; `character(k)` is the 1-dimensional 2D rep
// g -> e^{k j(g)} with g xi = e^{j(g)} xi for the null vector xi = e0 + e1.
struct RepNode {
  RepKind kind = RepKind::trivial;
  int n = 1;
  mpq_class k = 0;
  RepPtr a;
  RepPtr b;
  int dim = 0;
  bool spinorial = false;
  bool twisted = false;
};

namespace rep {

inline RepPtr make(RepNode node) { return std::make_shared<const RepNode>(std::move(node)); }

inline RepPtr trivial(int n = 1) {
  if (n < 1) throw std::invalid_argument("trivial(n) needs n >= 1");
  return make({RepKind::trivial, n, 0, nullptr, nullptr, n, false, false});
}
inline RepPtr vector(int d) { return make({RepKind::vector, d, 0, nullptr, nullptr, d, false, false}); }
inline RepPtr weyl_left() { return make({RepKind::weyl_left, 4, 0, nullptr, nullptr, 4, true, false}); }
inline RepPtr weyl_right() { return make({RepKind::weyl_right, 4, 0, nullptr, nullptr, 4, true, false}); }
inline RepPtr character(mpq_class k) { return make({RepKind::character, 1, std::move(k), nullptr, nullptr, 1, false, false}); }
inline RepPtr dual(RepPtr r) {
  int d = r->dim;
  bool s = r->spinorial, t = r->twisted;
  return make({RepKind::dual, 0, 0, std::move(r), nullptr, d, s, t});
}
inline RepPtr tensor(RepPtr x, RepPtr y) {
  int d = x->dim * y->dim;
  bool s = x->spinorial || y->spinorial, t = x->twisted || y->twisted;
  return make({RepKind::tensor, 0, 0, std::move(x), std::move(y), d, s, t});
}
inline RepPtr direct_sum(RepPtr x, RepPtr y) {
  int d = x->dim + y->dim;
  bool s = x->spinorial || y->spinorial, t = x->twisted || y->twisted;
  return make({RepKind::direct_sum, 0, 0, std::move(x), std::move(y), d, s, t});
}
inline RepPtr antisym2(RepPtr r) {
  int d = r->dim * (r->dim - 1) / 2;
  if (d < 1) throw std::invalid_argument("antisym2 of a 1-dimensional rep is zero");
  bool s = r->spinorial, t = r->twisted;
  return make({RepKind::antisym2, 0, 0, std::move(r), nullptr, d, s, t});
}
inline RepPtr sym2(RepPtr r) {
  int d = r->dim * (r->dim + 1) / 2;
  bool s = r->spinorial, t = r->twisted;
  return make({RepKind::sym2, 0, 0, std::move(r), nullptr, d, s, t});
}
inline RepPtr pseudo(RepPtr r) {
  int d = r->dim;
  bool s = r->spinorial;
  return make({RepKind::pseudo, 0, 0, std::move(r), nullptr, d, s, true});
}

inline std::string str(const RepPtr& r) {
  auto wrap = [](const RepPtr& c) {
    std::string s = str(c);
    return (c->kind == RepKind::tensor || c->kind == RepKind::direct_sum) ? "(" + s + ")" : s;
  };
  switch (r->kind) {
    case RepKind::trivial: return r->n == 1 ? "trivial" : "trivial(" + std::to_string(r->n) + ")";
    case RepKind::vector: return "vector";
    case RepKind::weyl_left: return "weyl_left";
    case RepKind::weyl_right: return "weyl_right";
    case RepKind::character: return "character(" + r->k.get_str() + ")";
    case RepKind::dual: return "dual(" + str(r->a) + ")";
    case RepKind::tensor: return wrap(r->a) + " (x) " + wrap(r->b);
    case RepKind::direct_sum: return wrap(r->a) + " (+) " + wrap(r->b);
    case RepKind::antisym2: return "antisym2(" + str(r->a) + ")";
    case RepKind::sym2: return "sym2(" + str(r->a) + ")";
    case RepKind::pseudo: return "pseudo(" + str(r->a) + ")";
  }
  return "?";
}

inline bool uses(const RepPtr& r, RepKind kind) {
  if (!r) return false;
  return r->kind == kind || uses(r->a, kind) || uses(r->b, kind);
}

}  // namespace rep

// [v] = U v for the real encoding of a Weyl spinor: (x+iy, z+iw, x-iy, z-iw).
template <class S>
Matrix<S> weyl_bracket() {
  using T = ScalarTraits<S>;
  S o = T::one(), i = T::imag_unit(), z = T::zero();
  return Matrix<S>{{o, i, z, z}, {z, z, o, i}, {o, -i, z, z}, {z, z, o, -i}};
}

// Embedding E and extraction P for the antisymmetric / symmetric square.
template <class S>
std::pair<Matrix<S>, Matrix<S>> square_maps(int n, bool symmetric) {
  using T = ScalarTraits<S>;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = symmetric ? i : i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Matrix<S> e(n * n, pairs.size()), p(pairs.size(), n * n);
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    auto [i, j] = pairs[c];
    e(i * n + j, c) = T::one();
    if (i != j) e(j * n + i, c) = symmetric ? T::one() : -T::one();
    p(c, i * n + j) = T::one();
  }
  return {e, p};
}

template <class S>
struct RepArgument {
  Matrix<S> omega;
  std::optional<CoverElement<S>> cover;
  bool twist = false;
};

namespace detail {

template <class S>
S character_value(const RepNode& r, const Matrix<S>& omega) {
  S e = omega(0, 0) + omega(0, 1);
  if constexpr (ScalarTraits<S>::exact) {
    if (!e.is_real() || sgn(e.re()) <= 0)
      throw std::invalid_argument("character rep: element does not preserve the null ray (no real log)");
    mpz_class num = r.k.get_num(), den = r.k.get_den();
    mpq_class base = e.re(), root;
    if (!exact_root(base, den.get_ui(), root)) throw std::invalid_argument("character rep: value is irrational");
    mpq_class out = 1;
    long p = num.get_si();
    for (long t = 0; t < std::abs(p); ++t) out *= root;
    if (p < 0) out = 1 / out;
    return GaussianRational(out);
  } else {
    if (std::abs(e.imag()) > 1e-12 || e.real() <= 0)
      throw std::invalid_argument("character rep: element does not preserve the null ray (no real log)");
    return Complex(std::pow(e.real(), r.k.get_d()), 0.0);
  }
}

}  // namespace detail

// Matrix of the rep's functor at a (possibly complex) group argument.
template <class S>
Matrix<S> rep_matrix(const RepPtr& r, const RepArgument<S>& g) {
  using T = ScalarTraits<S>;
  switch (r->kind) {
    case RepKind::trivial: return Matrix<S>::identity(r->n);
    case RepKind::vector: return g.omega;
    case RepKind::weyl_left:
    case RepKind::weyl_right: {
      if (!g.cover) throw std::invalid_argument("spinor rep needs a cover element");
      Matrix<S> u = weyl_bracket<S>();
      Matrix<S> blocks = r->kind == RepKind::weyl_left
                             ? block_diag(g.cover->a, g.cover->b)
                             : block_diag(inverse(g.cover->b.transpose()), inverse(g.cover->a.transpose()));
      return inverse(u) * blocks * u;
    }
    case RepKind::character: return Matrix<S>::identity(1) * detail::character_value(*r, g.omega);
    case RepKind::dual: return inverse(rep_matrix(r->a, g)).transpose();
    case RepKind::tensor: return kron(rep_matrix(r->a, g), rep_matrix(r->b, g));
    case RepKind::direct_sum: return block_diag(rep_matrix(r->a, g), rep_matrix(r->b, g));
    case RepKind::antisym2:
    case RepKind::sym2: {
      auto [e, p] = square_maps<S>(r->a->dim, r->kind == RepKind::sym2);
      Matrix<S> m = rep_matrix(r->a, g);
      return p * kron(m, m) * e;
    }
    case RepKind::pseudo: {
      Matrix<S> m = rep_matrix(r->a, g);
      return g.twist ? Matrix<S>(-m) : m;
    }
  }
  (void)T::one();
  throw std::logic_error("unknown rep kind");
}

// Lie algebra action d rho(X); `spin` is the sl2 image of X (needed for spinors).
template <class S>
Matrix<S> rep_derivative(const RepPtr& r, const Matrix<S>& x, const std::optional<Matrix<S>>& spin) {
  switch (r->kind) {
    case RepKind::trivial: return Matrix<S>(r->n, r->n);
    case RepKind::vector: return x;
    case RepKind::weyl_left:
    case RepKind::weyl_right: {
      if (!spin) throw std::invalid_argument("spinor rep derivative needs the sl2 image");
      Matrix<S> u = weyl_bracket<S>();
      const Matrix<S>& a = *spin;
      Matrix<S> blocks = r->kind == RepKind::weyl_left ? block_diag(a, a.conj())
                                                       : block_diag(Matrix<S>(-a.conj().transpose()), Matrix<S>(-a.transpose()));
      return inverse(u) * blocks * u;
    }
    case RepKind::character: {
      S mu = x(0, 0) + x(0, 1);
      return Matrix<S>::identity(1) * (mu * from_exact<S>(GaussianRational(r->k)));
    }
    case RepKind::dual: return -rep_derivative(r->a, x, spin).transpose();
    case RepKind::tensor: {
      Matrix<S> da = rep_derivative(r->a, x, spin), db = rep_derivative(r->b, x, spin);
      return kron(da, Matrix<S>::identity(r->b->dim)) + kron(Matrix<S>::identity(r->a->dim), db);
    }
    case RepKind::direct_sum: return block_diag(rep_derivative(r->a, x, spin), rep_derivative(r->b, x, spin));
    case RepKind::antisym2:
    case RepKind::sym2: {
      auto [e, p] = square_maps<S>(r->a->dim, r->kind == RepKind::sym2);
      Matrix<S> m = rep_derivative(r->a, x, spin);
      Matrix<S> id = Matrix<S>::identity(r->a->dim);
      return p * (kron(m, id) + kron(id, m)) * e;
    }
    case RepKind::pseudo: return rep_derivative(r->a, x, spin);
  }
  throw std::logic_error("unknown rep kind");
}

// sl2 image of a (1,3) Lie algebra element, by linearity over the plane basis.
template <class S>
Matrix<S> spin_generator_of(const Matrix<S>& x) {
  static const Spacetime st = Spacetime::lorentzian(1, 3);
  static const std::vector<ExactMatrix> images = [] {
    std::vector<ExactMatrix> out;
    for (const auto& f : lie_basis(st)) out.push_back(spin_generator(f));
    return out;
  }();
  auto planes = lie_basis_planes(st);
  Matrix<S> a(2, 2);
  for (std::size_t k = 0; k < planes.size(); ++k) {
    auto [i, j] = planes[k];
    S c = x(i, j) * from_int<S>(st.eta(j));
    a += convert_matrix<S>(images[k]) * c;
  }
  return a;
}

template <class S>
RepArgument<S> cover_argument(const CoverElement<S>& c) {
  return {cover_project_complex(c), c, false};
}

// rho(tau): the grading operator. Tensor reps factor through L^+_up, so it is 1.
template <class S>
Matrix<S> grading_operator(const RepPtr& r, int spacetime_dim) {
  if (!r->spinorial) return Matrix<S>::identity(r->dim);
  (void)spacetime_dim;
  return rep_matrix(r, cover_argument(CoverElement<S>::tau()));
}

template <class S>
std::pair<std::vector<S>, std::vector<S>> grade_split(const RepPtr& r, int spacetime_dim, const std::vector<S>& v) {
  Matrix<S> t = grading_operator<S>(r, spacetime_dim);
  std::vector<S> tv = t.apply(v);
  S half = from_exact<S>(GaussianRational::ratio(1, 2));
  std::vector<S> v0(v.size()), v1(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    v0[k] = (v[k] + tv[k]) * half;
    v1[k] = (v[k] - tv[k]) * half;
  }
  return {v0, v1};
}

// rho on the orthochronous group (tensor reps: omega real in L^+_up; spinors: cover in L~^+_up).
template <class S>
Matrix<S> rho(const RepPtr& r, const Spacetime& st, const RepArgument<S>& g) {
  if (r->spinorial) {
    if (!g.cover) throw std::invalid_argument("rho: spinor rep needs a cover element");
    if (classify_cover(*g.cover) != CoverComponent::orthochronous)
      throw std::invalid_argument("rho: cover element is not orthochronous (use rho_prime)");
  } else if (classify_component(st, g.omega) != Component::up_plus) {
    throw std::invalid_argument("rho: element is not in L^+_up (use rho_prime)");
  }
  return rep_matrix(r, RepArgument<S>{g.omega, g.cover, false});
}

// Canonical extension to the time-reversing proper component (twists discarded
// unless `declared` is set).
template <class S>
Matrix<S> rho_prime(const RepPtr& r, const Spacetime& st, const RepArgument<S>& g, bool declared = false) {
  using T = ScalarTraits<S>;
  if (!r->spinorial) {
    Component c = classify_component(st, g.omega);
    if (!proper(c)) throw std::invalid_argument("rho_prime: element in an improper component");
    return rep_matrix(r, RepArgument<S>{g.omega, std::nullopt, declared && time_reversing(c)});
  }
  if (!g.cover) throw std::invalid_argument("rho_prime: spinor rep needs a cover element");
  CoverComponent cc = classify_cover(*g.cover);
  if (cc == CoverComponent::orthochronous) return rep_matrix(r, RepArgument<S>{g.omega, g.cover, false});
  if (cc != CoverComponent::down) throw std::invalid_argument("rho_prime: cover element not in L~^+_down");
  CoverElement<S> h = CoverElement<S>::big_i().inverse() * (*g.cover);
  Matrix<S> base = rep_matrix(r, RepArgument<S>{cover_project_complex(h), h, declared});
  Matrix<S> tau = grading_operator<S>(r, st.dim());
  Matrix<S> id = Matrix<S>::identity(r->dim);
  S half = from_exact<S>(GaussianRational::ratio(1, 2));
  Matrix<S> p0 = (id + tau) * half, p1 = (id - tau) * half;
  Matrix<S> out = base * (p0 + p1 * T::imag_unit());
  if (!is_real(out)) throw std::logic_error("rho_prime: result is not real");
  return out;
}

// Holomorphic extension for a complex structure J commuting with rho:
// Re(rho_c(g)) + Im(rho_c(g)) J.
template <class S>
Matrix<S> rho_hol(const RepPtr& r, const RepArgument<S>& g, const Matrix<S>& j) {
  using T = ScalarTraits<S>;
  Matrix<S> c = rep_matrix(r, RepArgument<S>{g.omega, g.cover, false});
  if (!approx_equal(Matrix<S>(c * j), Matrix<S>(j * c))) throw std::invalid_argument("rho_hol: rep is not complex-linear for J");
  S half = from_exact<S>(GaussianRational::ratio(1, 2));
  S i = T::imag_unit();
  Matrix<S> re = (c + c.conj()) * half;
  Matrix<S> im = (c - c.conj()) * (half * -i);
  return re + im * j;
}

// ---------------------------------------------------------------------------
// Field content: fields with reps over a spacetime, and the W basis they induce.

struct FieldDecl {
  std::string name;
  RepPtr rep;
  bool complex = false;
};

class FieldContent {
public:
  FieldContent(Spacetime st, std::vector<FieldDecl> fields) : st_(st), fields_(std::move(fields)) {
    if (fields_.empty()) throw std::invalid_argument("field content needs at least one field");
    total_ = fields_.front().rep;
    for (std::size_t f = 1; f < fields_.size(); ++f) total_ = rep::direct_sum(total_, fields_[f].rep);
    if (total_->spinorial && !st_.minkowski4())
      throw std::invalid_argument("spinor reps are only available in signature (1,3)");
    if (rep::uses(total_, RepKind::character) && (st_.galilean || st_.dim() != 2))
      throw std::invalid_argument("character reps are only available in two dimensions");
    build();
  }

  const Spacetime& spacetime() const { return st_; }
  const std::vector<FieldDecl>& fields() const { return fields_; }
  const RepPtr& rep() const { return total_; }
  const SpacePtr& space() const { return space_; }
  std::size_t v_dim() const { return static_cast<std::size_t>(total_->dim); }
  bool spinorial() const { return total_->spinorial; }
  std::size_t offset(std::size_t field) const { return offsets_.at(field); }
  const ExactMatrix& grading() const { return tau_; }
  // Complex structure: (x, y) -> (-y, x) on each complex pair, zero on real fields.
  const ExactMatrix& complex_structure() const { return j_; }
  bool all_complex() const {
    for (const auto& f : fields_)
      if (!f.complex) return false;
    return true;
  }
  // Internal charge conjugation #: (x, y) -> (x, -y) on complex pairs.
  ExactMatrix default_hash() const {
    ExactMatrix h = ExactMatrix::identity(v_dim());
    for (std::size_t f = 0; f < fields_.size(); ++f) {
      if (!fields_[f].complex) continue;
      for (int k = 1; k < fields_[f].rep->dim; k += 2) h(offsets_[f] + k, offsets_[f] + k) = -1;
    }
    return h;
  }

  int field_index(const std::string& name) const {
    for (std::size_t f = 0; f < fields_.size(); ++f)
      if (fields_[f].name == name) return static_cast<int>(f);
    return -1;
  }
  // Number of addressable components: real dim, or half of it for complex fields.
  int components(std::size_t field) const {
    return fields_.at(field).complex ? fields_[field].rep->dim / 2 : fields_[field].rep->dim;
  }
  // W basis index of component k of a field (conjugated partner for complex fields if conj).
  std::uint32_t symbol_index(std::size_t field, int k, bool conj = false) const {
    if (k < 0 || k >= components(field)) throw std::out_of_range("component index out of range");
    std::size_t base = w_offsets_.at(field);
    if (!fields_[field].complex) return static_cast<std::uint32_t>(base + k);
    return static_cast<std::uint32_t>(base + k + (conj ? components(field) : 0));
  }

private:
  void build() {
    const std::size_t n = v_dim();
    tau_ = grading_operator<GaussianRational>(total_, st_.dim());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == k) {
          if (tau_(i, i) != GaussianRational(1) && tau_(i, i) != GaussianRational(-1))
            throw std::logic_error("grading operator is not a sign on coordinates");
        } else if (!tau_(i, k).is_zero()) {
          throw std::logic_error("grading operator is not diagonal in the coordinate basis");
        }
      }
    ExactMatrix b(n, n);
    j_ = ExactMatrix(n, n);
    std::vector<BasisEntry> basis;
    std::size_t off = 0;
    for (const auto& f : fields_) {
      offsets_.push_back(off);
      w_offsets_.push_back(basis.size());
      const int d = f.rep->dim;
      if (!f.complex) {
        for (int k = 0; k < d; ++k) {
          b(basis.size(), off + k) = 1;
          basis.push_back({f.name + "[" + std::to_string(k) + "]", grade_at(off + k), Charge::zero});
        }
      } else {
        if (d % 2) throw std::invalid_argument("complex field '" + f.name + "' needs an even-dimensional rep");
        for (int k = 0; k < d / 2; ++k) {
          if (grade_at(off + 2 * k) != grade_at(off + 2 * k + 1))
            throw std::invalid_argument("complex field '" + f.name + "': pair mixes grades");
          b(basis.size(), off + 2 * k) = 1;
          b(basis.size(), off + 2 * k + 1) = GaussianRational::i();
          basis.push_back({f.name + "[" + std::to_string(k) + "]", grade_at(off + 2 * k), Charge::plus});
          j_(off + 2 * k, off + 2 * k + 1) = -1;
          j_(off + 2 * k + 1, off + 2 * k) = 1;
        }
        for (int k = 0; k < d / 2; ++k) {
          b(basis.size(), off + 2 * k) = 1;
          b(basis.size(), off + 2 * k + 1) = -GaussianRational::i();
          basis.push_back({"conj(" + f.name + ")[" + std::to_string(k) + "]", grade_at(off + 2 * k), Charge::minus});
        }
      }
      off += d;
    }
    space_ = std::make_shared<SymbolSpace>(st_.dim(), basis, b);
  }

  int grade_at(std::size_t coord) const { return tau_(coord, coord) == GaussianRational(1) ? 0 : 1; }

  Spacetime st_;
  std::vector<FieldDecl> fields_;
  RepPtr total_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> w_offsets_;
  ExactMatrix tau_;
  ExactMatrix j_;
  SpacePtr space_;
};

using ContentPtr = std::shared_ptr<const FieldContent>;

// ---------------------------------------------------------------------------
// Chiral-basis gamma matrices acting on (psi_L, psi_R), with psi_L -> A psi_L.
// gamma^mu = [[0, sigmabar^mu], [sigma^mu, 0]], sigma = (1, s), sigmabar = (1, -s).

inline ExactMatrix gamma_matrix(int mu) {
  ExactMatrix s = bracket<GaussianRational>(mu);
  ExactMatrix sbar = mu == 0 ? s : ExactMatrix(-s);
  ExactMatrix g(4, 4);
  g.set_block(0, 2, sbar);
  g.set_block(2, 0, s);
  return g;
}

inline ExactMatrix gamma5() {
  return gamma_matrix(0) * gamma_matrix(1) * gamma_matrix(2) * gamma_matrix(3) * GaussianRational::i();
}

}  // namespace cptlab
