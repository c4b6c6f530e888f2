#pragma once

#include "cptlab/representations.hpp"

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cptlab {

enum class ActionKind { classical, quantum };

inline const char* action_name(ActionKind k) { return k == ActionKind::classical ? "classical" : "quantum"; }

// A group argument: omega on M, plus a cover element when the content is spinorial.
template <class S>
struct GroupElement {
  std::string name;
  Matrix<S> omega;
  std::optional<CoverElement<S>> cover;

  static GroupElement of_matrix(std::string name, Matrix<S> omega) { return {std::move(name), std::move(omega), std::nullopt}; }
  static GroupElement of_cover(std::string name, CoverElement<S> c) {
    Matrix<S> omega = cover_project_complex(c);
    return {std::move(name), std::move(omega), std::move(c)};
  }

  GroupElement inverse() const {
    GroupElement out{name + "^-1", cptlab::inverse(omega), std::nullopt};
    if (cover) out.cover = cover->inverse();
    return out;
  }
  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    GroupElement out{x.name + "*" + y.name, x.omega * y.omega, std::nullopt};
    if (x.cover && y.cover) out.cover = (*x.cover) * (*y.cover);
    return out;
  }
};

using ExactElementG = GroupElement<GaussianRational>;
using FloatElementG = GroupElement<Complex>;

template <class S>
GroupElement<S> convert_element(const ExactElementG& g) {
  GroupElement<S> out{g.name, convert_matrix<S>(g.omega), std::nullopt};
  if (g.cover) out.cover = convert_cover<S>(*g.cover);
  return out;
}

// A map on the symbol algebra: lambda_j -> sum_k w(j,k) lambda_k, derivative
// directions pushed forward by omega (column mu = image of e_mu), extended as an
// algebra (anti-)automorphism, or as a derivation when `derivation` is set.
template <class S>
struct SymbolMap {
  std::string name;
  Matrix<S> w;
  bool linear = true;
  std::optional<Matrix<S>> omega;
  bool reverse = false;
  bool derivation = false;
};

template <class S>
SymbolMap<S> identity_map(const SymbolSpace& space) {
  return {"id", Matrix<S>::identity(space.size()), true, std::nullopt, false, false};
}

template <class S>
SymbolMap<S> involution_map(const Involution& dollar) {
  dollar.validate();
  return {"C_" + dollar.name, convert_matrix<S>(dollar.matrix), dollar.linear, std::nullopt, false, false};
}

template <class S>
SymbolMap<S> strong_reflection_map(const SymbolSpace& space) {
  return {"S", Matrix<S>::identity(space.size()), true, std::nullopt, true, false};
}

// outer o inner.
template <class S>
SymbolMap<S> compose(const SymbolMap<S>& outer, const SymbolMap<S>& inner) {
  if (outer.derivation || inner.derivation) throw std::invalid_argument("compose: derivations do not compose as automorphisms");
  auto twist = [&](const Matrix<S>& m) { return outer.linear ? m : m.conj(); };
  SymbolMap<S> out;
  out.name = outer.name + "o" + inner.name;
  out.w = twist(inner.w) * outer.w;
  out.linear = outer.linear == inner.linear;
  out.reverse = outer.reverse != inner.reverse;
  if (outer.omega && inner.omega) out.omega = (*outer.omega) * twist(*inner.omega);
  else if (outer.omega) out.omega = outer.omega;
  else if (inner.omega) out.omega = twist(*inner.omega);
  return out;
}

namespace detail {

// Push a derivative multiset forward: prod_i (sum_nu omega(nu, mu_i) e_nu).
template <class S>
std::map<std::vector<std::uint8_t>, S> expand_derivs(const std::vector<std::uint8_t>& derivs, const Matrix<S>& omega) {
  std::map<std::vector<std::uint8_t>, S> acc{{{}, ScalarTraits<S>::one()}};
  for (auto mu : derivs) {
    std::map<std::vector<std::uint8_t>, S> next;
    for (const auto& [dirs, c] : acc)
      for (std::size_t nu = 0; nu < omega.rows(); ++nu) {
        const S& f = omega(nu, mu);
        if (ScalarTraits<S>::is_zero(f)) continue;
        auto d = dirs;
        d.insert(std::upper_bound(d.begin(), d.end(), static_cast<std::uint8_t>(nu)), static_cast<std::uint8_t>(nu));
        auto [it, fresh] = next.emplace(d, c * f);
        if (!fresh) it->second = it->second + c * f;
      }
    acc.clear();
    for (auto& [d, c] : next)
      if (!ScalarTraits<S>::is_zero(c)) acc.emplace(d, c);
  }
  return acc;
}

}  // namespace detail

template <class S>
Element<S> apply_map(const SymbolMap<S>& map, const Element<S>& x) {
  const SpacePtr& space = x.space();
  if (map.w.rows() != space->size()) throw std::invalid_argument("symbol map dimension does not match the symbol space");
  const Mode mode = x.mode();
  if (map.derivation) {
    SymbolImage<S> img = [&](const FieldSymbol& s) {
      Element<S> e = lambda_combination<S>(space, mode, map.w.row(s.lambda), s.derivs);
      if (map.omega)
        for (std::size_t i = 0; i < s.derivs.size(); ++i) {
          if (i > 0 && s.derivs[i] == s.derivs[i - 1]) continue;
          // Multiset: the slot appears `count` times, each contributing.
          long count = std::count(s.derivs.begin(), s.derivs.end(), s.derivs[i]);
          for (std::size_t nu = 0; nu < map.omega->rows(); ++nu) {
            const S& f = (*map.omega)(nu, s.derivs[i]);
            if (ScalarTraits<S>::is_zero(f)) continue;
            auto d = s.derivs;
            d[i] = static_cast<std::uint8_t>(nu);
            e.add_term({FieldSymbol(s.lambda, d)}, f * from_int<S>(count));
          }
        }
      return e;
    };
    return apply_derivation(x, img);
  }
  SymbolImage<S> img = [&](const FieldSymbol& s) {
    Element<S> e(space, mode);
    std::vector<S> row = map.w.row(s.lambda);
    if (!map.omega) return lambda_combination<S>(space, mode, row, s.derivs);
    for (const auto& [dirs, c] : detail::expand_derivs(s.derivs, *map.omega))
      for (std::size_t k = 0; k < row.size(); ++k)
        if (!ScalarTraits<S>::is_zero(row[k])) e.add_term({FieldSymbol(static_cast<std::uint32_t>(k), dirs)}, row[k] * c);
    return e;
  };
  return apply_morphism(x, img, !map.linear, map.reverse);
}

// ---------------------------------------------------------------------------

template <class S>
Matrix<S> w_matrix(const FieldContent& fc, const Matrix<S>& on_v) {
  return convert_matrix<S>(fc.space()->coords()) * on_v * convert_matrix<S>(fc.space()->coords_inv());
}

// Component of a (real) group element; spinor content reads it off the cover.
template <class S>
Component element_component(const FieldContent& fc, const GroupElement<S>& g) {
  if (fc.spinorial() && !g.cover) throw std::invalid_argument("spinor content needs a cover element");
  if (g.cover) return classify_component(fc.spacetime(), cover_project(*g.cover));
  if (!is_real(g.omega)) throw std::invalid_argument("element '" + g.name + "' is complex: not in the real group");
  return classify_component(fc.spacetime(), g.omega);
}

template <class S>
bool is_time_reversing(const FieldContent& fc, const GroupElement<S>& g) {
  return time_reversing(element_component(fc, g));
}

// Classical action: Phi^lambda_xi -> Phi^{lambda o rho(g^-1)}_{omega(g) xi}, with the
// canonical extension on the time-reversing component (or the declared one).
// rho(g) on V for g in the proper group (rho' on the time-reversing component).
template <class S>
Matrix<S> rho_on_v(const FieldContent& fc, const GroupElement<S>& g, bool declared = false) {
  Component c = element_component(fc, g);
  if (!proper(c)) throw std::invalid_argument("element '" + g.name + "' lies outside the proper group");
  if (fc.spinorial()) return rho_prime(fc.rep(), fc.spacetime(), cover_argument(*g.cover), declared);
  return rho_prime(fc.rep(), fc.spacetime(), RepArgument<S>{g.omega, std::nullopt, false}, declared);
}

template <class S>
SymbolMap<S> classical_action(const FieldContent& fc, const GroupElement<S>& g, bool declared = false) {
  Matrix<S> v = rho_on_v(fc, g.inverse(), declared);
  return {"rho(" + g.name + ")", w_matrix(fc, v), true, g.omega, false, false};
}

// Classical action with an explicit matrix of rho(g^-1) on V.
template <class S>
SymbolMap<S> action_from_v(const FieldContent& fc, std::string name, const Matrix<S>& rho_inv, const Matrix<S>& omega) {
  return {std::move(name), w_matrix(fc, rho_inv), true, omega, false, false};
}

template <class S>
SymbolMap<S> star_map(const FieldContent& fc) {
  return involution_map<S>(Involution::star(*fc.space()));
}

template <class S>
SymbolMap<S> quantum_action(const FieldContent& fc, const GroupElement<S>& g, bool declared = false) {
  SymbolMap<S> m = classical_action(fc, g, declared);
  if (!is_time_reversing(fc, g)) return m;
  SymbolMap<S> out = compose(star_map<S>(fc), m);
  out.name = "rho_q(" + g.name + ")";
  return out;
}

template <class S>
SymbolMap<S> group_action(ActionKind kind, const FieldContent& fc, const GroupElement<S>& g, bool declared = false) {
  return kind == ActionKind::classical ? classical_action(fc, g, declared) : quantum_action(fc, g, declared);
}

// Action of the complexified group (holomorphic extension of the functor).
template <class S>
SymbolMap<S> complexified_action(const FieldContent& fc, const GroupElement<S>& g) {
  GroupElement<S> inv = g.inverse();
  Matrix<S> v = rep_matrix(fc.rep(), RepArgument<S>{inv.omega, inv.cover, false});
  return {"rho_c(" + g.name + ")", w_matrix(fc, v), true, g.omega, false, false};
}

// Action through rho_hol = Re rho_c + Im rho_c J on the real space V.
template <class S>
SymbolMap<S> holomorphic_action(const FieldContent& fc, const GroupElement<S>& g) {
  if (!fc.all_complex()) throw std::invalid_argument("holomorphic action needs every field to be complex");
  GroupElement<S> inv = g.inverse();
  Matrix<S> v = rho_hol(fc.rep(), RepArgument<S>{inv.omega, inv.cover, false}, convert_matrix<S>(fc.complex_structure()));
  return {"rho_hol(" + g.name + ")", w_matrix(fc, v), true, g.omega, false, false};
}

// Derivation d/dt rho(exp tX) at t = 0: lambda -> lambda o d rho(-X), xi -> X xi.
template <class S>
SymbolMap<S> infinitesimal_action(const FieldContent& fc, const Matrix<S>& x, std::string name = "X") {
  std::optional<Matrix<S>> spin;
  if (fc.spinorial()) spin = spin_generator_of(x);
  Matrix<S> d = rep_derivative(fc.rep(), x, spin);
  return {"d(" + name + ")", w_matrix(fc, Matrix<S>(-d)), true, x, false, true};
}

// ---------------------------------------------------------------------------

enum class ChargeClass { preserving, conjugating, both, neither };

inline const char* charge_class_name(ChargeClass c) {
  switch (c) {
    case ChargeClass::preserving: return "preserving";
    case ChargeClass::conjugating: return "conjugating";
    case ChargeClass::both: return "both";
    case ChargeClass::neither: return "neither";
  }
  return "?";
}

template <class S>
ChargeClass classify_charge(const SymbolSpace& space, const Matrix<S>& w) {
  const std::size_t n = space.size();
  if (w.rows() != n || w.cols() != n) throw std::invalid_argument("classify_charge: matrix does not match W");
  if constexpr (ScalarTraits<S>::exact) {
    if (determinant(w).is_zero()) throw std::invalid_argument("classify_charge: map is not invertible on W");
  } else {
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = w(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    if (svd.singularValues().minCoeff() < 1e-9 * std::max(1.0, svd.singularValues().maxCoeff()))
      throw std::invalid_argument("classify_charge: map is not invertible on W");
  }
  bool preserving = true, conjugating = true;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (ScalarTraits<S>::is_zero(w(j, k))) continue;
      Charge cj = space.entry(j).charge, ck = space.entry(k).charge;
      if (ck != cj) preserving = false;
      if (ck != flip(cj)) conjugating = false;
    }
  if (preserving && conjugating) return ChargeClass::both;
  if (preserving) return ChargeClass::preserving;
  if (conjugating) return ChargeClass::conjugating;
  return ChargeClass::neither;
}

// Exact non-orthochronous representative: (i, i) on the cover for spinor content.
inline ExactElementG pt_element(const FieldContent& fc) {
  if (fc.spinorial()) return ExactElementG::of_cover("PT", ExactCover::scalar(GaussianRational::i(), GaussianRational::i()));
  return ExactElementG::of_matrix("PT", pt_representative(fc.spacetime()));
}

// Random element of the identity component (cover element for spinor content).
inline FloatElementG sample_orthochronous(const FieldContent& fc, std::uint64_t seed, double scale = 0.5) {
  if (fc.spinorial()) return FloatElementG::of_cover("g" + std::to_string(seed), sample_cover(seed, scale));
  if (fc.spacetime().galilean) {
    const Spacetime& st = fc.spacetime();
    FloatMatrix x = lie_combination(st, gaussian_coefficients(seed, lie_basis(st).size(), scale));
    return FloatElementG::of_matrix("g" + std::to_string(seed), expm(x));
  }
  return FloatElementG::of_matrix("g" + std::to_string(seed), sample_proper_ortho(seed, fc.spacetime(), scale).g);
}

}  // namespace cptlab
