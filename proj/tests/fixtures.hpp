#pragma once

// Hand-built theories shared by several test files.

#include "cptlab/theories.hpp"

namespace cptlab::fixtures {

using G = GaussianRational;

inline const Spacetime m4 = Spacetime::lorentzian(1, 3);

inline ContentPtr content(std::vector<FieldDecl> fields, Spacetime st = m4) {
  return std::make_shared<const FieldContent>(st, std::move(fields));
}

inline ExactElement sym(const ContentPtr& fc, Mode mode, std::size_t field, int k, std::vector<std::uint8_t> d = {}, bool conj = false) {
  return ExactElement::symbol(fc->space(), mode, FieldSymbol(fc->symbol_index(field, k, conj), std::move(d)));
}

inline ExactElement one(const ContentPtr& fc, Mode mode) { return ExactElement::constant(fc->space(), mode, 1); }

// Maxwell: sum_b d_b F^{ab} - J^a, with F stored as antisym2 over pairs (a<b).
inline FormalTheory maxwell(bool pseudo) {
  auto j = pseudo ? rep::pseudo(rep::vector(4)) : rep::vector(4);
  auto fc = content({{"F", rep::antisym2(rep::vector(4)), false}, {"J", j, false}});
  auto pair_index = [](int a, int b) {
    int k = 0;
    for (int i = 0; i < 4; ++i)
      for (int l = i + 1; l < 4; ++l, ++k)
        if (i == a && l == b) return k;
    return -1;
  };
  std::vector<ExactElement> gens;
  for (int a = 0; a < 4; ++a) {
    ExactElement e = -sym(fc, Mode::commutative, 1, a);
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      G sign = a < b ? G(1) : G(-1);
      e += sym(fc, Mode::commutative, 0, pair_index(std::min(a, b), std::max(a, b)), {static_cast<std::uint8_t>(b)}) * sign;
    }
    gens.push_back(e);
  }
  return {pseudo ? "maxwell-pseudo" : "maxwell", fc, Mode::commutative, Interpretation::equation_set, gens, {}};
}

// Complex Klein-Gordon density: eta^{mn} d_m phi* d_n phi - m^2 phi* phi.
inline FormalTheory klein_gordon() {
  auto fc = content({{"phi", rep::trivial(2), true}});
  auto mode = Mode::commutative;
  ExactElement l(fc->space(), mode);
  for (int mu = 0; mu < 4; ++mu)
    l += sym(fc, mode, 0, 0, {static_cast<std::uint8_t>(mu)}, true) * sym(fc, mode, 0, 0, {static_cast<std::uint8_t>(mu)}) *
         G(m4.eta(mu));
  l -= sym(fc, mode, 0, 0, {}, true) * sym(fc, mode, 0, 0) * G(2);
  return {"klein-gordon", fc, mode, Interpretation::density, {l}, {}};
}

inline ContentPtr dirac_content() { return content({{"psi", rep::direct_sum(rep::weyl_left(), rep::weyl_right()), true}}); }

// psi-bar M psi = sum conj(psi)_a (gamma0 M)_{ab} psi_b.
inline ExactElement bilinear(const ContentPtr& fc, Mode mode, const ExactMatrix& m, std::uint8_t deriv_on_right = 255) {
  ExactMatrix g = gamma_matrix(0) * m;
  ExactElement out(fc->space(), mode);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (g(a, b).is_zero()) continue;
      std::vector<std::uint8_t> d;
      if (deriv_on_right != 255) d.push_back(deriv_on_right);
      out += sym(fc, mode, 0, a, {}, true) * sym(fc, mode, 0, b, d) * g(a, b);
    }
  return out;
}

inline FormalTheory dirac_equation(G mass = 1) {
  auto fc = dirac_content();
  auto mode = Mode::supercommutative;
  std::vector<ExactElement> gens;
  // -i gamma^mu d_mu psi + m psi.
  for (int a = 0; a < 4; ++a) {
    ExactElement e = sym(fc, mode, 0, a) * mass;
    for (int mu = 0; mu < 4; ++mu) {
      ExactMatrix g = gamma_matrix(mu);
      for (int b = 0; b < 4; ++b)
        if (!g(a, b).is_zero()) e += sym(fc, mode, 0, b, {static_cast<std::uint8_t>(mu)}) * (g(a, b) * -G::i());
    }
    gens.push_back(e);
  }
  return {"dirac-equation", fc, mode, Interpretation::equation_set, gens, {}};
}

inline FormalTheory dirac_lagrangian() {
  auto fc = dirac_content();
  auto mode = Mode::supercommutative;
  // (i/2)(psibar gamma^mu d_mu psi - d_mu psibar gamma^mu psi) - m psibar psi
  ExactElement l(fc->space(), mode);
  for (int mu = 0; mu < 4; ++mu) {
    ExactMatrix g = gamma_matrix(0) * gamma_matrix(mu);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        if (g(a, b).is_zero()) continue;
        auto du = static_cast<std::uint8_t>(mu);
        l += sym(fc, mode, 0, a, {}, true) * sym(fc, mode, 0, b, {du}) * (g(a, b) * G::i() * G::ratio(1, 2));
        l -= sym(fc, mode, 0, a, {du}, true) * sym(fc, mode, 0, b) * (g(a, b) * G::i() * G::ratio(1, 2));
      }
  }
  l -= bilinear(fc, mode, ExactMatrix::identity(4));
  return {"dirac-lagrangian", fc, mode, Interpretation::density, {l}, {}};
}

inline FormalTheory dirac_constraint(Mode mode) {
  auto fc = dirac_content();
  return {"dirac-constraint", fc, mode, Interpretation::equation_set, {bilinear(fc, mode, ExactMatrix::identity(4)) - one(fc, mode)}, {}};
}

}  // namespace cptlab::fixtures
