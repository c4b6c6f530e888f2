#pragma once

#include "cptlab/clifford.hpp"
#include "cptlab/lorentz.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace cptlab {

struct AxiomResult {
  std::string name;
  bool pass = false;
  std::string evidence;
};

struct AxiomReport {
  Spacetime spacetime;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomResult> axioms;

  bool all_pass() const {
    for (const auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }
  const AxiomResult& at(const std::string& name) const {
    for (const auto& a : axioms)
      if (a.name == name) return a;
    throw std::out_of_range("no axiom " + name);
  }
};

namespace detail {

// Orthogonal polar factor g (g^T g)^{-1/2} of a real matrix.
inline FloatMatrix polar_factor(const FloatMatrix& g) {
  const int d = static_cast<int>(g.rows());
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = g(i, j).real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.transpose() * m);
  Eigen::MatrixXd inv_sqrt = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                             es.eigenvectors().transpose();
  Eigen::MatrixXd u = m * inv_sqrt;
  FloatMatrix out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = u(i, j);
  return out;
}

// Polar factor lies in SO(p) x SO(q).
inline bool polar_in_identity_block(const Spacetime& st, const FloatMatrix& g) {
  FloatMatrix u = polar_factor(g);
  const int p = st.p, d = st.dim();
  for (int i = 0; i < p; ++i)
    for (int j = p; j < d; ++j)
      if (std::abs(u(i, j)) > 1e-6 || std::abs(u(j, i)) > 1e-6) return false;
  return determinant(u.block(0, 0, p, p)).real() > 0 && determinant(u.block(p, p, d - p, d - p)).real() > 0;
}

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

inline AxiomReport verify_galilean(const Spacetime& st, int samples, std::uint64_t seed) {
  AxiomReport rep{st, samples, seed, {}};
  const int d = st.dim();
  bool ok = true;
  for (int k = 0; k < samples; ++k) {
    LorentzSample s = sample_proper_ortho(seed + k, st);
    ok = ok && s.component == Component::up_plus &&
         determinant(s.g.block(1, 1, d - 1, d - 1)).real() > 0;
  }
  rep.axioms.push_back({"PT-1", ok, std::to_string(samples) + " exp-samples tagged L^+_up with rotation block in SO(d-1)"});
  // Complexified Lie algebra has zero time row, so every complex group element has tt-entry 1.
  double worst = 0;
  for (int k = 0; k < samples; ++k) {
    auto re = gaussian_coefficients(seed + 1000 + k, lie_basis(st).size(), 0.5);
    auto im = gaussian_coefficients(seed + 2000 + k, lie_basis(st).size(), 0.5);
    FloatMatrix x = lie_combination(st, re) + lie_combination(st, im) * Complex(0, 1);
    FloatMatrix g = expm(x);
    worst = std::max(worst, std::abs(g(0, 0) - 1.0));
  }
  ExactMatrix g0 = pt_representative(st);
  std::string ev = "complex samples have tt-entry 1 (max deviation " + fmt(worst) + ") but the time reversal " +
                   g0.str() + " has tt-entry -1";
  rep.axioms.push_back({"PT-2", false, ev});
  rep.axioms.push_back({"PT-3", false, "no time-reversing element lies in the complexification, so none is conjugation-fixed"});
  rep.axioms.push_back({"PT-4", false, "no complex Lorentz group to cover (Galilean structure)"});
  rep.axioms.push_back({"PT-5", false, "undefined without PT-2..PT-4"});
  return rep;
}

}  // namespace detail

// Sampled evidence for PT-1..PT-5 through the Clifford/Pin realization.
inline AxiomReport verify_axioms(const Spacetime& st, int samples, std::uint64_t seed) {
  if (st.galilean) return detail::verify_galilean(st, samples, seed);
  if (st.dim() > 6) throw std::invalid_argument("verify_axioms supports p+q <= 6");
  using detail::fmt;
  AxiomReport rep{st, samples, seed, {}};
  const int d = st.dim();
  const auto eta = metric_diagonal(st);
  const std::size_t nlie = lie_basis(st).size();
  const Clifford<Complex> minus_one = Clifford<Complex>::scalar(eta, -1.0);

  // Orthochronous samples with their spin lifts.
  std::vector<FloatMatrix> g;
  std::vector<Clifford<Complex>> h;
  double lift_err = 0;
  for (int k = 0; k < samples; ++k) {
    auto c = gaussian_coefficients(seed + k, nlie, 0.5);
    g.push_back(real_part(expm(lie_combination(st, c))));
    std::vector<Complex> cc(c.begin(), c.end());
    h.push_back(clifford_exp(spin_bivector<Complex>(st, cc)));
    lift_err = std::max(lift_err, (clifford_adjoint(h.back()) - g.back()).max_abs());
  }

  // PT-1: exp-samples tag L^+_up, and orthochronous proper products of random
  // reflections retract onto SO(p) x SO(q).
  {
    bool ok = true;
    for (const auto& gk : g) ok = ok && classify_component(st, gk) == Component::up_plus && detail::polar_in_identity_block(st, gk);
    int reflection_checks = 0;
    std::mt19937_64 rng(seed ^ 0x5eedu);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int k = 0; k < samples; ++k) {
      std::vector<std::vector<Complex>> factors;
      for (int f = 0; f < 4; ++f) {
        std::vector<Complex> v(d);
        double len2 = 0;
        for (auto& x : v) {
          x = dist(rng);
          len2 += std::norm(x);
        }
        double n = std::abs(eta_form(eta, v, v));
        if (n < 0.2 * len2) continue;
        for (auto& x : v) x /= std::sqrt(n);
        factors.push_back(v);
      }
      FloatMatrix m = real_part(pin_project(eta, factors));
      if (classify_component(st, m) != Component::up_plus) continue;
      ++reflection_checks;
      ok = ok && detail::polar_in_identity_block(st, m);
    }
    rep.axioms.push_back({"PT-1", ok,
                          std::to_string(samples) + " exp-samples tagged L^+_up; " + std::to_string(reflection_checks) +
                              " reflection products in L^+_up have polar factor in SO(p)xSO(q)"});
  }

  // A real rotation plane (two axes of equal metric sign) carries a loop whose lift ends at -1.
  int pi = -1, pj = -1;
  for (int i = 0; i < d && pi < 0; ++i)
    for (int j = i + 1; j < d; ++j)
      if (eta[i] == eta[j]) {
        pi = i;
        pj = j;
        break;
      }
  bool loop_to_minus_one = false;
  std::string loop_ev;
  if (pi >= 0) {
    Clifford<Complex> b = Clifford<Complex>::blade(eta, (1u << pi) | (1u << pj), M_PI);
    Clifford<Complex> end = clifford_exp(b);
    loop_to_minus_one = approx_equal(end, minus_one);
    loop_ev = "lift of the 2pi rotation in plane (" + std::to_string(pi) + "," + std::to_string(pj) + ") ends at " +
              (loop_to_minus_one ? "-1" : "?");
  } else {
    loop_ev = "no real rotation plane: L^+_up is simply connected, so no real loop lifts to -1";
  }

  ExactMatrix g0 = pt_representative(st);
  auto h0_factors = pt_lift_factors(st);
  Clifford<GaussianRational> h0x = pt_lift(st);
  Clifford<Complex> h0(eta);
  for (std::uint32_t m = 0; m < h0.blades(); ++m) h0[m] = h0x[m].to_complex();
  bool h0_projects = pin_project(eta, h0_factors) == g0 && clifford_adjoint(h0x) == g0;

  // PT-2: L_+ inside the complexification of L^+_up.
  {
    bool ok = loop_to_minus_one && h0_projects;
    double iso = 0;
    for (const auto& gk : g) {
      FloatMatrix t = to_float(g0) * gk;
      FloatMatrix eta_f = to_float(st.metric());
      iso = std::max(iso, (t.transpose() * eta_f * t - eta_f).max_abs());
      ok = ok && std::abs(determinant(t) - 1.0) < 1e-9;
    }
    std::string ev = loop_ev + "; exact lift of " + g0.str() + " is an even product of eta=+1 vectors projecting onto it" +
                     (h0_projects ? "" : " (FAILED)") + "; L_down samples: isometry error " + fmt(iso);
    if (!loop_to_minus_one)
      ev += "; complexification of L^+_up is not L_+(C), time reversal not contained";
    rep.axioms.push_back({"PT-2", ok, ev});
  }

  // PT-3: L_+ elements are fixed by conjugation in L^+_up(C) = aP_+ / K.
  {
    bool ok = true;
    int down_fixed = 0;
    for (const auto& hk : h) {
      // Real lifts are fixed outright.
      ok = ok && approx_equal(hk.conj(), hk);
      Clifford<Complex> t = h0 * hk;
      bool fixed_exact = approx_equal(t.conj(), t);
      bool fixed_mod_sign = approx_equal(t.conj(), -t);
      if (fixed_exact || (loop_to_minus_one && fixed_mod_sign)) ++down_fixed;
    }
    ok = ok && down_fixed == samples;
    std::string ev = std::to_string(down_fixed) + "/" + std::to_string(samples) +
                     " time-reversing samples fixed by conjugation" +
                     (loop_to_minus_one ? " up to the kernel {+-1}" : " (kernel trivial: conjugation-fixed elements found only in L^+_up)");
    rep.axioms.push_back({"PT-3", ok, ev});
  }

  // PT-4: two-to-one covering, and the generating loop is its own inverse up to homotopy.
  {
    double fiber = 0;
    for (int k = 0; k < samples; ++k) {
      auto re = gaussian_coefficients(seed + 3000 + k, nlie, 0.5);
      auto im = gaussian_coefficients(seed + 4000 + k, nlie, 0.5);
      std::vector<Complex> cc(nlie);
      for (std::size_t j = 0; j < nlie; ++j) cc[j] = Complex(re[j], im[j]);
      Clifford<Complex> hc = clifford_exp(spin_bivector<Complex>(st, cc));
      fiber = std::max(fiber, (clifford_adjoint(hc) - clifford_adjoint(-hc)).max_abs());
    }
    // Belt trick: a third axis l gives k = f_j f_l with k (e_i e_j) k^-1 = -(e_i e_j).
    bool conjugator = false;
    std::string belt;
    int bi = pi >= 0 ? pi : 0, bj = pi >= 0 ? pj : 1;
    Clifford<Complex> loop_gen = Clifford<Complex>::blade(eta, (1u << bi) | (1u << bj));
    for (int l = 0; l < d && !conjugator; ++l) {
      if (l == bi || l == bj) continue;
      Clifford<Complex> k = Clifford<Complex>::blade(eta, (1u << bj) | (1u << l));
      if (approx_equal(k * loop_gen * k.versor_inverse(), -loop_gen)) {
        conjugator = true;
        belt = "e" + std::to_string(bj) + "e" + std::to_string(l) + " conjugates the loop generator to its negative";
      }
    }
    if (!conjugator) belt = "even Clifford algebra is commutative: the loop is not homotopic to its inverse (infinite cover)";
    bool ok = fiber < 1e-9 && lift_err < 1e-9 && loop_to_minus_one && conjugator;
    rep.axioms.push_back({"PT-4", ok,
                          "pi(h)=pi(-h) on complex samples (err " + fmt(fiber) + "); spin lifts project correctly (err " +
                              fmt(lift_err) + "); " + belt});
  }

  // PT-5: g* = g tau on the time-reversing sheet of aP_+.
  {
    bool ok = loop_to_minus_one && approx_equal(h0.conj(), -h0);
    int hits = 0;
    for (const auto& hk : h) {
      Clifford<Complex> t = h0 * hk;
      if (approx_equal(t.conj(), -t)) ++hits;
    }
    ok = ok && hits == samples;
    std::string ev = loop_to_minus_one
                         ? std::to_string(hits) + "/" + std::to_string(samples) + " lifts over L_down satisfy conj(h) = -h"
                         : "undefined: the four-fold cover needs PT-4";
    rep.axioms.push_back({"PT-5", ok, ev});
  }
  return rep;
}

}  // namespace cptlab
