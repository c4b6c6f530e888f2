#include "cptlab/representations.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace cptlab;
using G = GaussianRational;

namespace {

const Spacetime m4 = Spacetime::lorentzian(1, 3);

// Random rep tree over Minkowski space, depth-limited.
RepPtr random_rep(gen::Gen& rnd, int depth, bool allow_spinor = true) {
  int pick = rnd.integer(0, depth > 0 ? 8 : 3);
  switch (pick) {
    case 0: return rep::trivial(rnd.integer(1, 2));
    case 1: return rep::vector(4);
    case 2: return allow_spinor ? rep::weyl_left() : rep::vector(4);
    case 3: return allow_spinor ? rep::weyl_right() : rep::trivial();
    case 4: return rep::dual(random_rep(rnd, depth - 1, allow_spinor));
    case 5: return rep::direct_sum(random_rep(rnd, depth - 1, allow_spinor), random_rep(rnd, depth - 1, allow_spinor));
    case 6: return rep::tensor(random_rep(rnd, 0, allow_spinor), random_rep(rnd, 0, allow_spinor));
    case 7: return rep::antisym2(rep::vector(4));
    default: return rep::pseudo(random_rep(rnd, depth - 1, allow_spinor));
  }
}

FloatCover down_cover(std::uint64_t seed) {
  Complex i(0, 1);
  return FloatCover::scalar(i, i) * sample_cover(seed);
}

RepArgument<Complex> arg(const FloatCover& c) { return cover_argument(c); }

}  // namespace

TEST(Representations, WeylComplexifiedAtOneMinusOne) {
  ExactCover c{ExactMatrix::identity(2), ExactMatrix(-ExactMatrix::identity(2))};
  ExactMatrix m = rep_matrix(rep::weyl_left(), cover_argument(c));
  std::vector<G> v{G(2), G(3), G(5), G(7)};
  std::vector<G> expect{G::i() * 3, G::i() * -2, G::i() * 7, G::i() * -5};
  EXPECT_EQ(m.apply(v), expect);
}

TEST(Representations, WeylPrimeAtIi) {
  ExactCover c = ExactCover::scalar(G::i(), G::i());
  ASSERT_EQ(classify_cover(c), CoverComponent::down);
  ExactMatrix m = rho_prime(rep::weyl_left(), m4, cover_argument(c));
  std::vector<G> v{G(2), G(3), G(5), G(7)};
  EXPECT_EQ(m.apply(v), (std::vector<G>{G(-3), G(2), G(-7), G(5)}));
}

TEST(Representations, Dimensions) {
  EXPECT_EQ(rep::antisym2(rep::vector(4))->dim, 6);
  EXPECT_EQ(rep::sym2(rep::vector(3))->dim, 6);
  EXPECT_EQ(rep::tensor(rep::weyl_left(), rep::vector(4))->dim, 16);
  EXPECT_TRUE(rep::tensor(rep::weyl_left(), rep::vector(4))->spinorial);
  EXPECT_EQ(rep::str(rep::tensor(rep::dual(rep::vector(4)), rep::direct_sum(rep::trivial(), rep::weyl_right()))),
            "dual(vector) (x) (trivial (+) weyl_right)");
}

TEST(Representations, GradingSplitsTensorsAndSpinors) {
  auto r = rep::direct_sum(rep::vector(4), rep::tensor(rep::weyl_left(), rep::vector(4)));
  ExactMatrix t = grading_operator<G>(r, 4);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(t(k, k), G(1));
  for (int k = 4; k < 20; ++k) EXPECT_EQ(t(k, k), G(-1));
  auto ww = rep::tensor(rep::weyl_left(), rep::weyl_right());
  EXPECT_EQ(grading_operator<G>(ww, 4), ExactMatrix::identity(16));
}

TEST(Representations, HomomorphismOnOrthochronousCover) {
  gen::Gen rnd(11);
  for (int trial = 0; trial < 60; ++trial) {
    RepPtr r = random_rep(rnd, 2);
    FloatCover g = sample_cover(100 + trial), h = sample_cover(900 + trial);
    FloatMatrix lhs = rho(r, m4, arg(g * h));
    FloatMatrix rhs = rho(r, m4, arg(g)) * rho(r, m4, arg(h));
    EXPECT_TRUE(approx_equal(lhs, rhs)) << rep::str(r);
    EXPECT_TRUE(is_real(lhs)) << rep::str(r);
  }
}

TEST(Representations, ComplexifiedIsHolomorphicHomomorphism) {
  gen::Gen rnd(12);
  for (int trial = 0; trial < 40; ++trial) {
    RepPtr r = random_rep(rnd, 2);
    FloatCover g = sample_complex_cover(trial), h = sample_complex_cover(500 + trial);
    FloatMatrix lhs = rep_matrix(r, arg(g * h));
    FloatMatrix rhs = rep_matrix(r, arg(g)) * rep_matrix(r, arg(h));
    EXPECT_TRUE(approx_equal(lhs, rhs)) << rep::str(r);
  }
}

TEST(Representations, PrimeIsRepresentationOfProperCover) {
  gen::Gen rnd(13);
  for (int trial = 0; trial < 40; ++trial) {
    RepPtr r = random_rep(rnd, 2);
    FloatCover cs[] = {sample_cover(trial), down_cover(300 + trial), down_cover(700 + trial)};
    for (const auto& g : cs)
      for (const auto& h : cs) {
        FloatMatrix lhs = rho_prime(r, m4, arg(g * h));
        FloatMatrix rhs = rho_prime(r, m4, arg(g)) * rho_prime(r, m4, arg(h));
        EXPECT_TRUE(approx_equal(lhs, rhs)) << rep::str(r);
        EXPECT_TRUE(is_real(lhs));
      }
  }
}

TEST(Representations, DeclaredExtensionIsRepresentation) {
  gen::Gen rnd(14);
  for (int trial = 0; trial < 30; ++trial) {
    RepPtr inner = random_rep(rnd, 1);
    RepPtr r = rep::pseudo(inner);
    FloatCover g = down_cover(trial), h = down_cover(40 + trial), k = sample_cover(80 + trial);
    EXPECT_TRUE(approx_equal(rho_prime(r, m4, arg(g * h), true),
                             FloatMatrix(rho_prime(r, m4, arg(g), true) * rho_prime(r, m4, arg(h), true))));
    EXPECT_TRUE(approx_equal(rho_prime(r, m4, arg(g * k), true),
                             FloatMatrix(rho_prime(r, m4, arg(g), true) * rho_prime(r, m4, arg(k), true))));
    // The twist flips the sign relative to the canonical extension on the time-reversing part only.
    if (!rep::uses(inner, RepKind::pseudo))
      EXPECT_TRUE(approx_equal(rho_prime(r, m4, arg(g), true), FloatMatrix(-rho_prime(r, m4, arg(g)))));
    EXPECT_TRUE(approx_equal(rho_prime(r, m4, arg(k), true), rho_prime(r, m4, arg(k))));
  }
}

TEST(Representations, TimeReversingMapsSpinorsToImaginary) {
  gen::Gen rnd(15);
  for (int trial = 0; trial < 40; ++trial) {
    RepPtr r = random_rep(rnd, 2);
    FloatMatrix c = rep_matrix(r, arg(down_cover(trial)));
    FloatMatrix t = convert_matrix<Complex>(grading_operator<G>(r, 4));
    FloatMatrix id = FloatMatrix::identity(r->dim);
    FloatMatrix on0 = c * (id + t) * 0.5, on1 = c * (id - t) * 0.5;
    EXPECT_TRUE(is_real(on0)) << rep::str(r);
    EXPECT_TRUE(approx_equal(on1.conj(), FloatMatrix(-on1))) << rep::str(r);
    // Image of V_1 stays inside V_1.
    EXPECT_TRUE(approx_equal(FloatMatrix(t * on1), FloatMatrix(-on1)));
  }
}

TEST(Representations, TensorRepsRealOnWholeProperGroup) {
  gen::Gen rnd(16);
  for (int trial = 0; trial < 30; ++trial) {
    RepPtr r = random_rep(rnd, 2, false);
    FloatMatrix omega = cover_project(down_cover(trial));
    FloatMatrix m = rho_prime(r, m4, RepArgument<Complex>{omega, std::nullopt, false});
    EXPECT_TRUE(is_real(m));
  }
}

TEST(Representations, DerivativeMatchesFiniteDifference) {
  gen::Gen rnd(17);
  for (int trial = 0; trial < 30; ++trial) {
    RepPtr r = random_rep(rnd, 2);
    FloatMatrix x = lie_combination(m4, gaussian_coefficients(trial, 6, 1.0));
    FloatMatrix a = spin_generator_of(x);
    const double t = 1e-6;
    FloatMatrix at = expm(FloatMatrix(a * t));
    FloatCover gp{at, at.conj()};
    FloatMatrix am = expm(FloatMatrix(a * -t));
    FloatCover gm{am, am.conj()};
    FloatMatrix fd = (rho(r, m4, arg(gp)) - rho(r, m4, arg(gm))) * (1.0 / (2 * t));
    FloatMatrix d = rep_derivative(r, x, std::optional<FloatMatrix>(a));
    EXPECT_LT((fd - d).max_abs(), 1e-5) << rep::str(r);
    // Cover projection agrees with exp of the vector generator.
    EXPECT_TRUE(approx_equal(cover_project(gp), expm(FloatMatrix(x * t))));
  }
}

TEST(Representations, SpinGeneratorLinearExtensionMatchesExact) {
  for (const auto& f : lie_basis(m4)) EXPECT_EQ(spin_generator_of(f), spin_generator(f));
}

TEST(Gamma, CliffordRelationsAndChirality) {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      ExactMatrix ac = gamma_matrix(mu) * gamma_matrix(nu) + gamma_matrix(nu) * gamma_matrix(mu);
      ExactMatrix expect = mu == nu ? ExactMatrix::identity(4) * G(2 * m4.eta(mu)) : ExactMatrix(4, 4);
      EXPECT_EQ(ac, expect);
    }
  EXPECT_EQ(gamma5(), ExactMatrix::diagonal({1, 1, -1, -1}));
}

TEST(Gamma, Covariance) {
  // S(A)^{-1} gamma^mu S(A) = Lambda^mu_nu gamma^nu with S(A) = diag(A, (A^dagger)^{-1}).
  for (int trial = 0; trial < 20; ++trial) {
    FloatCover c = sample_cover(trial);
    FloatMatrix s = block_diag(c.a, inverse(c.a.adjoint()));
    FloatMatrix lam = cover_project(c);
    for (int mu = 0; mu < 4; ++mu) {
      FloatMatrix lhs = inverse(s) * convert_matrix<Complex>(gamma_matrix(mu)) * s;
      FloatMatrix rhs(4, 4);
      for (int nu = 0; nu < 4; ++nu) rhs += convert_matrix<Complex>(gamma_matrix(nu)) * lam(mu, nu);
      EXPECT_TRUE(approx_equal(lhs, rhs));
    }
  }
}

TEST(FieldContent, DiracBasisAndHolomorphicAction) {
  FieldContent fc(m4, {{"psi", rep::direct_sum(rep::weyl_left(), rep::weyl_right()), true}});
  ASSERT_EQ(fc.space()->size(), 8u);
  EXPECT_EQ(fc.space()->entry(0).name, "psi[0]");
  EXPECT_EQ(fc.space()->entry(4).name, "conj(psi)[0]");
  EXPECT_EQ(fc.space()->entry(2).grade, 1);
  EXPECT_EQ(fc.symbol_index(0, 3, true), 7u);
  // rho_hol at (1, -1) acts as gamma5 on the complex components.
  ExactCover c{ExactMatrix::identity(2), ExactMatrix(-ExactMatrix::identity(2))};
  ExactMatrix h = rho_hol(fc.rep(), cover_argument(c), fc.complex_structure());
  ExactMatrix expect = ExactMatrix::diagonal({1, 1, 1, 1, -1, -1, -1, -1});
  EXPECT_EQ(h, expect);
}

TEST(FieldContent, RejectsBadContent) {
  EXPECT_THROW(FieldContent(Spacetime::lorentzian(1, 2), {{"psi", rep::weyl_left(), true}}), std::invalid_argument);
  EXPECT_THROW(FieldContent(m4, {{"phi", rep::vector(4), true}, {"x", rep::trivial(), true}}), std::invalid_argument);
  EXPECT_THROW(FieldContent(m4, {{"c", rep::character(1), false}}), std::invalid_argument);
}

TEST(Character, ExactValues) {
  auto st = Spacetime::lorentzian(1, 1);
  // Boost with e^j = 16: omega (1,1) = 16 (1,1).
  ExactMatrix boost{{G(mpq_class(257, 32)), G(mpq_class(255, 32))}, {G(mpq_class(255, 32)), G(mpq_class(257, 32))}};
  ASSERT_TRUE(is_isometry(st, boost));
  auto r = rep::character(mpq_class(1, 4));
  EXPECT_EQ(rep_matrix(r, RepArgument<G>{boost, std::nullopt, false})(0, 0), G(2));
  EXPECT_THROW(rep_matrix(r, RepArgument<G>{ExactMatrix(-boost), std::nullopt, false}), std::invalid_argument);
}
