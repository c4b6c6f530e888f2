#include "cptlab/axioms.hpp"
#include "cptlab/clifford.hpp"
#include "cptlab/lorentz.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace cptlab;
using G = GaussianRational;

TEST(Classify, Examples) {
  auto m4 = Spacetime::lorentzian(1, 3);
  auto m3 = Spacetime::lorentzian(1, 2);
  EXPECT_EQ(classify_component(m4, ExactMatrix::identity(4)), Component::up_plus);
  EXPECT_EQ(classify_component(m4, ExactMatrix(-ExactMatrix::identity(4))), Component::down_plus);
  EXPECT_EQ(classify_component(m3, ExactMatrix(-ExactMatrix::identity(3))), Component::down_minus);
  ExactMatrix shear{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_THROW(classify_component(m4, shear), std::invalid_argument);
}

TEST(Classify, TwoTimelikeDimensions) {
  // Reversing both timelike axes preserves the timelike orientation.
  auto s = Spacetime::lorentzian(2, 1);
  ExactMatrix g = ExactMatrix::diagonal({-1, -1, 1});
  EXPECT_EQ(classify_component(s, g), Component::up_plus);
  ExactMatrix h = ExactMatrix::diagonal({-1, 1, 1});
  EXPECT_EQ(classify_component(s, h), Component::down_minus);
}

TEST(Classify, PtRepresentativeIsTimeReversingProper) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 1}, {1, 4}, {2, 3}, {3, 3}}) {
    auto st = Spacetime::lorentzian(p, q);
    EXPECT_EQ(classify_component(st, pt_representative(st)), Component::down_plus) << st.str();
  }
  EXPECT_EQ(pt_representative(Spacetime::lorentzian(1, 3)), ExactMatrix(-ExactMatrix::identity(4)));
  EXPECT_EQ(pt_representative(Spacetime::lorentzian(1, 2)), ExactMatrix::diagonal({-1, -1, 1}));
}

TEST(Classify, ComponentMultiplicationTable) {
  auto st = Spacetime::lorentzian(1, 3);
  std::vector<FloatMatrix> reps = {FloatMatrix::identity(4), to_float(ExactMatrix::diagonal({1, -1, 1, 1})),
                                   to_float(pt_representative(st)), to_float(ExactMatrix::diagonal({-1, 1, 1, 1}))};
  for (int k = 0; k < 100; ++k) {
    int a = k % 4, b = (k / 4) % 4;
    FloatMatrix x = reps[a] * sample_proper_ortho(k, st).g;
    FloatMatrix y = sample_proper_ortho(k + 500, st).g * reps[b];
    Component cx = classify_component(st, x), cy = classify_component(st, y), cxy = classify_component(st, x * y);
    EXPECT_EQ(time_reversing(cxy), time_reversing(cx) != time_reversing(cy));
    EXPECT_EQ(proper(cxy), proper(cx) == proper(cy));
  }
}

TEST(LieBasis, CountMembershipAndExponential) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {1, 1}}) {
    auto st = Spacetime::lorentzian(p, q);
    auto basis = lie_basis(st);
    int d = p + q;
    EXPECT_EQ(static_cast<int>(basis.size()), d * (d - 1) / 2);
    for (const auto& f : basis) EXPECT_TRUE(in_lie_algebra(st, f));
  }
  auto st = Spacetime::lorentzian(1, 3);
  // Generator for plane (1,2) is the last one touching axis 1 and 2: index of (1,2) in (0,1),(0,2),(0,3),(1,2),...
  ExactMatrix f = lie_basis(st)[3];
  FloatMatrix r = expm(to_float(f) * Complex(M_PI / 2, 0));
  FloatMatrix expect = FloatMatrix::identity(4);
  expect(1, 1) = 0;
  expect(2, 2) = 0;
  expect(1, 2) = -1;
  expect(2, 1) = 1;
  EXPECT_TRUE(approx_equal(r, expect, 1e-12));
  EXPECT_EQ(classify_component(st, r), Component::up_plus);
}

TEST(Sampling, DeterministicIsometriesClosedUnderProducts) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
    auto st = Spacetime::lorentzian(p, q);
    for (int k = 0; k < 50; ++k) {
      auto a = sample_proper_ortho(k, st), b = sample_proper_ortho(k + 100, st);
      EXPECT_EQ(a.component, Component::up_plus);
      EXPECT_TRUE(approx_equal(a.g, sample_proper_ortho(k, st).g, 0));
      EXPECT_EQ(classify_component(st, FloatMatrix(a.g * b.g)), Component::up_plus);
    }
  }
  auto st = Spacetime::lorentzian(1, 3);
  EXPECT_TRUE(approx_equal(expm(lie_combination(st, std::vector<double>(6, 0.0))), FloatMatrix::identity(4), 0));
}

TEST(Cover, ProjectionExamples) {
  ExactCover one = ExactCover::identity();
  EXPECT_EQ(cover_project(one), ExactMatrix::identity(4));
  ExactCover ii = ExactCover::scalar(G::i(), G::i());
  EXPECT_EQ(cover_project(ii), ExactMatrix(-ExactMatrix::identity(4)));
  ExactMatrix a{{1, 1}, {0, 1}};
  ExactCover c{a, a.conj()};
  ExactMatrix pc = cover_project(c);
  EXPECT_EQ(pc, cover_project(ExactCover{-a, -a.conj()}));
  EXPECT_EQ(pc, cover_project_complex(ExactCover{a * G::i(), a.conj() * (-G::i())}));
  EXPECT_EQ(classify_component(Spacetime::lorentzian(1, 3), pc), Component::up_plus);
}

TEST(Cover, FourToOneRealAndOrthochronous) {
  auto st = Spacetime::lorentzian(1, 3);
  const Complex i(0, 1);
  for (int k = 0; k < 100; ++k) {
    FloatCover c = sample_cover(k);
    FloatMatrix m = cover_project(c);
    EXPECT_EQ(classify_component(st, m), Component::up_plus);
    std::vector<FloatCover> fiber = {c, {c.a * Complex(-1), c.b * Complex(-1)}, {c.a * i, c.b * (-i)}, {c.a * (-i), c.b * i}};
    for (std::size_t x = 0; x < fiber.size(); ++x) {
      EXPECT_TRUE(approx_equal(cover_project_complex(fiber[x]), m));
      for (std::size_t y = x + 1; y < fiber.size(); ++y) EXPECT_FALSE(approx_equal(fiber[x], fiber[y]));
    }
    // Every (sA, B/s) projects to m; det A = det B forces s^4 = 1.
    Complex s = std::polar(1.0, 0.3);
    EXPECT_TRUE(approx_equal(cover_project_complex(FloatCover{c.a * s, c.b * (1.0 / s)}), m));
    EXPECT_THROW(classify_cover(FloatCover{c.a * s, c.b * (1.0 / s)}), std::invalid_argument);
  }
}

TEST(Cover, HomomorphismAndConjugation) {
  for (int k = 0; k < 200; ++k) {
    FloatCover x = sample_complex_cover(k), y = sample_complex_cover(k + 1000);
    EXPECT_TRUE(approx_equal(cover_project_complex(x * y), FloatMatrix(cover_project_complex(x) * cover_project_complex(y))));
  }
  for (int k = 0; k < 100; ++k) {
    FloatCover x = sample_complex_cover(k + 5000);
    EXPECT_TRUE(approx_equal(cover_project_complex(cover_conjugate(x)), cover_project_complex(x).conj()));
    EXPECT_TRUE(approx_equal(cover_conjugate(cover_conjugate(x)), x));
    FloatCover o = sample_cover(k);
    EXPECT_TRUE(approx_equal(cover_conjugate(o), o));
    FloatCover down_a = o * FloatCover::scalar(1.0, -1.0);
    EXPECT_EQ(classify_cover(down_a), CoverComponent::down_a);
    EXPECT_TRUE(approx_equal(cover_conjugate(down_a), down_a * FloatCover::tau()));
  }
}

TEST(Cover, SpinGeneratorMatchesExponential) {
  auto st = Spacetime::lorentzian(1, 3);
  for (const auto& f : lie_basis(st)) {
    ExactMatrix a = spin_generator(f);
    EXPECT_TRUE(a.trace().is_zero());
    for (double t : {0.3, -1.1}) {
      FloatMatrix at = expm(to_float(a) * Complex(t, 0));
      FloatMatrix lhs = cover_project(FloatCover{at, at.conj()});
      FloatMatrix rhs = expm(to_float(f) * Complex(t, 0));
      EXPECT_TRUE(approx_equal(lhs, rhs, 1e-10));
    }
  }
}

TEST(Clifford, DefiningRelationsOnBasisPairs) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}}) {
    auto eta = metric_diagonal(Spacetime::lorentzian(p, q));
    const int d = p + q;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        auto ei = Clifford<G>::blade(eta, 1u << i), ej = Clifford<G>::blade(eta, 1u << j);
        auto anti = ei * ej + ej * ei;
        EXPECT_TRUE(approx_equal(anti, Clifford<G>::scalar(eta, i == j ? 2 * eta[i] : 0)));
      }
    auto e01 = Clifford<G>::blade(eta, 0b11);
    EXPECT_TRUE(approx_equal(e01 * e01, Clifford<G>::scalar(eta, -eta[0] * eta[1])));
    EXPECT_TRUE(approx_equal(Clifford<G>::blade(eta, 1) * Clifford<G>::blade(eta, 1), Clifford<G>::scalar(eta, 1)));
  }
}

TEST(Clifford, AssociativeOnRandomElements) {
  auto eta = metric_diagonal(Spacetime::lorentzian(1, 3));
  gen::Gen rnd(3);
  for (int k = 0; k < 20; ++k) {
    Clifford<G> x(eta), y(eta), z(eta);
    for (std::uint32_t m = 0; m < 16; ++m) {
      if (rnd.coin()) x[m] = rnd.gaussian();
      if (rnd.coin()) y[m] = rnd.gaussian();
      if (rnd.coin()) z[m] = rnd.gaussian();
    }
    EXPECT_TRUE(approx_equal((x * y) * z, x * (y * z)));
  }
}

TEST(Pin, ProjectionExamples) {
  auto eta = metric_diagonal(Spacetime::lorentzian(1, 3));
  EXPECT_EQ(pin_project<G>(eta, {}), ExactMatrix::identity(4));
  ExactMatrix r = pin_project<G>(eta, {{0, 1, 0, 0}});
  EXPECT_EQ(r, ExactMatrix::diagonal({-1, 1, -1, -1}));
  EXPECT_EQ(determinant(r), G(-1));
  std::vector<std::vector<G>> all = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(pin_project<G>(eta, all), ExactMatrix(-ExactMatrix::identity(4)));
}

TEST(Pin, ProjectionMatchesAlgebraConjugation) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}}) {
    auto eta = metric_diagonal(Spacetime::lorentzian(p, q));
    std::mt19937_64 rng(p * 10 + q);
    std::normal_distribution<double> dist;
    for (int k = 0; k < 50; ++k) {
      std::vector<std::vector<Complex>> factors;
      int n = 1 + k % 5;
      while (static_cast<int>(factors.size()) < n) {
        std::vector<Complex> v(p + q);
        for (auto& x : v) x = Complex(dist(rng), dist(rng));
        Complex nv = eta_form(eta, v, v);
        if (std::abs(nv) < 1e-2) continue;
        Complex s = std::sqrt(nv);
        for (auto& x : v) x /= s;  // eta(v,v) = 1
        factors.push_back(v);
      }
      FloatMatrix composed = pin_project(eta, factors);
      FloatMatrix adj = clifford_adjoint(clifford_product(eta, factors));
      EXPECT_TRUE(approx_equal(composed, adj, 1e-9));
    }
  }
}

TEST(Pin, PreimageOfIdentityIsFourthRootsOfUnity) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}}) {
    auto eta = metric_diagonal(Spacetime::lorentzian(p, q));
    std::mt19937_64 rng(p + q);
    std::normal_distribution<double> dist;
    const Complex units[] = {1.0, -1.0, Complex(0, 1), Complex(0, -1)};
    for (int k = 0; k < 100; ++k) {
      std::vector<std::vector<Complex>> factors;
      while (factors.size() < 3) {
        std::vector<Complex> v(p + q);
        for (auto& x : v) x = Complex(dist(rng), dist(rng));
        Complex nv = eta_form(eta, v, v);
        if (std::abs(nv) < 1e-2) continue;
        Complex s = std::sqrt(nv);
        for (auto& x : v) x /= s;
        factors.push_back(v);
      }
      // Rescale each factor by a unit (keeps eta(v,v) = +-1), so g' g^-1 projects to the identity.
      auto scaled = factors;
      for (auto& v : scaled) {
        Complex u = units[rng() % 4];
        for (auto& x : v) x *= u;
      }
      Clifford<Complex> g = clifford_product(eta, factors), g2 = clifford_product(eta, scaled);
      Clifford<Complex> kernel = g2 * g.versor_inverse();
      ASSERT_TRUE(approx_equal(clifford_adjoint(kernel), FloatMatrix::identity(p + q)));
      ASSERT_TRUE(kernel.is_scalar());
      bool unit = false;
      for (Complex u : units) unit = unit || std::abs(kernel[0] - u) < 1e-9;
      EXPECT_TRUE(unit) << kernel[0];
    }
  }
}

TEST(Axioms, LorentzianSignaturesPassAll) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
    auto rep = verify_axioms(Spacetime::lorentzian(p, q), 100, 1);
    for (const auto& a : rep.axioms) EXPECT_TRUE(a.pass) << p << "," << q << " " << a.name << ": " << a.evidence;
  }
}

TEST(Axioms, TwoDimensionsFailsPt2AndPt3) {
  auto rep = verify_axioms(Spacetime::lorentzian(1, 1), 50, 1);
  EXPECT_TRUE(rep.at("PT-1").pass);
  EXPECT_FALSE(rep.at("PT-2").pass);
  EXPECT_FALSE(rep.at("PT-3").pass);
  EXPECT_FALSE(rep.at("PT-4").pass);
  EXPECT_NE(rep.at("PT-3").evidence.find("only in L^+_up"), std::string::npos);
}

TEST(Axioms, GalileanFailsComplexification) {
  auto rep = verify_axioms(Spacetime::galilean_space(4), 30, 1);
  EXPECT_TRUE(rep.at("PT-1").pass);
  EXPECT_FALSE(rep.at("PT-2").pass);
  EXPECT_FALSE(rep.at("PT-3").pass);
}
