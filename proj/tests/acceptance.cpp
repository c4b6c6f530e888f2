// Acceptance checks. Usage: acceptance N   (N = 1..11)
// Prints "criterion N: PASS|FAIL - title" plus indented detail lines, exits 0 on PASS.

#include "cptlab/axioms.hpp"
#include "cptlab/classical_oracle.hpp"
#include "cptlab/clifford.hpp"
#include "cptlab/frontend/corpus.hpp"
#include "cptlab/frontend/elaborate.hpp"
#include "cptlab/theories.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace cptlab;
using namespace cptlab::fixtures;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
  }
  void note(const std::string& what) { lines.push_back("      " + what); }
};

std::string num(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

// 1 ------------------------------------------------------------------------

Outcome complex_scalar_table() {
  Outcome o;
  auto fc = content({{"phi", rep::trivial(2), true}});
  auto mode = Mode::commutative;
  auto phi = [&](bool conj) { return sym(fc, mode, 0, 0, {}, conj) * G::i(); };
  auto g = pt_element(*fc);
  auto hash = involution_map<G>(Involution::hash(*fc->space(), fc->default_hash()));
  ExactElement x = phi(false);
  struct Row {
    const char* label;
    ExactElement got, want;
  };
  Row rows[] = {
      {"classical PT", apply_map(classical_action(*fc, g), x), phi(false)},
      {"quantum CPT", apply_map(quantum_action(*fc, g), x), -phi(true)},
      {"classical CPT", apply_map(compose(hash, classical_action(*fc, g)), x), phi(true)},
      {"quantum PT", apply_map(compose(hash, quantum_action(*fc, g)), x), -phi(false)},
  };
  for (const auto& r : rows) o.require(r.got == r.want, std::string(r.label) + ": " + x.str() + " -> " + r.got.str());
  return o;
}

// 2 ------------------------------------------------------------------------

Outcome maxwell_invariance() {
  Outcome o;
  CheckOptions c;
  c.samples = 25;
  c.declared = true;
  auto r = check_group(maxwell(false), c);
  int lie = 0, sampled = 0;
  bool lie_ok = true, sampled_ok = true, pt_ok = false;
  double worst = 0;
  for (const auto& t : r.transformations) {
    if (t.name.rfind("d(", 0) == 0) {
      ++lie;
      lie_ok = lie_ok && t.pass && t.exact;
    } else if (t.name == "rho(PT)") {
      pt_ok = t.pass && t.exact;
    } else if (t.name.rfind("rho(g", 0) == 0) {
      ++sampled;
      bool ok = t.pass && t.residual && *t.residual < 1e-9;
      sampled_ok = sampled_ok && ok;
      if (t.residual) worst = std::max(worst, *t.residual);
    }
  }
  o.require(lie == 6 && lie_ok, "tensor variant: exact invariance under all " + std::to_string(lie) + " Lie generators");
  o.require(sampled == 25 && sampled_ok, std::to_string(sampled) + " orthochronous samples, worst residual " + num(worst));
  o.require(pt_ok, "tensor variant: exact PT element preserves the theory");

  auto rp = check_group(maxwell(true), c);
  bool pseudo_pt_fails = false, pseudo_lie_ok = true;
  for (const auto& t : rp.transformations) {
    if (t.name == "rho(PT)") pseudo_pt_fails = !t.pass && t.exact;
    if (t.name.rfind("d(", 0) == 0) pseudo_lie_ok = pseudo_lie_ok && t.pass;
  }
  o.require(pseudo_lie_ok && pseudo_pt_fails && rp.verdict == Verdict::fail,
            "pseudo-vector source: Lie generators pass, exact PT element fails");
  for (const auto& t : rp.transformations)
    if (t.name == "rho(PT)") o.note("witness: " + t.witness);
  return o;
}

// 3 ------------------------------------------------------------------------

Outcome dirac() {
  Outcome o;
  HarnessOptions h;
  h.samples = 4;
  h.conclusion_samples = 1;

  auto eq = dirac_equation();
  ExactMatrix id = ExactMatrix::identity(2);
  auto g = ExactElementG::of_cover("(1,-1)", ExactCover{id, ExactMatrix(-id)});
  auto hol = holomorphic_action(*eq.content, g);
  o.require(check_invariance(eq, std::vector{hol}).front().pass, "(a) psi -> gamma5 psi maps the Dirac equation into itself");
  o.require(theorem_harness(eq, Theorem::hol, h).verdict == Verdict::pass, "(a) holomorphic harness passes on the Dirac equation");

  auto c = dirac_constraint(Mode::supercommutative);
  auto hc = holomorphic_action(*c.content, g);
  o.require(!check_invariance(c, std::vector{hc}).front().pass, "(b) psibar psi = 1 is not preserved by the same map");
  o.note("image: " + apply_map(hc, c.generators[0]).str());

  auto l = theorem_harness(dirac_lagrangian(), Theorem::cpt, h);
  o.require(l.verdict == Verdict::pass, "(c) CPT harness passes on the hermitian Dirac Lagrangian (supercommutative)");

  auto cc = dirac_constraint(Mode::commutative);
  auto image = apply_map(classical_action(*cc.content, pt_element(*cc.content)), cc.generators[0]);
  ExactElement expect = -bilinear(cc.content, Mode::commutative, ExactMatrix::identity(4)) - one(cc.content, Mode::commutative);
  o.require(image == expect, "(d) commutative mode: psibar psi - 1 maps to -psibar psi - 1");
  o.require(theorem_harness(cc, Theorem::cpt, h).verdict == Verdict::not_applicable,
            "(d) the CPT harness reports the commutative premise failure as not applicable");
  return o;
}

// 4 ------------------------------------------------------------------------

// Reverse the factor list by hand and count odd-odd inversions against sorted order.
int reversal_oracle(const Monomial& m, const SymbolSpace& space) {
  Monomial r(m.rbegin(), m.rend());
  int inversions = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      bool odd = space.entry(r[i].lambda).grade == 1 && space.entry(r[j].lambda).grade == 1;
      if (odd && r[j] < r[i]) ++inversions;
    }
  return inversions % 2 ? -1 : 1;
}

Outcome sign_law() {
  Outcome o;
  auto w = gen::make_space(2, 4, 4);
  gen::Gen rnd(41);
  for (int m = 0; m <= 8; ++m) {
    bool ok = true;
    int closed = ((m * (m - 1) / 2) % 2) ? -1 : 1;
    for (int trial = 0; trial < 40; ++trial) {
      Monomial mono;
      std::vector<std::uint32_t> odd = {2, 3, 4, 5, 6, 7, 8, 9};
      std::shuffle(odd.begin(), odd.end(), rnd.engine());
      for (int k = 0; k < m; ++k) mono.push_back(FieldSymbol(odd[k], {static_cast<std::uint8_t>(rnd.integer(0, 1))}));
      int evens = rnd.integer(0, 2);
      for (int k = 0; k < evens; ++k)
        mono.insert(mono.begin() + rnd.integer(0, static_cast<int>(mono.size())), FieldSymbol(static_cast<std::uint32_t>(rnd.integer(0, 1))));
      ExactElement x(w, Mode::supercommutative);
      x.add_term(mono, 1);
      if (x.is_zero()) {
        ok = false;
        continue;
      }
      Monomial canon = x.terms().begin()->first;
      ok = ok && strong_reflection(x) == x * G(closed) && reversal_oracle(canon, *w) == closed;
    }
    o.require(ok, "m = " + std::to_string(m) + ": S = " + std::to_string(closed) + " on 40 monomials, oracle agrees");
  }
  return o;
}

// 5 ------------------------------------------------------------------------

Outcome covers() {
  Outcome o;
  auto st = Spacetime::lorentzian(1, 3);
  const Complex i(0, 1);
  bool four = true, real_ortho = true, pt5 = true, v1 = true;
  for (int k = 0; k < 100; ++k) {
    FloatCover c = sample_cover(k);
    FloatMatrix m = cover_project(c);
    real_ortho = real_ortho && is_real(cover_project_complex(c)) && classify_component(st, m) == Component::up_plus;
    std::vector<FloatCover> fiber = {c, {c.a * Complex(-1), c.b * Complex(-1)}, {c.a * i, c.b * (-i)}, {c.a * (-i), c.b * i}};
    for (std::size_t x = 0; x < fiber.size(); ++x) {
      four = four && approx_equal(cover_project_complex(fiber[x]), m);
      for (std::size_t y = x + 1; y < fiber.size(); ++y) four = four && !approx_equal(fiber[x], fiber[y]);
    }

    FloatCover down_a = c * FloatCover::scalar(1.0, -1.0);
    pt5 = pt5 && classify_cover(down_a) == CoverComponent::down_a &&
          approx_equal(cover_conjugate(down_a), down_a * FloatCover::tau());

    // A time-reversing cover element sends V_1 (tau = -1) into i V_1.
    auto r = rep::direct_sum(rep::vector(4), rep::tensor(rep::weyl_left(), rep::weyl_right()));
    auto r1 = rep::direct_sum(rep::weyl_left(), rep::tensor(rep::weyl_right(), rep::vector(4)));
    FloatCover down = FloatCover::scalar(i, i) * c;
    for (const auto& rr : {r, r1}) {
      FloatMatrix g = rep_matrix(rr, cover_argument(down));
      FloatMatrix t = convert_matrix<Complex>(grading_operator<G>(rr, 4));
      FloatMatrix id = FloatMatrix::identity(rr->dim);
      FloatMatrix on1 = g * (id - t) * 0.5;
      v1 = v1 && approx_equal(on1.conj(), FloatMatrix(-on1), 1e-9) && approx_equal(FloatMatrix(t * on1), FloatMatrix(-on1), 1e-9);
    }
  }
  o.require(four, "projection is 4-to-1 on 100 sampled cover elements (fibre {+-1, +-i})");
  o.require(real_ortho, "projection of (A, conj A) is real and orthochronous");
  o.require(pt5, "g* = g tau on 100 samples in the down_a component");
  o.require(v1, "time-reversing elements map V_1 into i V_1 on 100 samples (1e-9)");

  ExactCover ii = ExactCover::scalar(G::i(), G::i());
  ExactMatrix m = rho_prime(rep::weyl_left(), st, cover_argument(ii));
  std::vector<G> v{G(2), G(3), G(5), G(7)};
  o.require(m.apply(v) == std::vector<G>{G(-3), G(2), G(-7), G(5)}, "rho'(i,i)(x,y,z,w) = (-y,x,-w,z) exactly");
  return o;
}

// 6 ------------------------------------------------------------------------

std::vector<std::vector<Complex>> unit_factors(std::mt19937_64& rng, const std::vector<int>& eta, int n) {
  std::normal_distribution<double> dist;
  std::vector<std::vector<Complex>> factors;
  while (static_cast<int>(factors.size()) < n) {
    std::vector<Complex> v(eta.size());
    for (auto& x : v) x = Complex(dist(rng), dist(rng));
    Complex nv = eta_form(eta, v, v);
    if (std::abs(nv) < 1e-2) continue;
    Complex s = std::sqrt(nv);
    for (auto& x : v) x /= s;
    factors.push_back(v);
  }
  return factors;
}

Outcome clifford_pin() {
  Outcome o;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}}) {
    const std::string sig = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    auto eta = metric_diagonal(Spacetime::lorentzian(p, q));
    const int d = p + q;
    bool rel = true;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        auto ea = Clifford<G>::blade(eta, 1u << a), eb = Clifford<G>::blade(eta, 1u << b);
        rel = rel && approx_equal(ea * eb + eb * ea, Clifford<G>::scalar(eta, a == b ? 2 * eta[a] : 0));
      }
    o.require(rel, sig + " defining relations on all basis pairs");

    std::mt19937_64 rng(p * 10 + q);
    bool proj = true;
    for (int k = 0; k < 50; ++k) {
      auto f = unit_factors(rng, eta, 1 + k % 5);
      proj = proj && approx_equal(pin_project(eta, f), clifford_adjoint(clifford_product(eta, f)), 1e-9);
    }
    o.require(proj, sig + " pin_project matches the composed reflections (1e-9)");

    const Complex units[] = {1.0, -1.0, Complex(0, 1), Complex(0, -1)};
    bool kernel_ok = true;
    for (int k = 0; k < 100; ++k) {
      auto f = unit_factors(rng, eta, 3);
      auto scaled = f;
      for (auto& v : scaled) {
        Complex u = units[rng() % 4];
        for (auto& x : v) x *= u;
      }
      auto kernel = clifford_product(eta, scaled) * clifford_product(eta, f).versor_inverse();
      bool unit = false;
      for (Complex u : units) unit = unit || std::abs(kernel[0] - u) < 1e-9;
      kernel_ok = kernel_ok && kernel.is_scalar() && unit && approx_equal(clifford_adjoint(kernel), FloatMatrix::identity(d));
    }
    o.require(kernel_ok, sig + " preimage of the identity among 100 sampled Pin elements is {+-1, +-i}");
  }
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
    auto rep = verify_axioms(Spacetime::lorentzian(p, q), 100, 1);
    bool all = true;
    for (const auto& a : rep.axioms) all = all && a.pass;
    o.require(all, "verify_axioms (" + std::to_string(p) + "," + std::to_string(q) + "): PT-1..PT-5 pass");
  }
  auto two = verify_axioms(Spacetime::lorentzian(1, 1), 50, 1);
  o.require(two.at("PT-1").pass && !two.at("PT-2").pass && !two.at("PT-3").pass,
            "verify_axioms (1,1): PT-2 and PT-3 fail as documented");
  o.note("PT-3 evidence: " + two.at("PT-3").evidence);
  return o;
}

// 7 ------------------------------------------------------------------------

Outcome correspondence() {
  Outcome o;
  int checked = 0, skipped = 0;
  bool exact_ok = true, float_ok = true;
  double worst = 0;
  std::string first_failure;
  for (const auto& entry : frontend::builtin_examples()) {
    auto el = frontend::load(entry.source);
    if (!el.ok()) {
      exact_ok = false;
      first_failure = entry.name + ": does not elaborate";
      continue;
    }
    for (const auto& t : el.theories) {
      const auto& fc = *t.content;
      bool theory_skipped = false;
      for (const auto& g : exact_elements(fc))
        for (int s = 0; s < 20 && !theory_skipped; ++s) {
          auto phi = random_field(1000 * s + 17, fc.v_dim(), fc.spacetime().dim(), 3);
          for (const auto& f : t.generators) {
            try {
              auto r = verify_correspondence(fc, g, f, phi);
              ++checked;
              if (!r.pass && first_failure.empty()) first_failure = t.name + " at " + g.name + ": " + r.detail;
              exact_ok = exact_ok && r.pass;
            } catch (const std::invalid_argument&) {
              theory_skipped = true;  // nonlinear in anticommuting fields: no classical operator
              break;
            }
          }
        }
      if (theory_skipped) {
        ++skipped;
        o.note("no classical operator for " + t.name + " (nonlinear in odd fields), skipped");
        continue;
      }
      if (!fc.spacetime().minkowski4()) continue;
      auto pts = sample_points(3, 4, 10);
      for (int s = 0; s < 20; ++s) {
        auto g = sample_orthochronous(fc, 300 + s);
        auto phi = convert_field<Complex>(random_field(s + 50, fc.v_dim(), 4, 3));
        for (const auto& f : t.generators) {
          auto r = verify_correspondence(fc, g, convert_element<Complex>(f), phi, pts);
          worst = std::max(worst, r.residual);
          float_ok = float_ok && r.pass && r.residual < 1e-8;
        }
      }
    }
  }
  o.require(exact_ok && checked > 0, "exact polynomial identity on " + std::to_string(checked) +
                                         " (theory, element, field, generator) cases, 20 fields of degree <= 3");
  if (!first_failure.empty()) o.note("first failure: " + first_failure);
  o.require(float_ok, "float mode on 20 sampled rotations/boosts per 4d theory, worst residual " + num(worst));
  o.note(std::to_string(skipped) + " corpus theories skipped by the classical oracle");
  return o;
}

// 8 ------------------------------------------------------------------------

Outcome counterexamples() {
  Outcome o;
  auto r = counterexample_2d(25);
  bool ortho = true, alphas = r.transformations.size() == 6;
  for (const auto& t : r.transformations) {
    if (t.name.rfind("PT[alpha=", 0) == 0) alphas = alphas && !t.pass;
  }
  for (const auto& p : r.premises) ortho = ortho && p.pass;
  bool obstruction = false;
  for (const auto& n : r.notes) obstruction = obstruction || n.find("alpha^4 = -1") != std::string::npos;
  o.require(ortho && !r.premises.empty(), "2D: orthochronous sampling passes");
  o.require(alphas, "2D: PT fails for alpha in {+-1, +-2, +-1/2}");
  o.require(obstruction, "2D: symbolic obstruction alpha^4 = -1 reported");
  o.require(r.verdict == Verdict::pass, "2D: scenario verdict pass");

  for (int d : {2, 3, 4}) {
    auto g = counterexample_galilean(d, 25);
    o.require(g.verdict == Verdict::pass,
              "Galilean d = " + std::to_string(d) + ": orthochronous passes, all " +
                  std::to_string(g.transformations.size()) + " time-reversing candidates fail");
  }
  return o;
}

// 9 ------------------------------------------------------------------------

Outcome affine_identity() {
  Outcome o;
  G c(mpq_class(1, 2), mpq_class(1, 2));
  auto tau = ExactElementG::of_cover("tau", ExactCover::tau());
  for (const auto& t : {dirac_lagrangian(), dirac_equation(), klein_gordon()}) {
    TheorySpan<G> span(t);
    bool ok = true;
    int tested = 0;
    for (const auto& f : t.generators) {
      ExactElement tf = apply_map(classical_action(*t.content, tau), f);
      if (!span.contains(f).member || !span.contains(tf).member) continue;
      ++tested;
      ok = ok && span.contains(f * c + tf * (G(1) - c)).member;
    }
    o.require(ok && tested > 0, t.name + ": ((1+i)/2)F + (1-(1+i)/2) rho(tau)F certified on " + std::to_string(tested) + " generators");
  }
  return o;
}

// 10 -----------------------------------------------------------------------

G power(G base, int n) {
  G r = 1;
  for (int k = 0; k < n; ++k) r *= base;
  return r;
}

Outcome strong_reflection_phase() {
  Outcome o;
  auto fc = dirac_content();
  auto mode = Mode::supercommutative;
  auto g = ExactElementG::of_cover("(i,i)", ExactCover::scalar(G::i(), G::i()));
  auto ig = ExactElementG::of_cover("I^-1 (i,i)", ExactCover::big_i().inverse() * *g.cover);
  auto prime = classical_action(*fc, g);
  auto hol = holomorphic_action(*fc, ig);
  auto s_prime = compose(strong_reflection_map<G>(*fc->space()), prime);

  std::mt19937_64 rng(10);
  bool uu = true, minus = true;
  for (int m = 0; m <= 4; ++m) {
    bool stated = true;
    std::string example;
    for (int trial = 0; trial < 6; ++trial) {
      // m distinct odd holomorphic symbols (psi, not conj(psi)); derivative multisets distinct by position.
      ExactElement x = one(fc, mode);
      for (int k = 0; k < m; ++k)
        x = x * sym(fc, mode, 0, static_cast<int>(rng() % 4), {static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(rng() % 4)});
      if (x.is_zero()) continue;
      ExactElement lhs = apply_map(s_prime, x), h = apply_map(hol, x);
      stated = stated && lhs == h * power(G::i(), m * m);
      minus = minus && lhs == h * power(-G::i(), m * m);
      uu = uu && h == apply_map(prime, x) * power(G::i(), m);
      if (example.empty()) example = "S rho'(g) X = " + lhs.str() + "   hol X = " + h.str();
    }
    o.require(stated, "m = " + std::to_string(m) + ": S rho'(g)(X) = i^(m^2) rho_hol(I^-1 g)(X)");
    o.note(example);
  }
  o.note(std::string("supplementary: rho_hol(I^-1 g)(X) = i^m rho'(g)(X) on all monomials: ") + (uu ? "holds" : "does not hold"));
  o.note(std::string("supplementary: S rho'(g)(X) = (-i)^(m^2) rho_hol(I^-1 g)(X) on all monomials: ") + (minus ? "holds" : "does not hold"));
  o.note("with S = (-1)^(m(m-1)/2) the phase implied by the first supplementary line is (-1)^(m(m-1)/2) i^(-m) = (-i)^(m^2)");
  return o;
}

// 11 -----------------------------------------------------------------------

int run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + CPTLAB_CLI + "\" " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string random_source(std::mt19937_64& rng) {
  static const std::string alphabet = "abcdefgimnpqrstxyzFJ0123456789[](){},:=+-*/^.# \n_";
  std::string s;
  int n = static_cast<int>(rng() % 200);
  for (int k = 0; k < n; ++k) {
    if (rng() % 4 == 0) s += static_cast<char>(rng() % 256);
    else s += alphabet[rng() % alphabet.size()];
  }
  return s;
}

Outcome frontend_contract() {
  Outcome o;
  bool stable = true;
  for (const auto& e : frontend::builtin_examples()) {
    auto a = frontend::parse(e.source);
    if (!a.ok()) {
      stable = false;
      continue;
    }
    std::string printed = frontend::print(a.spec);
    auto b = frontend::parse(printed);
    stable = stable && b.ok() && frontend::same(a.spec, b.spec) && frontend::print(b.spec) == printed;
  }
  o.require(stable, "corpus round-trip: parse(print(parse(s))) is structurally equal and printing is a fixed point");

  std::mt19937_64 rng(11);
  int diagnosed = 0, crashed = 0;
  for (int k = 0; k < 10000; ++k) {
    std::string src = random_source(rng);
    try {
      auto r = frontend::parse(src);
      if (!r.ok()) {
        ++diagnosed;
        for (const auto& d : r.diagnostics) crashed += d.message.empty() ? 1 : 0;
      } else {
        (void)frontend::elaborate(r.spec);
      }
    } catch (...) {
      ++crashed;
    }
  }
  o.require(crashed == 0, "10000 random byte strings: no crash, " + std::to_string(diagnosed) + " rejected with diagnostics");

  auto dir = std::filesystem::temp_directory_path() / ("cptlab_acceptance_" + std::to_string(::getpid()));
  int exported = run_cli("examples --export \"" + dir.string() + "\"");
  o.require(exported == 0, "examples --export writes the corpus");
  std::map<int, int> seen;
  bool contract = true;
  for (const auto& e : frontend::builtin_examples()) {
    std::string file = "\"" + (dir / (e.name + ".cpt")).string() + "\"";
    for (const auto& x : e.expectations) {
      std::string args = x.args.front() + " " + file;
      for (std::size_t k = 1; k < x.args.size(); ++k) args += " " + x.args[k];
      int code = run_cli(args);
      seen[x.exit]++;
      if (code != x.exit) {
        contract = false;
        o.note("cptlab " + args + " exited " + std::to_string(code) + ", expected " + std::to_string(x.exit));
      }
    }
  }
  o.require(contract && seen.count(0) && seen.count(1) && seen.count(2),
            "corpus runs on exported files: exit 0/1/2 as expected (" + std::to_string(seen[0]) + " pass, " +
                std::to_string(seen[1]) + " fail, " + std::to_string(seen[2]) + " not applicable)");
  o.require(run_cli("check \"" + (dir / "missing.cpt").string() + "\"") == 3 && run_cli("frobnicate") == 3 &&
                run_cli("check builtin:maxwell --group nope") == 3,
            "usage and parse errors exit 3");
  std::filesystem::remove_all(dir);
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

const Criterion criteria[] = {
    {"complex-scalar transformation table", complex_scalar_table},
    {"Maxwell invariance, pseudo-vector source fails at PT", maxwell_invariance},
    {"Dirac: holomorphic PT, constraint, CPT harness, commutative sign", dirac},
    {"strong-reflection sign law for m = 0..8", sign_law},
    {"covers: projection, PT-5, V_1 -> iV_1, rho'(i,i)", covers},
    {"Clifford and Pin groups, axioms by signature", clifford_pin},
    {"classical correspondence, exact and float", correspondence},
    {"2D and Galilean counterexamples", counterexamples},
    {"affine identity with rho(tau)", affine_identity},
    {"strong reflection against the holomorphic action at (i,i)", strong_reflection_phase},
    {"frontend round-trip, fuzzing, CLI exit codes", frontend_contract},
};

}  // namespace

int main(int argc, char** argv) {
  constexpr int n = sizeof(criteria) / sizeof(criteria[0]);
  std::vector<int> which;
  if (argc > 1) {
    which.push_back(std::atoi(argv[1]));
    if (which[0] < 1 || which[0] > n) {
      std::cerr << "usage: acceptance [1.." << n << "]\n";
      return 3;
    }
  } else {
    for (int k = 1; k <= n; ++k) which.push_back(k);
  }
  bool all = true;
  for (int k : which) {
    const Criterion& c = criteria[k - 1];
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << " - " << c.title << "\n";
    for (const auto& l : o.lines) std::cout << "  " << l << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
