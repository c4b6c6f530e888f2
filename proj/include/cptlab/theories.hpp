#pragma once

#include "cptlab/axioms.hpp"
#include "cptlab/group_actions.hpp"
#include "cptlab/linsolve.hpp"

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cptlab {

// Equation sets are closed under linear combination (every generator = 0);
// densities are only closed under affine combination.
enum class Interpretation { equation_set, density };

struct FormalTheory {
  std::string name;
  ContentPtr content;
  Mode mode = Mode::commutative;
  Interpretation interpretation = Interpretation::equation_set;
  std::vector<ExactElement> generators;
  // Extra directions the theory is taken modulo (e.g. total derivatives).
  std::vector<ExactElement> modulo;

  void validate() const {
    if (!content) throw std::invalid_argument("theory '" + name + "' has no field content");
    if (generators.empty()) throw std::invalid_argument("theory '" + name + "' has no generators");
    for (const auto* list : {&generators, &modulo})
      for (const auto& g : *list) {
        if (g.space() != content->space()) throw std::invalid_argument("theory '" + name + "': generator over another symbol space");
        if (g.mode() != mode) throw std::invalid_argument("theory '" + name + "': generator in another mode");
      }
  }
};

inline constexpr std::size_t default_support_cap = 20000;
inline constexpr double default_residual_tolerance = 1e-8;

struct MembershipResult {
  bool member = false;
  // Exact mode: coefficients of generators then modulo directions.
  std::vector<GaussianRational> certificate;
  std::optional<double> residual;
};

// Affine span of a theory's generators (plus its linear direction space).
template <class S>
class TheorySpan {
public:
  explicit TheorySpan(const FormalTheory& t, std::size_t cap = default_support_cap, double tol = default_residual_tolerance)
      : space_(t.content->space()), mode_(t.mode), interp_(t.interpretation), cap_(cap), tol_(tol),
        n_gen_(t.generators.size()), base_(space_, mode_) {
    t.validate();
    std::vector<Element<S>> gens;
    for (const auto& g : t.generators) gens.push_back(convert_element<S>(g));
    if (interp_ == Interpretation::density) {
      base_ = gens.front();
      for (std::size_t k = 1; k < gens.size(); ++k) dirs_.push_back(gens[k] - gens.front());
    } else {
      dirs_ = gens;
    }
    for (const auto& m : t.modulo) dirs_.push_back(convert_element<S>(m));
  }

  MembershipResult contains(const Element<S>& f) const { return solve_for(f - base_, true); }
  MembershipResult contains_direction(const Element<S>& f) const { return solve_for(f, false); }

private:
  MembershipResult solve_for(const Element<S>& rhs, bool affine) const {
    using T = ScalarTraits<S>;
    std::map<Monomial, std::size_t> index;
    auto collect = [&](const Element<S>& e) {
      for (const auto& [m, c] : e.terms()) index.try_emplace(m, 0);
    };
    for (const auto& d : dirs_) collect(d);
    collect(rhs);
    if (index.size() > cap_)
      throw std::length_error("membership: monomial support " + std::to_string(index.size()) + " exceeds the cap " +
                              std::to_string(cap_));
    std::size_t r = 0;
    for (auto& [m, k] : index) k = r++;
    const std::size_t rows = index.size(), cols = dirs_.size();
    MembershipResult out;
    if constexpr (T::exact) {
      Matrix<S> a(rows, cols);
      std::vector<S> b(rows, T::zero());
      for (std::size_t c = 0; c < cols; ++c)
        for (const auto& [m, v] : dirs_[c].terms()) a(index.at(m), c) = v;
      for (const auto& [m, v] : rhs.terms()) b[index.at(m)] = v;
      auto x = solve(a, b);
      out.member = x.has_value();
      if (x) out.certificate = certificate(*x, affine);
    } else {
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, cols);
      Eigen::VectorXcd b = Eigen::VectorXcd::Zero(rows);
      for (std::size_t c = 0; c < cols; ++c)
        for (const auto& [m, v] : dirs_[c].terms()) a(index.at(m), c) = v;
      for (const auto& [m, v] : rhs.terms()) b(index.at(m)) = v;
      double scale = std::max(1.0, b.norm());
      double res = b.norm();
      if (cols > 0 && rows > 0) {
        Eigen::VectorXcd x = a.completeOrthogonalDecomposition().solve(b);
        res = (a * x - b).norm();
      }
      out.residual = res / scale;
      out.member = *out.residual < tol_;
    }
    return out;
  }

  std::vector<GaussianRational> certificate(const std::vector<S>& x, bool affine) const {
    std::vector<GaussianRational> out;
    if (interp_ == Interpretation::density) {
      GaussianRational sum;
      for (std::size_t k = 0; k + 1 < n_gen_; ++k) sum += x[k];
      out.push_back(affine ? GaussianRational(1) - sum : -sum);
      for (std::size_t k = 0; k + 1 < n_gen_; ++k) out.push_back(x[k]);
      for (std::size_t k = n_gen_ - 1; k < x.size(); ++k) out.push_back(x[k]);
    } else {
      out = x;
    }
    return out;
  }

  SpacePtr space_;
  Mode mode_;
  Interpretation interp_;
  std::size_t cap_;
  double tol_;
  std::size_t n_gen_;
  Element<S> base_;
  std::vector<Element<S>> dirs_;
};

template <class S>
MembershipResult affine_membership(const Element<S>& f, const FormalTheory& t) {
  return TheorySpan<S>(t).contains(f);
}

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { pass, fail, not_applicable };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not applicable";
  }
  return "?";
}

inline int exit_code(Verdict v) { return v == Verdict::pass ? 0 : v == Verdict::fail ? 1 : 2; }

struct TransformationResult {
  std::string name;
  bool pass = false;
  bool exact = true;
  std::optional<double> residual;
  std::vector<std::string> certificate;  // one line per generator
  std::string witness;                   // first failing generator and its image
};

struct PremiseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TheoryReport {
  std::string theory;
  std::string title;
  std::vector<PremiseResult> premises;
  std::vector<TransformationResult> transformations;
  std::string classification;
  Verdict verdict = Verdict::pass;
  std::vector<std::string> notes;

  bool premises_pass() const {
    for (const auto& p : premises)
      if (!p.pass) return false;
    return true;
  }
  bool transformations_pass() const {
    for (const auto& t : transformations)
      if (!t.pass) return false;
    return true;
  }

  std::string text() const {
    std::ostringstream os;
    os << title << ": " << theory << "\n";
    for (const auto& p : premises)
      os << "  premise " << p.name << ": " << (p.pass ? "ok" : "FAILED") << (p.detail.empty() ? "" : " (" + p.detail + ")")
         << "\n";
    for (const auto& t : transformations) {
      os << "  " << t.name << ": " << (t.pass ? "invariant" : "NOT invariant");
      if (t.residual) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", *t.residual);
        os << " (residual " << buf << ")";
      }
      os << "\n";
      if (!t.pass && !t.witness.empty()) os << "    witness: " << t.witness << "\n";
    }
    if (!classification.empty()) os << "  classification: " << classification << "\n";
    for (const auto& n : notes) os << "  note: " << n << "\n";
    os << "  verdict: " << verdict_name(verdict) << "\n";
    return os.str();
  }
};

template <class S>
TransformationResult check_map(const FormalTheory& t, const TheorySpan<S>& span, const SymbolMap<S>& map) {
  TransformationResult r;
  r.name = map.name;
  r.exact = ScalarTraits<S>::exact;
  r.pass = true;
  double worst = 0;
  for (std::size_t k = 0; k < t.generators.size(); ++k) {
    Element<S> image = apply_map(map, convert_element<S>(t.generators[k]));
    MembershipResult m = map.derivation ? span.contains_direction(image) : span.contains(image);
    if (m.residual) worst = std::max(worst, *m.residual);
    if (m.member) {
      if (!m.certificate.empty()) {
        std::string line = "g" + std::to_string(k + 1) + " ->";
        for (const auto& c : m.certificate) line += " " + c.str();
        r.certificate.push_back(line);
      }
    } else if (r.pass) {
      r.pass = false;
      r.witness = "g" + std::to_string(k + 1) + " = " + abbreviate(t.generators[k].str()) + "  maps to  " + abbreviate(image.str());
    } else {
      r.pass = false;
    }
  }
  if (!ScalarTraits<S>::exact) r.residual = worst;
  return r;
}

template <class S>
std::vector<TransformationResult> check_invariance(const FormalTheory& t, const std::vector<SymbolMap<S>>& maps) {
  TheorySpan<S> span(t);
  std::vector<TransformationResult> out;
  for (const auto& m : maps) out.push_back(check_map(t, span, m));
  return out;
}

inline TransformationResult is_hermitian(const FormalTheory& t, const Involution& dollar) {
  SymbolMap<GaussianRational> m =
      compose(strong_reflection_map<GaussianRational>(*t.content->space()), involution_map<GaussianRational>(dollar));
  m.name = "dagger_" + dollar.name;
  return check_invariance(t, std::vector{m}).front();
}

// ---------------------------------------------------------------------------
// Group invariance

// Lie generators (exact derivations) plus sampled finite elements (float).
inline std::vector<TransformationResult> orthochronous_invariance(const FormalTheory& t, int samples, std::uint64_t seed) {
  const FieldContent& fc = *t.content;
  const Spacetime& st = fc.spacetime();
  std::vector<SymbolMap<GaussianRational>> lie;
  auto planes = lie_basis_planes(st);
  auto basis = lie_basis(st);
  for (std::size_t k = 0; k < basis.size(); ++k)
    lie.push_back(infinitesimal_action(fc, basis[k], "X" + std::to_string(planes[k].first) + std::to_string(planes[k].second)));
  auto out = check_invariance(t, lie);
  std::vector<SymbolMap<Complex>> finite;
  for (int k = 0; k < samples; ++k) finite.push_back(classical_action(fc, sample_orthochronous(fc, seed + k)));
  for (auto& r : check_invariance(t, finite)) out.push_back(std::move(r));
  return out;
}

inline PremiseResult summarize(const std::string& name, const std::vector<TransformationResult>& rs) {
  PremiseResult p{name, true, ""};
  int exact = 0, sampled = 0;
  double worst = 0;
  for (const auto& r : rs) {
    (r.exact ? exact : sampled)++;
    if (r.residual) worst = std::max(worst, *r.residual);
    if (!r.pass) {
      if (p.pass) p.detail = "fails under " + r.name + (r.witness.empty() ? "" : ": " + r.witness);
      p.pass = false;
    }
  }
  if (p.pass) {
    char buf[96];
    if (sampled)
      std::snprintf(buf, sizeof buf, "%d exact checks, %d samples, max residual %.2g", exact, sampled, worst);
    else
      std::snprintf(buf, sizeof buf, "%d exact checks", exact);
    p.detail = buf;
  }
  return p;
}

inline std::string classify_text(ChargeClass c) {
  switch (c) {
    case ChargeClass::preserving: return "PT (charge-preserving)";
    case ChargeClass::conjugating: return "CPT (charge-conjugating)";
    case ChargeClass::both: return "PT and CPT (W has only neutral charge)";
    case ChargeClass::neither: return "neither PT nor CPT";
  }
  return "?";
}

struct ScalarObstruction {
  bool diagonal = true;                        // image keeps each monomial (up to sign)
  std::vector<std::pair<long, GaussianRational>> relations;  // alpha^n = value
  bool real_solution = true;
  std::string text;
};

// For rho(g^-1) = alpha on V = R, the image of a single generator F is
// sum_m alpha^{n_m} s_m c_m m; membership in span{F} forces alpha^{n_m - n_ref} = s_ref / s_m.
inline ScalarObstruction scalar_obstruction(const FormalTheory& t, const ExactMatrix& omega) {
  ScalarObstruction out;
  const FieldContent& fc = *t.content;
  if (fc.v_dim() != 1 || t.generators.size() != 1) throw std::invalid_argument("scalar obstruction needs one real field and one generator");
  auto map = action_from_v(fc, "alpha=1", ExactMatrix::identity(1), omega);
  const ExactElement& f = t.generators.front();
  ExactElement image = apply_map(map, f);
  std::vector<std::pair<long, GaussianRational>> sm;  // (degree, sign)
  for (const auto& [m, c] : f.terms()) {
    GaussianRational ic = image.coefficient(m);
    if (ic.is_zero()) {
      out.diagonal = false;
      break;
    }
    sm.emplace_back(static_cast<long>(m.size()), ic / c);
  }
  if (!out.diagonal || image.terms().size() != f.terms().size()) {
    out.diagonal = false;
    out.text = "image leaves the monomial support of the generator";
    return out;
  }
  auto ref = *std::min_element(sm.begin(), sm.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [n, s] : sm) {
    if (n == ref.first) continue;
    GaussianRational v = ref.second / s;
    std::pair<long, GaussianRational> rel{n - ref.first, v};
    if (std::find(out.relations.begin(), out.relations.end(), rel) != out.relations.end()) continue;
    out.relations.push_back(rel);
    if (!out.text.empty()) out.text += ", ";
    out.text += "alpha^" + std::to_string(n - ref.first) + " = " + v.str();
    if ((n - ref.first) % 2 == 0 && (!v.is_real() || sgn(v.re()) < 0)) out.real_solution = false;
  }
  if (!out.real_solution) out.text += " (no real solution)";
  return out;
}

enum class GroupChoice { orthochronous, proper, cover };

struct CheckOptions {
  GroupChoice group = GroupChoice::proper;
  ActionKind kind = ActionKind::classical;
  int samples = 25;
  std::uint64_t seed = 1;
  int conclusion_samples = 3;
  bool declared = false;  // apply pseudo twists on time-reversing elements
  std::optional<Involution> dollar;  // compose the non-orthochronous maps with C_$
  bool exact = true;                 // false: check the representative in floating point too
};

inline TheoryReport check_group(const FormalTheory& t, const CheckOptions& o) {
  TheoryReport r;
  r.theory = t.name;
  r.title = std::string("check ") + action_name(o.kind);
  const FieldContent& fc = *t.content;
  auto ortho = orthochronous_invariance(t, o.samples, o.seed);
  for (auto& x : ortho) r.transformations.push_back(std::move(x));
  if (o.group != GroupChoice::orthochronous) {
    ExactElementG pt = pt_element(fc);
    auto finish = [&](auto map) {
      if (o.dollar) {
        using S = typename decltype(map.w)::value_type;
        auto c = compose(involution_map<S>(*o.dollar), map);
        c.name = "C_" + o.dollar->name + " o " + map.name;
        return c;
      }
      return map;
    };
    std::optional<decltype(finish(group_action(o.kind, fc, pt, o.declared)))> built;
    try {
      built = finish(group_action(o.kind, fc, pt, o.declared));
    } catch (const std::invalid_argument& e) {
      // The representation does not extend to the representative (e.g. a 2D character).
      TransformationResult none{pt.name, false, true, std::nullopt, {}, std::string("no action of ") + pt.name + ": " + e.what()};
      r.transformations.push_back(none);
      if (fc.v_dim() == 1 && t.generators.size() == 1) {
        ScalarObstruction ob = scalar_obstruction(t, pt.omega);
        r.notes.push_back("scalar candidates rho(" + pt.name + ") = alpha require " + ob.text);
      }
      r.verdict = Verdict::fail;
      return r;
    }
    auto exact_map = *built;
    r.classification = classify_text(classify_charge(*fc.space(), exact_map.w));
    if (o.exact)
      r.transformations.push_back(check_invariance(t, std::vector{exact_map}).front());
    else
      r.transformations.push_back(
          check_invariance(t, std::vector{finish(group_action(o.kind, fc, convert_element<Complex>(pt), o.declared))}).front());
    std::vector<SymbolMap<Complex>> spots;
    for (int k = 0; k < o.conclusion_samples; ++k)
      spots.push_back(finish(group_action(o.kind, fc, convert_element<Complex>(pt) * sample_orthochronous(fc, o.seed + 1000 + k),
                                          o.declared)));
    for (auto& x : check_invariance(t, spots)) r.transformations.push_back(std::move(x));
  }
  r.verdict = r.transformations_pass() ? Verdict::pass : Verdict::fail;
  return r;
}

// ---------------------------------------------------------------------------
// Theorem harnesses

enum class Theorem { pt, sr, cpt, hol };

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::pt: return "pt";
    case Theorem::sr: return "sr";
    case Theorem::cpt: return "cpt";
    case Theorem::hol: return "hol";
  }
  return "?";
}

inline Involution make_involution(const FieldContent& fc, const std::string& name) {
  if (name == "id") return Involution::identity(*fc.space());
  if (name == "star") return Involution::star(*fc.space());
  if (name == "hash") return Involution::hash(*fc.space(), fc.default_hash());
  if (name == "starhash") return Involution::star_hash(*fc.space(), fc.default_hash());
  throw std::invalid_argument("unknown involution '" + name + "' (expected id, star, hash or starhash)");
}

// # must commute with rho: checked on the W side against the classical action.
inline PremiseResult involution_premise(const FieldContent& fc, const Involution& dollar, int samples, std::uint64_t seed) {
  PremiseResult p{"involution " + dollar.name, true, "squares to the identity and commutes with the group action"};
  if (!dollar.involutive()) return {p.name, false, "does not square to the identity on W"};
  auto commutes = [&](const auto& map) {
    using S = typename decltype(map.w)::value_type;
    Matrix<S> d = convert_matrix<S>(dollar.matrix);
    Matrix<S> lhs = dollar.linear ? Matrix<S>(map.w * d) : Matrix<S>(map.w.conj() * d);
    return approx_equal(lhs, Matrix<S>(d * map.w));
  };
  bool ok = commutes(classical_action(fc, pt_element(fc)));
  for (int k = 0; k < samples && ok; ++k) ok = commutes(classical_action(fc, sample_orthochronous(fc, seed + 500 + k)));
  if (!ok) return {p.name, false, "does not commute with the group action"};
  return p;
}

struct HarnessOptions {
  int samples = 25;
  std::uint64_t seed = 1;
  int conclusion_samples = 3;
  std::string dollar = "star";
};

namespace detail {

inline bool has_odd_symbols(const FieldContent& fc) {
  for (const auto& e : fc.space()->basis())
    if (e.grade == 1) return true;
  return false;
}

inline bool holomorphic(const FormalTheory& t) {
  for (const auto* list : {&t.generators, &t.modulo})
    for (const auto& g : *list)
      for (const auto& [m, c] : g.terms())
        for (const auto& s : m)
          if (t.content->space()->entry(s.lambda).charge != Charge::plus) return false;
  return true;
}

inline PremiseResult axioms_premise(const Spacetime& st, bool spinor, std::uint64_t seed) {
  PremiseResult p{spinor ? "axioms PT-1..PT-5" : "axioms PT-1..PT-3", true, ""};
  if (st.dim() > 6 && !st.galilean) return {p.name, false, "axiom verification limited to d <= 6"};
  AxiomReport rep = verify_axioms(st, 6, seed);
  std::vector<std::string> needed = spinor ? std::vector<std::string>{"PT-1", "PT-2", "PT-3", "PT-4", "PT-5"}
                                           : std::vector<std::string>{"PT-1", "PT-2", "PT-3"};
  for (const auto& n : needed)
    if (!rep.at(n).pass) {
      p.pass = false;
      p.detail += (p.detail.empty() ? "" : "; ") + n + " fails for " + st.str();
    }
  return p;
}

}  // namespace detail

inline TheoryReport theorem_harness(const FormalTheory& t, Theorem which, const HarnessOptions& o) {
  t.validate();
  const FieldContent& fc = *t.content;
  TheoryReport r;
  r.theory = t.name;
  r.title = std::string("harness ") + theorem_name(which);
  if (!t.modulo.empty()) r.notes.push_back("theory taken modulo " + std::to_string(t.modulo.size()) + " extra direction(s)");

  r.premises.push_back(detail::axioms_premise(fc.spacetime(), fc.spinorial(), o.seed));
  switch (which) {
    case Theorem::pt:
      r.premises.push_back({"tensor representation", !fc.spinorial(), fc.spinorial() ? "content has spinor fields" : ""});
      break;
    case Theorem::sr:
    case Theorem::cpt: {
      bool ok = t.mode == Mode::supercommutative || (t.mode == Mode::commutative && !detail::has_odd_symbols(fc));
      r.premises.push_back({"mode", ok, std::string(mode_name(t.mode)) + (ok ? "" : " (needs supercommutative, or commutative with only even symbols)")});
      break;
    }
    case Theorem::hol:
      r.premises.push_back({"complex fields", fc.all_complex(), ""});
      r.premises.push_back({"holomorphic", detail::holomorphic(t), "all symbols in the + sector"});
      r.premises.push_back({"signature (1,3)", fc.spacetime().minkowski4(), ""});
      break;
  }
  std::optional<Involution> dollar;
  if (which == Theorem::cpt) {
    dollar = make_involution(fc, o.dollar);
    r.premises.push_back(involution_premise(fc, *dollar, 3, o.seed));
  }
  bool structural = r.premises_pass();
  if (structural) {
    r.premises.push_back(summarize("L+up invariance", orthochronous_invariance(t, o.samples, o.seed)));
  }

  // Conclusion (also computed as a diagnostic when a premise fails).
  try {
    if (which == Theorem::hol) {
      if (!fc.all_complex() || !fc.spacetime().minkowski4()) throw std::invalid_argument("no holomorphic action for this content");
      using G = GaussianRational;
      ExactMatrix one = ExactMatrix::identity(2);
      ExactElementG h1 = ExactElementG::of_cover("(1,-1)", ExactCover{one, ExactMatrix(-one)});
      ExactElementG h2 = ExactElementG::of_cover("(-1,1)", ExactCover{ExactMatrix(-one), one});
      auto m1 = holomorphic_action(fc, h1);
      r.classification = classify_text(classify_charge(*fc.space(), m1.w));
      for (auto& x : check_invariance(t, std::vector{m1, holomorphic_action(fc, h2)})) r.transformations.push_back(x);
      std::vector<SymbolMap<Complex>> spots;
      for (int k = 0; k < o.conclusion_samples; ++k)
        spots.push_back(holomorphic_action(fc, convert_element<Complex>(h1) * sample_orthochronous(fc, o.seed + 1000 + k)));
      for (auto& x : check_invariance(t, spots)) r.transformations.push_back(x);
      (void)G();
    } else {
      ExactElementG pt = pt_element(fc);
      auto build = [&](const auto& g) {
        auto m = classical_action(fc, g);
        using S = typename decltype(m.w)::value_type;
        if (which == Theorem::sr) {
          auto c = compose(strong_reflection_map<S>(*fc.space()), m);
          c.name = "S o " + m.name;
          return c;
        }
        if (which == Theorem::cpt) {
          auto c = compose(involution_map<S>(*dollar), m);
          c.name = "C_" + dollar->name + " o " + m.name;
          return c;
        }
        return m;
      };
      auto exact_map = build(pt);
      r.classification = classify_text(classify_charge(*fc.space(), exact_map.w));
      r.transformations.push_back(check_invariance(t, std::vector{exact_map}).front());
      std::vector<SymbolMap<Complex>> spots;
      for (int k = 0; k < o.conclusion_samples; ++k)
        spots.push_back(build(convert_element<Complex>(pt) * sample_orthochronous(fc, o.seed + 1000 + k)));
      for (auto& x : check_invariance(t, spots)) r.transformations.push_back(x);
    }
  } catch (const std::exception& e) {
    r.notes.push_back(std::string("conclusion not computable: ") + e.what());
    r.transformations.push_back({"conclusion", false, true, std::nullopt, {}, e.what()});
  }

  bool conclusion;
  if (which == Theorem::cpt) {
    // Invariance under C_$ o rho'(PT) iff $-hermitian.
    TransformationResult herm = is_hermitian(t, *dollar);
    bool invariant = r.transformations_pass();
    r.transformations.push_back(herm);
    conclusion = invariant == herm.pass;
    r.notes.push_back(std::string("C_") + dollar->name + "-invariant: " + (invariant ? "yes" : "no") + ", " + dollar->name +
                      "-hermitian: " + (herm.pass ? "yes" : "no") + (conclusion ? " (equivalence holds)" : " (equivalence FAILS)"));
  } else {
    conclusion = r.transformations_pass();
  }
  if (!r.premises_pass()) {
    r.verdict = Verdict::not_applicable;
    r.notes.push_back(std::string("theorem not applicable; conclusion ") + (conclusion ? "holds" : "fails") + " (diagnostic only)");
  } else {
    r.verdict = conclusion ? Verdict::pass : Verdict::fail;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Scalar candidates on a one-dimensional V

inline ExactElement scalar_symbol(const FieldContent& fc, std::vector<std::uint8_t> derivs = {}) {
  return ExactElement::symbol(fc.space(), Mode::commutative, FieldSymbol(0, std::move(derivs)));
}

inline FormalTheory counterexample_2d_theory() {
  auto fc = std::make_shared<const FieldContent>(Spacetime::lorentzian(1, 1),
                                                 std::vector<FieldDecl>{{"Phi", rep::character(mpq_class(1, 4)), false}});
  ExactElement phi = scalar_symbol(*fc);
  ExactElement dxi = scalar_symbol(*fc, {0}) + scalar_symbol(*fc, {1});
  ExactElement f = phi * phi * phi * dxi - ExactElement::constant(fc->space(), Mode::commutative, 1);
  return {"counterexample-2d", fc, Mode::commutative, Interpretation::equation_set, {f}, {}};
}

inline FormalTheory counterexample_galilean_theory(int d) {
  auto fc = std::make_shared<const FieldContent>(Spacetime::galilean_space(d), std::vector<FieldDecl>{{"Phi", rep::trivial(), false}});
  std::vector<ExactElement> gens{scalar_symbol(*fc, {0}) - scalar_symbol(*fc)};
  for (int k = 1; k < d; ++k) gens.push_back(scalar_symbol(*fc, {static_cast<std::uint8_t>(k)}));
  return {"counterexample-galilean", fc, Mode::commutative, Interpretation::equation_set, gens, {}};
}

inline std::vector<GaussianRational> scalar_candidates(bool include_halves) {
  std::vector<GaussianRational> out{1, -1, 2, -2};
  if (include_halves) {
    out.push_back(GaussianRational::ratio(1, 2));
    out.push_back(GaussianRational::ratio(-1, 2));
  }
  return out;
}

// The report passes when the scenario behaves as claimed: L+up-invariant, and
// every time-reversing candidate fails.
inline TheoryReport counterexample_2d(int samples = 25, std::uint64_t seed = 1) {
  FormalTheory t = counterexample_2d_theory();
  const FieldContent& fc = *t.content;
  TheoryReport r;
  r.theory = t.name;
  r.title = "counterexample 2d";
  r.premises.push_back(summarize("L+up invariance", orthochronous_invariance(t, samples, seed)));
  // Exact boost with e^j = 16 on the null vector (1,1).
  using G = GaussianRational;
  ExactMatrix boost{{G(mpq_class(257, 32)), G(mpq_class(255, 32))}, {G(mpq_class(255, 32)), G(mpq_class(257, 32))}};
  auto exact = check_invariance(t, std::vector{classical_action(fc, ExactElementG::of_matrix("boost(e^j=16)", boost))});
  r.premises.push_back(summarize("exact boost", exact));
  ExactMatrix pt = pt_representative(fc.spacetime());
  ScalarObstruction ob = scalar_obstruction(t, pt);
  r.notes.push_back("symbolic obstruction at omega = -1: " + ob.text);
  bool all_fail = true;
  for (const auto& a : scalar_candidates(true)) {
    auto map = action_from_v(fc, "PT[alpha=" + a.str() + "]", ExactMatrix::identity(1) * a, pt);
    auto res = check_invariance(t, std::vector{map}).front();
    all_fail = all_fail && !res.pass;
    r.transformations.push_back(res);
  }
  r.classification = "no time-reversing scalar candidate is a symmetry";
  r.verdict = r.premises_pass() && all_fail && !ob.real_solution ? Verdict::pass : Verdict::fail;
  return r;
}

inline TheoryReport counterexample_galilean(int d = 4, int samples = 25, std::uint64_t seed = 1) {
  FormalTheory t = counterexample_galilean_theory(d);
  const FieldContent& fc = *t.content;
  TheoryReport r;
  r.theory = t.name;
  r.title = "counterexample galilean";
  r.premises.push_back(summarize("L+up invariance", orthochronous_invariance(t, samples, seed)));
  // Time-reversing proper candidates diag(-1, R): reflect one further axis, or (odd d-1) all of them.
  std::vector<std::pair<std::string, ExactMatrix>> omegas{{"diag(-1,-1,1..)", pt_representative(fc.spacetime())}};
  if ((d - 1) % 2 == 1) omegas.push_back({"-1", ExactMatrix(-ExactMatrix::identity(d))});
  else {
    ExactMatrix w = ExactMatrix(-ExactMatrix::identity(d));
    w(1, 1) = 1;
    omegas.push_back({"diag(-1,1,-1..)", w});
  }
  bool all_fail = true;
  for (const auto& [label, omega] : omegas)
    for (const auto& a : scalar_candidates(false)) {
      auto map = action_from_v(fc, "T[" + label + ", alpha=" + a.str() + "]", ExactMatrix::identity(1) * a, omega);
      auto res = check_invariance(t, std::vector{map}).front();
      all_fail = all_fail && !res.pass;
      r.transformations.push_back(res);
    }
  r.classification = "no time-reversing candidate is a symmetry";
  r.verdict = r.premises_pass() && all_fail ? Verdict::pass : Verdict::fail;
  return r;
}

}  // namespace cptlab
