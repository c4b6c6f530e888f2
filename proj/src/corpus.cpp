#include "cptlab/frontend/corpus.hpp"

namespace cptlab::frontend {

namespace {

const char* complex_scalar = R"(# The single formula i*phi for a complex scalar.
field phi : trivial(2) complex
mode commutative
formula f = i*phi[0]
theory complex-scalar equations { f }
)";

const char* klein_gordon = R"(# Free complex Klein-Gordon density, m^2 = 2.
field phi : trivial(2) complex
mode commutative
formula L = sum{mu=0..3} eta[mu,mu]*d[mu] conj(phi)[0]*d[mu] phi[0] - 2*conj(phi)[0]*phi[0]
theory klein-gordon density { L }
)";

const char* maxwell = R"(# Maxwell with a source: d_b F^{ab} = J^a.
field F : antisym2(vector)
field J : vector
mode commutative
formula maxwell[a=0..3] = sum{b=0..3} d[b] F[a,b] - J[a]
theory maxwell equations { maxwell }
)";

const char* maxwell_pseudo = R"(# Same equations with a pseudo-vector source.
field F : antisym2(vector)
field J : pseudo(vector)
mode commutative
formula maxwell[a=0..3] = sum{b=0..3} d[b] F[a,b] - J[a]
theory maxwell-pseudo equations { maxwell }
)";

const char* weyl = R"(# Massless left-handed Weyl equation.
field chi : weyl_left complex
mode supercommutative
formula weyl[a=0..1] = sum{mu=0..3, b=0..1} sigma[mu,a,b]*d[mu] chi[b]
theory weyl equations { weyl }
)";

const char* dirac_equation = R"(# -i gamma^mu d_mu psi + m psi = 0 with m = 1, chiral basis.
field psi : weyl_left (+) weyl_right complex
mode supercommutative
formula dirac[a=0..3] = -i*sum{mu=0..3, b=0..3} gamma[mu,a,b]*d[mu] psi[b] + psi[a]
theory dirac-equation equations { dirac }
)";

const char* dirac_lagrangian = R"(# Symmetrized Dirac Lagrangian, m = 1.
field psi : weyl_left (+) weyl_right complex
mode supercommutative
formula L = (i/2)*sum{mu=0..3, a=0..3, b=0..3} gamma[mu,a,b]*(bar(psi)[a]*d[mu] psi[b] - d[mu] bar(psi)[a]*psi[b]) - sum{a=0..3} bar(psi)[a]*psi[a]
theory dirac-lagrangian density { L }
)";

const char* dirac_constraint = R"(# The constraint psibar psi = 1 with anticommuting spinors.
field psi : weyl_left (+) weyl_right complex
mode supercommutative
formula c = sum{a=0..3} bar(psi)[a]*psi[a] - 1
theory dirac-constraint equations { c }
)";

const char* dirac_constraint_commutative = R"(# The same constraint with spinor components forced to commute.
field psi : weyl_left (+) weyl_right complex
mode commutative
formula c = sum{a=0..3} bar(psi)[a]*psi[a] - 1
theory dirac-constraint-commutative equations { c }
)";

const char* counterexample_2d = R"(# Two dimensions: Phi^3 (d_0 + d_1) Phi = 1 with Phi of weight 1/4.
space signature 1,1
field Phi : character(1/4)
mode commutative
formula f = Phi[0]^3*(d[0] Phi[0] + d[1] Phi[0]) - 1
theory counterexample-2d equations { f }
)";

const char* galilean = R"(# Galilean spacetime: d_0 Phi = Phi and all spatial derivatives vanish.
space galilean 4
field Phi : trivial
mode commutative
formula time = d[0] Phi[0] - Phi[0]
formula spatial[k=1..3] = d[k] Phi[0]
theory galilean equations { time, spatial }
)";

std::vector<CorpusEntry> build() {
  return {
      {"complex-scalar",
       "i*phi: classical PT keeps it, quantum CPT sends it to -i*conj(phi)",
       complex_scalar,
       {{{"check", "--group", "Lp", "--mode", "classical"}, 0},
        {{"check", "--group", "Lp", "--mode", "quantum"}, 1},
        {{"transform", "--element", "total-reflection", "--mode", "quantum"}, 0}}},
      {"klein-gordon",
       "hermitian density, quantum CPT invariant",
       klein_gordon,
       {{{"harness", "--theorem", "cpt", "--dollar", "star"}, 0},
        {{"harness", "--theorem", "pt"}, 0},
        {{"check", "--group", "Lp", "--mode", "quantum"}, 0}}},
      {"maxwell",
       "tensor source, invariant under the proper group",
       maxwell,
       {{{"check", "--group", "Lp", "--mode", "classical"}, 0}, {{"harness", "--theorem", "pt"}, 0}}},
      {"maxwell-pseudo",
       "pseudo-vector source: orthochronous invariant, PT breaks it",
       maxwell_pseudo,
       {{{"check", "--group", "Lpo"}, 0}, {{"check", "--group", "Lp", "--mode", "classical"}, 1}}},
      {"weyl",
       "left-handed Weyl equation",
       weyl,
       {{{"check", "--group", "Lpo"}, 0}, {{"harness", "--theorem", "hol"}, 0}}},
      {"dirac-equation",
       "holomorphic PT psi -> gamma5 psi preserves the equation",
       dirac_equation,
       {{{"harness", "--theorem", "hol"}, 0}, {{"check", "--group", "Lpo"}, 0}}},
      {"dirac-lagrangian",
       "hermitian Lagrangian, CPT and strong reflection",
       dirac_lagrangian,
       {{{"harness", "--theorem", "cpt", "--dollar", "star"}, 0}, {{"harness", "--theorem", "sr"}, 0}}},
      {"dirac-constraint",
       "psibar psi = 1 is hermitian but not holomorphic",
       dirac_constraint,
       {{{"harness", "--theorem", "cpt", "--dollar", "star"}, 0}, {{"harness", "--theorem", "hol"}, 2}}},
      {"dirac-constraint-commutative",
       "commuting spinors: the CPT theorem does not apply and the image is -psibar psi = 1",
       dirac_constraint_commutative,
       {{{"harness", "--theorem", "cpt", "--dollar", "star"}, 2}}},
      {"counterexample-2d",
       "orthochronous invariant, no real PT scalar exists",
       counterexample_2d,
       {{{"check", "--group", "Lpo"}, 0}, {{"check", "--group", "Lp"}, 1}}},
      {"galilean",
       "Galilean invariant, no time reversal",
       galilean,
       {{{"check", "--group", "Lpo"}, 0}, {{"check", "--group", "Lp"}, 1}}},
  };
}

}  // namespace

const std::vector<CorpusEntry>& builtin_examples() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry* find_example(const std::string& name) {
  for (const auto& e : builtin_examples())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace cptlab::frontend
