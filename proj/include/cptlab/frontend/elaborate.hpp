#pragma once

// Turns a parsed source into field content and formal theories.

#include <map>

#include "cptlab/frontend/syntax.hpp"
#include "cptlab/theories.hpp"

namespace cptlab::frontend {

struct Elaborated {
  ContentPtr content;
  Mode mode = Mode::commutative;
  // Formula families expand to name[0], name[1], ...; plain formulas keep their name.
  std::vector<std::pair<std::string, ExactElement>> formulas;
  std::vector<FormalTheory> theories;
  std::map<std::string, std::vector<std::string>> generator_names;  // per theory
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
  const FormalTheory* theory(const std::string& name) const;
};

Elaborated elaborate(const SourceSpec& spec);

// parse + elaborate; parse diagnostics stop before elaboration.
Elaborated load(const std::string& source);

RepPtr to_rep(const RepExpr& r, const Spacetime& st);

}  // namespace cptlab::frontend
