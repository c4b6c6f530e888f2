#pragma once

// Theory source files: lexer, parser and pretty printer.
//
//   space signature 1,3            | space galilean 4
//   field psi : weyl_left (+) weyl_right complex
//   mode supercommutative
//   formula eq[a=0..3] = -i*sum{mu=0..3, b=0..3} gamma[mu,a,b]*d[mu] psi[b] + psi[a]
//   theory dirac equations { eq }
//
// Parsing never throws; every problem is reported as a Diagnostic with a span.

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cptlab::frontend {

struct Span {
  int line = 1;
  int col = 1;
  std::size_t offset = 0;
  std::size_t length = 0;
};

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity = Severity::error;
  std::string message;
  Span span;

  std::string str(const std::string& file = "") const;
};

// An index is a literal or a bound variable.
struct Index {
  bool variable = false;
  int value = 0;
  std::string name;
  Span span;
};

struct Binder {
  std::string name;
  int lo = 0;
  int hi = 0;
  Span span;
};

enum class ExprKind {
  number,    // text holds the decimal digits
  imag,      // i
  field,     // name[idx, ...]
  conj,      // conj(name)[idx]
  bar,       // bar(name)[idx], the Dirac adjoint component
  constant,  // gamma[mu,a,b], gamma5[a,b], sigma[mu,a,b], sigmabar[mu,a,b], eta[m,n]
  neg,
  add,
  sub,
  mul,
  div,
  pow,
  deriv,     // d[mu, ...] x
  sum        // sum{v=lo..hi, ...} x
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::number;
  std::string text;  // number digits, field name or constant name
  std::vector<Index> indices;
  std::vector<Binder> binders;
  int exponent = 0;
  ExprPtr lhs;
  ExprPtr rhs;
  Span span;
};

enum class RepExprKind { trivial, vector, weyl_left, weyl_right, character, dual, tensor, direct_sum, antisym2, sym2, pseudo };

struct RepExpr;
using RepExprPtr = std::shared_ptr<const RepExpr>;

struct RepExpr {
  RepExprKind kind = RepExprKind::trivial;
  int n = 1;             // trivial(n)
  std::string weight;    // character(p/q), as written
  RepExprPtr a;
  RepExprPtr b;
  Span span;
};

struct SpaceDecl {
  bool galilean = false;
  int p = 1;
  int q = 3;  // for galilean: dimension in p, q unused
  Span span;
};

struct FieldDeclAst {
  std::string name;
  RepExprPtr rep;
  bool complex = false;
  Span span;
};

struct FormulaDecl {
  std::string name;
  std::optional<Binder> family;
  ExprPtr body;
  Span span;
};

struct TheoryDecl {
  std::string name;
  bool density = false;
  std::vector<std::pair<std::string, Span>> formulas;
  std::vector<std::pair<std::string, Span>> modulo;
  Span span;
};

struct SourceSpec {
  std::optional<SpaceDecl> space;
  std::vector<FieldDeclAst> fields;
  std::optional<std::string> mode;
  Span mode_span;
  std::vector<FormulaDecl> formulas;
  std::vector<TheoryDecl> theories;
};

struct ParseResult {
  SourceSpec spec;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

ParseResult parse(const std::string& source);

std::string print(const SourceSpec& spec);
std::string print(const Expr& e);
std::string print(const RepExpr& r);

// Structural equality, ignoring spans.
bool same(const Expr& a, const Expr& b);
bool same(const RepExpr& a, const RepExpr& b);
bool same(const SourceSpec& a, const SourceSpec& b);

// Limits that keep hostile input cheap.
inline constexpr int max_nesting = 200;
inline constexpr int max_exponent = 16;
inline constexpr int max_range = 64;

}  // namespace cptlab::frontend
