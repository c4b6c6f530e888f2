#include "cptlab/frontend/syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

namespace cptlab::frontend {

std::string Diagnostic::str(const std::string& file) const {
  std::ostringstream os;
  if (!file.empty()) os << file << ":";
  os << span.line << ":" << span.col << ": " << (severity == Severity::error ? "error" : "warning") << ": " << message;
  return os.str();
}

namespace {

enum class Tok { ident, integer, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  Span span;
  bool glued = false;  // no whitespace before this token
};

const std::set<std::string> statement_words = {"space", "field", "mode", "formula", "theory"};
const std::set<std::string> reserved = {"space", "field",   "mode",  "formula", "theory", "modulo",   "sum",
                                        "d",     "i",       "conj",  "bar",     "gamma",  "gamma5",   "sigma",
                                        "sigmabar", "eta"};
const std::set<std::string> constants = {"gamma", "gamma5", "sigma", "sigmabar", "eta"};

int constant_arity(const std::string& name) { return name == "gamma5" || name == "eta" ? 2 : 3; }

std::vector<Token> lex(const std::string& src, std::vector<Diagnostic>& diags) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  bool glued = false;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      glued = false;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      glued = false;
      continue;
    }
    Token t;
    t.span = {line, col, i, 1};
    t.glued = glued;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::ident;
      t.text = src.substr(i, j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::integer;
      t.text = src.substr(i, j - i);
    } else if (c == '.' && i + 1 < src.size() && src[i + 1] == '.') {
      t.kind = Tok::punct;
      t.text = "..";
    } else if (std::string("[](){},:=+-*/^").find(static_cast<char>(c)) != std::string::npos) {
      t.kind = Tok::punct;
      t.text = std::string(1, static_cast<char>(c));
    } else {
      std::string shown = std::isprint(c) ? std::string("'") + static_cast<char>(c) + "'" : "byte " + std::to_string(c);
      diags.push_back({Severity::error, "unexpected character " + shown, t.span});
      advance(1);
      glued = false;
      continue;
    }
    t.span.length = t.text.size();
    advance(t.text.size());
    glued = true;
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::end;
  end.span = {line, col, src.size(), 0};
  out.push_back(end);
  return out;
}

struct SyntaxError {
  std::string message;
  Span span;
};

class Parser {
public:
  Parser(std::vector<Token> toks, std::vector<Diagnostic>& diags) : toks_(std::move(toks)), diags_(diags) {}

  SourceSpec run() {
    SourceSpec spec;
    while (peek().kind != Tok::end) {
      std::size_t start = pos_;
      try {
        statement(spec);
      } catch (const SyntaxError& e) {
        diags_.push_back({Severity::error, e.message, e.span});
        recover(start);
      }
    }
    return spec;
  }

private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool is(const std::string& text, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind != Tok::end && t.kind != Tok::integer && t.text == text;
  }
  bool accept(const std::string& text) {
    if (!is(text)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const std::string& msg, const Span& at) const { throw SyntaxError{msg, at}; }
  [[noreturn]] void fail_here(const std::string& expected) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    fail("expected " + expected + ", found " + got, t.span);
  }
  Token expect(const std::string& text) {
    if (!is(text)) fail_here("'" + text + "'");
    return next();
  }
  // Skips to the next statement keyword, always making progress.
  void recover(std::size_t start) {
    if (pos_ == start) next();
    while (peek().kind != Tok::end && !(peek().kind == Tok::ident && statement_words.count(peek().text))) next();
  }

  std::string name(const std::string& what) {
    if (peek().kind != Tok::ident) fail_here(what);
    if (reserved.count(peek().text)) fail("'" + peek().text + "' is a reserved word and cannot name a " + what, peek().span);
    return next().text;
  }

  int small_int(const std::string& what) {
    bool neg = accept("-");
    if (peek().kind != Tok::integer) fail_here(what);
    Token t = next();
    if (t.text.size() > 6) fail(what + " is too large", t.span);
    int v = std::stoi(t.text);
    return neg ? -v : v;
  }

  struct Depth {
    explicit Depth(Parser& p) : p_(p) {
      if (p_.depth_ >= max_nesting) p_.fail("expression nested too deeply", p_.peek().span);
      ++p_.depth_;
    }
    ~Depth() { --p_.depth_; }
    Parser& p_;
  };

  // ---- statements

  void statement(SourceSpec& spec) {
    const Token& t = peek();
    if (t.kind != Tok::ident || !statement_words.count(t.text)) fail_here("a statement (space, field, mode, formula or theory)");
    Span start = t.span;
    std::string kw = next().text;
    if (kw == "space") {
      SpaceDecl s;
      s.span = start;
      if (accept("signature")) {
        s.p = small_int("signature p");
        expect(",");
        s.q = small_int("signature q");
        if (s.p < 1 || s.q < 1) fail("signature needs p >= 1 and q >= 1", start);
      } else if (accept("galilean")) {
        s.galilean = true;
        s.p = small_int("dimension");
        s.q = 0;
        if (s.p < 2) fail("galilean spacetime needs dimension >= 2", start);
      } else {
        fail_here("'signature' or 'galilean'");
      }
      if (spec.space) fail("spacetime declared twice", start);
      spec.space = s;
    } else if (kw == "field") {
      FieldDeclAst f;
      f.span = start;
      f.name = name("field");
      expect(":");
      f.rep = rep_expr();
      if (accept("complex"))
        f.complex = true;
      else
        accept("real");
      spec.fields.push_back(std::move(f));
    } else if (kw == "mode") {
      if (peek().kind != Tok::ident) fail_here("a mode name");
      Token m = next();
      if (m.text != "commutative" && m.text != "supercommutative" && m.text != "free")
        fail("unknown mode '" + m.text + "' (expected commutative, supercommutative or free)", m.span);
      if (spec.mode) fail("mode declared twice", start);
      spec.mode = m.text;
      spec.mode_span = start;
    } else if (kw == "formula") {
      FormulaDecl f;
      f.span = start;
      f.name = name("formula");
      if (accept("[")) {
        f.family = binder();
        expect("]");
      }
      expect("=");
      f.body = expr();
      spec.formulas.push_back(std::move(f));
    } else {
      TheoryDecl th;
      th.span = start;
      th.name = theory_name();
      if (accept("density"))
        th.density = true;
      else
        accept("equations");
      th.formulas = name_list();
      if (accept("modulo")) th.modulo = name_list();
      spec.theories.push_back(std::move(th));
    }
  }

  // Theory names may contain dashes when written without spaces: dirac-equation.
  std::string theory_name() {
    std::string s = name("theory");
    auto word = [&](std::size_t ahead) {
      return peek(ahead).glued && (peek(ahead).kind == Tok::ident || peek(ahead).kind == Tok::integer);
    };
    for (;;) {
      if (is("-") && peek().glued && word(1)) {
        next();
        s += "-" + next().text;
      } else if (word(0)) {
        s += next().text;
      } else {
        return s;
      }
    }
  }

  std::vector<std::pair<std::string, Span>> name_list() {
    std::vector<std::pair<std::string, Span>> out;
    expect("{");
    if (!is("}")) {
      do {
        Span at = peek().span;
        out.emplace_back(name("formula"), at);
      } while (accept(","));
    }
    expect("}");
    return out;
  }

  Binder binder() {
    Binder b;
    b.span = peek().span;
    b.name = name("index variable");
    expect("=");
    b.lo = small_int("range start");
    expect("..");
    b.hi = small_int("range end");
    if (b.hi < b.lo) fail("empty range " + std::to_string(b.lo) + ".." + std::to_string(b.hi), b.span);
    if (b.hi - b.lo + 1 > max_range) fail("range longer than " + std::to_string(max_range), b.span);
    return b;
  }

  // ---- representations: (x) binds tighter than (+)

  bool rep_operator(const std::string& op) const {
    if (!is("(") || !is(")", 2)) return false;
    return op == "+" ? is("+", 1) : (peek(1).kind == Tok::ident && peek(1).text == "x");
  }

  RepExprPtr rep_expr() {
    Depth guard(*this);
    RepExprPtr left = rep_product();
    while (rep_operator("+")) {
      Span at = peek().span;
      pos_ += 3;
      left = std::make_shared<RepExpr>(RepExpr{RepExprKind::direct_sum, 1, "", left, rep_product(), at});
    }
    return left;
  }

  RepExprPtr rep_product() {
    RepExprPtr left = rep_atom();
    while (rep_operator("x")) {
      Span at = peek().span;
      pos_ += 3;
      left = std::make_shared<RepExpr>(RepExpr{RepExprKind::tensor, 1, "", left, rep_atom(), at});
    }
    return left;
  }

  RepExprPtr rep_atom() {
    Depth guard(*this);
    RepExpr r;
    r.span = peek().span;
    if (accept("(")) {
      auto inner = rep_expr();
      expect(")");
      return inner;
    }
    if (peek().kind != Tok::ident) fail_here("a representation");
    std::string w = next().text;
    auto unary = [&](RepExprKind k) {
      r.kind = k;
      expect("(");
      r.a = rep_expr();
      expect(")");
    };
    if (w == "vector") {
      r.kind = RepExprKind::vector;
    } else if (w == "weyl_left") {
      r.kind = RepExprKind::weyl_left;
    } else if (w == "weyl_right") {
      r.kind = RepExprKind::weyl_right;
    } else if (w == "trivial") {
      r.kind = RepExprKind::trivial;
      if (accept("(")) {
        r.n = small_int("trivial dimension");
        if (r.n < 1 || r.n > 64) fail("trivial(n) needs 1 <= n <= 64", r.span);
        expect(")");
      }
    } else if (w == "character") {
      r.kind = RepExprKind::character;
      expect("(");
      bool neg = accept("-");
      if (peek().kind != Tok::integer) fail_here("a rational weight");
      r.weight = (neg ? "-" : "") + next().text;
      if (accept("/")) {
        if (peek().kind != Tok::integer) fail_here("a denominator");
        Token den = next();
        if (den.text.find_first_not_of('0') == std::string::npos) fail("zero denominator", den.span);
        r.weight += "/" + den.text;
      }
      expect(")");
    } else if (w == "dual") {
      unary(RepExprKind::dual);
    } else if (w == "antisym2") {
      unary(RepExprKind::antisym2);
    } else if (w == "sym2") {
      unary(RepExprKind::sym2);
    } else if (w == "pseudo") {
      unary(RepExprKind::pseudo);
    } else {
      fail("unknown representation '" + w + "'", r.span);
    }
    return std::make_shared<RepExpr>(std::move(r));
  }

  // ---- expressions

  ExprPtr expr() {
    Depth guard(*this);
    ExprPtr left = term();
    while (is("+") || is("-")) {
      Span at = peek().span;
      ExprKind k = next().text == "+" ? ExprKind::add : ExprKind::sub;
      left = binary(k, left, term(), at);
    }
    return left;
  }

  ExprPtr term() {
    Depth guard(*this);
    ExprPtr left = unary();
    while (is("*") || is("/")) {
      Span at = peek().span;
      ExprKind k = next().text == "*" ? ExprKind::mul : ExprKind::div;
      left = binary(k, left, unary(), at);
    }
    return left;
  }

  static ExprPtr binary(ExprKind k, ExprPtr l, ExprPtr r, Span at) {
    Expr e;
    e.kind = k;
    e.lhs = std::move(l);
    e.rhs = std::move(r);
    e.span = at;
    return std::make_shared<Expr>(std::move(e));
  }

  ExprPtr unary() {
    Depth guard(*this);
    Expr e;
    e.span = peek().span;
    if (accept("-")) {
      e.kind = ExprKind::neg;
      e.lhs = unary();
      return std::make_shared<Expr>(std::move(e));
    }
    if (is("d") && is("[", 1)) {
      next();
      e.kind = ExprKind::deriv;
      e.indices = index_list();
      e.lhs = unary();
      return std::make_shared<Expr>(std::move(e));
    }
    if (is("sum")) {
      next();
      e.kind = ExprKind::sum;
      expect("{");
      do e.binders.push_back(binder());
      while (accept(","));
      expect("}");
      e.lhs = term();
      return std::make_shared<Expr>(std::move(e));
    }
    ExprPtr base = primary();
    if (accept("^")) {
      Expr p;
      p.kind = ExprKind::pow;
      p.span = e.span;
      p.lhs = base;
      Span at = peek().span;
      p.exponent = small_int("an exponent");
      if (p.exponent < 0 || p.exponent > max_exponent)
        fail("exponent must lie in 0.." + std::to_string(max_exponent), at);
      return std::make_shared<Expr>(std::move(p));
    }
    return base;
  }

  std::vector<Index> index_list() {
    expect("[");
    std::vector<Index> out;
    do {
      Index ix;
      ix.span = peek().span;
      if (peek().kind == Tok::integer) {
        Token t = next();
        if (t.text.size() > 6) fail("index is too large", t.span);
        ix.value = std::stoi(t.text);
      } else if (peek().kind == Tok::ident && !reserved.count(peek().text)) {
        ix.variable = true;
        ix.name = next().text;
      } else {
        fail_here("an index");
      }
      out.push_back(ix);
    } while (accept(","));
    expect("]");
    return out;
  }

  ExprPtr primary() {
    Depth guard(*this);
    Expr e;
    e.span = peek().span;
    if (accept("(")) {
      ExprPtr inner = expr();
      expect(")");
      return inner;
    }
    if (peek().kind == Tok::integer) {
      e.kind = ExprKind::number;
      e.text = next().text;
      if (e.text.size() > 1000) fail("numeric literal is too long", e.span);
      return std::make_shared<Expr>(std::move(e));
    }
    if (peek().kind != Tok::ident || statement_words.count(peek().text)) fail_here("an expression");
    std::string w = next().text;
    if (w == "i") {
      e.kind = ExprKind::imag;
    } else if (w == "conj" || w == "bar") {
      e.kind = w == "conj" ? ExprKind::conj : ExprKind::bar;
      expect("(");
      e.text = name("field");
      expect(")");
      e.indices = index_list();
      if (e.indices.size() != 1) fail(w + "(" + e.text + ") takes exactly one index", e.span);
    } else if (constants.count(w)) {
      e.kind = ExprKind::constant;
      e.text = w;
      e.indices = index_list();
      if (static_cast<int>(e.indices.size()) != constant_arity(w))
        fail(w + " takes " + std::to_string(constant_arity(w)) + " indices", e.span);
    } else if (reserved.count(w)) {
      fail("'" + w + "' cannot start an expression here", e.span);
    } else {
      e.kind = ExprKind::field;
      e.text = w;
      e.indices = index_list();
    }
    return std::make_shared<Expr>(std::move(e));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::vector<Diagnostic>& diags_;
};

// ---- printing

enum Prec { p_add = 1, p_mul = 2, p_unary = 3, p_atom = 4 };

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::add:
    case ExprKind::sub: return p_add;
    case ExprKind::mul:
    case ExprKind::div: return p_mul;
    case ExprKind::neg:
    case ExprKind::deriv:
    case ExprKind::sum:
    case ExprKind::pow: return p_unary;
    default: return p_atom;
  }
}

std::string index_string(const std::vector<Index>& ix) {
  std::string s = "[";
  for (std::size_t k = 0; k < ix.size(); ++k) s += (k ? "," : "") + (ix[k].variable ? ix[k].name : std::to_string(ix[k].value));
  return s + "]";
}

std::string binder_string(const Binder& b) { return b.name + "=" + std::to_string(b.lo) + ".." + std::to_string(b.hi); }

// `need` is the minimum precedence the context accepts. A sum swallows the
// product that follows it, so it is bracketed everywhere except where a whole
// term is expected.
std::string print_at(const Expr& e, int need, bool term_slot) {
  std::string s;
  switch (e.kind) {
    case ExprKind::number: s = e.text; break;
    case ExprKind::imag: s = "i"; break;
    case ExprKind::field: s = e.text + index_string(e.indices); break;
    case ExprKind::conj: s = "conj(" + e.text + ")" + index_string(e.indices); break;
    case ExprKind::bar: s = "bar(" + e.text + ")" + index_string(e.indices); break;
    case ExprKind::constant: s = e.text + index_string(e.indices); break;
    case ExprKind::neg: s = "-" + print_at(*e.lhs, p_unary, false); break;
    case ExprKind::deriv: s = "d" + index_string(e.indices) + " " + print_at(*e.lhs, p_unary, false); break;
    case ExprKind::pow: s = print_at(*e.lhs, p_atom, false) + "^" + std::to_string(e.exponent); break;
    case ExprKind::sum: {
      s = "sum{";
      for (std::size_t k = 0; k < e.binders.size(); ++k) s += (k ? ", " : "") + binder_string(e.binders[k]);
      s += "} " + print_at(*e.lhs, p_mul, true);
      if (!term_slot) return "(" + s + ")";
      break;
    }
    case ExprKind::add:
    case ExprKind::sub:
      s = print_at(*e.lhs, p_add, true) + (e.kind == ExprKind::add ? " + " : " - ") + print_at(*e.rhs, p_mul, true);
      break;
    case ExprKind::mul:
    case ExprKind::div:
      s = print_at(*e.lhs, p_mul, false) + (e.kind == ExprKind::mul ? "*" : "/") + print_at(*e.rhs, p_unary, false);
      break;
  }
  if (precedence(e) < need) return "(" + s + ")";
  return s;
}

std::string weight_string(const std::string& w) { return w; }

bool same_index(const std::vector<Index>& a, const std::vector<Index>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].variable != b[k].variable || a[k].value != b[k].value || a[k].name != b[k].name) return false;
  return true;
}

bool same_binder(const Binder& a, const Binder& b) { return a.name == b.name && a.lo == b.lo && a.hi == b.hi; }

bool same_names(const std::vector<std::pair<std::string, Span>>& a, const std::vector<std::pair<std::string, Span>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].first != b[k].first) return false;
  return true;
}

}  // namespace

ParseResult parse(const std::string& source) {
  ParseResult r;
  auto toks = lex(source, r.diagnostics);
  Parser p(std::move(toks), r.diagnostics);
  r.spec = p.run();
  return r;
}

std::string print(const Expr& e) { return print_at(e, p_add, true); }

std::string print(const RepExpr& r) {
  auto wrap = [](const RepExpr& c, RepExprKind parent) {
    bool paren = c.kind == RepExprKind::direct_sum || (c.kind == RepExprKind::tensor && parent == RepExprKind::tensor);
    return paren ? "(" + print(c) + ")" : print(c);
  };
  switch (r.kind) {
    case RepExprKind::trivial: return r.n == 1 ? "trivial" : "trivial(" + std::to_string(r.n) + ")";
    case RepExprKind::vector: return "vector";
    case RepExprKind::weyl_left: return "weyl_left";
    case RepExprKind::weyl_right: return "weyl_right";
    case RepExprKind::character: return "character(" + weight_string(r.weight) + ")";
    case RepExprKind::dual: return "dual(" + print(*r.a) + ")";
    case RepExprKind::antisym2: return "antisym2(" + print(*r.a) + ")";
    case RepExprKind::sym2: return "sym2(" + print(*r.a) + ")";
    case RepExprKind::pseudo: return "pseudo(" + print(*r.a) + ")";
    case RepExprKind::tensor: {
      // Left-associative: only the right operand needs brackets for a nested tensor.
      std::string l = r.a->kind == RepExprKind::direct_sum ? "(" + print(*r.a) + ")" : print(*r.a);
      return l + " (x) " + wrap(*r.b, RepExprKind::tensor);
    }
    case RepExprKind::direct_sum: {
      std::string rr = r.b->kind == RepExprKind::direct_sum ? "(" + print(*r.b) + ")" : print(*r.b);
      return print(*r.a) + " (+) " + rr;
    }
  }
  return "?";
}

std::string print(const SourceSpec& spec) {
  std::ostringstream os;
  if (spec.space) {
    if (spec.space->galilean)
      os << "space galilean " << spec.space->p << "\n";
    else
      os << "space signature " << spec.space->p << "," << spec.space->q << "\n";
  }
  for (const auto& f : spec.fields) os << "field " << f.name << " : " << print(*f.rep) << (f.complex ? " complex" : "") << "\n";
  if (spec.mode) os << "mode " << *spec.mode << "\n";
  for (const auto& f : spec.formulas) {
    os << "formula " << f.name;
    if (f.family) os << "[" << binder_string(*f.family) << "]";
    os << " = " << print(*f.body) << "\n";
  }
  auto names = [](const std::vector<std::pair<std::string, Span>>& v) {
    std::string s = "{ ";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].first;
    return s + (v.empty() ? "}" : " }");
  };
  for (const auto& t : spec.theories) {
    os << "theory " << t.name << (t.density ? " density " : " equations ") << names(t.formulas);
    if (!t.modulo.empty()) os << " modulo " << names(t.modulo);
    os << "\n";
  }
  return os.str();
}

bool same(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.text != b.text || a.exponent != b.exponent || !same_index(a.indices, b.indices)) return false;
  if (a.binders.size() != b.binders.size()) return false;
  for (std::size_t k = 0; k < a.binders.size(); ++k)
    if (!same_binder(a.binders[k], b.binders[k])) return false;
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs) || static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
  if (a.lhs && !same(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !same(*a.rhs, *b.rhs)) return false;
  return true;
}

bool same(const RepExpr& a, const RepExpr& b) {
  if (a.kind != b.kind || a.n != b.n || a.weight != b.weight) return false;
  if (static_cast<bool>(a.a) != static_cast<bool>(b.a) || static_cast<bool>(a.b) != static_cast<bool>(b.b)) return false;
  if (a.a && !same(*a.a, *b.a)) return false;
  if (a.b && !same(*a.b, *b.b)) return false;
  return true;
}

bool same(const SourceSpec& a, const SourceSpec& b) {
  if (a.space.has_value() != b.space.has_value()) return false;
  if (a.space && (a.space->galilean != b.space->galilean || a.space->p != b.space->p || a.space->q != b.space->q)) return false;
  if (a.mode != b.mode || a.fields.size() != b.fields.size() || a.formulas.size() != b.formulas.size() ||
      a.theories.size() != b.theories.size())
    return false;
  for (std::size_t k = 0; k < a.fields.size(); ++k) {
    const auto &x = a.fields[k], &y = b.fields[k];
    if (x.name != y.name || x.complex != y.complex || !same(*x.rep, *y.rep)) return false;
  }
  for (std::size_t k = 0; k < a.formulas.size(); ++k) {
    const auto &x = a.formulas[k], &y = b.formulas[k];
    if (x.name != y.name || x.family.has_value() != y.family.has_value() || !same(*x.body, *y.body)) return false;
    if (x.family && !same_binder(*x.family, *y.family)) return false;
  }
  for (std::size_t k = 0; k < a.theories.size(); ++k) {
    const auto &x = a.theories[k], &y = b.theories[k];
    if (x.name != y.name || x.density != y.density || !same_names(x.formulas, y.formulas) || !same_names(x.modulo, y.modulo))
      return false;
  }
  return true;
}

}  // namespace cptlab::frontend
