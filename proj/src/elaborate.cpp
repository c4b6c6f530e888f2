#include "cptlab/frontend/elaborate.hpp"

namespace cptlab::frontend {

namespace {

using G = GaussianRational;

struct SemanticError {
  std::string message;
  Span span;
};

constexpr long expansion_budget = 200000;
constexpr std::size_t term_budget = 100000;

class Evaluator {
public:
  Evaluator(const FieldContent& fc, Mode mode) : fc_(fc), mode_(mode) {}

  ExactElement eval(const Expr& e) {
    switch (e.kind) {
      case ExprKind::number: return constant(G(mpq_class(mpz_class(e.text))));
      case ExprKind::imag: return constant(G::i());
      case ExprKind::field: return field(e);
      case ExprKind::conj: {
        std::size_t f = field_of(e);
        int k = index_value(e.indices[0]);
        check_component(f, k, e.indices[0].span);
        return symbol(fc_.symbol_index(f, k, fc_.fields()[f].complex));
      }
      case ExprKind::bar: return bar(e);
      case ExprKind::constant: return constant(matrix_entry(e));
      case ExprKind::neg: return -eval(*e.lhs);
      case ExprKind::add: return checked(eval(*e.lhs) + eval(*e.rhs), e.span);
      case ExprKind::sub: return checked(eval(*e.lhs) - eval(*e.rhs), e.span);
      case ExprKind::mul: return product(eval(*e.lhs), eval(*e.rhs), e.span);
      case ExprKind::div: {
        ExactElement d = eval(*e.rhs);
        bool scalar = d.terms().size() == 1 && d.terms().begin()->first.empty();
        if (!scalar) throw SemanticError{"division by a non-constant expression", e.rhs->span};
        return eval(*e.lhs) * d.terms().begin()->second.inverse();
      }
      case ExprKind::pow: {
        ExactElement base = eval(*e.lhs);
        ExactElement out = constant(1);
        for (int k = 0; k < e.exponent; ++k) out = product(out, base, e.span);
        return out;
      }
      case ExprKind::deriv: {
        ExactElement x = eval(*e.lhs);
        for (const auto& ix : e.indices) {
          int mu = index_value(ix);
          if (mu < 0 || mu >= fc_.spacetime().dim())
            throw SemanticError{"derivative direction " + std::to_string(mu) + " out of range for a " +
                                    std::to_string(fc_.spacetime().dim()) + "-dimensional spacetime",
                                ix.span};
          x = checked(differentiate(x, static_cast<std::uint8_t>(mu)), e.span);
        }
        return x;
      }
      case ExprKind::sum: {
        ExactElement out(fc_.space(), mode_);
        sum_over(e, 0, out);
        return out;
      }
    }
    throw SemanticError{"unsupported expression", e.span};
  }

  std::vector<std::pair<std::string, int>> env;

private:
  ExactElement constant(const G& c) const { return ExactElement::constant(fc_.space(), mode_, c); }
  ExactElement symbol(std::uint32_t lambda, std::vector<std::uint8_t> d = {}) const {
    return ExactElement::symbol(fc_.space(), mode_, FieldSymbol(lambda, std::move(d)));
  }

  ExactElement checked(ExactElement x, const Span& at) const {
    if (x.terms().size() > term_budget) throw SemanticError{"expression expands to too many terms", at};
    return x;
  }

  ExactElement product(const ExactElement& a, const ExactElement& b, const Span& at) const {
    if (static_cast<double>(a.terms().size()) * static_cast<double>(b.terms().size()) > 4.0 * term_budget)
      throw SemanticError{"product expands to too many terms", at};
    return checked(a * b, at);
  }

  // Leibniz rule on each factor.
  ExactElement differentiate(const ExactElement& x, std::uint8_t mu) const {
    ExactElement out(fc_.space(), mode_);
    for (const auto& [m, c] : x.terms())
      for (std::size_t p = 0; p < m.size(); ++p) {
        Monomial n = m;
        auto d = n[p].derivs;
        d.push_back(mu);
        n[p] = FieldSymbol(n[p].lambda, std::move(d));
        out.add_term(std::move(n), c);
      }
    return out;
  }

  void sum_over(const Expr& e, std::size_t level, ExactElement& out) {
    if (level == e.binders.size()) {
      if (++expanded_ > expansion_budget) throw SemanticError{"summation expands too far", e.span};
      out += eval(*e.lhs);
      if (out.terms().size() > term_budget) throw SemanticError{"expression expands to too many terms", e.span};
      return;
    }
    const Binder& b = e.binders[level];
    if (b.name == "i") throw SemanticError{"'i' is the imaginary unit and cannot be an index variable", b.span};
    for (int v = b.lo; v <= b.hi; ++v) {
      env.emplace_back(b.name, v);
      sum_over(e, level + 1, out);
      env.pop_back();
    }
  }

  int index_value(const Index& ix) const {
    if (!ix.variable) return ix.value;
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == ix.name) return it->second;
    throw SemanticError{"undeclared index variable '" + ix.name + "'", ix.span};
  }

  std::size_t field_of(const Expr& e) const {
    int f = fc_.field_index(e.text);
    if (f < 0) throw SemanticError{"undeclared field '" + e.text + "'", e.span};
    return static_cast<std::size_t>(f);
  }

  void check_component(std::size_t f, int k, const Span& at) const {
    int n = fc_.components(f);
    if (k < 0 || k >= n)
      throw SemanticError{"index out of range: field '" + fc_.fields()[f].name + "' has " + std::to_string(n) + " component" +
                              (n == 1 ? "" : "s"),
                          at};
  }

  ExactElement field(const Expr& e) {
    std::size_t f = field_of(e);
    const FieldDecl& decl = fc_.fields()[f];
    if (e.indices.size() == 1) {
      int k = index_value(e.indices[0]);
      check_component(f, k, e.indices[0].span);
      return symbol(fc_.symbol_index(f, k));
    }
    if (e.indices.size() != 2) throw SemanticError{"field '" + decl.name + "' takes one index (or two for a rank-2 rep)", e.span};
    const RepNode& r = *decl.rep;
    if (decl.complex) throw SemanticError{"two-index access needs a real field", e.span};
    int a = index_value(e.indices[0]), b = index_value(e.indices[1]);
    auto range = [&](int v, int n, const Span& at) {
      if (v < 0 || v >= n) throw SemanticError{"index out of range: expected 0.." + std::to_string(n - 1), at};
    };
    if (r.kind == RepKind::tensor) {
      range(a, r.a->dim, e.indices[0].span);
      range(b, r.b->dim, e.indices[1].span);
      return symbol(fc_.symbol_index(f, a * r.b->dim + b));
    }
    if (r.kind != RepKind::antisym2 && r.kind != RepKind::sym2)
      throw SemanticError{"two-index access needs antisym2, sym2 or a tensor product", e.span};
    int n = r.a->dim;
    range(a, n, e.indices[0].span);
    range(b, n, e.indices[1].span);
    bool anti = r.kind == RepKind::antisym2;
    if (anti && a == b) return ExactElement(fc_.space(), mode_);
    int lo = std::min(a, b), hi = std::max(a, b), k = 0;
    // Lexicographic pairs i<j (antisym2) or i<=j (sym2).
    for (int x = 0; x < n; ++x)
      for (int y = anti ? x + 1 : x; y < n; ++y, ++k)
        if (x == lo && y == hi) {
          ExactElement s = symbol(fc_.symbol_index(f, k));
          return anti && a > b ? -s : s;
        }
    throw SemanticError{"index pair not found", e.span};
  }

  // bar(psi)[a] = sum_c conj(psi)[c] (gamma^0)_{ca}
  ExactElement bar(const Expr& e) {
    std::size_t f = field_of(e);
    const FieldDecl& decl = fc_.fields()[f];
    const RepNode& r = *decl.rep;
    bool dirac = decl.complex && r.kind == RepKind::direct_sum && r.a->kind == RepKind::weyl_left && r.b->kind == RepKind::weyl_right;
    if (!dirac) throw SemanticError{"bar() needs a complex field of type weyl_left (+) weyl_right", e.span};
    int a = index_value(e.indices[0]);
    check_component(f, a, e.indices[0].span);
    ExactMatrix g0 = gamma_matrix(0);
    ExactElement out(fc_.space(), mode_);
    for (int c = 0; c < 4; ++c)
      if (!g0(c, a).is_zero()) out += symbol(fc_.symbol_index(f, c, true)) * g0(c, a);
    return out;
  }

  G matrix_entry(const Expr& e) {
    std::vector<int> v;
    for (const auto& ix : e.indices) v.push_back(index_value(ix));
    auto range = [&](std::size_t pos, int n) {
      if (v[pos] < 0 || v[pos] >= n)
        throw SemanticError{"index out of range: " + e.text + " indices run over 0.." + std::to_string(n - 1), e.indices[pos].span};
    };
    if (e.text == "eta") {
      int d = fc_.spacetime().dim();
      range(0, d);
      range(1, d);
      return v[0] == v[1] ? G(fc_.spacetime().eta(v[0])) : G(0);
    }
    if (e.text == "gamma5") {
      range(0, 4);
      range(1, 4);
      return gamma5()(v[0], v[1]);
    }
    range(0, 4);
    if (e.text == "gamma") {
      range(1, 4);
      range(2, 4);
      return gamma_matrix(v[0])(v[1], v[2]);
    }
    range(1, 2);
    range(2, 2);
    ExactMatrix s = bracket<G>(v[0]);
    G x = s(v[1], v[2]);
    return e.text == "sigmabar" && v[0] != 0 ? -x : x;
  }

  const FieldContent& fc_;
  Mode mode_;
  long expanded_ = 0;
};

Mode mode_of(const std::string& s) {
  if (s == "supercommutative") return Mode::supercommutative;
  if (s == "free") return Mode::free_algebra;
  return Mode::commutative;
}

}  // namespace

const FormalTheory* Elaborated::theory(const std::string& name) const {
  for (const auto& t : theories)
    if (t.name == name) return &t;
  return nullptr;
}

RepPtr to_rep(const RepExpr& r, const Spacetime& st) {
  switch (r.kind) {
    case RepExprKind::trivial: return rep::trivial(r.n);
    case RepExprKind::vector: return rep::vector(st.dim());
    case RepExprKind::weyl_left: return rep::weyl_left();
    case RepExprKind::weyl_right: return rep::weyl_right();
    case RepExprKind::character: {
      mpq_class k(r.weight);
      k.canonicalize();
      return rep::character(k);
    }
    case RepExprKind::dual: return rep::dual(to_rep(*r.a, st));
    case RepExprKind::tensor: {
      RepPtr a = to_rep(*r.a, st), b = to_rep(*r.b, st);
      if (static_cast<long>(a->dim) * b->dim > 4096) throw std::invalid_argument("tensor product too large");
      return rep::tensor(a, b);
    }
    case RepExprKind::direct_sum: {
      RepPtr a = to_rep(*r.a, st), b = to_rep(*r.b, st);
      if (a->dim + b->dim > 4096) throw std::invalid_argument("direct sum too large");
      return rep::direct_sum(a, b);
    }
    case RepExprKind::antisym2:
    case RepExprKind::sym2: {
      RepPtr a = to_rep(*r.a, st);
      if (a->dim > 64) throw std::invalid_argument("rank-2 rep of a rep larger than 64");
      return r.kind == RepExprKind::sym2 ? rep::sym2(a) : rep::antisym2(a);
    }
    case RepExprKind::pseudo: return rep::pseudo(to_rep(*r.a, st));
  }
  throw std::logic_error("unknown representation");
}

Elaborated elaborate(const SourceSpec& spec) {
  Elaborated out;
  auto error = [&](const std::string& msg, const Span& at) { out.diagnostics.push_back({Severity::error, msg, at}); };

  Spacetime st = Spacetime::lorentzian(1, 3);
  if (spec.space) st = spec.space->galilean ? Spacetime::galilean_space(spec.space->p) : Spacetime::lorentzian(spec.space->p, spec.space->q);
  if (st.dim() > 12) {
    error("spacetime dimension above 12 is not supported", spec.space->span);
    return out;
  }
  out.mode = spec.mode ? mode_of(*spec.mode) : Mode::commutative;

  if (spec.fields.empty()) {
    error("no fields declared", Span{});
    return out;
  }
  std::vector<FieldDecl> decls;
  constexpr int max_v_dim = 256;
  int v_dim = 0;
  for (const auto& f : spec.fields) {
    for (const auto& d : decls)
      if (d.name == f.name) error("field '" + f.name + "' declared twice", f.span);
    try {
      RepPtr r = to_rep(*f.rep, st);
      v_dim += r->dim;
      if (r->dim > max_v_dim || v_dim > max_v_dim) {
        error("field content larger than " + std::to_string(max_v_dim) + " real components", f.span);
        return out;
      }
      decls.push_back({f.name, r, f.complex});
    } catch (const std::exception& e) {
      error(e.what(), f.rep->span);
    }
  }
  if (!out.ok()) return out;
  try {
    out.content = std::make_shared<const FieldContent>(st, decls);
  } catch (const std::exception& e) {
    error(e.what(), spec.fields.front().span);
    return out;
  }

  std::map<std::string, std::vector<std::size_t>> by_name;
  for (const auto& f : spec.formulas) {
    if (by_name.count(f.name)) {
      error("formula '" + f.name + "' defined twice", f.span);
      continue;
    }
    auto& slots = by_name[f.name];
    Evaluator ev(*out.content, out.mode);
    try {
      if (!f.family) {
        out.formulas.emplace_back(f.name, ev.eval(*f.body));
        slots.push_back(out.formulas.size() - 1);
      } else {
        if (f.family->name == "i") throw SemanticError{"'i' is the imaginary unit and cannot be an index variable", f.family->span};
        for (int v = f.family->lo; v <= f.family->hi; ++v) {
          ev.env = {{f.family->name, v}};
          out.formulas.emplace_back(f.name + "[" + std::to_string(v) + "]", ev.eval(*f.body));
          slots.push_back(out.formulas.size() - 1);
        }
      }
    } catch (const SemanticError& e) {
      error(e.message, e.span);
    } catch (const std::exception& e) {
      error(e.what(), f.span);
    }
  }
  if (!out.ok()) return out;

  auto collect = [&](const std::vector<std::pair<std::string, Span>>& names, std::vector<ExactElement>& into,
                     std::vector<std::string>* labels) {
    for (const auto& [n, at] : names) {
      auto it = by_name.find(n);
      if (it == by_name.end()) {
        error("undeclared formula '" + n + "'", at);
        continue;
      }
      for (auto k : it->second) {
        into.push_back(out.formulas[k].second);
        if (labels) labels->push_back(out.formulas[k].first);
      }
    }
  };
  if (spec.theories.empty()) {
    if (out.formulas.empty()) {
      error("no formulas declared", Span{});
      return out;
    }
    FormalTheory t{"main", out.content, out.mode, Interpretation::equation_set, {}, {}};
    for (const auto& [n, x] : out.formulas) {
      t.generators.push_back(x);
      out.generator_names["main"].push_back(n);
    }
    out.theories.push_back(std::move(t));
    return out;
  }
  for (const auto& th : spec.theories) {
    if (out.theory(th.name)) error("theory '" + th.name + "' defined twice", th.span);
    FormalTheory t{th.name, out.content, out.mode, th.density ? Interpretation::density : Interpretation::equation_set, {}, {}};
    collect(th.formulas, t.generators, &out.generator_names[th.name]);
    collect(th.modulo, t.modulo, nullptr);
    if (t.generators.empty()) error("theory '" + th.name + "' has no generators", th.span);
    out.theories.push_back(std::move(t));
  }
  return out;
}

Elaborated load(const std::string& source) {
  ParseResult p = parse(source);
  if (!p.ok()) {
    Elaborated out;
    out.diagnostics = std::move(p.diagnostics);
    return out;
  }
  return elaborate(p.spec);
}

}  // namespace cptlab::frontend
