#include "cptlab/frontend/commands.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cptlab/frontend/corpus.hpp"
#include "cptlab/frontend/elaborate.hpp"

namespace cptlab::frontend {

namespace {

struct Options {
  std::string command;
  std::string target;
  std::string theory;
  std::string mode = "classical";
  std::string group = "Lp";
  std::string dollar;
  std::string theorem = "cpt";
  std::string element = "total-reflection";
  int samples = 25;
  std::uint64_t seed = 1;
  bool exact = false;
  bool use_float = false;
  bool json = false;
  std::string signature = "1,3";
  int dim = 4;
  std::string export_dir;
};

struct Usage {
  std::string message;
};

struct Loaded {
  Elaborated el;
  const FormalTheory* theory = nullptr;
  std::vector<std::string> names;
};

std::string read_source(const std::string& target) {
  if (target.empty()) throw Usage{"missing theory file"};
  if (target.rfind("builtin:", 0) == 0) {
    const CorpusEntry* e = find_example(target.substr(8));
    if (!e) throw Usage{"no built-in example '" + target.substr(8) + "'"};
    return e->source;
  }
  std::ifstream in(target, std::ios::binary);
  if (!in) throw Usage{"cannot read '" + target + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Returns false after printing diagnostics.
bool load_theory(const Options& o, Loaded& l, std::ostream& err) {
  l.el = load(read_source(o.target));
  if (!l.el.ok()) {
    for (const auto& d : l.el.diagnostics) err << d.str(o.target) << "\n";
    return false;
  }
  if (o.theory.empty()) {
    l.theory = &l.el.theories.front();
  } else {
    l.theory = l.el.theory(o.theory);
    if (!l.theory) throw Usage{"no theory named '" + o.theory + "'"};
  }
  l.names = l.el.generator_names[l.theory->name];
  return true;
}

ActionKind kind_of(const Options& o) { return o.mode == "quantum" ? ActionKind::quantum : ActionKind::classical; }

void emit(const TheoryReport& r, const Options& o, std::ostream& out) {
  if (o.json)
    out << report_json(r).dump(2) << "\n";
  else
    out << r.text();
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l;
  if (!load_theory(o, l, err)) return exit_usage;
  CheckOptions c;
  c.group = o.group == "Lpo" ? GroupChoice::orthochronous : o.group == "cover" ? GroupChoice::cover : GroupChoice::proper;
  c.kind = kind_of(o);
  c.samples = o.samples;
  c.seed = o.seed;
  c.declared = true;  // the file declares the full rep, twists included
  c.exact = !o.use_float;
  if (!o.dollar.empty()) c.dollar = make_involution(*l.theory->content, o.dollar);
  TheoryReport r = check_group(*l.theory, c);
  emit(r, o, out);
  return exit_code(r.verdict);
}

int cmd_harness(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l;
  if (!load_theory(o, l, err)) return exit_usage;
  Theorem which = o.theorem == "pt" ? Theorem::pt : o.theorem == "sr" ? Theorem::sr : o.theorem == "hol" ? Theorem::hol : Theorem::cpt;
  HarnessOptions h;
  h.samples = o.samples;
  h.seed = o.seed;
  if (!o.dollar.empty()) h.dollar = o.dollar;
  TheoryReport r = theorem_harness(*l.theory, which, h);
  emit(r, o, out);
  return exit_code(r.verdict);
}

ExactElementG named_element(const FieldContent& fc, const std::string& name) {
  if (name == "total-reflection") return pt_element(fc);
  if (name == "identity") {
    if (fc.spinorial()) return ExactElementG::of_cover("identity", ExactCover::identity());
    return ExactElementG::of_matrix("identity", ExactMatrix::identity(fc.spacetime().dim()));
  }
  if (name == "tau") {
    if (!fc.spinorial()) throw Usage{"element tau needs spinor fields"};
    return ExactElementG::of_cover("tau", ExactCover::tau());
  }
  if (name == "holomorphic") {
    if (!fc.spinorial()) throw Usage{"element holomorphic needs spinor fields"};
    ExactMatrix one = ExactMatrix::identity(2);
    return ExactElementG::of_cover("(1,-1)", ExactCover{one, ExactMatrix(-one)});
  }
  throw Usage{"unknown element '" + name + "' (expected identity, total-reflection, tau or holomorphic)"};
}

template <class S>
SymbolMap<S> build_map(const Options& o, const FieldContent& fc, const GroupElement<S>& g) {
  SymbolMap<S> m = o.element == "holomorphic" ? holomorphic_action(fc, g) : group_action(kind_of(o), fc, g, true);
  if (o.dollar.empty()) return m;
  auto c = compose(involution_map<S>(make_involution(fc, o.dollar)), m);
  c.name = "C_" + o.dollar + " o " + m.name;
  return c;
}

int cmd_transform(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l;
  if (!load_theory(o, l, err)) return exit_usage;
  const FormalTheory& t = *l.theory;
  const FieldContent& fc = *t.content;
  ExactElementG g = named_element(fc, o.element);
  std::vector<std::string> images;
  std::string classification;
  auto run = [&](const auto& element) {
    auto map = build_map(o, fc, element);
    classification = classify_text(classify_charge(*fc.space(), map.w));
    using S = typename decltype(map.w)::value_type;
    for (const auto& x : t.generators) images.push_back(apply_map(map, convert_element<S>(x)).str());
  };
  if (o.use_float)
    run(convert_element<Complex>(g));
  else
    run(g);
  std::string action = o.element == "holomorphic" ? "holomorphic" : o.mode;
  if (!o.dollar.empty()) action = "C_" + o.dollar + " o " + action;
  if (o.json) {
    nlohmann::ordered_json j;
    j["theory"] = t.name;
    j["element"] = o.element;
    j["action"] = action;
    j["images"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < images.size(); ++k)
      j["images"].push_back({{"name", l.names[k]}, {"formula", t.generators[k].str()}, {"image", images[k]}});
    j["classification"] = classification;
    out << j.dump(2) << "\n";
  } else {
    out << "transform " << action << " " << o.element << ": " << t.name << "\n";
    for (std::size_t k = 0; k < images.size(); ++k)
      out << "  " << l.names[k] << ": " << abbreviate(t.generators[k].str()) << "  ->  " << abbreviate(images[k]) << "\n";
    out << "  classification: " << classification << "\n";
  }
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l;
  if (!load_theory(o, l, err)) return exit_usage;
  const FieldContent& fc = *l.theory->content;
  auto map = build_map(o, fc, named_element(fc, o.element));
  std::string c = classify_text(classify_charge(*fc.space(), map.w));
  if (o.json) {
    nlohmann::ordered_json j{{"theory", l.theory->name}, {"element", o.element}, {"action", map.name}, {"classification", c}};
    out << j.dump(2) << "\n";
  } else {
    out << "classify " << map.name << ": " << l.theory->name << "\n  classification: " << c << "\n";
  }
  return 0;
}

int cmd_print(const Options& o, std::ostream& out, std::ostream& err) {
  ParseResult p = parse(read_source(o.target));
  if (!p.ok()) {
    for (const auto& d : p.diagnostics) err << d.str(o.target) << "\n";
    return exit_usage;
  }
  out << print(p.spec);
  return 0;
}

Spacetime parse_signature(const std::string& s) {
  if (s.rfind("galilean:", 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(s.substr(9));
    } catch (const std::exception&) {
      throw Usage{"bad signature '" + s + "'"};
    }
    if (d < 2 || d > 6) throw Usage{"galilean dimension must lie in 2..6"};
    return Spacetime::galilean_space(d);
  }
  auto comma = s.find(',');
  int p = 0, q = 0;
  try {
    if (comma == std::string::npos) throw Usage{"signature must be p,q"};
    p = std::stoi(s.substr(0, comma));
    q = std::stoi(s.substr(comma + 1));
  } catch (const std::exception&) {
    throw Usage{"bad signature '" + s + "'"};
  }
  if (p < 1 || q < 1 || p + q > 6) throw Usage{"signature needs p, q >= 1 and p + q <= 6"};
  return Spacetime::lorentzian(p, q);
}

int cmd_axioms(const Options& o, std::ostream& out) {
  Spacetime st = parse_signature(o.signature);
  AxiomReport rep = verify_axioms(st, o.samples, o.seed);
  if (o.json) {
    nlohmann::ordered_json j;
    j["spacetime"] = st.str();
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["axioms"] = nlohmann::ordered_json::array();
    for (const auto& a : rep.axioms) j["axioms"].push_back({{"name", a.name}, {"pass", a.pass}, {"evidence", a.evidence}});
    out << j.dump(2) << "\n";
  } else {
    out << "axioms " << st.str() << " (" << rep.samples << " samples, seed " << rep.seed << ")\n";
    for (const auto& a : rep.axioms) out << "  " << a.name << ": " << (a.pass ? "holds" : "FAILS") << " (" << a.evidence << ")\n";
  }
  return rep.all_pass() ? 0 : 1;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
  TheoryReport r;
  if (o.target == "2d")
    r = counterexample_2d(o.samples, o.seed);
  else if (o.target == "galilean")
    r = counterexample_galilean(o.dim, o.samples, o.seed);
  else
    throw Usage{"counterexample needs '2d' or 'galilean'"};
  emit(r, o, out);
  return exit_code(r.verdict);
}

int cmd_examples(const Options& o, std::ostream& out) {
  if (!o.export_dir.empty()) {
    std::filesystem::create_directories(o.export_dir);
    for (const auto& e : builtin_examples()) {
      auto path = std::filesystem::path(o.export_dir) / (e.name + ".cpt");
      std::ofstream f(path, std::ios::binary);
      f << e.source;
      if (!f) throw Usage{"cannot write '" + path.string() + "'"};
      out << path.string() << "\n";
    }
    return 0;
  }
  bool all = true;
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  for (const auto& e : builtin_examples()) {
    if (!o.json) out << e.name << ": " << e.description << "\n";
    for (const auto& x : e.expectations) {
      std::vector<std::string> args = x.args;
      args.insert(args.begin() + 1, "builtin:" + e.name);
      std::ostringstream sink;
      int got = run_cli(args, sink, sink);
      bool ok = got == x.exit;
      all = all && ok;
      std::string line;
      for (const auto& a : args) line += (line.empty() ? "" : " ") + a;
      if (o.json)
        runs.push_back({{"example", e.name}, {"run", line}, {"exit", got}, {"expected", x.exit}, {"ok", ok}});
      else
        out << "  " << line << " -> exit " << got << " (expected " << x.exit << ") " << (ok ? "ok" : "MISMATCH") << "\n";
    }
  }
  if (o.json) out << runs.dump(2) << "\n";
  return all ? 0 : 1;
}

}  // namespace

nlohmann::ordered_json report_json(const TheoryReport& r) {
  nlohmann::ordered_json j;
  j["theory"] = r.theory;
  j["report"] = r.title;
  j["premises"] = nlohmann::ordered_json::array();
  for (const auto& p : r.premises) j["premises"].push_back({{"name", p.name}, {"pass", p.pass}, {"detail", p.detail}});
  j["transformations"] = nlohmann::ordered_json::array();
  for (const auto& t : r.transformations) {
    nlohmann::ordered_json x{{"name", t.name}, {"verdict", t.pass ? "pass" : "fail"}};
    if (t.residual)
      x["residual"] = *t.residual;
    else
      x["certificate"] = t.certificate;
    if (!t.witness.empty()) x["witness"] = t.witness;
    j["transformations"].push_back(std::move(x));
  }
  j["classification"] = r.classification;
  j["verdict"] = verdict_name(r.verdict);
  j["notes"] = r.notes;
  return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Symbolic checks of PT and CPT invariance for formal field theories"};
  app.name("cptlab");
  app.add_option("command", o.command, "check, transform, classify, harness, axioms, examples, counterexample or print")
      ->required()
      ->check(CLI::IsMember({"check", "transform", "classify", "harness", "axioms", "examples", "counterexample", "print"}));
  app.add_option("target", o.target, "theory file (.cpt), builtin:<name>, or 2d|galilean for counterexample");
  app.add_option("--theory", o.theory, "theory block to use (default: the first)");
  app.add_option("--mode", o.mode, "action kind")->check(CLI::IsMember({"classical", "quantum"}));
  app.add_option("--group", o.group, "group to check")->check(CLI::IsMember({"Lpo", "Lp", "cover"}));
  app.add_option("--dollar", o.dollar, "involution composed with the action")->check(CLI::IsMember({"id", "star", "hash", "starhash"}));
  app.add_option("--theorem", o.theorem, "harness to run")->check(CLI::IsMember({"pt", "sr", "cpt", "hol"}));
  app.add_option("--element", o.element, "group element for transform/classify")
      ->check(CLI::IsMember({"identity", "total-reflection", "tau", "holomorphic"}));
  app.add_option("--samples", o.samples, "sampled group elements")->check(CLI::Range(0, 10000));
  app.add_option("--seed", o.seed, "sampling seed");
  auto* exact = app.add_flag("--exact", o.exact, "exact arithmetic at the representative (default)");
  app.add_flag("--float", o.use_float, "floating-point arithmetic at the representative")->excludes(exact);
  app.add_flag("--json", o.json, "emit JSON");
  app.add_option("--signature", o.signature, "p,q or galilean:d for axioms");
  app.add_option("--dim", o.dim, "spacetime dimension for the Galilean counterexample")->check(CLI::Range(2, 8));
  app.add_option("--export", o.export_dir, "examples: write the corpus as .cpt files into this directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (o.command == "check") return cmd_check(o, out, err);
    if (o.command == "harness") return cmd_harness(o, out, err);
    if (o.command == "transform") return cmd_transform(o, out, err);
    if (o.command == "classify") return cmd_classify(o, out, err);
    if (o.command == "print") return cmd_print(o, out, err);
    if (o.command == "axioms") return cmd_axioms(o, out);
    if (o.command == "counterexample") return cmd_counterexample(o, out);
    if (o.command == "examples") return cmd_examples(o, out);
  } catch (const Usage& u) {
    err << "cptlab: " << u.message << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "cptlab: error: " << e.what() << "\n";
    return exit_usage;
  }
  err << "cptlab: unknown command '" << o.command << "'\n";
  return exit_usage;
}

}  // namespace cptlab::frontend
