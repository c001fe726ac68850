#include "ekr/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ekr/bounds.hpp"
#include "ekr/constructions.hpp"
#include "ekr/errors.hpp"
#include "ekr/family_io.hpp"
#include "ekr/measures.hpp"
#include "ekr/search.hpp"
#include "ekr/shifting.hpp"
#include "ekr/suites.hpp"

namespace ekr::cli {
namespace {

using json = nlohmann::ordered_json;

struct Globals {
  bool json = false;
  std::string budget = "5e7";
  std::uint64_t seed = 1;
  std::string format = "text";
};

std::uint64_t parse_budget(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("bad budget '" + text + "'");
  }
  if (used != text.size() || !(v >= 1) || v > 1e18 || std::floor(v) != v) {
    throw UsageError("budget must be a positive integer, got '" + text + "'");
  }
  return static_cast<std::uint64_t>(v);
}

json set_json(KSet s) {
  json a = json::array();
  for (int e : s.elements()) a.push_back(e);
  return a;
}

json family_sets(const Family& f) {
  json a = json::array();
  for (KSet s : f) a.push_back(set_json(s));
  return a;
}

json family_json(const Family& f) { return json{{"n", f.n()}, {"k", f.k()}, {"size", f.size()}, {"sets", family_sets(f)}}; }

json big_json(const BigInt& v) { return to_string(v); }

json rational_json(const Rational& r) {
  return json{{"num", to_string(BigInt(numerator(r)))}, {"den", to_string(BigInt(denominator(r)))}};
}

/// Small ratios such as ϱ as plain integers.
json small_rational_json(const Rational& r) {
  return json{{"num", static_cast<std::int64_t>(numerator(r))}, {"den", static_cast<std::int64_t>(denominator(r))}};
}

Params parse_params(const std::string& text) {
  Params p;
  if (text.empty()) return p;
  for (const ParamRange& r : parse_scan(text)) {
    if (r.lo != r.hi) throw UsageError("parameter '" + r.name + "' must be a single value");
    p[r.name] = r.lo;
  }
  return p;
}

json params_json(const Params& p) {
  json o = json::object();
  for (const auto& [k, v] : p) o[k] = v;
  return o;
}

json report_json(const BoundReport& r) {
  json o{{"name", r.name},
         {"params", params_json(r.params)},
         {"lhs", rational_json(r.lhs)},
         {"relation", std::string(relation_symbol(r.relation))},
         {"rhs", rational_json(r.rhs)}};
  if (r.lhs2 && r.rhs2) {
    o["lhs2"] = rational_json(*r.lhs2);
    o["rhs2"] = rational_json(*r.rhs2);
  }
  o["preconditions_met"] = r.preconditions_met;
  o["holds"] = r.holds;
  o["note"] = r.note;
  return o;
}

std::string report_line(const BoundReport& r) {
  std::string s = r.name;
  for (const auto& [k, v] : r.params) s += " " + k + "=" + std::to_string(v);
  s += ": " + to_string(r.lhs) + " " + std::string(relation_symbol(r.relation)) + " " + to_string(r.rhs);
  if (r.lhs2 && r.rhs2) s += " or " + to_string(*r.lhs2) + " " + std::string(relation_symbol(r.relation)) + " " + to_string(*r.rhs2);
  if (!r.preconditions_met) return s + " (preconditions not met)";
  return s + (r.holds ? " holds" : " VIOLATED");
}

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Globals g;

  FamilyFormat format() const { return parse_format_name(g.format); }

  Family load(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw UsageError("standard input can be read only once");
      stdin_used_ = true;
      return read_family(in_, format());
    }
    return read_family_file(path, format());
  }

  void emit_family(const Family& f, const std::string& path) {
    if (path.empty() || path == "-") {
      out_ << format_family(f, format());
    } else {
      write_family_file(path, f, format());
    }
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }
  std::ostream& out() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

// --- construct ---------------------------------------------------------------

struct ConstructArgs {
  std::string name;
  int n = 0, k = 0;
  std::optional<std::int64_t> r, s, m;
  std::string output;
};

int do_construct(Runner& run, const ConstructArgs& a) {
  Params p;
  if (a.r) p["r"] = *a.r;
  if (a.s) p["s"] = *a.s;
  if (a.m) p["m"] = *a.m;
  Family f = build_named(a.name, GroundSpec(a.n, a.k), p);
  if (run.g.json) {
    json j{{"construction", a.name}, {"params", params_json(p)}};
    j.update(family_json(f));
    if (!a.output.empty() && a.output != "-") write_family_file(a.output, f, run.format());
    run.emit(j);
  } else {
    run.emit_family(f, a.output);
  }
  return kExitOk;
}

// --- measure -----------------------------------------------------------------

struct MeasureArgs {
  std::string input = "-";
  bool theorems = false;
  std::string epsilon = "1/24";
};

Rational parse_ratio(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    std::int64_t num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw UsageError("");
    std::int64_t den = 1;
    if (slash != std::string::npos) {
      std::string d = text.substr(slash + 1);
      den = std::stoll(d, &used);
      if (used != d.size()) throw UsageError("");
    }
    return make_rational(num, den);
  } catch (const std::exception&) {
    throw UsageError("bad ratio '" + text + "' (expected p/q)");
  }
}

int do_measure(Runner& run, const MeasureArgs& a) {
  const std::uint64_t budget = parse_budget(run.g.budget);
  Family f = run.load(a.input);
  MeasureReport m = measure(f, budget);
  std::vector<TheoremCheck> preds;
  if (a.theorems) preds = theorem_predicates(f, parse_ratio(a.epsilon));
  if (run.g.json) {
    json j{{"n", f.n()}, {"k", f.k()}, {"size", m.size}, {"intersecting", m.intersecting}};
    j["tau"] = m.tau ? json(m.tau->size) : json(nullptr);
    j["gamma"] = m.gamma;
    j["rho"] = m.rho ? small_rational_json(m.rho->value) : json(nullptr);
    j["delta"] = m.delta;
    j["omega"] = m.omega ? json(m.omega->size) : json(nullptr);
    j["witnesses"] = json{{"tau", m.tau ? set_json(m.tau->witness) : json(nullptr)},
                          {"rho_element", m.rho ? json(m.rho->element) : json(nullptr)},
                          {"omega", m.omega ? set_json(m.omega->witness) : json(nullptr)}};
    if (a.theorems) {
      json t = json::array();
      for (const TheoremCheck& c : preds) {
        t.push_back(json{{"name", c.name},
                         {"hypotheses_met", c.hypotheses_met},
                         {"conclusion_holds", c.conclusion_holds ? json(*c.conclusion_holds) : json(nullptr)},
                         {"detail", c.detail}});
      }
      j["theorems"] = t;
    }
    run.emit(j);
  } else {
    auto& o = run.out();
    o << "n=" << f.n() << "\nk=" << f.k() << "\nsize=" << m.size << "\nintersecting=" << (m.intersecting ? "true" : "false")
      << "\n";
    if (m.tau) o << "tau=" << m.tau->size << " witness=" << m.tau->witness.to_string() << "\n";
    o << "gamma=" << m.gamma << "\n";
    if (m.rho) o << "rho=" << to_string(m.rho->value) << " element=" << m.rho->element << "\n";
    o << "delta=" << m.delta << "\n";
    if (m.omega) o << "omega=" << m.omega->size << " witness=" << m.omega->witness.to_string() << "\n";
    for (const TheoremCheck& c : preds) {
      o << c.name << ": hypotheses " << (c.hypotheses_met ? "met" : "not met");
      if (c.conclusion_holds) o << ", conclusion " << (*c.conclusion_holds ? "holds" : "fails");
      o << " (" << c.detail << ")\n";
    }
  }
  if (a.theorems) {
    for (const TheoremCheck& c : preds)
      if (c.hypotheses_met && c.conclusion_holds == false) return kExitViolation;
  }
  return kExitOk;
}

// --- shift -------------------------------------------------------------------

struct ShiftArgs {
  std::vector<std::string> inputs;
  std::string property;
  std::string trace;
  std::string output;
  std::string output_g;
};

json edges_json(const PairGraph& h) {
  json a = json::array();
  for (auto [u, v] : h.edges()) a.push_back(json::array({u, v}));
  return a;
}

json trace_json(const AdExtremisResult& r) {
  json steps = json::array();
  for (const ShiftStep& s : r.trace.steps) {
    steps.push_back(json{{"i", s.i},
                         {"j", s.j},
                         {"applied_to", std::string(applied_to_name(s.applied_to))},
                         {"weight_before", s.weight_before},
                         {"weight_after", s.weight_after}});
  }
  return json{{"passes", r.trace.passes}, {"steps", steps}};
}

int do_shift(Runner& run, const ShiftArgs& a) {
  if (a.inputs.empty() || a.inputs.size() > 2) throw UsageError("shift takes one or two family files");
  const PreservedProperty p = parse_property(a.property);
  const bool pair = a.inputs.size() == 2;
  Family f = run.load(a.inputs[0]);
  AdExtremisResult r = pair ? shift_ad_extremis(f, run.load(a.inputs[1]), p) : shift_ad_extremis(f, p);

  json doc{{"property", describe(p)}, {"sweep_order", "lex"}, {"f", family_json(r.f)}};
  if (pair) doc["g"] = family_json(r.g);
  doc["h"] = edges_json(r.h);
  doc["trace"] = trace_json(r);
  doc["global_minimality_verified"] = r.global_minimality_verified;

  if (!a.trace.empty()) {
    std::ofstream t(a.trace);
    if (!t) throw IoError("cannot write '" + a.trace + "'");
    json tj = trace_json(r);
    tj["h"] = edges_json(r.h);
    t << tj.dump(2) << "\n";
  }
  if (run.g.json) {
    if (!a.output.empty()) write_family_file(a.output, r.f, run.format());
    if (pair && !a.output_g.empty()) write_family_file(a.output_g, r.g, run.format());
    run.emit(doc);
    return kExitOk;
  }
  if (pair && a.output_g.empty()) throw UsageError("text output of two families needs --output-g");
  run.emit_family(r.f, a.output);
  if (pair) write_family_file(a.output_g, r.g, run.format());
  return kExitOk;
}

// --- verify ------------------------------------------------------------------

struct BoundsArgs {
  std::string name;
  std::string scan;
  std::string param;
  std::string family;
  std::string family2;
  std::string extra;
  bool list = false;
  bool violations_only = false;
};

int do_bounds(Runner& run, const BoundsArgs& a) {
  if (a.list) {
    json arr = json::array();
    for (const InequalityInfo& info : inequality_registry()) {
      if (run.g.json) {
        arr.push_back(json{{"name", info.name}, {"params", info.params}, {"statement", info.statement},
                           {"family_level", info.family_level}});
      } else {
        run.out() << info.name << "(";
        for (std::size_t i = 0; i < info.params.size(); ++i) run.out() << (i ? "," : "") << info.params[i];
        run.out() << "): " << info.statement << "\n";
      }
    }
    if (run.g.json) run.emit(arr);
    return kExitOk;
  }
  if (a.name.empty()) throw UsageError("verify bounds needs --name (or --list)");
  const int modes = !a.scan.empty() + !a.param.empty() + !a.family.empty();
  if (modes != 1) throw UsageError("give exactly one of --scan, --param or --family");

  std::vector<BoundReport> reports;
  ScanSummary summary;
  if (!a.scan.empty()) {
    summary = scan_inequality(a.name, parse_scan(a.scan), [&](const BoundReport& r) {
      if (!a.violations_only || (r.preconditions_met && !r.holds)) reports.push_back(r);
    });
  } else {
    BoundReport r;
    if (!a.param.empty()) {
      r = inequality_check(a.name, parse_params(a.param));
    } else {
      Family f = run.load(a.family);
      r = a.family2.empty() ? inequality_check(a.name, f, parse_params(a.extra))
                            : inequality_check(a.name, f, run.load(a.family2), parse_params(a.extra));
    }
    summary.points = 1;
    summary.applicable = r.preconditions_met ? 1 : 0;
    summary.violations = r.preconditions_met && !r.holds ? 1 : 0;
    reports.push_back(r);
  }
  if (run.g.json) {
    json arr = json::array();
    for (const BoundReport& r : reports) arr.push_back(report_json(r));
    run.emit(arr);
  } else {
    for (const BoundReport& r : reports)
      if (a.scan.empty() || (r.preconditions_met && !r.holds)) run.out() << report_line(r) << "\n";
    if (!a.scan.empty()) {
      run.out() << a.name << ": " << summary.points << " points, " << summary.applicable << " applicable, "
                << summary.violations << " violations\n";
    }
  }
  return summary.violations == 0 ? kExitOk : kExitViolation;
}

int do_suite(Runner& run, const std::string& name) {
  SuiteReport r = run_suite(name, run.g.seed);
  if (run.g.json) {
    json checks = json::array();
    for (const SuiteCheck& c : r.checks) {
      checks.push_back(json{{"name", c.name}, {"cases", c.cases}, {"failures", c.failures},
                            {"first_failure", c.first_failure}});
    }
    run.emit(json{{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}});
  } else {
    run.out() << "suite " << r.suite << " seed=" << r.seed << "\n";
    for (const SuiteCheck& c : r.checks) {
      run.out() << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases";
      if (!c.passed()) run.out() << ", " << c.failures << " failures; first: " << c.first_failure;
      run.out() << ")\n";
    }
  }
  return r.passed() ? kExitOk : kExitViolation;
}

// --- search ------------------------------------------------------------------

struct SearchArgs {
  int n = 0, k = 0, s = 1;
  bool symmetry = false;
  bool any_family = false;
  bool list = false;
  std::uint64_t max_candidates = 400;
};

SearchOptions options_from(const Runner& run, const SearchArgs& a) {
  SearchOptions o;
  o.node_budget = parse_budget(run.g.budget);
  o.max_candidates = a.max_candidates;
  o.symmetry = a.symmetry;
  return o;
}

int emit_search(Runner& run, const std::string& problem, const SearchArgs& a, const SearchResult& r) {
  if (run.g.json) {
    json j{{"problem", problem}, {"n", a.n}, {"k", a.k}};
    if (problem == "f") j["s"] = a.s;
    j["optimum"] = r.optimum;
    j["witness"] = family_sets(r.witness);
    j["nodes_expanded"] = r.nodes_expanded;
    j["exhaustive"] = r.exhaustive;
    run.emit(j);
  } else {
    run.out() << "optimum=" << r.optimum << "\nnodes_expanded=" << r.nodes_expanded << "\n";
    run.out() << format_family(r.witness, run.format());
  }
  return kExitOk;
}

int do_search(Runner& run, const std::string& problem, const SearchArgs& a) {
  const GroundSpec ground(a.n, a.k);
  const SearchOptions opt = options_from(run, a);
  if (problem == "f") return emit_search(run, problem, a, max_intersecting(ground, a.s, opt));
  if (problem == "diversity") return emit_search(run, problem, a, max_diversity(ground, !a.any_family, opt));
  if (problem == "initial-enum") {
    json families = json::array();
    std::uint64_t count = for_each_initial_intersecting(
        ground,
        [&](const Family& f) {
          if (!a.list) return;
          if (run.g.json) {
            families.push_back(family_sets(f));
          } else {
            run.out() << format_family(f, run.format()) << "\n";
          }
        },
        opt.node_budget);
    if (run.g.json) {
      json j{{"problem", problem}, {"n", a.n}, {"k", a.k}, {"count", count}};
      if (a.list) j["families"] = families;
      run.emit(j);
    } else {
      run.out() << "count=" << count << "\n";
    }
    return kExitOk;
  }
  // conjecture
  ConjectureReport r = conjecture_scan(ground, opt);
  const std::string note = "exploratory: the conjectured range n > 100k is far beyond this scan";
  if (run.g.json) {
    json j{{"problem", problem},
           {"n", a.n},
           {"k", a.k},
           {"size_threshold", big_json(r.size_threshold)},
           {"vacuous", r.vacuous},
           {"min_rho", r.min_rho ? small_rational_json(r.min_rho->value) : json(nullptr)},
           {"rho_element", r.min_rho ? json(r.min_rho->element) : json(nullptr)},
           {"witness", family_sets(r.witness)},
           {"reference", small_rational_json(r.reference)},
           {"nodes_expanded", r.nodes_expanded},
           {"probative", r.probative},
           {"note", note}};
    run.emit(j);
  } else {
    run.out() << "size_threshold=" << to_string(r.size_threshold) << "\n";
    if (r.vacuous) {
      run.out() << "vacuous: no intersecting family exceeds the threshold\n";
    } else {
      run.out() << "min_rho=" << to_string(r.min_rho->value) << " (reference " << to_string(r.reference) << ")\n";
      run.out() << format_family(r.witness, run.format());
    }
    run.out() << note << "\n";
  }
  return kExitOk;
}

// --- lex ---------------------------------------------------------------------

struct LexArgs {
  int n = 0, k = 0;
  std::string set;
  std::string rank;
};

int do_lex(Runner& run, const std::string& which, const LexArgs& a) {
  const GroundSpec ground(a.n, a.k);
  if (which == "rank") {
    KSet s = parse_element_set(a.set);
    if (s.size() != a.k || (s.bits() & ~ground.universe()) != 0) {
      throw UsageError("set " + s.to_string() + " is not a k-subset of [n]");
    }
    BigInt r = lex_rank(ground, s);
    if (run.g.json) {
      run.emit(json{{"n", a.n}, {"k", a.k}, {"set", set_json(s)}, {"rank", big_json(r)}});
    } else {
      run.out() << to_string(r) << "\n";
    }
    return kExitOk;
  }
  BigInt rank;
  try {
    if (a.rank.empty() || a.rank.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("");
    rank = BigInt(a.rank);
  } catch (const std::exception&) {
    throw UsageError("rank must be a non-negative integer, got '" + a.rank + "'");
  }
  KSet s = lex_unrank(ground, rank);
  if (run.g.json) {
    run.emit(json{{"n", a.n}, {"k", a.k}, {"rank", big_json(rank)}, {"set", set_json(s)}});
  } else {
    run.out() << s.to_string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Runner runner(in, out);
  CLI::App app{"Exact tools for intersecting set families", "ekr"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", runner.g.json, "Emit JSON reports");
  app.add_option("--budget", runner.g.budget, "Node budget for exact searches (e.g. 5e7)");
  app.add_option("--seed", runner.g.seed, "Seed for randomised suites");
  app.add_option("--format", runner.g.format, "Family file format")->check(CLI::IsMember({"text", "bits"}));

  std::function<int()> action;

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a named family");
  construct->add_option("name", ca.name, "Construction")->required()->check(CLI::IsMember(construction_names()));
  construct->add_option("--n", ca.n, "Ground set size")->required();
  construct->add_option("--k", ca.k, "Uniformity")->required();
  construct->add_option("--r", ca.r, "r for ar");
  construct->add_option("--s", ca.s, "s for k");
  construct->add_option("--m", ca.m, "m for lex");
  construct->add_option("-o,--output", ca.output, "Output file (default stdout)");
  construct->callback([&] { action = [&] { return do_construct(runner, ca); }; });

  MeasureArgs ma;
  auto* meas = app.add_subcommand("measure", "Measure a family");
  meas->add_option("input", ma.input, "Family file, - for stdin");
  meas->add_flag("--theorems", ma.theorems, "Evaluate the stability statements");
  meas->add_option("--epsilon", ma.epsilon, "epsilon for main2 as p/q");
  meas->callback([&] { action = [&] { return do_measure(runner, ma); }; });

  ShiftArgs sa;
  auto* sh = app.add_subcommand("shift", "Shift ad extremis under a property");
  sh->add_option("inputs", sa.inputs, "One or two family files")->required();
  sh->add_option("--property", sa.property, "mincover=s, maxrho=p/q or nontrivial")->required();
  sh->add_option("--trace", sa.trace, "Write H and the shift trace as JSON");
  sh->add_option("-o,--output", sa.output, "Output for the first family");
  sh->add_option("--output-g", sa.output_g, "Output for the second family");
  sh->callback([&] { action = [&] { return do_shift(runner, sa); }; });

  auto* verify = app.add_subcommand("verify", "Check bounds or run property suites");
  verify->require_subcommand(1);
  BoundsArgs ba;
  auto* vb = verify->add_subcommand("bounds", "Evaluate a registered inequality");
  vb->add_option("--name", ba.name, "Inequality name");
  vb->add_option("--scan", ba.scan, "Parameter box, e.g. n=5..200,k=2..20,i=2..6");
  vb->add_option("--param", ba.param, "Single point, e.g. n=10,k=2,i=3");
  vb->add_option("--family", ba.family, "Family file for family-level forms");
  vb->add_option("--family2", ba.family2, "Second family file");
  vb->add_option("--extra", ba.extra, "Extra parameters for family-level forms (t, r, x, y)");
  vb->add_flag("--list", ba.list, "List registered inequalities");
  vb->add_flag("--violations-only", ba.violations_only, "Report only violated points");
  vb->callback([&] { action = [&] { return do_bounds(runner, ba); }; });
  std::string suite_name;
  auto* vs = verify->add_subcommand("suite", "Run a property suite");
  vs->add_option("name", suite_name, "Suite")->required()->check(CLI::IsMember(suite_names()));
  vs->callback([&] { action = [&] { return do_suite(runner, suite_name); }; });

  auto* search = app.add_subcommand("search", "Exhaustive searches");
  search->require_subcommand(1);
  SearchArgs sea;
  const std::pair<const char*, const char*> problems[] = {
      {"f", "Largest intersecting family with covering number >= s"},
      {"diversity", "Largest diversity over intersecting families"},
      {"initial-enum", "Enumerate initial intersecting families"},
      {"conjecture", "Smallest rho over intersecting families with |F| > C(n-3,k-3)"}};
  for (auto [problem, help] : problems) {
    auto* sub = search->add_subcommand(problem, help);
    sub->add_option("--n", sea.n, "Ground set size")->required();
    sub->add_option("--k", sea.k, "Uniformity")->required();
    sub->add_option("--max-candidates", sea.max_candidates, "Refuse grounds with more k-sets");
    sub->add_flag("--symmetry", sea.symmetry, "Fix [k] as a member");
    const std::string name = problem;
    if (name == "f") sub->add_option("--s", sea.s, "Minimum covering number")->required();
    if (name == "diversity") sub->add_flag("--any", sea.any_family, "Drop the intersecting requirement");
    if (name == "initial-enum") sub->add_flag("--list", sea.list, "Print every family");
    sub->callback([&, name] { action = [&, name] { return do_search(runner, name, sea); }; });
  }

  auto* lex = app.add_subcommand("lex", "Lex rank and unrank");
  lex->require_subcommand(1);
  LexArgs la;
  auto* lr = lex->add_subcommand("rank", "Lex rank of a set");
  lr->add_option("--n", la.n)->required();
  lr->add_option("--k", la.k)->required();
  lr->add_option("--set", la.set, "e.g. 1,2,9")->required();
  lr->callback([&] { action = [&] { return do_lex(runner, "rank", la); }; });
  auto* lu = lex->add_subcommand("unrank", "Set at a lex rank");
  lu->add_option("--n", la.n)->required();
  lu->add_option("--k", la.k)->required();
  lu->add_option("--rank", la.rank)->required();
  lu->callback([&] { action = [&] { return do_lex(runner, "unrank", la); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (!action) throw UsageError("no command given");
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace ekr::cli
