#pragma once

// Command-line front end. `run` parses arguments and dispatches; exit codes:
// 0 success or confirmed, 1 refuted or failed check, 2 inconclusive,
// 3 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dbound/dbound.hpp"

namespace dbound::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kRefuted = 1, kInconclusive = 2, kUsage = 3 };

struct RunConfig {
  std::string subcommand;
  std::string input;  // expression, @file, system path or "-"
  std::string format = "text";
  std::string report_path;
  bool trace = false;

  std::uint64_t cap = 0;  // 0 selects the subcommand default
  std::optional<std::size_t> limit;
  std::uint64_t c = 0;
  std::optional<std::size_t> n_max;
  unsigned jobs = 1;
  std::uint64_t seed = 0;

  std::string mode = "exhaustive";
  std::string domain = "positive";
  std::string b;
  std::uint64_t quad_limit = 256;
  bool cross_check = false;

  std::string witness_kind;
  std::size_t n = 0, k = 0;
  std::string psi_path;
};

inline unsigned default_jobs() {
  if (const char* env = std::getenv("DBOUND_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return 1;
}

namespace detail {

inline std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  return read_stream(in);
}

inline std::string read_input(const std::string& arg, std::istream& in) {
  if (arg == "-") return read_stream(in);
  return read_file(arg);
}

// Polynomials are given inline, or as @path / "-".
inline Polynomial read_polynomial(const std::string& arg, std::istream& in) {
  if (arg == "-") return parse_polynomial(read_stream(in));
  if (!arg.empty() && arg[0] == '@') return parse_polynomial(read_file(arg.substr(1)));
  return parse_polynomial(arg);
}

inline json tuple_json(const PosTuple& t) {
  json a = json::array();
  for (const auto& v : t.values()) a.push_back(v.str());
  return a;
}

inline json bound_json(const BoundValue& b) {
  json j{{"n", b.n}, {"closed_form", b.closed_form()}, {"log2", b.log2()}};
  j["value"] = b.value ? json(b.value->str()) : json(nullptr);
  return j;
}

inline void emit(const RunConfig& cfg, const json& report, std::ostream& out, const std::string& text) {
  if (!cfg.report_path.empty()) {
    std::ofstream f(cfg.report_path);
    if (!f) throw Error("cannot write report '" + cfg.report_path + "'");
    f << report.dump(2) << "\n";
  }
  if (cfg.format == "json")
    out << report.dump(2) << "\n";
  else
    out << text;
}

inline int cmd_reduce(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Polynomial d = read_polynomial(cfg.input, in);
  const ReductionTrace trace = to_conjecture_form(d);
  json report{{"schema", "dbound.reduce/1"}, {"input", to_string(d)}, {"n", trace.final_n()}};
  json passes = json::array();
  for (const auto& p : trace.passes) passes.push_back({{"name", p.name}, {"n", p.system.n()}, {"system", to_text(p.system)}});
  report["passes"] = passes;
  json prov = json::object();
  for (const auto& [v, term] : trace.provenance) prov["x" + std::to_string(v)] = term;
  report["provenance"] = prov;
  RunConfig shown = cfg;
  if (cfg.trace) shown.format = "json";
  emit(shown, report, out, to_text(trace.final_system()));
  return kOk;
}

inline int cmd_bound(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Polynomial d = read_polynomial(cfg.input, in);
  const ConjecturalBound b = conjectural_bound(d, parse_domain(cfg.domain));
  json report{{"schema", "dbound.bound/1"}, {"domain", to_string(b.domain)}, {"n", b.n},
              {"applies_to", b.applies_to}, {"bound", bound_json(b.bound)}};
  std::ostringstream text;
  text << "domain: " << to_string(b.domain) << "\n"
       << "n: " << b.n << "\n"
       << "bound: " << b.applies_to << " <= f(" << b.n << ") = " << b.bound.closed_form() << "\n";
  if (b.bound.value) text << "value: " << b.bound.value->str() << "\n";
  text << "log2: " << b.bound.log2() << "\n";
  emit(cfg, report, out, text.str());
  return kOk;
}

inline int cmd_membership(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Polynomial w = read_polynomial(cfg.input, in);
  if (cfg.b.empty()) throw Error("membership needs --b");
  const BigInt b = parse_bigint(cfg.b);
  const std::uint64_t cap = cfg.cap ? cfg.cap : 1000;
  const MembershipResult r = bounded_membership(w, b, cap);
  json report{{"schema", "dbound.membership/1"}, {"b", b.str()}, {"status", to_string(r.status)},
              {"box_bound", bound_json(r.box_bound)}, {"searched_edge", r.searched_edge}};
  std::ostringstream text;
  text << "status: " << to_string(r.status) << "\n";
  if (r.witness) {
    json wj = json::array();
    std::string ws;
    for (std::size_t i = 0; i < r.witness->size(); ++i) {
      wj.push_back((*r.witness)[i].str());
      ws += (i ? "," : "") + (*r.witness)[i].str();
    }
    report["witness"] = wj;
    text << "witness: (" << ws << ")\n";
  }
  text << "box: f(" << r.box_bound.n << ") = " << r.box_bound.str() << "\n";
  emit(cfg, report, out, text.str());
  return r.status == Membership::Inconclusive ? kInconclusive : kOk;
}

inline int cmd_solve(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const EquationSystem sys = parse_system(read_input(cfg.input, in));
  SolveOptions opt;
  opt.cap = cfg.cap ? cfg.cap : 100;
  opt.limit = cfg.limit;
  opt.jobs = cfg.jobs;
  const SolveResult r = enumerate_solutions(sys, opt);
  json report{{"schema", "dbound.solve/1"}, {"cap", opt.cap}, {"count", r.solutions.size()},
              {"truncated", r.truncated}};
  json sols = json::array();
  std::ostringstream text;
  for (const auto& s : r.solutions) {
    sols.push_back(tuple_json(s));
    text << to_string(s) << "\n";
  }
  report["solutions"] = sols;
  text << "# count=" << r.solutions.size() << " truncated=" << (r.truncated ? "true" : "false") << "\n";
  emit(cfg, report, out, text.str());
  return kOk;
}

// Wall time is left out unless asked for, keeping stdout reproducible.
inline json phi_json(const VerificationReport& r, bool timing) {
  json j{{"schema", "dbound.verify-phi/1"}, {"c", r.c}, {"mode", to_string(r.mode)}, {"cap", r.cap},
         {"status", to_string(r.status)}};
  if (timing) j["wall_seconds"] = r.wall_seconds;
  j["witness"] = r.witness ? tuple_json(*r.witness) : json(nullptr);
  json ar = json::array();
  for (const auto& a : r.arities)
    ar.push_back({{"n", a.n},
                  {"f", a.f.str()},
                  {"tuples_examined", a.tuples_examined},
                  {"extensions_found", a.extensions_found},
                  {"distinct_signatures", a.distinct_signatures},
                  {"catalog_extensions", a.catalog_extensions},
                  {"search_extensions", a.search_extensions},
                  {"search_nodes", a.search_nodes}});
  j["arities"] = ar;
  return j;
}

inline int cmd_verify_phi(const RunConfig& cfg, std::ostream& out) {
  PhiOptions opt;
  opt.mode = parse_mode(cfg.mode);
  opt.n_max = cfg.n_max;
  if (cfg.cap) opt.cap = cfg.cap;
  opt.jobs = cfg.jobs;
  const VerificationReport r = verify_phi(cfg.c, opt);
  std::ostringstream text;
  text << "c=" << r.c << " mode=" << to_string(r.mode) << " cap=" << r.cap << "\n";
  for (const auto& a : r.arities)
    text << "n=" << a.n << " f=" << a.f.str() << " tuples=" << a.tuples_examined << " extended=" << a.extensions_found
         << " signatures=" << a.distinct_signatures << " catalog=" << a.catalog_extensions
         << " search=" << a.search_extensions << "\n";
  switch (r.status) {
    case PhiStatus::Confirmed: text << "Phi(" << r.c << ") confirmed\n"; break;
    case PhiStatus::Refuted: text << "Phi(" << r.c << ") refuted by " << to_string(*r.witness) << "\n"; break;
    case PhiStatus::Inconclusive:
      text << "Phi(" << r.c << ") inconclusive at " << to_string(*r.witness) << " (cap " << r.cap << ")\n";
      break;
  }
  if (!cfg.report_path.empty()) {
    RunConfig file_only = cfg;
    file_only.format = "none";
    emit(file_only, phi_json(r, true), out, "");
  }
  RunConfig shown = cfg;
  shown.report_path.clear();
  emit(shown, phi_json(r, false), out, text.str());
  switch (r.status) {
    case PhiStatus::Confirmed: return kOk;
    case PhiStatus::Refuted: return kRefuted;
    case PhiStatus::Inconclusive: break;
  }
  return kInconclusive;
}

inline std::string quad_string(const Quadruple& q) {
  return std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," + std::to_string(q[3]);
}

inline int cmd_quadruples(const RunConfig& cfg, std::ostream& out) {
  const auto qs = canonical_quadruples(cfg.quad_limit);
  json report{{"schema", "dbound.quadruples/1"}, {"limit", cfg.quad_limit}, {"count", qs.size()}};
  json arr = json::array();
  std::ostringstream text;
  for (const auto& q : qs) {
    arr.push_back({q.q[0], q.q[1], q.q[2], q.q[3]});
    text << quad_string(q.q) << "\n";
  }
  report["quadruples"] = arr;
  text << "# count=" << qs.size() << "\n";
  int code = kOk;
  if (cfg.cross_check) {
    const CoverageReport cov = verify_coverage(cfg.quad_limit, cfg.jobs);
    json und = json::array();
    for (const auto& q : cov.undominated) und.push_back({q[0], q[1], q[2], q[3]});
    report["coverage"] = {{"ok", cov.ok()},
                          {"scanned", cov.scanned},
                          {"distinct_signatures", cov.distinct_signatures},
                          {"undominated", und},
                          {"family_failures", cov.family_failures},
                          {"catalog_matches", cov.catalog_matches}};
    text << "# coverage scanned=" << cov.scanned << " undominated=" << cov.undominated.size()
         << " family_failures=" << cov.family_failures.size() << " ok=" << (cov.ok() ? "true" : "false") << "\n";
    if (!cov.ok()) code = kRefuted;
  }
  emit(cfg, report, out, text.str());
  return code;
}

inline std::string system_inline(const EquationSystem& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : s.atoms()) {
    out += (first ? "" : ", ") + to_string(a);
    first = false;
  }
  return out + "}";
}

inline int cmd_classify_triples(const RunConfig& cfg, std::ostream& out) {
  const TripleTable t = classify_triples();
  json report{{"schema", "dbound.classify-triples/1"}};
  json cells = json::array();
  std::ostringstream text;
  for (const auto& c : t.cells) {
    json j{{"row", c.row_label}, {"column", c.column_label}, {"system", system_inline(c.system)},
           {"class", to_string(c.kind)}};
    text << c.row_label << " + " << c.column_label << ": " << to_string(c.kind);
    if (c.kind == TripleClass::InfiniteFamily) {
      j["family"] = c.family;
      text << " " << c.family;
    }
    if (c.kind == TripleClass::UniquelySolved) {
      json s = json::array();
      for (const auto& sol : c.solutions) {
        s.push_back(tuple_json(sol));
        text << " (" << to_string(sol) << ")";
      }
      j["solutions"] = s;
    }
    text << "\n";
    cells.push_back(j);
  }
  report["cells"] = cells;
  json lead = json::array();
  text << "a1=1 finite:";
  for (const auto& a : t.unit_lead_finite) {
    lead.push_back(tuple_json(a));
    text << " (" << to_string(a) << ")";
  }
  text << "\n";
  report["unit_lead_finite"] = lead;
  report["counts"] = {{"not_in_F", t.count(TripleClass::NotInF)},
                      {"infinite", t.count(TripleClass::InfiniteFamily)},
                      {"unique", t.count(TripleClass::UniquelySolved)},
                      {"unresolved", t.count(TripleClass::Unresolved)}};
  emit(cfg, report, out, text.str());
  return t.count(TripleClass::Unresolved) ? kInconclusive : kOk;
}

inline int cmd_witness(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const std::string& kind = cfg.witness_kind;
  json report{{"schema", "dbound.witness/1"}, {"kind", kind}};
  std::ostringstream text;
  auto package = [&](const WitnessPackage& w) {
    report["label"] = w.label;
    report["system"] = to_text(w.system);
    report["solution"] = tuple_json(w.solution);
    report["bound"] = w.claimed_bound.str();
    report["satisfied"] = satisfies(w.solution, w.system);
    text << to_text(w.system) << "# label: " << w.label << "\n"
         << "# solution: " << to_string(w.solution) << "\n"
         << "# bound: " << w.claimed_bound.str() << "\n";
  };
  if (kind == "theorem1") {
    package(theorem1_witness(cfg.n));
  } else if (kind == "theorem2") {
    package(theorem2_witness(cfg.n));
  } else if (kind == "counter-add") {
    package(counterexample_witness(CounterexampleKind::Addition, cfg.k));
  } else if (kind == "counter-unit") {
    package(counterexample_witness(CounterexampleKind::Unit, cfg.k));
  } else if (kind == "padding") {
    EquationSystem psi(2, {RelationAtom::prod(1, 1, 2)});
    if (!cfg.psi_path.empty()) psi = parse_system(read_input(cfg.psi_path, in));
    const EquationSystem t = theorem6_padding(psi, cfg.n);
    const auto l = padding_layout(psi.n(), cfg.n);
    report["system"] = to_text(t);
    report["layout"] = {{"psi", psi.n()}, {"padding", l.padding}, {"t_first", l.t(1)}, {"half", l.half},
                        {"u", l.u()}, {"y", l.y()}};
    text << to_text(t) << "# layout: psi=x1..x" << psi.n() << " padding=" << l.padding << " t=x" << l.t(1) << "..x"
         << l.t(l.half) << " u=x" << l.u() << " y=x" << l.y() << "\n";
  } else {
    throw Error("unknown witness '" + kind + "'");
  }
  emit(cfg, report, out, text.str());
  return kOk;
}

}  // namespace detail

inline int dispatch(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.format != "text" && cfg.format != "json") throw Error("format must be text or json");
  const auto& s = cfg.subcommand;
  if (s == "reduce") return detail::cmd_reduce(cfg, in, out);
  if (s == "bound") return detail::cmd_bound(cfg, in, out);
  if (s == "membership") return detail::cmd_membership(cfg, in, out);
  if (s == "solve") return detail::cmd_solve(cfg, in, out);
  if (s == "verify-phi") return detail::cmd_verify_phi(cfg, out);
  if (s == "quadruples") return detail::cmd_quadruples(cfg, out);
  if (s == "classify-triples") return detail::cmd_classify_triples(cfg, out);
  if (s == "witness") return detail::cmd_witness(cfg, in, out);
  throw Error("unknown subcommand '" + s + "'");
}

// Parses argv into a config; returns an exit code when parsing ends the run
// (help, version or a usage error).
inline std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out,
                                     std::ostream& err) {
  CLI::App app{"Bounds for solutions of Diophantine systems in successor/product form"};
  app.require_subcommand(1);
  cfg.jobs = default_jobs();

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--report", cfg.report_path, "write a JSON report to this path");
    sub->add_option("--seed", cfg.seed, "seed for randomized helpers");
  };

  auto* reduce = app.add_subcommand("reduce", "reduce D(x)=0 to a successor/product system");
  reduce->add_option("polynomial", cfg.input, "expression, @file or -")->required();
  reduce->add_flag("--trace", cfg.trace, "print every pass and the provenance map as JSON");
  common(reduce);

  auto* bound = app.add_subcommand("bound", "conjectured bound for the solutions of D(x)=0");
  bound->add_option("polynomial", cfg.input, "expression, @file or -")->required();
  bound->add_option("--domain", cfg.domain, "positive, nonnegative or integer")
      ->check(CLI::IsMember({"positive", "nonnegative", "integer"}));
  common(bound);

  auto* member = app.add_subcommand("membership", "bounded search for b in the set defined by W");
  member->add_option("polynomial", cfg.input, "W(x1, ..., x_{m+1}), @file or -")->required();
  member->add_option("--b", cfg.b, "the candidate element")->required();
  member->add_option("--cap", cfg.cap, "largest box edge searched (default 1000)");
  common(member);

  auto* solve = app.add_subcommand("solve", "enumerate solutions of a system file");
  solve->add_option("system", cfg.input, "system file or -")->required();
  solve->add_option("--cap", cfg.cap, "cap on free variables (default 100)");
  solve->add_option("--limit", cfg.limit, "stop after this many solutions");
  solve->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  common(solve);

  auto* phi = app.add_subcommand("verify-phi", "check Phi(c) by extension search");
  phi->add_option("c", cfg.c, "the bound c")->required()->check(CLI::Range(std::uint64_t{2}, kMaxPhiBound));
  phi->add_option("--mode", cfg.mode, "exhaustive, nondecreasing or increasing")
      ->check(CLI::IsMember({"exhaustive", "nondecreasing", "increasing"}));
  phi->add_option("--n-max", cfg.n_max, "largest arity checked");
  phi->add_option("--cap", cfg.cap, "cap on free variables (default 2c+2)");
  phi->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  common(phi);

  auto* quads = app.add_subcommand("quadruples", "canonical quadruples above 16");
  quads->add_option("--limit", cfg.quad_limit, "largest entry (default 256)")->check(CLI::Range(17, 4096));
  quads->add_flag("--cross-check", cfg.cross_check, "also run the exhaustive dominance check");
  quads->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  common(quads);

  auto* triples = app.add_subcommand("classify-triples", "classify the 24 triple systems");
  common(triples);

  auto* witness = app.add_subcommand("witness", "print a named system with its extremal solution");
  witness->add_option("kind", cfg.witness_kind, "theorem1, theorem2, counter-add, counter-unit or padding")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "counter-add", "counter-unit", "padding"}));
  witness->add_option("--n", cfg.n, "variable count parameter");
  witness->add_option("--k", cfg.k, "squaring count parameter");
  witness->add_option("--psi", cfg.psi_path, "system padded by the padding witness (default x1*x1=x2)");
  common(witness);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
  return std::nullopt;
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    if (auto code = parse_args(argc, argv, cfg, out, err)) return *code;
    return dispatch(cfg, in, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dbound"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace dbound::cli
