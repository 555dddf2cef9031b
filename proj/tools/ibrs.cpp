#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ibrs/circuit.hpp"
#include "ibrs/fixtures.hpp"
#include "ibrs/interpretations.hpp"
#include "ibrs/logic.hpp"
#include "ibrs/mu_properties.hpp"
#include "ibrs/representation.hpp"
#include "ibrs/smoothness.hpp"
#include "ibrs/structure_json.hpp"
#include "ibrs/validity.hpp"

namespace {

using namespace ibrs;
using oj = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(' ');
    auto e = cur.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

// ---------------------------------------------------------------- fixtures

std::map<std::string, std::function<oj()>> fixture_table() {
  return {
      {"need-smooth", [] { return to_json(fixtures::need_smooth()); }},
      {"totally-smooth", [] { return to_json(fixtures::totally_smooth(false)); }},
      {"totally-smooth-full", [] { return to_json(fixtures::totally_smooth(true)); }},
      {"total-vs-essential", [] { return to_json(fixtures::total_vs_essential()); }},
      {"level3-solution", [] { return to_json(fixtures::level3_solution()); }},
      {"need-pr", [] { return to_json(fixtures::need_pr()); }},
      {"mu-cum-cd", [] { return to_json(fixtures::mu_cum_cd()); }},
      {"level-bigger-2", [] { return to_json(fixtures::level_bigger_2()); }},
      {"worked-ibrs", [] { return to_json(worked_ibrs()); }},
      {"circuit1", [] { return to_json(circuit1()); }},
      {"circuit2", [] { return to_json(circuit2()); }},
  };
}

// ---------------------------------------------------------------- report

struct Report {
  std::string command;
  oj inputs = oj::object();
  oj params = oj::object();
  oj result;
  int exit_code = 0;
  std::string text;  // --pretty rendering

  oj load(const std::string& role, const std::string& path, const std::string& fixture) {
    std::string bytes;
    if (!fixture.empty()) {
      auto table = fixture_table();
      auto it = table.find(fixture);
      if (it == table.end()) throw Error(ErrorKind::InvalidInput, "unknown fixture '" + fixture + "'");
      bytes = it->second().dump(2) + "\n";
      inputs[role] = {{"fixture", fixture}, {"fnv1a", fnv1a(bytes)}};
    } else {
      if (path.empty()) throw Error(ErrorKind::InvalidInput, "missing --" + role);
      std::ifstream f(path, std::ios::binary);
      if (!f) throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'");
      std::stringstream ss;
      ss << f.rdbuf();
      bytes = ss.str();
      inputs[role] = {{"path", path}, {"fnv1a", fnv1a(bytes)}};
    }
    try {
      return oj::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidInput, role + ": " + e.what());
    }
  }

  oj json() const {
    oj j;
    j["tool"] = "ibrs";
    j["version"] = kVersion;
    j["command"] = command;
    j["inputs"] = inputs;
    j["params"] = params;
    j["result"] = result;
    return j;
  }
};

struct Options {
  bool pretty = false;
  std::uint64_t seed = 1;
  int jobs = 1;
};

oj set_json(const Universe& u, Mask m) { return u.list(m); }

oj witness_json(const Universe& u, const std::optional<PropertyWitness>& w) {
  if (!w) return nullptr;
  oj j = oj::object();
  if (w->X) j["X"] = set_json(u, *w->X);
  if (w->Y) j["Y"] = set_json(u, *w->Y);
  if (w->A) j["A"] = set_json(u, *w->A);
  if (w->B) j["B"] = set_json(u, *w->B);
  if (w->a) j["a"] = u.name(*w->a);
  if (w->b) j["b"] = u.name(*w->b);
  return j;
}

oj verdict_json(const Universe& u, const PropertyVerdict& v) {
  return {{"property", v.property}, {"holds", v.holds}, {"witness", witness_json(u, v.witness)},
          {"checked", v.checked}, {"skipped", v.skipped}};
}

std::string show_witness(const Universe& u, const std::optional<PropertyWitness>& w) {
  if (!w) return "";
  std::string s;
  auto add = [&](const char* k, const std::optional<Mask>& m) {
    if (m) s += std::string(s.empty() ? "" : " ") + k + "=" + u.show(*m);
  };
  add("X", w->X);
  add("Y", w->Y);
  add("A", w->A);
  add("B", w->B);
  if (w->a) s += " a=" + u.name(*w->a);
  if (w->b) s += " b=" + u.name(*w->b);
  return s;
}

oj smooth_witness_json(const Structure& s, const std::optional<SmoothnessWitness>& w) {
  if (!w) return nullptr;
  oj j{{"clause", w->clause}, {"set", s.names(w->set)}, {"point", w->point}, {"arrows", w->arrows}};
  if (w->copy) j["copy"] = oj::array({w->copy->point, w->copy->copy});
  return j;
}

Mask parse_set(const Universe& u, const std::optional<std::string>& s) {
  if (!s) return u.all();
  return u.mask(split(*s));
}

std::map<std::string, bool> parse_assignment(const std::string& s) {
  std::map<std::string, bool> out;
  for (const auto& item : split(s)) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidInput, "expected point=T|F, got '" + item + "'");
    std::string v = item.substr(eq + 1);
    if (v != "T" && v != "F" && v != "1" && v != "0" && v != "true" && v != "false")
      throw Error(ErrorKind::InvalidInput, "bad truth value '" + v + "'");
    out[item.substr(0, eq)] = v == "T" || v == "1" || v == "true";
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized preferential structures: evaluation, representation and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--pretty", opt.pretty, "Human-readable output instead of JSON");
  app.add_option("--seed", opt.seed, "Seed for sampled modes")->capture_default_str();
  app.add_option("--jobs", opt.jobs, "Worker count for long searches")->check(CLI::PositiveNumber)->capture_default_str();
  app.set_version_flag("--version", kVersion);

  Report rep;
  std::function<void()> action;

  // shared source options
  struct Source {
    std::string structure, table, fixture, ibrs, netlist;
  };
  Source src;
  auto add_structure = [&](CLI::App* c) {
    c->add_option("--structure", src.structure, "Structure JSON file");
    c->add_option("--fixture", src.fixture, "Built-in fixture name");
  };
  auto add_table = [&](CLI::App* c) {
    c->add_option("--table", src.table, "μ-table JSON file");
    c->add_option("--fixture", src.fixture, "Built-in fixture name");
  };
  auto load_structure = [&] { return structure_from_json(rep.load("structure", src.structure, src.fixture)); };
  auto load_table = [&] { return table_from_json(rep.load("table", src.table, src.fixture)); };

  // mu
  std::optional<std::string> set_a, set_b;
  {
    auto* c = app.add_subcommand("mu", "Minimal elements μ(X)");
    add_structure(c);
    c->add_option("--set", set_a, "Comma-separated points (default: the carrier)");
    c->callback([&] {
      action = [&] {
        auto s = load_structure();
        Mask x = parse_set(s.universe(), set_a);
        rep.params["set"] = s.names(x);
        rep.result = s.names(mu(s, x));
        rep.text = s.universe().show(mu(s, x)) + "\n";
      };
    });
  }
  // valid
  std::string valid_kind = "xy";
  {
    auto* c = app.add_subcommand("valid", "Valid arrows X-to-Y or X⇒Y");
    add_structure(c);
    c->add_option("--kind", valid_kind, "xy | ximply")->check(CLI::IsMember({"xy", "ximply"}))->capture_default_str();
    c->add_option("--x", set_a, "X (default: carrier)");
    c->add_option("--y", set_b, "Y (default: carrier)");
    c->callback([&] {
      action = [&] {
        auto s = load_structure();
        Mask x = parse_set(s.universe(), set_a), y = parse_set(s.universe(), set_b);
        rep.params = {{"kind", valid_kind}, {"x", s.names(x)}, {"y", s.names(y)}};
        auto v = valid_kind == "xy" ? valid_x_to_y(s, x, y) : valid_x_impl_y(s, x, y);
        rep.result = v.valid;
        for (const auto& a : v.valid) rep.text += a + "\n";
      };
    });
  }
  // smooth
  std::string smooth_mode = "essential", reading = "valid";
  {
    auto* c = app.add_subcommand("smooth", "Smoothness checks");
    add_structure(c);
    c->add_option("--set", set_a, "X (default: carrier)");
    c->add_option("--set2", set_b, "X' for --mode sub");
    c->add_option("--mode", smooth_mode, "total | essential | classical | sub")
        ->check(CLI::IsMember({"total", "essential", "classical", "sub"}))
        ->capture_default_str();
    c->add_option("--reading", reading, "valid | all (total smoothness)")->check(CLI::IsMember({"valid", "all"}))->capture_default_str();
    c->callback([&] {
      action = [&] {
        auto s = load_structure();
        const auto& U = s.universe();
        Mask x = parse_set(U, set_a);
        rep.params = {{"mode", smooth_mode}, {"set", s.names(x)}};
        SmoothnessVerdict v;
        if (smooth_mode == "total") {
          rep.params["reading"] = reading;
          v = is_totally_smooth(s, x, reading == "valid" ? TotalSmoothReading::ValidArrows : TotalSmoothReading::AllArrows);
        } else if (smooth_mode == "essential") {
          v = is_essentially_smooth(s, x);
        } else if (smooth_mode == "classical") {
          rep.params["family"] = "all subsets of set";
          v = is_classically_smooth(s, submasks(x));
        } else {
          if (!set_b) throw Error(ErrorKind::InvalidInput, "--mode sub needs --set2");
          Mask xp = parse_set(U, set_b);
          rep.params["set2"] = s.names(xp);
          v = is_sqsubseteq(s, x, xp);
        }
        rep.result = {{"holds", v.holds}, {"witness", smooth_witness_json(s, v.witness)}};
        if (!v.cases.empty()) {
          oj cases = oj::object();
          for (const auto& [p, k] : v.cases) cases[p] = k;
          rep.result["cases"] = cases;
        }
        rep.exit_code = v.holds ? 0 : 1;
        rep.text = std::string(v.holds ? "holds" : "fails");
        if (v.witness) rep.text += " at " + U.show(v.witness->set) + " clause " + v.witness->clause + " point " + v.witness->point;
        rep.text += "\n";
      };
    });
  }
  // represent
  std::string repr_mode = "level2", out_path;
  {
    auto* c = app.add_subcommand("represent", "Build a representing structure for a μ-table");
    add_table(c);
    c->add_option("--mode", repr_mode, "level2 | level3")->check(CLI::IsMember({"level2", "level3"}))->capture_default_str();
    c->add_option("--out", out_path, "Also write the structure to this file");
    c->callback([&] {
      action = [&] {
        auto t = load_table();
        rep.params = {{"mode", repr_mode}};
        auto c = repr_mode == "level2" ? build_level2_attacking(t) : build_level3_essentially_smooth(t);
        bool exact = true;
        for (Mask x : t.family()) {
          Mask got = repr_mode == "level2" ? mu_attacking(c.structure, c.eta, x) : mu(c.structure, x);
          exact = exact && got == t(x);
        }
        rep.result = {{"exact", exact}, {"structure", to_json(c.structure)}};
        if (!out_path.empty()) {
          std::ofstream f(out_path);
          if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + out_path + "'");
          f << serialize(c.structure);
          rep.params["out"] = out_path;
        }
        rep.exit_code = exact ? 0 : 1;
        rep.text = std::string("exact: ") + yes_no(exact) + "\ncopies: " + std::to_string(c.structure.copies().size()) +
                   "\narrows: " + std::to_string(c.structure.arrows().size()) + "\n";
      };
    });
  }
  // search-l2ts
  SearchBounds bounds;
  std::uint64_t ceiling = SearchOptions{}.ceiling;
  bool no_total = false;
  {
    auto* c = app.add_subcommand("search-l2ts", "Bounded search for a totally smooth level-2 representation");
    add_table(c);
    c->add_option("--max-copies", bounds.max_copies_per_point, "Copies per point")->capture_default_str();
    c->add_option("--max-arrow-copies", bounds.max_arrow_copies, "Parallel level-1 arrows per origin and target copy")
        ->capture_default_str();
    c->add_option("--ceiling", ceiling, "Configuration ceiling")->capture_default_str();
    c->add_option("--reading", reading, "valid | all")->check(CLI::IsMember({"valid", "all"}))->capture_default_str();
    c->add_flag("--no-total-smoothness", no_total, "Drop the total smoothness requirement");
    c->callback([&] {
      action = [&] {
        auto t = load_table();
        SearchOptions so;
        so.ceiling = ceiling;
        so.require_total_smoothness = !no_total;
        so.reading = reading == "valid" ? TotalSmoothReading::ValidArrows : TotalSmoothReading::AllArrows;
        rep.params = {{"max_copies", bounds.max_copies_per_point}, {"max_arrow_copies", bounds.max_arrow_copies},
                      {"ceiling", ceiling},  {"require_total_smoothness", !no_total},
                      {"reading", reading},   {"jobs", opt.jobs}};
        auto r = search_level2_totally_smooth(t, bounds, so);
        rep.result = {{"status", r.found ? "found" : "exhausted"},
                      {"candidates", r.candidates},
                      {"space_estimate", r.space_estimate},
                      {"structures_covered", static_cast<double>(r.structures_covered)},
                      {"structure", r.structure ? to_json(*r.structure) : oj(nullptr)}};
        rep.exit_code = r.found ? 0 : 1;
        rep.text = std::string(r.found ? "found" : "exhausted") + " after " + std::to_string(r.candidates) +
                   " configurations (estimate " + std::to_string(r.space_estimate) + ")\n";
      };
    });
  }
  // props
  std::vector<std::string> prop_names, closure_names;
  {
    auto* c = app.add_subcommand("props", "Check algebraic properties of a μ-table");
    add_table(c);
    c->add_option("--property", prop_names, "Property, e.g. μPR or mu-PR (repeatable; default all)");
    c->add_option("--closure", closure_names, "Family closure: intersection|union|complement|set-difference|singletons");
    c->callback([&] {
      action = [&] {
        auto t = load_table();
        const auto& U = t.universe();
        std::vector<PropertyVerdict> vs;
        if (prop_names.empty() && closure_names.empty()) vs = check_all_properties(t);
        for (const auto& p : prop_names) vs.push_back(check_property(t, parse_property(p)));
        for (const auto& cl : closure_names) vs.push_back(check_family_closure(t, parse_closure(cl)));
        rep.params["properties"] = prop_names.empty() && closure_names.empty() ? oj("all") : oj(prop_names);
        if (!closure_names.empty()) rep.params["closures"] = closure_names;
        rep.result = oj::array();
        bool requested_fail = false;
        for (const auto& v : vs) {
          rep.result.push_back(verdict_json(U, v));
          rep.text += v.property + " " + (v.holds ? "holds" : "fails " + show_witness(U, v.witness)) + "\n";
          requested_fail = requested_fail || !v.holds;
        }
        rep.exit_code = (!prop_names.empty() || !closure_names.empty()) && requested_fail ? 1 : 0;
      };
    });
  }
  // verify-row
  std::string row_id, verify_mode = "exhaustive";
  int size = 2;
  std::uint64_t samples = VerifyOptions{}.samples;
  {
    auto* c = app.add_subcommand("verify-row", "Verify one implication row over finite tables");
    c->add_option("--row", row_id, "Row id, e.g. 4 or 5.2")->required();
    c->add_option("--size", size, "Universe size")->capture_default_str();
    c->add_option("--mode", verify_mode, "exhaustive | filtered | sampled")->capture_default_str();
    c->add_option("--samples", samples, "Samples in sampled mode")->capture_default_str();
    c->add_option("--ceiling", ceiling, "Table ceiling for enumeration")->capture_default_str();
    c->callback([&] {
      action = [&] {
        VerifyOptions vo;
        vo.samples = samples;
        vo.seed = opt.seed;
        vo.ceiling = ceiling;
        VerifyMode m = parse_mode(verify_mode);
        rep.params = {{"row", row_id}, {"size", size}, {"mode", to_string(m)}, {"ceiling", ceiling}};
        if (m == VerifyMode::Sampled) {
          rep.params["samples"] = samples;
          rep.params["seed"] = opt.seed;
        }
        auto r = verify_implication(row_id, size, m, vo);
        rep.result = {{"row", r.row},
                      {"status", r.status},
                      {"tables_checked", r.tables_checked},
                      {"tables_matching", r.tables_matching},
                      {"known", r.known},
                      {"counterexample", r.counterexample ? to_json(*r.counterexample) : oj(nullptr)},
                      {"violated", r.violated ? verdict_json(r.counterexample->universe(), *r.violated) : oj(nullptr)},
                      {"ok", r.ok()},
                      {"note", r.note}};
        rep.exit_code = r.ok() ? 0 : 1;
        rep.text = "row " + r.row + ": " + r.status + " (" + std::to_string(r.tables_checked) + " tables, " +
                   std::to_string(r.tables_matching) + " matching)\n";
        if (r.violated) rep.text += "violates " + r.violated->property + "\n";
      };
    });
  }
  // logic and rules
  std::string lang_s = "p,q", theory_s;
  std::optional<std::string> query_s;
  std::vector<std::string> rule_names;
  auto load_logic = [&](const Language& l) -> Logic {
    if (!src.table.empty()) return table_logic(load_table(), l);
    return structure_logic(load_structure(), l);
  };
  {
    auto* c = app.add_subcommand("logic", "Consequence of a theory under a structure");
    c->add_option("--structure", src.structure, "Structure over the valuations");
    c->add_option("--table", src.table, "μ-table over the valuations");
    c->add_option("--lang", lang_s, "Comma-separated atoms")->capture_default_str();
    c->add_option("--theory", theory_s, "Formulas separated by ';'");
    c->add_option("--query", query_s, "Formula to test");
    c->callback([&] {
      action = [&] {
        Language l(split(lang_s));
        auto logic = load_logic(l);
        Theory t = parse_theory(theory_s);
        rep.params = {{"lang", l.atoms()}, {"theory", to_string(t)}};
        Mask closure = mu_from_logic(logic)(models(l, t));
        Theory cl = theory_of(l, closure);
        rep.result = {{"consequence", to_string(cl)}, {"models", l.universe().list(closure)}};
        rep.text = "consequence: " + to_string(cl) + "\n";
        if (query_s) {
          Formula q = parse_formula(*query_s);
          bool yes = logic.entails(t, q);
          rep.params["query"] = to_string(q);
          rep.result["entails"] = yes;
          rep.exit_code = yes ? 0 : 1;
          rep.text += std::string("entails ") + to_string(q) + ": " + yes_no(yes) + "\n";
        }
      };
    });
  }
  {
    auto* c = app.add_subcommand("rules", "Check the logical rules of a structure's consequence relation");
    c->add_option("--structure", src.structure, "Structure over the valuations");
    c->add_option("--table", src.table, "μ-table over the valuations");
    c->add_option("--lang", lang_s, "Comma-separated atoms (at most 3)")->capture_default_str();
    c->add_option("--rule", rule_names, "Rule, e.g. CUM or (RatM=) (repeatable; default all)");
    c->callback([&] {
      action = [&] {
        Language l(split(lang_s));
        auto e = tabulate(load_logic(l));
        rep.params = {{"lang", l.atoms()}, {"rules", rule_names.empty() ? oj("all") : oj(rule_names)}};
        std::vector<PropertyVerdict> vs;
        if (rule_names.empty()) vs = check_all_rules(e);
        for (const auto& r : rule_names) vs.push_back(check_rule(e, parse_rule(r)));
        rep.result = oj::array();
        bool failed = false;
        for (const auto& v : vs) {
          rep.result.push_back(verdict_json(l.universe(), v));
          rep.text += v.property + " " + (v.holds ? "holds" : "fails " + show_witness(l.universe(), v.witness)) + "\n";
          failed = failed || !v.holds;
        }
        rep.exit_code = !rule_names.empty() && failed ? 1 : 0;
      };
    });
  }
  // interp
  std::string alg, world, atom, premise, conclusion, distances_path;
  std::optional<std::string> minimal_s;
  double radius = kUnbounded;
  {
    auto* c = app.add_subcommand("interp", "Extraction algorithms on a labeled IBRS");
    c->add_option("--ibrs", src.ibrs, "Labeled IBRS JSON file");
    c->add_option("--fixture", src.fixture, "Built-in fixture (worked)");
    c->add_option("--alg", alg, "modal | nm | arg | int | cf")->required()->check(CLI::IsMember({"modal", "nm", "arg", "int", "cf"}));
    c->add_option("--world", world, "World (modal: omit for validity at minimal points)");
    c->add_option("--atom", atom, "Boxed atom (modal)");
    c->add_option("--premise", premise, "Premise atom");
    c->add_option("--conclusion", conclusion, "Conclusion atom");
    c->add_option("--minimal", minimal_s, "Distinguished points for modal validity");
    c->add_option("--distances", distances_path, "JSON [[from,to,d],...] (cf)");
    c->add_option("--radius", radius, "Radius (cf; default unbounded)");
    c->callback([&] {
      action = [&] {
        std::string fx = src.fixture == "worked" ? "worked-ibrs" : src.fixture;
        auto g = labeled_ibrs_from_json(rep.load("ibrs", src.ibrs, fx));
        rep.params["alg"] = alg;
        auto need = [](const std::string& v, const char* flag) {
          if (v.empty()) throw Error(ErrorKind::InvalidInput, std::string("--alg needs ") + flag);
        };
        bool verdict = true;
        if (alg == "modal") {
          need(atom, "--atom");
          rep.params["atom"] = atom;
          if (!world.empty()) {
            rep.params["world"] = world;
            verdict = modal_box_eval(g, world, atom);
          } else {
            std::optional<std::vector<std::string>> dist;
            if (minimal_s) dist = split(*minimal_s);
            rep.params["points"] = dist ? oj(*dist) : oj(minimal_points(g));
            verdict = modal_box_valid(g, atom, dist);
          }
          rep.result = {{"holds", verdict}};
        } else if (alg == "nm") {
          need(premise, "--premise");
          need(conclusion, "--conclusion");
          rep.params["premise"] = premise;
          rep.params["conclusion"] = conclusion;
          verdict = nm_consequence(g, premise, conclusion);
          rep.result = {{"holds", verdict}, {"minimal", minimal_points(g, satisfying(g, premise))}};
        } else if (alg == "arg") {
          auto r = argumentation(g);
          oj labels = oj::object();
          for (const auto& [e, v] : r.labels)
            labels[e.name] = v == ArgLabel::In ? "in" : v == ArgLabel::Out ? "out" : "undecided";
          rep.result = {{"winning", r.winning}, {"labels", labels}, {"rounds", r.rounds}};
          rep.text = "winning: {";
          for (size_t i = 0; i < r.winning.size(); ++i) rep.text += (i ? "," : "") + r.winning[i];
          rep.text += "}\n";
        } else if (alg == "int") {
          oj rho = oj::array();
          for (const auto& [t, s] : rho0(g)) rho.push_back(oj::array({t, s}));
          rep.result = {{"rho0", rho}};
          if (!premise.empty() || !conclusion.empty()) {
            need(premise, "--premise");
            need(conclusion, "--conclusion");
            rep.params["premise"] = premise;
            rep.params["conclusion"] = conclusion;
            verdict = intuitionistic_eval(g, premise, conclusion);
            rep.result["holds"] = verdict;
          }
          rep.text = "rho0:";
          for (const auto& [t, s] : rho0(g)) rep.text += " (" + t + "," + s + ")";
          rep.text += "\n";
        } else {
          need(world, "--world");
          need(premise, "--premise");
          need(conclusion, "--conclusion");
          Distances d;
          if (!distances_path.empty()) {
            for (const auto& e : rep.load("distances", distances_path, ""))
              d[{e.at(0).get<std::string>(), e.at(1).get<std::string>()}] = e.at(2).get<double>();
          }
          rep.params.update({{"world", world}, {"premise", premise}, {"conclusion", conclusion},
                             {"radius", std::isinf(radius) ? oj("unbounded") : oj(radius)}});
          verdict = counterfactual_eval(g, d, world, premise, conclusion, radius);
          rep.result = {{"holds", verdict}};
        }
        if (alg != "arg" && rep.result.contains("holds")) rep.text += std::string("holds: ") + yes_no(verdict) + "\n";
        rep.exit_code = verdict ? 0 : 1;
      };
    });
  }
  // circuit
  std::optional<int> horizon;
  bool table_flag = false;
  std::optional<std::string> alpha_s, beta_s;
  {
    auto* c = app.add_subcommand("circuit", "Simulate a gate network");
    c->add_option("--netlist", src.netlist, "Netlist JSON file");
    c->add_option("--fixture", src.fixture, "Built-in netlist (circuit1 | circuit2)");
    c->add_option("--horizon", horizon, "Time slices (default: state-space bound)");
    c->add_flag("--table", table_flag, "Print the transition table");
    c->add_option("--alpha", alpha_s, "Input assignment In1=T,... for diagram consequence");
    c->add_option("--beta", beta_s, "Point assignment Out2=T,... for diagram consequence");
    c->callback([&] {
      action = [&] {
        auto n = netlist_from_json(rep.load("netlist", src.netlist, src.fixture));
        int h = horizon ? *horizon : default_horizon(n);
        rep.params["horizon"] = h;
        if (beta_s) {
          auto a = alpha_s ? parse_assignment(*alpha_s) : std::map<std::string, bool>{};
          auto b = parse_assignment(*beta_s);
          rep.params["alpha"] = a;
          rep.params["beta"] = b;
          bool yes = diagram_consequence(n, a, b, h);
          rep.result = {{"consequence", yes}};
          rep.exit_code = yes ? 0 : 1;
          rep.text = std::string("consequence: ") + yes_no(yes) + "\n";
          return;
        }
        auto tr = run(n, h);
        const auto& cl = tr.classification;
        oj rows = oj::array();
        for (const auto& r : tr.rows) {
          std::string s;
          for (bool b : r) s += b ? 'T' : 'F';
          rows.push_back(s);
        }
        oj cj{{"kind", to_string(cl.kind)}};
        if (cl.kind == Classification::Kind::Stable) cj["first_time"] = cl.time;
        if (cl.kind == Classification::Kind::Oscillating) {
          cj["period"] = cl.period;
          cj["onset"] = cl.time;
        }
        if (cl.kind == Classification::Kind::Undetermined) cj["horizon"] = cl.horizon;
        rep.result = {{"points", tr.points}, {"rows", rows}, {"classification", cj}};
        rep.text = format_table(tr);
        rep.text += to_string(cl.kind);
        if (cl.kind == Classification::Kind::Stable) rep.text += " from t=" + std::to_string(cl.time);
        if (cl.kind == Classification::Kind::Oscillating)
          rep.text += " period " + std::to_string(cl.period) + " onset " + std::to_string(cl.time);
        rep.text += "\n";
        if (table_flag && !opt.pretty) opt.pretty = true;
      };
    });
  }
  // fixtures
  std::string fixture_name;
  bool list = false;
  {
    auto* c = app.add_subcommand("fixtures", "Emit a built-in fixture file");
    c->add_option("--name", fixture_name, "Fixture name");
    c->add_option("--out", out_path, "Write to this file instead of standard output");
    c->add_flag("--list", list, "List fixture names");
    c->callback([&] {
      action = [&] {
        auto table = fixture_table();
        if (list || fixture_name.empty()) {
          for (const auto& [n, f] : table) std::cout << n << "\n";
          rep.command = "";
          return;
        }
        auto it = table.find(fixture_name);
        if (it == table.end()) throw Error(ErrorKind::InvalidInput, "unknown fixture '" + fixture_name + "'");
        std::string text = it->second().dump(2) + "\n";
        if (out_path.empty()) {
          std::cout << text;
        } else {
          std::ofstream f(out_path);
          if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + out_path + "'");
          f << text;
        }
        rep.command = "";
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  rep.command = app.get_subcommands().front()->get_name();
  try {
    action();
  } catch (const Error& e) {
    oj err{{"tool", "ibrs"}, {"version", kVersion}, {"command", rep.command}, {"error", to_string(e.kind())},
           {"message", e.what()}};
    std::cerr << (opt.pretty ? std::string(e.what()) : err.dump()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (rep.command.empty()) return 0;  // raw output already written
  if (opt.pretty)
    std::cout << rep.text;
  else
    std::cout << rep.json().dump(2) << "\n";
  return rep.exit_code;
}
