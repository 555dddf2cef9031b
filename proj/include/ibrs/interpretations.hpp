#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ibrs/error.hpp"
#include "json.hpp"

namespace ibrs {

// Plain IBRS: arrows may start at nodes or arrows and end at nodes or arrows.
struct IbrsRef {
  bool is_arrow = false;
  std::string name;

  static IbrsRef node(std::string n) { return {false, std::move(n)}; }
  static IbrsRef arrow(std::string id) { return {true, std::move(id)}; }
  auto operator<=>(const IbrsRef&) const = default;
};

struct IbrsArrow {
  std::string id;
  IbrsRef origin, target;
};

class LabeledIbrs {
 public:
  LabeledIbrs(std::vector<std::string> nodes, std::vector<IbrsArrow> arrows, std::vector<std::string> atoms)
      : nodes_(std::move(nodes)), arrows_(std::move(arrows)), atoms_(std::move(atoms)) {
    std::set<std::string> seen_nodes(nodes_.begin(), nodes_.end());
    if (seen_nodes.size() != nodes_.size()) throw Error(ErrorKind::InvalidInput, "duplicate node");
    for (size_t i = 0; i < arrows_.size(); ++i) {
      if (index_.count(arrows_[i].id) || seen_nodes.count(arrows_[i].id))
        throw Error(ErrorKind::InvalidInput, "duplicate id '" + arrows_[i].id + "'");
      index_[arrows_[i].id] = i;
    }
    for (const auto& a : arrows_)
      for (const IbrsRef* r : {&a.origin, &a.target})
        if (r->is_arrow ? !index_.count(r->name) : !seen_nodes.count(r->name))
          throw Error(ErrorKind::DanglingReference, "arrow '" + a.id + "' mentions unknown '" + r->name + "'");
  }

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<IbrsArrow>& arrows() const { return arrows_; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const IbrsArrow& arrow(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorKind::UnknownArrow, "unknown arrow '" + id + "'");
    return arrows_[it->second];
  }
  bool has_node(const std::string& n) const { return std::find(nodes_.begin(), nodes_.end(), n) != nodes_.end(); }

  void set_label(const std::string& atom, const IbrsRef& at, double value) {
    if (std::find(atoms_.begin(), atoms_.end(), atom) == atoms_.end())
      throw Error(ErrorKind::InvalidInput, "unknown atom '" + atom + "'");
    if (at.is_arrow ? !index_.count(at.name) : !has_node(at.name))
      throw Error(ErrorKind::DanglingReference, "label on unknown '" + at.name + "'");
    labels_[{atom, at}] = value;
  }
  std::optional<double> label(const std::string& atom, const IbrsRef& at) const {
    auto it = labels_.find({atom, at});
    if (it == labels_.end()) return std::nullopt;
    return it->second;
  }
  double node_label(const std::string& atom, const std::string& node) const {
    auto v = label(atom, IbrsRef::node(node));
    if (!v) throw Error(ErrorKind::MissingLabel, "no value of " + atom + " at " + node);
    return *v;
  }
  const std::map<std::pair<std::string, IbrsRef>, double>& labels() const { return labels_; }

  // node-to-node arrows
  std::vector<std::pair<std::string, std::string>> relation() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& a : arrows_)
      if (!a.origin.is_arrow && !a.target.is_arrow) out.emplace_back(a.origin.name, a.target.name);
    return out;
  }

 private:
  std::vector<std::string> nodes_;
  std::vector<IbrsArrow> arrows_;
  std::vector<std::string> atoms_;
  std::map<std::string, size_t> index_;
  std::map<std::pair<std::string, IbrsRef>, double> labels_;
};

inline std::string arrow_name(const IbrsRef& from, const IbrsRef& to) { return "(" + from.name + "," + to.name + ")"; }

// S={a,b,c,d,e}; (a,b),(a,c),(d,c),(d,e),((a,b),(d,c)),(d,(a,c)); node labels (p,q); arrow labels (1,1).
inline LabeledIbrs worked_ibrs() {
  using R = IbrsRef;
  std::vector<IbrsArrow> arrows;
  auto add = [&](R from, R to) {
    arrows.push_back({arrow_name(from, to), from, to});
    return R::arrow(arrows.back().id);
  };
  R ab = add(R::node("a"), R::node("b"));
  R ac = add(R::node("a"), R::node("c"));
  R dc = add(R::node("d"), R::node("c"));
  add(R::node("d"), R::node("e"));
  add(ab, dc);
  add(R::node("d"), ac);
  LabeledIbrs g({"a", "b", "c", "d", "e"}, arrows, {"p", "q"});
  const std::map<std::string, std::pair<int, int>> pq{{"a", {0, 0}}, {"b", {0, 1}}, {"c", {0, 1}}, {"d", {1, 0}}, {"e", {1, 1}}};
  for (const auto& [n, v] : pq) {
    g.set_label("p", R::node(n), v.first);
    g.set_label("q", R::node(n), v.second);
  }
  for (const auto& a : g.arrows()) {
    g.set_label("p", R::arrow(a.id), 1);
    g.set_label("q", R::arrow(a.id), 1);
  }
  return g;
}

// ---------------------------------------------------------------- JSON

inline nlohmann::ordered_json to_json(const LabeledIbrs& g) {
  using json = nlohmann::ordered_json;
  auto ref = [](const IbrsRef& r) { return r.is_arrow ? json{{"arrow", r.name}} : json{{"node", r.name}}; };
  json j;
  j["carrier"] = g.nodes();
  json arrows = json::array();
  for (const auto& a : g.arrows()) arrows.push_back({{"id", a.id}, {"origin", ref(a.origin)}, {"target", ref(a.target)}});
  j["arrows"] = arrows;
  j["atoms"] = g.atoms();
  json labels = json::array();
  for (const auto& [key, v] : g.labels()) {
    json value = v == static_cast<int>(v) ? json(static_cast<int>(v)) : json(v);
    labels.push_back({{"atom", key.first}, {"at", ref(key.second)}, {"value", value}});
  }
  j["labels"] = labels;
  return j;
}

inline LabeledIbrs labeled_ibrs_from_json(const nlohmann::ordered_json& j) {
  auto ref = [](const nlohmann::ordered_json& r) {
    if (r.is_string()) return IbrsRef::node(r.get<std::string>());
    if (r.contains("arrow")) return IbrsRef::arrow(r.at("arrow").get<std::string>());
    if (r.contains("node")) return IbrsRef::node(r.at("node").get<std::string>());
    if (r.contains("point")) return IbrsRef::node(r.at("point").get<std::string>());
    throw Error(ErrorKind::InvalidInput, "malformed reference " + r.dump());
  };
  try {
    std::vector<IbrsArrow> arrows;
    if (j.contains("arrows"))
      for (const auto& a : j.at("arrows")) {
        IbrsRef o = ref(a.at("origin")), t = ref(a.at("target"));
        arrows.push_back({a.value("id", arrow_name(o, t)), o, t});
      }
    std::vector<std::string> atoms = j.contains("atoms") ? j.at("atoms").get<std::vector<std::string>>() : std::vector<std::string>{};
    LabeledIbrs g(j.at("carrier").get<std::vector<std::string>>(), arrows, atoms);
    if (j.contains("labels"))
      for (const auto& l : j.at("labels")) g.set_label(l.at("atom").get<std::string>(), ref(l.at("at")), l.at("value").get<double>());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, e.what());
  }
}

// ---------------------------------------------------------------- algorithms

// Nodes with no incoming node-to-node arrow from within `within` (all nodes when empty).
inline std::vector<std::string> minimal_points(const LabeledIbrs& g, const std::vector<std::string>& within) {
  std::set<std::string> in(within.begin(), within.end());
  std::vector<std::string> out;
  for (const auto& n : within) {
    bool attacked = false;
    for (const auto& [from, to] : g.relation()) attacked = attacked || (to == n && from != n && in.count(from));
    if (!attacked) out.push_back(n);
  }
  return out;
}

inline std::vector<std::string> minimal_points(const LabeledIbrs& g) { return minimal_points(g, g.nodes()); }

inline void require_node(const LabeledIbrs& g, const std::string& n) {
  if (!g.has_node(n)) throw Error(ErrorKind::InvalidInput, "unknown node '" + n + "'");
}

// □atom at world: atom holds at world and at every relation successor.
inline bool modal_box_eval(const LabeledIbrs& g, const std::string& world, const std::string& atom) {
  require_node(g, world);
  bool ok = g.node_label(atom, world) == 1;
  for (const auto& [from, to] : g.relation())
    if (from == world) ok = g.node_label(atom, to) == 1 && ok;
  return ok;
}

// □atom at every distinguished point (the minimal points unless given).
inline bool modal_box_valid(const LabeledIbrs& g, const std::string& atom,
                            const std::optional<std::vector<std::string>>& distinguished = std::nullopt) {
  bool ok = true;
  for (const auto& w : distinguished ? *distinguished : minimal_points(g)) ok = modal_box_eval(g, w, atom) && ok;
  return ok;
}

inline std::vector<std::string> satisfying(const LabeledIbrs& g, const std::string& atom) {
  std::vector<std::string> out;
  for (const auto& n : g.nodes())
    if (g.node_label(atom, n) == 1) out.push_back(n);
  return out;
}

inline bool nm_consequence(const LabeledIbrs& g, const std::string& premise, const std::string& conclusion) {
  for (const auto& n : g.nodes()) g.node_label(conclusion, n);
  bool ok = true;
  for (const auto& m : minimal_points(g, satisfying(g, premise))) ok = ok && g.node_label(conclusion, m) == 1;
  return ok;
}

enum class ArgLabel { Undecided, In, Out };

struct ArgumentationResult {
  std::vector<std::string> winning;
  std::map<IbrsRef, ArgLabel> labels;  // nodes and arrows
  int rounds = 0;
};

// Grounded labelling over nodes and arrows: an element is IN when every arrow aimed at it
// is OUT or starts at an OUT element, OUT when some IN arrow from an IN element hits it.
inline ArgumentationResult argumentation(const LabeledIbrs& g) {
  ArgumentationResult r;
  std::vector<IbrsRef> elements;
  for (const auto& n : g.nodes()) elements.push_back(IbrsRef::node(n));
  for (const auto& a : g.arrows()) elements.push_back(IbrsRef::arrow(a.id));
  std::map<IbrsRef, std::vector<const IbrsArrow*>> attackers;
  for (const auto& a : g.arrows()) attackers[a.target].push_back(&a);
  for (const auto& e : elements) r.labels[e] = ArgLabel::Undecided;

  const int limit = static_cast<int>(elements.size()) + 1;
  bool changed = true;
  while (changed) {
    if (r.rounds > limit) throw Error(ErrorKind::NonConvergence, "no fixpoint after " + std::to_string(limit) + " rounds");
    ++r.rounds;
    changed = false;
    auto next = r.labels;
    for (const auto& e : elements) {
      if (r.labels[e] != ArgLabel::Undecided) continue;
      bool all_failed = true, one_succeeds = false;
      for (const IbrsArrow* a : attackers[e]) {
        ArgLabel arrow = r.labels[IbrsRef::arrow(a->id)], source = r.labels[a->origin];
        all_failed = all_failed && (arrow == ArgLabel::Out || source == ArgLabel::Out);
        one_succeeds = one_succeeds || (arrow == ArgLabel::In && source == ArgLabel::In);
      }
      if (all_failed) next[e] = ArgLabel::In;
      else if (one_succeeds) next[e] = ArgLabel::Out;
      changed = changed || next[e] != ArgLabel::Undecided;
    }
    r.labels = next;
  }
  for (const auto& n : g.nodes())
    if (r.labels[IbrsRef::node(n)] == ArgLabel::In) r.winning.push_back(n);
  return r;
}

inline std::vector<std::string> winning_arguments(const LabeledIbrs& g) { return argumentation(g).winning; }

using NodeRelation = std::set<std::pair<std::string, std::string>>;

// t ρ₀ s iff t = s, or t R s and every atom label at t is ≤ the one at s.
inline NodeRelation rho0(const LabeledIbrs& g) {
  NodeRelation out;
  for (const auto& n : g.nodes()) out.insert({n, n});
  for (const auto& [t, s] : g.relation()) {
    bool le = true;
    for (const auto& q : g.atoms()) le = le && g.node_label(q, t) <= g.node_label(q, s);
    if (le) out.insert({t, s});
  }
  return out;
}

inline NodeRelation transitive_closure(NodeRelation r) {
  bool grown = true;
  while (grown) {
    grown = false;
    for (const auto& [a, b] : NodeRelation(r))
      for (const auto& [c, d] : NodeRelation(r))
        if (b == c && r.insert({a, d}).second) grown = true;
  }
  return r;
}

// premise ⇒ conclusion at every ρ-minimal point of (S, ρ).
inline bool intuitionistic_eval(const LabeledIbrs& g, const std::string& premise, const std::string& conclusion) {
  NodeRelation rho = transitive_closure(rho0(g));
  bool ok = true;
  for (const auto& w : g.nodes()) {
    bool minimal = true;
    for (const auto& [t, s] : rho) minimal = minimal && !(s == w && t != w);
    if (!minimal) continue;
    for (const auto& [t, s] : rho)
      if (t == w && g.node_label(premise, s) == 1 && g.node_label(conclusion, s) != 1) ok = false;
  }
  return ok;
}

using Distances = std::map<std::pair<std::string, std::string>, double>;

// Every premise-node within `radius` of world satisfies the conclusion; d(world, world) = 0.
inline bool counterfactual_eval(const LabeledIbrs& g, const Distances& d, const std::string& world,
                                const std::string& premise, const std::string& conclusion, double radius) {
  require_node(g, world);
  bool ok = true;
  for (const auto& n : g.nodes()) {
    double dist = 0;
    if (n != world) {
      auto it = d.find({world, n});
      if (it == d.end()) throw Error(ErrorKind::MissingDistance, "no distance from " + world + " to " + n);
      dist = it->second;
    }
    if (dist <= radius && g.node_label(premise, n) == 1 && g.node_label(conclusion, n) != 1) ok = false;
  }
  return ok;
}

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

}  // namespace ibrs
