#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ibrs/error.hpp"
#include "json.hpp"

namespace ibrs {

enum class GateKind { And, Or, Not };

inline std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Not: return "NOT";
  }
  return "?";
}

struct Gate {
  GateKind kind;
  std::vector<std::string> in;
  std::string out;
  int delay = 1;
};

class Netlist {
 public:
  Netlist(std::vector<std::string> points, std::vector<Gate> gates, std::vector<std::string> inputs,
          std::map<std::string, bool> initial)
      : points_(std::move(points)), gates_(std::move(gates)), inputs_(std::move(inputs)), initial_(std::move(initial)) {
    for (size_t i = 0; i < points_.size(); ++i) {
      if (index_.count(points_[i])) fail("duplicate point '" + points_[i] + "'");
      index_[points_[i]] = static_cast<int>(i);
    }
    std::vector<int> drivers(points_.size(), 0);
    for (const auto& p : inputs_) drivers[index(p)]++;
    for (const auto& g : gates_) {
      if (g.delay < 1) fail("gate driving '" + g.out + "' has delay < 1");
      if (g.kind == GateKind::Not ? g.in.size() != 1 : g.in.empty()) fail("gate driving '" + g.out + "' has bad arity");
      for (const auto& p : g.in) index(p);
      drivers[index(g.out)]++;
    }
    for (size_t i = 0; i < points_.size(); ++i)
      if (drivers[i] != 1) fail("point '" + points_[i] + "' has " + std::to_string(drivers[i]) + " drivers");
    for (const auto& [p, v] : initial_) index(p);
  }

  const std::vector<std::string>& points() const { return points_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::map<std::string, bool>& initial() const { return initial_; }
  int index(const std::string& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) fail("unknown point '" + p + "'");
    return it->second;
  }
  bool initial_value(const std::string& p) const {
    auto it = initial_.find(p);
    return it != initial_.end() && it->second;
  }
  int max_delay() const {
    int d = 1;
    for (const auto& g : gates_) d = std::max(d, g.delay);
    return d;
  }
  Netlist with_initial(const std::map<std::string, bool>& overrides) const {
    auto init = initial_;
    for (const auto& [p, v] : overrides) {
      index(p);
      init[p] = v;
    }
    return Netlist(points_, gates_, inputs_, init);
  }

 private:
  [[noreturn]] static void fail(const std::string& what) { throw Error(ErrorKind::InvalidNetlist, what); }

  std::vector<std::string> points_;
  std::vector<Gate> gates_;
  std::vector<std::string> inputs_;
  std::map<std::string, bool> initial_;
  std::map<std::string, int> index_;
};

inline Netlist netlist_from_json(const nlohmann::ordered_json& j) {
  try {
    std::vector<Gate> gates;
    for (const auto& g : j.at("gates")) {
      std::string k = g.at("kind").get<std::string>();
      GateKind kind = k == "AND" ? GateKind::And : k == "OR" ? GateKind::Or : k == "NOT" ? GateKind::Not
                                                                                       : throw Error(ErrorKind::InvalidNetlist, "unknown gate kind '" + k + "'");
      gates.push_back({kind, g.at("in").get<std::vector<std::string>>(), g.at("out").get<std::string>(), g.value("delay", 1)});
    }
    std::map<std::string, bool> initial;
    if (j.contains("initial"))
      for (const auto& [p, v] : j.at("initial").items()) initial[p] = v.get<bool>();
    return Netlist(j.at("points").get<std::vector<std::string>>(), gates,
                   j.value("inputs", std::vector<std::string>{}), initial);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidNetlist, e.what());
  }
}

inline nlohmann::ordered_json to_json(const Netlist& n) {
  nlohmann::ordered_json j;
  j["points"] = n.points();
  auto gates = nlohmann::ordered_json::array();
  for (const auto& g : n.gates()) gates.push_back({{"kind", to_string(g.kind)}, {"in", g.in}, {"out", g.out}, {"delay", g.delay}});
  j["gates"] = gates;
  j["inputs"] = n.inputs();
  nlohmann::ordered_json init = nlohmann::ordered_json::object();
  for (const auto& p : n.points()) init[p] = n.initial_value(p);
  j["initial"] = init;
  return j;
}

// The flip-flop variant: A1 = In1 ∧ Out1, A2 = In2 ∧ Out2, A3 = A1 ∨ Out2, A4 = A2 ∨ Out1,
// Out1 = ¬A3, Out2 = ¬A4; In1 true, everything else false.
inline Netlist flip_flop(int and_delay) {
  return Netlist({"In1", "In2", "A1", "A2", "A3", "A4", "Out1", "Out2"},
                 {{GateKind::And, {"In1", "Out1"}, "A1", and_delay},
                  {GateKind::And, {"In2", "Out2"}, "A2", and_delay},
                  {GateKind::Or, {"A1", "Out2"}, "A3", 1},
                  {GateKind::Or, {"A2", "Out1"}, "A4", 1},
                  {GateKind::Not, {"A3"}, "Out1", 1},
                  {GateKind::Not, {"A4"}, "Out2", 1}},
                 {"In1", "In2"}, {{"In1", true}});
}

inline Netlist circuit1() { return flip_flop(1); }
inline Netlist circuit2() { return flip_flop(2); }

struct Classification {
  enum class Kind { Stable, Oscillating, Undetermined };
  Kind kind = Kind::Undetermined;
  int time = 0;    // first_time (stable) or onset (oscillating)
  int period = 0;  // 1 when stable
  int horizon = 0;
  std::vector<bool> state;  // row at `time`
};

inline std::string to_string(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::Stable: return "Stable";
    case Classification::Kind::Oscillating: return "Oscillating";
    case Classification::Kind::Undetermined: return "Undetermined";
  }
  return "?";
}

struct Trace {
  std::vector<std::string> points;
  std::vector<std::vector<bool>> rows;  // rows[t-1] is time slice t
  Classification classification;

  bool at(int t, const std::string& p) const {
    auto it = std::find(points.begin(), points.end(), p);
    if (it == points.end()) throw Error(ErrorKind::InvalidInput, "unknown point '" + p + "'");
    return rows.at(static_cast<size_t>(t - 1))[static_cast<size_t>(it - points.begin())];
  }
};

// Size of the recurrence state (row plus scheduled outputs) bounds the time to the first repeat.
inline int default_horizon(const Netlist& n) {
  int bits = static_cast<int>(n.points().size());
  for (const auto& g : n.gates()) bits += g.delay - 1;
  return (bits >= 20 ? (1 << 20) : (1 << bits)) + n.max_delay();
}

namespace detail {

inline bool gate_value(const Netlist& n, const Gate& g, const std::vector<bool>& src) {
  bool v = g.kind == GateKind::And;
  for (const auto& p : g.in) {
    bool x = src[static_cast<size_t>(n.index(p))];
    v = g.kind == GateKind::And ? (v && x) : g.kind == GateKind::Or ? (v || x) : !x;
  }
  return v;
}

// Values that determine the future after time t: the row at t plus every gate output
// already scheduled for t+1 .. t+delay-1.
inline std::vector<bool> future_state(const Netlist& n, const std::vector<std::vector<bool>>& rows, int t) {
  std::vector<bool> s = rows[static_cast<size_t>(t - 1)];
  for (const auto& g : n.gates())
    for (int ahead = 1; ahead < g.delay; ++ahead) s.push_back(gate_value(n, g, rows[static_cast<size_t>(t + ahead - g.delay - 1)]));
  return s;
}

}  // namespace detail

// Gate outputs keep their initial value up to their delay, then follow their inputs delay slices earlier.
inline Trace run(const Netlist& n, int horizon) {
  if (horizon < 1) throw Error(ErrorKind::InvalidInput, "horizon must be positive");
  Trace tr;
  tr.points = n.points();
  std::vector<bool> first;
  for (const auto& p : n.points()) first.push_back(n.initial_value(p));
  tr.rows.push_back(first);
  for (int t = 2; t <= horizon; ++t) {
    std::vector<bool> row = tr.rows.back();
    for (const auto& g : n.gates()) {
      size_t out = static_cast<size_t>(n.index(g.out));
      if (t <= g.delay) {
        row[out] = first[out];
        continue;
      }
      row[out] = detail::gate_value(n, g, tr.rows[static_cast<size_t>(t - g.delay - 1)]);
    }
    tr.rows.push_back(row);
  }

  const int d = n.max_delay();
  auto& c = tr.classification;
  c.horizon = horizon;
  std::map<std::vector<bool>, int> seen;
  // from the first slice where every gate output is computed
  for (int t = d + 1; t <= horizon; ++t) {
    auto s = detail::future_state(n, tr.rows, t);
    auto [it, fresh] = seen.emplace(s, t);
    if (fresh) continue;
    c.time = it->second;
    c.period = t - it->second;
    c.kind = c.period == 1 ? Classification::Kind::Stable : Classification::Kind::Oscillating;
    c.state = tr.rows[static_cast<size_t>(c.time - 1)];
    break;
  }
  return tr;
}

inline Trace run(const Netlist& n) { return run(n, default_horizon(n)); }

inline bool satisfies_gate_equations(const Netlist& n, const Trace& tr) {
  for (size_t t = 1; t <= tr.rows.size(); ++t)
    for (const auto& g : n.gates()) {
      if (static_cast<int>(t) <= g.delay) continue;
      bool v = detail::gate_value(n, g, tr.rows[t - 1 - static_cast<size_t>(g.delay)]);
      if (tr.rows[t - 1][static_cast<size_t>(n.index(g.out))] != v) return false;
    }
  return true;
}

// For every completion of the unassigned inputs, beta's points settle on beta's values.
inline bool diagram_consequence(const Netlist& n, const std::map<std::string, bool>& alpha,
                                const std::map<std::string, bool>& beta, int horizon) {
  std::vector<std::string> free;
  for (const auto& p : n.inputs())
    if (!alpha.count(p)) free.push_back(p);
  for (const auto& [p, v] : alpha)
    if (std::find(n.inputs().begin(), n.inputs().end(), p) == n.inputs().end())
      throw Error(ErrorKind::InvalidInput, "'" + p + "' is not an input");
  for (const auto& [p, v] : beta) n.index(p);
  if (free.size() > 20) throw Error(ErrorKind::CapacityExceeded, "too many unassigned inputs");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
    auto init = alpha;
    for (size_t i = 0; i < free.size(); ++i) init[free[i]] = (m >> i) & 1;
    Trace tr = run(n.with_initial(init), horizon);
    const auto& c = tr.classification;
    if (c.kind == Classification::Kind::Undetermined)
      throw Error(ErrorKind::HorizonTooSmall, "no recurrence within " + std::to_string(horizon) + " slices");
    for (int t = c.time; t < c.time + c.period; ++t)
      for (const auto& [p, v] : beta)
        if (tr.at(t, p) != v) return false;
  }
  return true;
}

inline std::string format_table(const Trace& tr) {
  std::string s = "   ";
  std::vector<size_t> width;
  for (const auto& p : tr.points) {
    width.push_back(std::max<size_t>(p.size(), 1));
    s += " " + p;
  }
  s += "\n";
  for (size_t t = 0; t < tr.rows.size(); ++t) {
    std::string label = std::to_string(t + 1) + ":";
    s += label + std::string(label.size() < 3 ? 3 - label.size() : 0, ' ');
    for (size_t i = 0; i < tr.points.size(); ++i) s += " " + std::string(width[i] - 1, ' ') + (tr.rows[t][i] ? "T" : "F");
    s += "\n";
  }
  return s;
}

}  // namespace ibrs
