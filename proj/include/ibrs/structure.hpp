#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ibrs/error.hpp"
#include "ibrs/sets.hpp"

namespace ibrs {

constexpr int kDefaultLevelBound = 3;

struct CopyRef {
  std::string point;
  int copy = 0;
  auto operator<=>(const CopyRef&) const = default;
};

// A reference to either a point copy or an arrow, as written in arrow descriptions.
struct Ref {
  bool is_arrow = false;
  std::string name;  // point name or arrow id
  int copy = 0;

  static Ref point(std::string p, int c = 0) { return {false, std::move(p), c}; }
  static Ref arrow(std::string id) { return {true, std::move(id), 0}; }
  bool operator==(const Ref&) const = default;
};

struct ArrowSpec {
  std::string id;
  std::string base;  // empty means "same as id"
  int copy = 0;
  Ref origin;
  Ref target;
  bool operator==(const ArrowSpec&) const = default;
};

struct ClosureSets {
  std::vector<std::string> origins;
  std::vector<std::string> destinations;
  bool operator==(const ClosureSets&) const = default;
};

class Structure {
 public:
  struct CopyRec {
    int point;
    int index;
  };
  struct ArrowRec {
    std::string id;
    std::string base;
    int copy;
    int origin_copy;
    int origin_point;
    bool targets_arrow;
    int target;  // copy index or arrow index
    int level;
    Mask O;
    Mask D;
  };

  Structure() = default;

  const Universe& universe() const { return universe_; }
  const std::vector<std::string>& carrier() const { return universe_.names(); }
  Mask all() const { return universe_.all(); }
  int level_bound() const { return level_bound_; }

  const std::vector<CopyRec>& copies() const { return copies_; }
  const std::vector<ArrowRec>& arrows() const { return arrows_; }
  const ArrowRec& arrow(int a) const { return arrows_.at(a); }

  const std::vector<int>& copies_of(int point) const { return copies_of_.at(point); }
  const std::vector<int>& attackers_of_copy(int c) const { return on_copy_.at(c); }
  const std::vector<int>& attackers_of_arrow(int a) const { return on_arrow_.at(a); }
  // Arrow indices sorted by strictly descending level (ties by id).
  const std::vector<int>& by_level_desc() const { return by_level_desc_; }
  int max_level() const { return max_level_; }

  int arrow_index(const std::string& id) const {
    auto it = arrow_ix_.find(id);
    if (it == arrow_ix_.end()) throw Error(ErrorKind::UnknownArrow, "no arrow '" + id + "'");
    return it->second;
  }
  bool has_arrow(const std::string& id) const { return arrow_ix_.count(id) != 0; }
  int copy_index(int point, int idx) const {
    for (int c : copies_of_.at(point))
      if (copies_[c].index == idx) return c;
    return -1;
  }

  Mask mask(const std::vector<std::string>& names) const { return universe_.mask(names); }
  std::vector<std::string> names(Mask m) const { return universe_.list(m); }
  std::string show(Mask m) const { return universe_.show(m); }

  CopyRef copy_ref(int c) const { return {universe_.name(copies_[c].point), copies_[c].index}; }
  std::string show_copy(int c) const {
    return "<" + universe_.name(copies_[c].point) + "," + std::to_string(copies_[c].index) + ">";
  }

  std::vector<CopyRef> copy_specs() const {
    std::vector<CopyRef> out;
    for (int c = 0; c < static_cast<int>(copies_.size()); ++c) out.push_back(copy_ref(c));
    return out;
  }
  ArrowSpec arrow_spec(int a) const {
    const auto& r = arrows_[a];
    ArrowSpec s;
    s.id = r.id;
    s.base = r.base;
    s.copy = r.copy;
    auto oc = copy_ref(r.origin_copy);
    s.origin = Ref::point(oc.point, oc.copy);
    if (r.targets_arrow) {
      s.target = Ref::arrow(arrows_[r.target].id);
    } else {
      auto tc = copy_ref(r.target);
      s.target = Ref::point(tc.point, tc.copy);
    }
    return s;
  }
  std::vector<ArrowSpec> arrow_specs() const {
    std::vector<ArrowSpec> out;
    for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) out.push_back(arrow_spec(a));
    return out;
  }

  bool operator==(const Structure& o) const {
    return universe_ == o.universe_ && level_bound_ == o.level_bound_ && copy_specs() == o.copy_specs() &&
           arrow_specs() == o.arrow_specs();
  }

  friend Structure build_structure(const std::vector<std::string>&, const std::vector<CopyRef>&,
                                   const std::vector<ArrowSpec>&, int);

 private:
  Universe universe_;
  int level_bound_ = kDefaultLevelBound;
  int max_level_ = 0;
  std::vector<CopyRec> copies_;
  std::vector<ArrowRec> arrows_;
  std::vector<std::vector<int>> copies_of_;
  std::vector<std::vector<int>> on_copy_;
  std::vector<std::vector<int>> on_arrow_;
  std::vector<int> by_level_desc_;
  std::map<std::string, int> arrow_ix_;
};

// Points of the carrier may carry zero copies; such a point is never minimal.
inline Structure build_structure(const std::vector<std::string>& carrier, const std::vector<CopyRef>& copies,
                                 const std::vector<ArrowSpec>& arrows, int level_bound = kDefaultLevelBound) {
  if (level_bound < 1) throw Error(ErrorKind::InvalidInput, "level bound must be positive");
  Structure s;
  s.universe_ = Universe(carrier);
  s.level_bound_ = level_bound;
  const Universe& U = s.universe_;

  std::vector<std::pair<int, int>> cps;
  for (const auto& c : copies) {
    if (!U.contains(c.point)) throw Error(ErrorKind::DanglingReference, "copy of undeclared point '" + c.point + "'");
    if (c.copy < 0) throw Error(ErrorKind::InvalidInput, "negative copy index");
    cps.emplace_back(U.index(c.point), c.copy);
  }
  std::sort(cps.begin(), cps.end());
  if (std::adjacent_find(cps.begin(), cps.end()) != cps.end())
    throw Error(ErrorKind::InvalidInput, "duplicate point copy");
  s.copies_of_.assign(U.size(), {});
  for (const auto& [p, i] : cps) {
    s.copies_of_[p].push_back(static_cast<int>(s.copies_.size()));
    s.copies_.push_back({p, i});
  }

  auto find_copy = [&](const Ref& r) {
    if (!U.contains(r.name)) throw Error(ErrorKind::DanglingReference, "unknown point '" + r.name + "'");
    int c = s.copy_index(U.index(r.name), r.copy);
    if (c < 0)
      throw Error(ErrorKind::DanglingReference, "undeclared copy <" + r.name + "," + std::to_string(r.copy) + ">");
    return c;
  };

  std::vector<const ArrowSpec*> sorted;
  for (const auto& a : arrows) sorted.push_back(&a);
  std::sort(sorted.begin(), sorted.end(), [](auto* x, auto* y) { return x->id < y->id; });
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i]->id.empty()) throw Error(ErrorKind::InvalidInput, "empty arrow id");
    if (i > 0 && sorted[i]->id == sorted[i - 1]->id)
      throw Error(ErrorKind::InvalidInput, "duplicate arrow id '" + sorted[i]->id + "'");
    s.arrow_ix_[sorted[i]->id] = static_cast<int>(i);
  }
  for (const auto* a : sorted) {
    if (a->origin.is_arrow) throw Error(ErrorKind::OriginNotPoint, "arrow '" + a->id + "' has an arrow as origin");
    Structure::ArrowRec r;
    r.id = a->id;
    r.base = a->base.empty() ? a->id : a->base;
    r.copy = a->copy;
    r.origin_copy = find_copy(a->origin);
    r.origin_point = s.copies_[r.origin_copy].point;
    r.targets_arrow = a->target.is_arrow;
    if (a->target.is_arrow) {
      auto it = s.arrow_ix_.find(a->target.name);
      if (it == s.arrow_ix_.end())
        throw Error(ErrorKind::DanglingReference, "arrow '" + a->id + "' targets unknown arrow '" + a->target.name + "'");
      r.target = it->second;
    } else {
      r.target = find_copy(a->target);
    }
    r.level = 0;
    r.O = r.D = 0;
    s.arrows_.push_back(std::move(r));
  }

  // Levels and closure sets along target chains; 0 = unvisited, -1 = in progress.
  const int n = static_cast<int>(s.arrows_.size());
  std::vector<int> state(n, 0);
  for (int start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    std::vector<int> chain;
    int cur = start;
    while (true) {
      if (state[cur] == -1) throw Error(ErrorKind::CyclicTargets, "target cycle through '" + s.arrows_[cur].id + "'");
      if (state[cur] == 1) break;
      state[cur] = -1;
      chain.push_back(cur);
      if (!s.arrows_[cur].targets_arrow) break;
      cur = s.arrows_[cur].target;
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      auto& r = s.arrows_[*it];
      if (r.targets_arrow) {
        const auto& t = s.arrows_[r.target];
        r.level = t.level + 1;
        r.O = bit(r.origin_point) | t.O;
        r.D = t.D;
      } else {
        r.level = 1;
        r.O = bit(r.origin_point);
        r.D = bit(s.copies_[r.target].point);
      }
      if (r.level > level_bound)
        throw Error(ErrorKind::LevelBoundExceeded,
                    "arrow '" + r.id + "' has level " + std::to_string(r.level) + " > " + std::to_string(level_bound));
      state[*it] = 1;
    }
  }

  s.on_copy_.assign(s.copies_.size(), {});
  s.on_arrow_.assign(n, {});
  for (int a = 0; a < n; ++a) {
    const auto& r = s.arrows_[a];
    (r.targets_arrow ? s.on_arrow_[r.target] : s.on_copy_[r.target]).push_back(a);
    s.max_level_ = std::max(s.max_level_, r.level);
  }
  s.by_level_desc_.resize(n);
  for (int a = 0; a < n; ++a) s.by_level_desc_[a] = a;
  std::stable_sort(s.by_level_desc_.begin(), s.by_level_desc_.end(),
                   [&](int x, int y) { return s.arrows_[x].level > s.arrows_[y].level; });
  return s;
}

inline int level(const Structure& s, const std::string& arrow_id) { return s.arrow(s.arrow_index(arrow_id)).level; }

inline ClosureSets closure_sets(const Structure& s, const std::string& arrow_id) {
  const auto& r = s.arrow(s.arrow_index(arrow_id));
  return {s.names(r.O), s.names(r.D)};
}

inline void require_subset(const Structure& s, Mask x) {
  if (!subset(x, s.all())) throw Error(ErrorKind::NotASubset, "set is not a subset of the carrier");
}

// Legal subdiagram generated by X: all copies of points of X, then every arrow
// whose origin copy and target already belong, closed inductively.
inline Structure restrict(const Structure& s, Mask x) {
  require_subset(s, x);
  std::vector<std::string> carrier = s.names(x);
  std::vector<CopyRef> copies;
  std::vector<char> in_copy(s.copies().size(), 0);
  for (int c = 0; c < static_cast<int>(s.copies().size()); ++c) {
    if (has(x, s.copies()[c].point)) {
      in_copy[c] = 1;
      copies.push_back(s.copy_ref(c));
    }
  }
  std::vector<char> in_arrow(s.arrows().size(), 0);
  // Ascending level order makes one pass enough: a target arrow is settled before its attackers.
  const auto& desc = s.by_level_desc();
  for (auto it = desc.rbegin(); it != desc.rend(); ++it) {
    const auto& r = s.arrow(*it);
    bool target_in = r.targets_arrow ? in_arrow[r.target] : in_copy[r.target];
    if (in_copy[r.origin_copy] && target_in) in_arrow[*it] = 1;
  }
  std::vector<ArrowSpec> arrows;
  for (int a = 0; a < static_cast<int>(s.arrows().size()); ++a)
    if (in_arrow[a]) arrows.push_back(s.arrow_spec(a));
  return build_structure(carrier, copies, arrows, s.level_bound());
}

inline Structure restrict(const Structure& s, const std::vector<std::string>& x) { return restrict(s, s.mask(x)); }

}  // namespace ibrs
