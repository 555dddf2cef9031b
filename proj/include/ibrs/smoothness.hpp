#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ibrs/validity.hpp"

namespace ibrs {

struct SmoothnessWitness {
  std::string clause;
  Mask set = 0;                 // the X (or Xp) the failure was found in
  std::string point;
  std::optional<CopyRef> copy;
  std::vector<std::string> arrows;
};

struct SmoothnessVerdict {
  bool holds = true;
  std::optional<SmoothnessWitness> witness;
  // Certifying case per point of X ("1", "2a", "2b", or "none"); filled for essential checks on level ≤3 structures.
  std::vector<std::pair<std::string, std::string>> cases;
};

inline SmoothnessVerdict is_sqsubseteq(const Structure& s, Mask x, Mask xp) {
  require_subset(s, xp);
  if (!subset(x, xp)) throw Error(ErrorKind::NotNested, s.show(x) + " is not a subset of " + s.show(xp));
  auto v = valid_flags_x_impl_y(s, x, xp);
  SmoothnessVerdict out;

  for (int p : [&] {
         std::vector<int> ps;
         for_each_bit(xp & ~x, [&](int i) { ps.push_back(i); });
         return ps;
       }()) {
    for (int c : s.copies_of(p)) {
      bool hit = false;
      for (int a : s.attackers_of_copy(c)) hit = hit || v[a];
      if (!hit) {
        out.holds = false;
        out.witness = SmoothnessWitness{"(2)", xp, s.universe().name(p), s.copy_ref(c), {}};
        return out;
      }
    }
  }

  bool failed = false;
  for_each_bit(x, [&](int p) {
    if (failed) return;
    std::vector<std::string> blockers;
    for (int c : s.copies_of(p)) {
      std::optional<std::string> blocker;
      for (int a : s.attackers_of_copy(c)) {
        if (!has(xp, s.arrow(a).origin_point)) continue;
        bool countered = false;
        for (int b : s.attackers_of_arrow(a)) countered = countered || v[b];
        if (!countered) {
          blocker = s.arrow(a).id;
          break;
        }
      }
      if (!blocker) return;
      blockers.push_back(*blocker);
    }
    failed = true;
    out.holds = false;
    out.witness = SmoothnessWitness{"(3)", xp, s.universe().name(p), std::nullopt, blockers};
  });
  return out;
}

enum class TotalSmoothReading {
  ValidArrows,  // every valid in-scope arrow has a valid counterpart from μ(X)
  AllArrows,    // every in-scope arrow has a counterpart from μ(X), valid whenever the arrow is
};

inline SmoothnessVerdict is_totally_smooth(const Structure& s, Mask x,
                                           TotalSmoothReading reading = TotalSmoothReading::ValidArrows) {
  require_subset(s, x);
  Mask m = mu(s, x);
  auto v = valid_flags_x_to_y(s, x, x);
  SmoothnessVerdict out;
  for (int a = 0; a < static_cast<int>(s.arrows().size()); ++a) {
    const auto& r = s.arrow(a);
    if (!subset(r.O | r.D, x)) continue;
    if (reading == TotalSmoothReading::ValidArrows && !v[a]) continue;
    const auto& siblings = r.targets_arrow ? s.attackers_of_arrow(r.target) : s.attackers_of_copy(r.target);
    bool found = false;
    for (int b : siblings) {
      if (!has(m, s.arrow(b).origin_point)) continue;
      if (v[a] && !v[b]) continue;
      found = true;
      break;
    }
    if (!found) {
      out.holds = false;
      out.witness = SmoothnessWitness{v[a] ? "(2)" : "(1)", x, s.universe().name(r.origin_point), std::nullopt, {r.id}};
      return out;
    }
  }
  return out;
}

// Case split for level ≤3 structures: which explicit condition certifies each point of X
// against μ(X). Returns "none" for points no case certifies.
inline std::vector<std::pair<std::string, std::string>> remark_cases(const Structure& s, Mask x) {
  require_subset(s, x);
  Mask m = mu(s, x);
  std::vector<std::pair<std::string, std::string>> out;
  auto from = [&](int a, Mask set) { return has(set, s.arrow(a).origin_point); };
  for_each_bit(x, [&](int p) {
    std::string verdict = "none";
    if (has(m, p)) {
      for (int c : s.copies_of(p)) {
        bool ok = true;
        for (int a : s.attackers_of_copy(c)) {
          if (!from(a, x)) continue;
          bool killed = false;
          for (int b : s.attackers_of_arrow(a)) {
            if (!from(b, m)) continue;
            bool free = true;
            for (int g : s.attackers_of_arrow(b)) free = free && !from(g, x);
            killed = killed || free;
          }
          ok = ok && killed;
        }
        if (ok) {
          verdict = "1";
          break;
        }
      }
    } else {
      bool all_copies = true;
      bool needs_b = false;
      for (int c : s.copies_of(p)) {
        bool by_a = false, by_b = false;
        for (int a : s.attackers_of_copy(c)) {
          if (!from(a, m)) continue;
          bool unattacked = true;
          bool all_countered = true;
          for (int b : s.attackers_of_arrow(a)) {
            if (!from(b, x)) continue;
            unattacked = false;
            bool countered = false;
            for (int g : s.attackers_of_arrow(b)) countered = countered || from(g, m);
            all_countered = all_countered && countered;
          }
          by_a = by_a || unattacked;
          by_b = by_b || all_countered;
        }
        if (!by_a && !by_b) all_copies = false;
        if (!by_a) needs_b = true;
      }
      if (all_copies) verdict = needs_b ? "2b" : "2a";
    }
    out.emplace_back(s.universe().name(p), verdict);
  });
  return out;
}

inline SmoothnessVerdict is_essentially_smooth(const Structure& s, Mask x) {
  require_subset(s, x);
  auto out = is_sqsubseteq(s, mu(s, x), x);
  if (s.max_level() <= 3) out.cases = remark_cases(s, x);
  return out;
}

// Classical smoothness with copies: every attacked copy inside X has an attacker
// whose own origin copy is unattacked inside X. Level-1 structures only.
inline SmoothnessVerdict is_classically_smooth(const Structure& s, const std::vector<Mask>& family) {
  if (s.max_level() > 1) throw Error(ErrorKind::NotLevelOne, "classical smoothness needs a level-1 structure");
  SmoothnessVerdict out;
  auto minimal_copy = [&](int c, Mask x) {
    for (int a : s.attackers_of_copy(c))
      if (has(x, s.arrow(a).origin_point)) return false;
    return true;
  };
  for (Mask x : family) {
    require_subset(s, x);
    for (int c = 0; c < static_cast<int>(s.copies().size()); ++c) {
      if (!has(x, s.copies()[c].point) || minimal_copy(c, x)) continue;
      bool covered = false;
      for (int a : s.attackers_of_copy(c)) {
        const auto& r = s.arrow(a);
        if (has(x, r.origin_point) && minimal_copy(r.origin_copy, x)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        out.holds = false;
        out.witness = SmoothnessWitness{"(2)", x, s.universe().name(s.copies()[c].point), s.copy_ref(c), {}};
        return out;
      }
    }
  }
  return out;
}

}  // namespace ibrs
