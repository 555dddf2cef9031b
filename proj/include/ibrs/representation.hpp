#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ibrs/mu_table.hpp"
#include "ibrs/smoothness.hpp"
#include "ibrs/structure.hpp"
#include "ibrs/validity.hpp"

namespace ibrs {

// ---------------------------------------------------------------- choice functions

struct ChoiceFunction {
  std::vector<Mask> domain;
  std::vector<int> picks;  // picks[i] is an element index of domain[i]

  Mask range() const {
    Mask r = 0;
    for (int p : picks) r |= bit(p);
    return r;
  }
  int at(Mask x) const {
    for (size_t i = 0; i < domain.size(); ++i)
      if (domain[i] == x) return picks[i];
    throw Error(ErrorKind::DomainMiss, "set is not in the choice function's domain");
  }
};

// Lexicographic over the domain order, elements in ascending index order;
// the last factor varies fastest.
template <class F>
void for_each_choice(const std::vector<Mask>& sets, F&& f) {
  for (Mask s : sets)
    if (s == 0) throw Error(ErrorKind::EmptyFactor, "empty factor in a choice-function product");
  std::vector<std::vector<int>> elems;
  for (Mask s : sets) {
    elems.emplace_back();
    for_each_bit(s, [&](int i) { elems.back().push_back(i); });
  }
  ChoiceFunction cf{sets, std::vector<int>(sets.size())};
  std::vector<size_t> pos(sets.size(), 0);
  for (size_t i = 0; i < sets.size(); ++i) cf.picks[i] = elems[i][0];
  while (true) {
    f(static_cast<const ChoiceFunction&>(cf));
    size_t k = sets.size();
    while (k > 0) {
      --k;
      if (++pos[k] < elems[k].size()) {
        cf.picks[k] = elems[k][pos[k]];
        break;
      }
      pos[k] = 0;
      cf.picks[k] = elems[k][0];
      if (k == 0) return;
    }
    if (sets.empty()) return;
  }
}

inline std::vector<ChoiceFunction> enumerate_choice_functions(const std::vector<Mask>& sets) {
  std::vector<ChoiceFunction> out;
  for_each_choice(sets, [&](const ChoiceFunction& f) { out.push_back(f); });
  return out;
}

// Same enumeration over explicit element lists (sorted within each set).
template <class T>
std::vector<std::vector<T>> enumerate_choice_functions(const std::vector<std::vector<T>>& sets) {
  std::vector<std::vector<T>> sorted = sets;
  for (auto& s : sorted) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw Error(ErrorKind::EmptyFactor, "empty factor in a choice-function product");
  }
  std::vector<std::vector<T>> out{{}};
  for (const auto& s : sorted) {
    std::vector<std::vector<T>> next;
    for (const auto& prefix : out)
      for (const auto& e : s) {
        next.push_back(prefix);
        next.back().push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

inline std::uint64_t product_size(const std::vector<Mask>& sets) {
  std::uint64_t n = 1;
  for (Mask s : sets) n *= static_cast<std::uint64_t>(card(s));
  return n;
}

namespace detail {

inline std::string show_choice(const Universe& u, const ChoiceFunction& f) {
  std::string s = "(";
  for (size_t i = 0; i < f.picks.size(); ++i) {
    if (i) s += ",";
    s += u.show(f.domain[i]) + ":" + u.name(f.picks[i]);
  }
  return s + ")";
}

inline void require_same_universe(const Structure& s, const MuTable& t) {
  if (!(s.universe() == t.universe())) throw Error(ErrorKind::CarrierMismatch, "table and structure universes differ");
}

inline void require_mu_subset(const MuTable& t) {
  for (Mask x : t.family())
    if (!subset(t.value(x), x))
      throw Error(ErrorKind::PreconditionViolated, "(mu-subset) fails at " + t.universe().show(x));
}

inline void require_mu_subset_supset(const MuTable& t) {
  for (Mask x : t.family())
    for (Mask y : t.family())
      if (subset(t.value(x), y) && subset(t.value(y), x) && t.value(x) != t.value(y))
        throw Error(ErrorKind::PreconditionViolated,
                    "(mu-subset-supset) fails at " + t.universe().show(x) + ", " + t.universe().show(y));
}

}  // namespace detail

// Reserved token for the dummy component of stage-2 copies; set renderings always start with '{'.
inline constexpr const char* kDummyToken = "*";

struct Construction {
  Structure structure;
  MuTable eta;
  std::map<std::string, std::string> copy_notes;  // "<x,i>" -> provenance
};

// ---------------------------------------------------------------- level 2, attacking relative to η

inline Construction build_level2_attacking(const MuTable& table) {
  const Universe& U = table.universe();
  const auto& fam = table.family();
  for (Mask x : fam) {
    if (!subset(table.value(x), table.eta(x)))
      throw Error(ErrorKind::PreconditionViolated, "rho is not inside eta at " + U.show(x));
    if (x == 0 && table.value(x) != table.eta(x))
      throw Error(ErrorKind::PreconditionViolated, "rho and eta differ on the empty set");
  }
  auto outside = [&](int p, Mask x) { return has(table.eta(x) & ~table.value(x), p); };

  std::vector<CopyRef> copies;
  std::vector<ArrowSpec> arrows;
  std::map<std::string, std::string> notes;

  struct Pending {
    int point;
    int index;
    Mask range;
    std::optional<Mask> set;
  };
  std::vector<Pending> pending;

  for (int x = 0; x < U.size(); ++x) {
    std::vector<Mask> dom;
    for (Mask X : fam)
      if (outside(x, X)) dom.push_back(X);
    int idx = 0;
    for_each_choice(dom, [&](const ChoiceFunction& f) {
      Mask ran = f.range();
      std::vector<std::optional<Mask>> options{std::nullopt};
      for (Mask X : fam) {
        if (!has(table.value(X), x)) continue;
        bool below = false;
        for (Mask X1 : fam)
          if (subset(X1, X) && outside(x, X1)) below = true;
        if (!below) continue;
        bool escapes = true;
        for (Mask X2 : fam)
          if (subset(X, X2) && outside(x, X2) && ((ran & X2) & ~X) == 0) escapes = false;
        if (escapes) options.push_back(X);
      }
      for (const auto& opt : options) {
        copies.push_back({U.name(x), idx});
        notes["<" + U.name(x) + "," + std::to_string(idx) + ">"] =
            "f=" + detail::show_choice(U, f) + ";X=" + (opt ? U.show(*opt) : std::string(kDummyToken));
        pending.push_back({x, idx, ran, opt});
        ++idx;
      }
    });
  }

  for (const auto& c : pending) {
    const std::string& x = U.name(c.point);
    for_each_bit(c.range, [&](int xp) {
      const std::string& from = U.name(xp);
      std::string id = "A:" + from + ">" + x + "#" + std::to_string(c.index);
      if (!c.set || !has(*c.set, xp)) {
        arrows.push_back({id, id, 0, Ref::point(from), Ref::point(x, c.index)});
        return;
      }
      int k = 0;
      for_each_bit(*c.set, [&](int xpp) {
        const std::string& killer = U.name(xpp);
        std::string aid = id + "@" + killer;
        arrows.push_back({aid, id, k, Ref::point(from), Ref::point(x, c.index)});
        std::string bid = "B:" + from + ">" + x + "#" + std::to_string(c.index) + "@" + killer;
        arrows.push_back({bid, "B:" + from + ">" + x + "#" + std::to_string(c.index), k, Ref::point(killer),
                          Ref::arrow(aid)});
        ++k;
      });
    });
  }
  MuTable eta(U);
  for (Mask X : fam) eta.set(X, table.eta(X));
  for (Mask X : fam) eta.set_eta(X, table.eta(X));
  return {build_structure(U.names(), copies, arrows, 2), eta, notes};
}

// ---------------------------------------------------------------- level 1 stage and the level-3 lemma

// Copies <x,f> for f in the product of μ(X) over {X : x ∈ X−μ(X)}. A point with an empty
// factor gets no copies at all.
inline Construction build_level1_stage(const MuTable& table) {
  detail::require_mu_subset(table);
  const Universe& U = table.universe();
  std::vector<CopyRef> copies;
  std::map<std::string, std::string> notes;
  std::vector<std::pair<int, Mask>> pending;  // (copy list index, ran f)
  for (int x = 0; x < U.size(); ++x) {
    std::vector<Mask> dom;
    bool empty_factor = false;
    for (Mask X : table.family())
      if (has(X, x) && !has(table.value(X), x)) {
        dom.push_back(table.value(X));
        empty_factor = empty_factor || table.value(X) == 0;
      }
    if (empty_factor) continue;
    int idx = 0;
    for_each_choice(dom, [&](const ChoiceFunction& f) {
      notes["<" + U.name(x) + "," + std::to_string(idx) + ">"] = "f=" + detail::show_choice(U, f);
      pending.emplace_back(static_cast<int>(copies.size()), f.range());
      copies.push_back({U.name(x), idx++});
    });
  }
  std::vector<ArrowSpec> arrows;
  for (const auto& [ci, ran] : pending) {
    const auto& target = copies[ci];
    for (const auto& origin : copies) {
      if (!has(ran, U.index(origin.point))) continue;
      std::string id = "a[" + origin.point + "." + std::to_string(origin.copy) + ">" + target.point + "." +
                       std::to_string(target.copy) + "]";
      arrows.push_back({id, id, 0, Ref::point(origin.point, origin.copy), Ref::point(target.point, target.copy)});
    }
  }
  MuTable eta = MuTable(U);
  for (Mask X : table.family()) eta.set(X, X);
  return {build_structure(U.names(), copies, arrows, 1), eta, notes};
}

struct AlphaContext {
  std::string arrow;
  std::vector<Mask> O_sets;
  std::vector<Mask> D_sets;
};

inline AlphaContext alpha_context(const Structure& s, const MuTable& table, const std::string& arrow_id) {
  detail::require_same_universe(s, table);
  const auto& r = s.arrow(s.arrow_index(arrow_id));
  if (r.level != 1) throw Error(ErrorKind::NotLevelOne, "'" + arrow_id + "' is not a level-1 arrow");
  int y = r.origin_point;
  int x = s.copies()[r.target].point;
  AlphaContext ctx{arrow_id, {}, {}};
  for (Mask Z : table.family()) {
    Mask m = table.value(Z);
    if (has(Z, x) && !has(m, x) && has(m, y)) ctx.O_sets.push_back(Z);
    if (has(m, x) && has(Z, y)) ctx.D_sets.push_back(Z);
  }
  return ctx;
}

namespace detail {

inline int first_copy(const Structure& s, int point) {
  const auto& cs = s.copies_of(point);
  return cs.empty() ? -1 : s.copies()[cs.front()].index;
}

// Replacement arrows for one level-1 arrow with nonempty 𝐎 and 𝐃.
inline void lemma_specs(const Structure& s, const MuTable& table, int a, const AlphaContext& ctx,
                        std::vector<ArrowSpec>& out) {
  const auto& r = s.arrow(a);
  const Universe& U = s.universe();
  std::vector<Mask> dmu, omu;
  for (Mask X : ctx.D_sets) dmu.push_back(table.value(X));
  for (Mask Y : ctx.O_sets) omu.push_back(table.value(Y));
  auto origin = s.copy_ref(r.origin_copy);
  auto target = s.copy_ref(r.target);
  int fi = 0;
  for_each_choice(dmu, [&](const ChoiceFunction& f) {
    std::string aid = r.id + "/f" + std::to_string(fi);
    out.push_back({aid, r.id, fi, Ref::point(origin.point, origin.copy), Ref::point(target.point, target.copy)});
    for (size_t ri = 0; ri < ctx.D_sets.size(); ++ri) {
      Mask Xr = ctx.D_sets[ri];
      int fx = f.picks[ri];
      int fx_copy = first_copy(s, fx);
      if (fx_copy < 0) continue;
      int gi = 0;
      for_each_choice(omu, [&](const ChoiceFunction& g) {
        std::string bid = aid + "/b" + std::to_string(ri) + "g" + std::to_string(gi);
        out.push_back({bid, r.id + "/b", 0, Ref::point(U.name(fx), fx_copy), Ref::arrow(aid)});
        for (size_t si = 0; si < ctx.O_sets.size(); ++si) {
          Mask Ys = ctx.O_sets[si];
          if (subset(table.value(Ys), Xr) || !has(Ys, fx)) continue;
          int gy = g.picks[si];
          int gy_copy = first_copy(s, gy);
          if (gy_copy < 0) continue;
          std::string cid = bid + "/c" + std::to_string(si);
          out.push_back({cid, r.id + "/c", 0, Ref::point(U.name(gy), gy_copy), Ref::arrow(bid)});
        }
        ++gi;
      });
    }
    ++fi;
  });
}

}  // namespace detail

inline Structure lemma_level3_modify(const Structure& s, const MuTable& table, const std::string& arrow_id) {
  auto ctx = alpha_context(s, table, arrow_id);
  if (ctx.O_sets.empty() || ctx.D_sets.empty())
    throw Error(ErrorKind::PreconditionViolated, "lemma needs nonempty O and D families for '" + arrow_id + "'");
  detail::require_mu_subset(table);
  detail::require_mu_subset_supset(table);
  int a = s.arrow_index(arrow_id);
  if (!s.attackers_of_arrow(a).empty())
    throw Error(ErrorKind::PreconditionViolated, "'" + arrow_id + "' is already attacked");
  std::vector<ArrowSpec> specs;
  for (int b = 0; b < static_cast<int>(s.arrows().size()); ++b)
    if (b != a) specs.push_back(s.arrow_spec(b));
  detail::lemma_specs(s, table, a, ctx, specs);
  return build_structure(s.carrier(), s.copy_specs(), specs, std::max(3, s.level_bound()));
}

inline Construction build_level3_essentially_smooth(const MuTable& table) {
  detail::require_mu_subset(table);
  detail::require_mu_subset_supset(table);
  auto stage = build_level1_stage(table);
  const Structure& s = stage.structure;
  std::vector<ArrowSpec> specs;
  for (int a = 0; a < static_cast<int>(s.arrows().size()); ++a) {
    auto ctx = alpha_context(s, table, s.arrow(a).id);
    if (ctx.O_sets.empty() || ctx.D_sets.empty())
      specs.push_back(s.arrow_spec(a));
    else
      detail::lemma_specs(s, table, a, ctx, specs);
  }
  stage.structure = build_structure(s.carrier(), s.copy_specs(), specs, 3);
  return stage;
}

// ---------------------------------------------------------------- bounded level-2 search

struct SearchBounds {
  int max_copies_per_point = 1;
  int max_arrow_copies = 1;
};

struct SearchOptions {
  std::uint64_t ceiling = 10'000'000;
  bool require_total_smoothness = true;
  TotalSmoothReading reading = TotalSmoothReading::ValidArrows;
};

struct SearchResult {
  bool found = false;
  std::optional<Structure> structure;
  std::uint64_t candidates = 0;      // per-copy attack configurations examined
  std::uint64_t space_estimate = 0;  // configurations the bounds admit
  long double structures_covered = 0;  // whole structures the per-copy enumeration stands for
  SearchBounds bounds;
};

namespace detail {

// Arrows into one point copy: for each origin point, a multiset of level-1 arrows,
// each recorded as the set of origin points of the level-2 arrows attacking it.
struct CopyConfig {
  std::vector<std::vector<Mask>> per_origin;
};

inline std::vector<std::vector<Mask>> attack_multisets(int n, int k) {
  std::vector<std::vector<Mask>> out{{}};
  Mask sets = Mask{1} << n;
  std::vector<std::vector<Mask>> frontier{{}};
  for (int size = 1; size <= k; ++size) {
    std::vector<std::vector<Mask>> next;
    for (const auto& ms : frontier)
      for (Mask a = ms.empty() ? 0 : ms.back(); a < sets; ++a) {
        auto grown = ms;
        grown.push_back(a);
        next.push_back(grown);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace detail

// Exhaustive over level-≤2 structures in which every point has at most
// max_copies_per_point copies and every (origin point, target) pair carries at most
// max_arrow_copies parallel arrows. Validity, μ and total smoothness depend only on
// origin points and decompose by target copy, so the search enumerates the attack
// configuration of a single copy and then combines copies point by point.
inline SearchResult search_level2_totally_smooth(const MuTable& table, const SearchBounds& bounds,
                                                 const SearchOptions& opt = {}) {
  const Universe& U = table.universe();
  const int n = U.size();
  if (bounds.max_copies_per_point < 0 || bounds.max_arrow_copies < 0)
    throw Error(ErrorKind::InvalidInput, "negative bounds");
  SearchResult res;
  res.bounds = bounds;

  auto per_origin = detail::attack_multisets(n, bounds.max_arrow_copies);
  double est = n;
  for (int i = 0; i < n; ++i) est *= static_cast<double>(per_origin.size());
  if (est > static_cast<double>(opt.ceiling))
    throw Error(ErrorKind::BoundsTooLarge, "estimated " + std::to_string(static_cast<long double>(est)) +
                                               " configurations exceed the ceiling of " + std::to_string(opt.ceiling));
  res.space_estimate = static_cast<std::uint64_t>(est);
  {
    // per point: multisets of at most max_copies copies, each with est/n configurations
    long double per_copy = est / n, per_point = 0, multisets = 1;
    for (int c = 0; c <= bounds.max_copies_per_point; ++c) {
      per_point += multisets;
      multisets = multisets * (per_copy + c) / (c + 1);
    }
    res.structures_covered = 1;
    for (int i = 0; i < n; ++i) res.structures_covered *= per_point;
  }

  const auto& fam = table.family();
  for (Mask X : fam)
    if (!subset(table.value(X), X)) return res;  // a point outside X can never be minimal in X

  std::vector<std::vector<detail::CopyConfig>> chosen(n);
  for (int x = 0; x < n; ++x) {
    std::vector<Mask> scope;
    for (Mask X : fam)
      if (has(X, x)) scope.push_back(X);
    Mask need = 0;  // positions in scope where x must not be minimal
    for (size_t i = 0; i < scope.size(); ++i)
      if (!has(table.value(scope[i]), x)) need |= bit(static_cast<int>(i));

    std::map<Mask, detail::CopyConfig> by_signature;
    std::vector<size_t> digit(n, 0);
    while (true) {
      ++res.candidates;
      detail::CopyConfig cfg;
      for (int y = 0; y < n; ++y) cfg.per_origin.push_back(per_origin[digit[y]]);
      Mask killed = 0;
      bool ok = true;
      for (size_t i = 0; i < scope.size() && ok; ++i) {
        Mask X = scope[i];
        Mask m = table.value(X);
        bool any_valid = false, valid_from_mu = false, any_from_mu = false;
        for (int y = 0; y < n; ++y) {
          if (!has(X, y)) continue;
          for (Mask att : cfg.per_origin[y]) {
            bool valid = (att & X) == 0;
            any_valid = any_valid || valid;
            if (has(m, y)) {
              any_from_mu = true;
              valid_from_mu = valid_from_mu || valid;
            }
            // level-2 arrows on this arrow from inside X need a sibling from μ(X)
            if (opt.require_total_smoothness && (att & X) != 0 && (att & m) == 0) ok = false;
          }
        }
        if (any_valid) killed |= bit(static_cast<int>(i));
        if (!opt.require_total_smoothness) continue;
        bool any_in_scope = false, invalid_in_scope = false;
        for (int y = 0; y < n; ++y) {
          if (!has(X, y)) continue;
          for (Mask att : cfg.per_origin[y]) {
            any_in_scope = true;
            invalid_in_scope = invalid_in_scope || (att & X) != 0;
          }
        }
        if (any_valid && !valid_from_mu) ok = false;
        if (opt.reading == TotalSmoothReading::AllArrows && invalid_in_scope && !any_from_mu) ok = false;
        (void)any_in_scope;
      }
      if (ok && !by_signature.count(killed)) by_signature.emplace(killed, cfg);

      int k = n - 1;
      while (k >= 0 && ++digit[k] == per_origin.size()) digit[k--] = 0;
      if (k < 0) break;
    }

    // choose up to max_copies signatures whose intersection is exactly `need`
    Mask all_pos = full_mask(static_cast<int>(scope.size()));
    std::vector<Mask> sigs;
    for (const auto& [sig, cfg] : by_signature) sigs.push_back(sig);
    std::optional<std::vector<Mask>> pick;
    std::vector<Mask> cur;
    auto dfs = [&](auto&& self, size_t from, Mask acc) -> void {
      if (pick) return;
      if (acc == need) {
        pick = cur;
        return;
      }
      if (static_cast<int>(cur.size()) == bounds.max_copies_per_point) return;
      for (size_t i = from; i < sigs.size(); ++i) {
        if ((sigs[i] & need) != need) continue;
        cur.push_back(sigs[i]);
        self(self, i, acc & sigs[i]);
        cur.pop_back();
      }
    };
    dfs(dfs, 0, all_pos);
    if (!pick) return res;
    for (Mask sig : *pick) chosen[x].push_back(by_signature.at(sig));
  }

  std::vector<CopyRef> copies;
  std::vector<ArrowSpec> arrows;
  for (int x = 0; x < n; ++x)
    for (size_t i = 0; i < chosen[x].size(); ++i) {
      copies.push_back({U.name(x), static_cast<int>(i)});
      for (int y = 0; y < n; ++y) {
        int k = 0;
        for (Mask att : chosen[x][i].per_origin[y]) {
          std::string id = "L1:" + U.name(y) + ">" + U.name(x) + "#" + std::to_string(i) + "/" + std::to_string(k);
          arrows.push_back({id, id, 0, Ref::point(U.name(y)), Ref::point(U.name(x), static_cast<int>(i))});
          for_each_bit(att, [&](int z) {
            std::string bid = "L2:" + U.name(z) + ">(" + id + ")";
            arrows.push_back({bid, bid, 0, Ref::point(U.name(z)), Ref::arrow(id)});
          });
          ++k;
        }
      }
    }
  // every origin above refers to copy 0; points without copies cannot originate arrows
  for (const auto& a : arrows) {
    bool ok = false;
    for (const auto& c : copies) ok = ok || (c.point == a.origin.name && c.copy == 0);
    if (!ok) return res;
  }
  res.found = true;
  res.structure = build_structure(U.names(), copies, arrows, 2);
  return res;
}

}  // namespace ibrs
