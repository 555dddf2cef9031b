#pragma once

#include <random>
#include <string>
#include <vector>

#include "ibrs/structure.hpp"

namespace ibrs::gen {

struct RandomShape {
  int max_points = 5;
  int max_copies = 2;
  int max_arrows = 12;
  int max_level = 3;
};

inline std::string pad(int i) { return (i < 10 ? "0" : "") + std::to_string(i); }

// Random structure on a fixed carrier; every point gets 1..max_copies copies.
inline Structure random_structure_on(std::mt19937_64& rng, const RandomShape& shape,
                                     const std::vector<std::string>& pts) {
  auto pick = [&](int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); };
  std::vector<CopyRef> copies;
  for (const auto& p : pts) {
    int nc = 1 + pick(shape.max_copies);
    for (int c = 0; c < nc; ++c) copies.push_back({p, c});
  }
  int na = pick(shape.max_arrows + 1);
  std::vector<ArrowSpec> arrows;
  std::vector<int> levels;
  for (int k = 0; k < na; ++k) {
    const auto& o = copies[pick(static_cast<int>(copies.size()))];
    ArrowSpec a;
    a.id = "r" + pad(k);
    a.base = a.id;
    a.origin = Ref::point(o.point, o.copy);
    std::vector<int> attackable;
    for (int j = 0; j < k; ++j)
      if (levels[j] < shape.max_level) attackable.push_back(j);
    if (!attackable.empty() && pick(2) == 1) {
      int j = attackable[pick(static_cast<int>(attackable.size()))];
      a.target = Ref::arrow(arrows[j].id);
      levels.push_back(levels[j] + 1);
    } else {
      const auto& t = copies[pick(static_cast<int>(copies.size()))];
      a.target = Ref::point(t.point, t.copy);
      levels.push_back(1);
    }
    arrows.push_back(a);
  }
  return build_structure(pts, copies, arrows, shape.max_level);
}

inline Structure random_structure(std::mt19937_64& rng, const RandomShape& shape) {
  int np = 1 + static_cast<int>(std::uniform_int_distribution<int>(0, shape.max_points - 1)(rng));
  std::vector<std::string> pts;
  for (int i = 0; i < np; ++i) pts.push_back("p" + std::to_string(i));
  return random_structure_on(rng, shape, pts);
}

inline Mask random_subset(std::mt19937_64& rng, Mask universe) {
  Mask out = 0;
  for_each_bit(universe, [&](int i) {
    if (rng() & 1u) out |= bit(i);
  });
  return out;
}

}  // namespace ibrs::gen

#include "ibrs/mu_table.hpp"

namespace ibrs::gen {

// Every table over the power set with value(X) ⊆ X, in mixed-radix order.
template <class F>
void for_each_subset_table(const Universe& u, F&& f) {
  auto sets = submasks(u.all());
  std::vector<std::vector<Mask>> options;
  for (Mask x : sets) options.push_back(submasks(x));
  std::vector<size_t> digit(sets.size(), 0);
  while (true) {
    MuTable t(u);
    for (size_t i = 0; i < sets.size(); ++i) t.set(sets[i], options[i][digit[i]]);
    f(t);
    size_t k = sets.size();
    while (k > 0 && ++digit[k - 1] == options[k - 1].size()) digit[--k] = 0;
    if (k == 0) return;
  }
}

// Every pair (η, ρ) with ρ(X) ⊆ η(X) ⊆ X over the power set; ρ is the value, η the eta column.
template <class F>
void for_each_eta_rho(const Universe& u, F&& f) {
  for_each_subset_table(u, [&](const MuTable& eta) {
    std::vector<Mask> sets = eta.family();
    std::vector<std::vector<Mask>> opts;
    for (Mask x : sets) opts.push_back(submasks(eta(x)));
    std::vector<size_t> d(sets.size(), 0);
    while (true) {
      MuTable t(u);
      for (size_t i = 0; i < sets.size(); ++i) t.set(sets[i], opts[i][d[i]]);
      for (Mask x : sets) t.set_eta(x, eta(x));
      f(t);
      size_t k = sets.size();
      while (k > 0 && ++d[k - 1] == opts[k - 1].size()) d[--k] = 0;
      if (k == 0) return;
    }
  });
}

inline bool mu_subset_supset(const MuTable& t) {
  for (Mask x : t.family())
    for (Mask y : t.family())
      if (subset(t(x), y) && subset(t(y), x) && t(x) != t(y)) return false;
  return true;
}

// Points of a set with empty μ can have no copies in an essentially smooth structure,
// so such points are never minimal.
inline bool respects_empty_sets(const MuTable& t) {
  Mask dead = 0;
  for (Mask x : t.family())
    if (t(x) == 0) dead |= x;
  for (Mask x : t.family())
    if (t(x) & dead) return false;
  return true;
}

}  // namespace ibrs::gen
