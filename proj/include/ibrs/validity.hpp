#pragma once

#include <string>
#include <vector>

#include "ibrs/mu_table.hpp"
#include "ibrs/structure.hpp"

namespace ibrs {

enum class ValidityKind { XToY, XImpliesY };

struct ValiditySets {
  Mask x = 0;
  Mask y = 0;
  ValidityKind kind = ValidityKind::XToY;
  std::vector<std::string> valid;  // arrow ids, canonical order
};

// One flag per arrow. Evaluated by descending level: an attacker always has a
// strictly higher level than the arrow it attacks, so its verdict is settled first.
inline std::vector<char> valid_flags_x_to_y(const Structure& s, Mask x, Mask y) {
  std::vector<char> v(s.arrows().size(), 0);
  for (int a : s.by_level_desc()) {
    const auto& r = s.arrow(a);
    if (!subset(r.O, x) || !subset(r.D, y)) continue;
    bool ok = true;
    for (int b : s.attackers_of_arrow(a)) {
      if (!has(x, s.arrow(b).origin_point)) continue;
      bool countered = false;
      for (int c : s.attackers_of_arrow(b))
        if (v[c]) {
          countered = true;
          break;
        }
      if (!countered) {
        ok = false;
        break;
      }
    }
    v[a] = ok;
  }
  return v;
}

inline std::vector<char> valid_flags_x_impl_y(const Structure& s, Mask x, Mask y) {
  std::vector<char> v(s.arrows().size(), 0);
  for (int a : s.by_level_desc()) {
    const auto& r = s.arrow(a);
    if (!has(x, r.origin_point) || !subset(r.O, y) || !subset(r.D, y)) continue;
    bool ok = true;
    for (int b : s.attackers_of_arrow(a)) {
      if (!has(y, s.arrow(b).origin_point)) continue;
      bool countered = false;
      for (int c : s.attackers_of_arrow(b))
        if (v[c]) {
          countered = true;
          break;
        }
      if (!countered) {
        ok = false;
        break;
      }
    }
    v[a] = ok;
  }
  return v;
}

namespace detail {
inline ValiditySets collect(const Structure& s, Mask x, Mask y, ValidityKind k, const std::vector<char>& v) {
  ValiditySets out{x, y, k, {}};
  for (size_t a = 0; a < v.size(); ++a)
    if (v[a]) out.valid.push_back(s.arrow(static_cast<int>(a)).id);
  return out;
}
}  // namespace detail

inline ValiditySets valid_x_to_y(const Structure& s, Mask x, Mask y) {
  require_subset(s, x);
  require_subset(s, y);
  return detail::collect(s, x, y, ValidityKind::XToY, valid_flags_x_to_y(s, x, y));
}

inline ValiditySets valid_x_impl_y(const Structure& s, Mask x, Mask y) {
  require_subset(s, y);
  if (!subset(x, y)) throw Error(ErrorKind::NotNested, s.show(x) + " is not a subset of " + s.show(y));
  return detail::collect(s, x, y, ValidityKind::XImpliesY, valid_flags_x_impl_y(s, x, y));
}

// Points of `targets` with some copy that no flagged arrow hits.
inline Mask unattacked_points(const Structure& s, Mask targets, const std::vector<char>& flags) {
  Mask out = 0;
  for_each_bit(targets, [&](int p) {
    for (int c : s.copies_of(p)) {
      bool hit = false;
      for (int a : s.attackers_of_copy(c))
        if (flags[a]) {
          hit = true;
          break;
        }
      if (!hit) {
        out |= bit(p);
        return;
      }
    }
  });
  return out;
}

// Arrows mentioning points outside X cannot satisfy O(α)⊆X, so evaluating on
// the full structure agrees with evaluating inside restrict(s, X).
inline Mask mu(const Structure& s, Mask x) {
  require_subset(s, x);
  if (x == 0) return 0;
  return unattacked_points(s, x, valid_flags_x_to_y(s, x, x));
}

inline std::vector<std::string> mu(const Structure& s, const std::vector<std::string>& x) {
  return s.names(mu(s, s.mask(x)));
}

// ρ(X) of the attacking structure relative to η, given η(X) directly.
inline Mask mu_attacking(const Structure& s, Mask eta_x, Mask x) {
  require_subset(s, x);
  require_subset(s, eta_x);
  return unattacked_points(s, eta_x, valid_flags_x_to_y(s, x, eta_x));
}

inline Mask mu_attacking(const Structure& s, const MuTable& eta, Mask x) {
  if (!(eta.universe() == s.universe())) throw Error(ErrorKind::CarrierMismatch, "table and structure universes differ");
  return mu_attacking(s, eta.eta(x), x);
}

// Tabulates μ over every subset of the carrier (small carriers only).
inline MuTable mu_table(const Structure& s) {
  return MuTable::powerset(s.universe(), [&](Mask x) { return mu(s, x); });
}

}  // namespace ibrs
