#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ibrs/error.hpp"
#include "ibrs/sets.hpp"
#include "json.hpp"

namespace ibrs {

constexpr int kMaxTableUniverse = 20;

// A tabulated choice function over a family of subsets of a finite universe,
// optionally paired with an η column (then `value` plays the role of ρ).
class MuTable {
 public:
  MuTable() = default;
  explicit MuTable(Universe u) : universe_(std::move(u)) {
    if (universe_.size() > kMaxTableUniverse)
      throw Error(ErrorKind::CapacityExceeded, "table universe larger than 20 points");
    size_t n = size_t{1} << universe_.size();
    def_.assign(n, 0);
    val_.assign(n, 0);
    eta_.assign(n, 0);
  }

  const Universe& universe() const { return universe_; }
  // Family members in ascending mask order.
  const std::vector<Mask>& family() const { return family_; }
  bool in_family(Mask x) const { return x < def_.size() && def_[x]; }
  bool has_eta() const { return has_eta_; }

  Mask operator()(Mask x) const { return value(x); }
  Mask value(Mask x) const {
    if (!in_family(x)) throw Error(ErrorKind::DomainMiss, universe_.show(x) + " is not in the family");
    return val_[x];
  }
  Mask eta(Mask x) const {
    if (!in_family(x)) throw Error(ErrorKind::DomainMiss, universe_.show(x) + " is not in the family");
    return has_eta_ ? eta_[x] : x;
  }

  void set(Mask x, Mask v) {
    check(x);
    check(v);
    if (!def_[x]) {
      def_[x] = 1;
      family_.insert(std::upper_bound(family_.begin(), family_.end(), x), x);
    }
    val_[x] = v;
  }
  void set_eta(Mask x, Mask v) {
    check(v);
    if (!in_family(x)) throw Error(ErrorKind::DomainMiss, universe_.show(x) + " is not in the family");
    if (!has_eta_) {
      has_eta_ = true;
      for (Mask y : family_) eta_[y] = y;
    }
    eta_[x] = v;
  }

  // Full power set with the given function.
  static MuTable powerset(const Universe& u, const std::function<Mask(Mask)>& f) {
    MuTable t(u);
    for (Mask x : submasks(u.all())) t.set(x, f(x));
    return t;
  }
  static MuTable identity(const Universe& u) {
    return powerset(u, [](Mask x) { return x; });
  }

  bool operator==(const MuTable& o) const {
    if (!(universe_ == o.universe_) || family_ != o.family_ || has_eta_ != o.has_eta_) return false;
    for (Mask x : family_)
      if (val_[x] != o.val_[x] || eta(x) != o.eta(x)) return false;
    return true;
  }

 private:
  void check(Mask m) const {
    if (!subset(m, universe_.all())) throw Error(ErrorKind::NotASubset, "set outside the universe");
  }

  Universe universe_;
  std::vector<Mask> family_;
  std::vector<char> def_;
  std::vector<Mask> val_;
  std::vector<Mask> eta_;
  bool has_eta_ = false;
};

inline nlohmann::ordered_json to_json(const MuTable& t) {
  using oj = nlohmann::ordered_json;
  const auto& U = t.universe();
  oj j;
  j["universe"] = U.names();
  oj fam = oj::array();
  for (Mask x : t.family()) fam.push_back(U.list(x));
  j["family"] = fam;
  oj mu = oj::object();
  for (Mask x : t.family()) mu[U.key(x)] = U.list(t.value(x));
  j["mu"] = mu;
  if (t.has_eta()) {
    oj eta = oj::object();
    for (Mask x : t.family()) eta[U.key(x)] = U.list(t.eta(x));
    j["eta"] = eta;
  }
  return j;
}

inline MuTable table_from_json(const nlohmann::ordered_json& j) {
  try {
    Universe U(j.at("universe").get<std::vector<std::string>>());
    MuTable t(U);
    if (j.contains("family")) {
      for (const auto& x : j.at("family")) t.set(U.mask(x.get<std::vector<std::string>>()), 0);
    } else {
      for (auto it = j.at("mu").begin(); it != j.at("mu").end(); ++it) t.set(U.parse_key(it.key()), 0);
    }
    std::vector<char> seen(size_t{1} << U.size(), 0);
    for (auto it = j.at("mu").begin(); it != j.at("mu").end(); ++it) {
      Mask x = U.parse_key(it.key());
      if (!t.in_family(x)) throw Error(ErrorKind::DomainMiss, U.show(x) + " has a value but is not in the family");
      t.set(x, U.mask(it.value().get<std::vector<std::string>>()));
      seen[x] = 1;
    }
    for (Mask x : t.family())
      if (!seen[x]) throw Error(ErrorKind::DomainMiss, "no value for " + U.show(x));
    if (j.contains("eta") && !j.at("eta").is_null()) {
      for (auto it = j.at("eta").begin(); it != j.at("eta").end(); ++it)
        t.set_eta(U.parse_key(it.key()), U.mask(it.value().get<std::vector<std::string>>()));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, e.what());
  }
}

}  // namespace ibrs
