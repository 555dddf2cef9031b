#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ibrs/error.hpp"

namespace ibrs {

// Subsets of a finite universe of at most 64 named points, as bitmasks
// over the universe's canonical (sorted) order.
using Mask = std::uint64_t;

constexpr int kMaxUniverse = 64;

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool has(Mask m, int i) { return (m >> i) & 1u; }
inline Mask bit(int i) { return Mask{1} << i; }
inline int card(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

// All submasks of m, in increasing numeric order.
inline std::vector<Mask> submasks(Mask m) {
  std::vector<Mask> out;
  Mask s = 0;
  while (true) {
    out.push_back(s);
    if (s == m) break;
    s = (s - m) & m;
  }
  return out;
}

class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
    if (names_.size() > static_cast<size_t>(kMaxUniverse))
      throw Error(ErrorKind::CapacityExceeded, "universe larger than 64 points");
    for (size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = static_cast<int>(i);
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  Mask all() const { return full_mask(size()); }

  bool contains(const std::string& n) const { return index_.count(n) != 0; }
  int index(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) throw Error(ErrorKind::NotASubset, "unknown point '" + n + "'");
    return it->second;
  }

  Mask mask(const std::vector<std::string>& ns) const {
    Mask m = 0;
    for (const auto& n : ns) m |= bit(index(n));
    return m;
  }
  std::vector<std::string> list(Mask m) const {
    std::vector<std::string> out;
    for_each_bit(m, [&](int i) { out.push_back(names_.at(i)); });
    return out;
  }
  // "{a,b}" style rendering.
  std::string show(Mask m) const {
    std::string s = "{";
    bool first = true;
    for_each_bit(m, [&](int i) {
      if (!first) s += ",";
      s += names_.at(i);
      first = false;
    });
    return s + "}";
  }
  // "a,b" key used by the table file format.
  std::string key(Mask m) const {
    std::string s;
    for_each_bit(m, [&](int i) {
      if (!s.empty()) s += ",";
      s += names_.at(i);
    });
    return s;
  }
  Mask parse_key(const std::string& k) const {
    Mask m = 0;
    size_t start = 0;
    while (start <= k.size()) {
      size_t comma = k.find(',', start);
      std::string tok = k.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      auto b = tok.find_first_not_of(' ');
      auto e = tok.find_last_not_of(' ');
      if (b != std::string::npos) m |= bit(index(tok.substr(b, e - b + 1)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return m;
  }

  bool operator==(const Universe& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

}  // namespace ibrs
