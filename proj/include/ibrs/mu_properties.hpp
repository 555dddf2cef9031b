#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ibrs/mu_table.hpp"

namespace ibrs {

enum class PropertyId {
  Subset,
  Empty,
  EmptyFin,
  PR,
  PRPrime,
  OR,
  WOR,
  DisjOR,
  CUT,
  CM,
  ResM,
  CUM,
  SubsetSupset,
  RatM,
  Eq,
  EqPrime,
  Par,
  Cup,
  CupPrime,
  In,
};

struct PropertyInfo {
  PropertyId id;
  const char* symbol;  // "(μ⊆)"
  const char* ascii;   // "mu-subset"
};

inline const std::vector<PropertyInfo>& property_list() {
  static const std::vector<PropertyInfo> list{
      {PropertyId::Subset, "(μ⊆)", "mu-subset"},
      {PropertyId::Empty, "(μ∅)", "mu-empty"},
      {PropertyId::EmptyFin, "(μ∅fin)", "mu-empty-fin"},
      {PropertyId::PR, "(μPR)", "mu-PR"},
      {PropertyId::PRPrime, "(μPR′)", "mu-PR'"},
      {PropertyId::OR, "(μOR)", "mu-OR"},
      {PropertyId::WOR, "(μwOR)", "mu-wOR"},
      {PropertyId::DisjOR, "(μdisjOR)", "mu-disjOR"},
      {PropertyId::CUT, "(μCUT)", "mu-CUT"},
      {PropertyId::CM, "(μCM)", "mu-CM"},
      {PropertyId::ResM, "(μResM)", "mu-ResM"},
      {PropertyId::CUM, "(μCUM)", "mu-CUM"},
      {PropertyId::SubsetSupset, "(μ⊆⊇)", "mu-subset-supset"},
      {PropertyId::RatM, "(μRatM)", "mu-RatM"},
      {PropertyId::Eq, "(μ=)", "mu-eq"},
      {PropertyId::EqPrime, "(μ=′)", "mu-eq'"},
      {PropertyId::Par, "(μ∥)", "mu-par"},
      {PropertyId::Cup, "(μ∪)", "mu-cup"},
      {PropertyId::CupPrime, "(μ∪′)", "mu-cup'"},
      {PropertyId::In, "(μ∈)", "mu-in"},
  };
  return list;
}

inline const PropertyInfo& info(PropertyId p) { return property_list()[static_cast<size_t>(p)]; }
inline std::string to_string(PropertyId p) { return info(p).symbol; }

// Accepts "(μPR)", "μPR", "muPR", "mu-PR" and the ASCII spelling of each symbol.
inline PropertyId parse_property(std::string s) {
  auto norm = [](std::string t) {
    std::string out;
    for (size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '(' || t[i] == ')' || t[i] == '-' || t[i] == ' ' || t[i] == '_') continue;
      if (t.compare(i, 2, "μ") == 0) {
        out += "mu";
        ++i;
        continue;
      }
      if (t.compare(i, 3, "′") == 0) {
        out += "'";
        i += 2;
        continue;
      }
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(t[i])));
    }
    return out;
  };
  std::string k = norm(s);
  for (const auto& p : property_list())
    if (norm(p.symbol) == k || norm(p.ascii) == k) return p.id;
  throw Error(ErrorKind::UnknownProperty, "unknown property '" + s + "'");
}

struct PropertyWitness {
  std::optional<Mask> X, Y, A, B;
  std::optional<int> a, b;
};

struct PropertyVerdict {
  std::string property;
  bool holds = true;
  std::optional<PropertyWitness> witness;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
};

namespace detail {

class PropertyChecker {
 public:
  PropertyChecker(const MuTable& t, PropertyId p) : t_(t), fam_(t.family()), n_(t.universe().size()) {
    out_.property = to_string(p);
  }

  bool def(Mask x) const { return t_.in_family(x); }
  Mask f(Mask x) const { return t_.value(x); }
  const std::vector<Mask>& fam() const { return fam_; }
  Mask all() const { return t_.universe().all(); }
  int n() const { return n_; }

  void skip() { ++out_.skipped; }
  bool check(bool ok, PropertyWitness w) {
    ++out_.checked;
    if (!ok && out_.holds) {
      out_.holds = false;
      out_.witness = w;
    }
    return ok;
  }
  PropertyVerdict done() { return out_; }

 private:
  const MuTable& t_;
  const std::vector<Mask>& fam_;
  int n_;
  PropertyVerdict out_;
};

inline bool one_of(Mask v, Mask a, Mask b) { return v == a || v == b || v == (a | b); }

}  // namespace detail

inline PropertyVerdict check_property(const MuTable& t, PropertyId p) {
  detail::PropertyChecker c(t, p);
  const auto& fam = c.fam();
  auto F = [&](Mask x) { return c.f(x); };
  using W = PropertyWitness;

  auto pairs = [&](auto&& body) {
    for (Mask x : fam)
      for (Mask y : fam)
        if (!body(x, y)) return;
  };

  switch (p) {
    case PropertyId::Subset:
      for (Mask x : fam) c.check(subset(F(x), x), W{x, {}, {}, {}, {}, {}});
      break;
    case PropertyId::Empty:
    case PropertyId::EmptyFin:
      for (Mask x : fam) c.check(!(F(x) == 0 && x != 0), W{x, {}, {}, {}, {}, {}});
      break;
    case PropertyId::PR:
      pairs([&](Mask x, Mask y) { return !subset(x, y) || c.check(subset(F(y) & x, F(x)), W{x, y, {}, {}, {}, {}}); });
      break;
    case PropertyId::PRPrime:
      pairs([&](Mask x, Mask y) {
        if (!c.def(x & y)) return c.skip(), true;
        return c.check(subset(F(x) & y, F(x & y)), W{x, y, {}, {}, {}, {}});
      });
      break;
    case PropertyId::OR:
    case PropertyId::WOR:
    case PropertyId::DisjOR:
      pairs([&](Mask x, Mask y) {
        if (p == PropertyId::DisjOR && (x & y) != 0) return true;
        if (!c.def(x | y)) return c.skip(), true;
        Mask rhs = F(x) | (p == PropertyId::WOR ? y : F(y));
        return c.check(subset(F(x | y), rhs), W{x, y, {}, {}, {}, {}});
      });
      break;
    case PropertyId::CUT:
    case PropertyId::CM:
    case PropertyId::CUM:
      pairs([&](Mask x, Mask y) {
        if (!(subset(F(x), y) && subset(y, x))) return true;
        bool ok = p == PropertyId::CUT ? subset(F(x), F(y)) : p == PropertyId::CM ? subset(F(y), F(x)) : F(x) == F(y);
        return c.check(ok, W{x, y, {}, {}, {}, {}});
      });
      break;
    case PropertyId::ResM:
      for (Mask x : fam)
        for (Mask a : submasks(c.all()))
          for (Mask b : submasks(c.all())) {
            if (!subset(F(x), a & b)) continue;
            if (!c.def(x & a)) {
              c.skip();
              continue;
            }
            if (!c.check(subset(F(x & a), b), W{x, {}, a, b, {}, {}})) goto done;
          }
      break;
    case PropertyId::SubsetSupset:
      pairs([&](Mask x, Mask y) {
        if (!(subset(F(x), y) && subset(F(y), x))) return true;
        return c.check(F(x) == F(y), W{x, y, {}, {}, {}, {}});
      });
      break;
    case PropertyId::RatM:
    case PropertyId::Eq:
      pairs([&](Mask x, Mask y) {
        if (!subset(x, y) || (x & F(y)) == 0) return true;
        bool ok = p == PropertyId::RatM ? subset(F(x), F(y) & x) : F(x) == (F(y) & x);
        return c.check(ok, W{x, y, {}, {}, {}, {}});
      });
      break;
    case PropertyId::EqPrime:
      pairs([&](Mask x, Mask y) {
        if ((F(y) & x) == 0) return true;
        if (!c.def(x & y)) return c.skip(), true;
        return c.check(F(x & y) == (F(y) & x), W{x, y, {}, {}, {}, {}});
      });
      break;
    case PropertyId::Par:
      pairs([&](Mask x, Mask y) {
        if (!c.def(x | y)) return c.skip(), true;
        return c.check(detail::one_of(F(x | y), F(x), F(y)), W{x, y, {}, {}, {}, {}});
      });
      break;
    case PropertyId::Cup:
    case PropertyId::CupPrime:
      pairs([&](Mask x, Mask y) {
        if ((F(y) & (x & ~F(x))) == 0) return true;
        if (!c.def(x | y)) return c.skip(), true;
        bool ok = p == PropertyId::Cup ? (F(x | y) & y) == 0 : F(x | y) == F(x);
        return c.check(ok, W{x, y, {}, {}, {}, {}});
      });
      break;
    case PropertyId::In:
      for (Mask x : fam)
        for (int a = 0; a < c.n(); ++a) {
          if (!has(x & ~F(x), a)) continue;
          bool found = false, undefined = false;
          for_each_bit(x, [&](int b) {
            Mask ab = bit(a) | bit(b);
            if (!c.def(ab))
              undefined = true;
            else if (!has(F(ab), a))
              found = true;
          });
          if (!found && undefined)
            c.skip();
          else
            c.check(found, W{x, {}, {}, {}, a, {}});
        }
      break;
  }
done:
  return c.done();
}

inline std::vector<PropertyVerdict> check_all_properties(const MuTable& t) {
  std::vector<PropertyVerdict> out;
  for (const auto& p : property_list()) out.push_back(check_property(t, p.id));
  return out;
}

// ---------------------------------------------------------------- family closures

enum class Closure { Intersection, Union, Complement, SetDifference, Singletons };

inline std::string to_string(Closure c) {
  switch (c) {
    case Closure::Intersection: return "(∩)";
    case Closure::Union: return "(∪)";
    case Closure::Complement: return "(C)";
    case Closure::SetDifference: return "set-difference";
    case Closure::Singletons: return "singletons";
  }
  return "?";
}

inline Closure parse_closure(const std::string& s) {
  if (s == "(∩)" || s == "∩" || s == "intersection") return Closure::Intersection;
  if (s == "(∪)" || s == "∪" || s == "union") return Closure::Union;
  if (s == "(C)" || s == "(𝐂)" || s == "C" || s == "complement") return Closure::Complement;
  if (s == "set-difference" || s == "difference") return Closure::SetDifference;
  if (s == "singletons") return Closure::Singletons;
  throw Error(ErrorKind::UnknownProperty, "unknown closure '" + s + "'");
}

inline PropertyVerdict check_family_closure(const MuTable& t, Closure c) {
  PropertyVerdict out;
  out.property = to_string(c);
  const auto& fam = t.family();
  auto fail = [&](PropertyWitness w) {
    out.holds = false;
    out.witness = w;
  };
  if (c == Closure::Singletons) {
    for (int a = 0; a < t.universe().size() && out.holds; ++a) {
      ++out.checked;
      if (!t.in_family(bit(a))) fail(PropertyWitness{{}, {}, {}, {}, a, {}});
    }
    return out;
  }
  if (c == Closure::Complement) {
    for (Mask x : fam) {
      ++out.checked;
      if (!t.in_family(t.universe().all() & ~x)) {
        fail(PropertyWitness{x, {}, {}, {}, {}, {}});
        break;
      }
    }
    return out;
  }
  for (Mask x : fam)
    for (Mask y : fam) {
      ++out.checked;
      Mask r = c == Closure::Intersection ? (x & y) : c == Closure::Union ? (x | y) : (x & ~y);
      if (!t.in_family(r)) {
        fail(PropertyWitness{x, y, {}, {}, {}, {}});
        return out;
      }
    }
  return out;
}

// ---------------------------------------------------------------- implication rows

enum class RowKind { Implies, Equivalent, NotImplies, Unverifiable };

struct ImplicationRow {
  std::string id;
  std::vector<PropertyId> lhs;
  std::vector<PropertyId> aux;
  std::vector<Closure> closures;
  std::vector<PropertyId> rhs;
  RowKind kind = RowKind::Implies;
  std::vector<Closure> excluded;  // negative rows: closures the counterexample must lack
  std::string note;
};

inline const std::vector<ImplicationRow>& implication_rows() {
  using P = PropertyId;
  using C = Closure;
  static const std::vector<ImplicationRow> rows{
      {"1.1", {P::PR}, {P::Subset}, {C::Intersection}, {P::PRPrime}, RowKind::Implies, {}, ""},
      {"1.2", {P::PRPrime}, {}, {}, {P::PR}, RowKind::Implies, {}, ""},
      {"2.1", {P::PR}, {P::Subset}, {}, {P::OR}, RowKind::Implies, {}, ""},
      {"2.2", {P::OR}, {P::Subset}, {C::SetDifference}, {P::PR}, RowKind::Implies, {}, ""},
      {"3", {P::PR}, {}, {}, {P::CUT}, RowKind::Implies, {}, ""},
      {"4", {P::Subset, P::SubsetSupset, P::CUM, P::RatM}, {}, {C::Intersection}, {P::PR}, RowKind::NotImplies, {}, ""},
      {"5.1", {P::CM}, {P::Subset}, {C::Intersection}, {P::ResM}, RowKind::Implies, {}, ""},
      {"5.2", {P::ResM}, {}, {}, {P::CM}, RowKind::Unverifiable, {}, "auxiliary concerns infinite sets"},
      {"6", {P::CM, P::CUT}, {}, {}, {P::CUM}, RowKind::Equivalent, {}, ""},
      {"7", {P::Subset, P::SubsetSupset}, {}, {}, {P::CUM}, RowKind::Implies, {}, ""},
      {"8", {P::Subset, P::CUM}, {}, {C::Intersection}, {P::SubsetSupset}, RowKind::Implies, {}, ""},
      {"9", {P::Subset, P::CUM}, {}, {}, {P::SubsetSupset}, RowKind::NotImplies, {}, ""},
      {"10", {P::RatM, P::PR}, {}, {}, {P::Eq}, RowKind::Implies, {}, ""},
      {"11", {P::Eq}, {}, {}, {P::PR}, RowKind::Implies, {}, ""},
      {"12.1", {P::Eq}, {P::Subset}, {C::Intersection}, {P::EqPrime}, RowKind::Implies, {}, ""},
      {"12.2", {P::EqPrime}, {}, {}, {P::Eq}, RowKind::Implies, {}, ""},
      {"13", {P::Subset, P::Eq}, {}, {C::Union}, {P::Cup}, RowKind::Implies, {}, ""},
      {"14", {P::Subset, P::Empty, P::Eq}, {}, {C::Union}, {P::Par, P::CupPrime, P::CUM}, RowKind::Implies, {}, ""},
      {"15", {P::Subset, P::Par}, {}, {C::SetDifference}, {P::Eq}, RowKind::Implies, {}, ""},
      {"16", {P::Par, P::In, P::PR, P::Subset}, {}, {C::Union, C::Singletons}, {P::Eq}, RowKind::Implies, {}, ""},
      {"17", {P::CUM, P::Eq}, {}, {C::Union, C::Singletons}, {P::In}, RowKind::Implies, {}, ""},
      {"18", {P::CUM, P::Eq, P::Subset}, {}, {C::Union}, {P::Par}, RowKind::Implies, {}, ""},
      {"19", {P::PR, P::CUM, P::Par}, {}, {}, {P::Eq}, RowKind::Unverifiable, {},
       "auxiliary is a definability condition on the logic side"},
      {"20", {P::Subset, P::PR, P::Eq}, {}, {}, {P::Par}, RowKind::NotImplies, {}, ""},
      {"21", {P::Subset, P::PR, P::Par}, {}, {}, {P::Eq}, RowKind::NotImplies, {C::SetDifference}, ""},
      {"22", {P::Subset, P::PR, P::Par, P::Eq, P::Cup}, {}, {}, {P::In}, RowKind::NotImplies, {}, ""},
  };
  return rows;
}

inline const ImplicationRow& implication_row(const std::string& id) {
  for (const auto& r : implication_rows())
    if (r.id == id) return r;
  throw Error(ErrorKind::UnknownProperty, "unknown implication row '" + id + "'");
}

enum class VerifyMode { Exhaustive, Filtered, Sampled };

inline std::string to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::Exhaustive: return "exhaustive";
    case VerifyMode::Filtered: return "filtered";
    case VerifyMode::Sampled: return "sampled";
  }
  return "?";
}

inline VerifyMode parse_mode(const std::string& s) {
  if (s == "exhaustive") return VerifyMode::Exhaustive;
  if (s == "filtered") return VerifyMode::Filtered;
  if (s == "sampled") return VerifyMode::Sampled;
  throw Error(ErrorKind::InvalidInput, "unknown mode '" + s + "'");
}

struct VerifyOptions {
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  std::uint64_t ceiling = 10'000'000;
};

struct ImplicationReport {
  std::string row;
  RowKind kind = RowKind::Implies;
  int universe_size = 0;
  VerifyMode mode = VerifyMode::Exhaustive;
  std::string status;  // "no counterexample found", "counterexample", "no counterexample in scope", "unverifiable"
  std::uint64_t tables_checked = 0;
  std::uint64_t tables_matching = 0;  // tables satisfying the premises
  std::optional<MuTable> counterexample;
  std::optional<PropertyVerdict> violated;
  bool known = false;
  std::string note;

  bool ok() const {
    if (kind == RowKind::Unverifiable) return true;
    if (kind == RowKind::NotImplies) return counterexample.has_value();
    return !counterexample.has_value();
  }
};

namespace detail {

inline bool holds_all(const MuTable& t, const std::vector<PropertyId>& ps) {
  for (PropertyId p : ps)
    if (!check_property(t, p).holds) return false;
  return true;
}

inline bool closures_hold(const MuTable& t, const std::vector<Closure>& cs) {
  for (Closure c : cs)
    if (!check_family_closure(t, c).holds) return false;
  return true;
}

inline std::uint64_t table_space(int n, VerifyMode m) {
  // families over P(U), values in P(U) (exhaustive) or P(X) (filtered)
  long double total = 1;
  for (Mask x = 0; x < (Mask{1} << n); ++x)
    total *= 1 + (m == VerifyMode::Filtered ? static_cast<long double>(Mask{1} << card(x))
                                            : static_cast<long double>(Mask{1} << n));
  return total > 1e18L ? UINT64_MAX : static_cast<std::uint64_t>(total);
}

// Mixed-radix enumeration: each subset of U is absent or present with one value.
template <class F>
void for_each_table(const Universe& u, bool values_inside, F&& f) {
  Mask sets = Mask{1} << u.size();
  std::vector<std::vector<Mask>> options(sets);
  for (Mask x = 0; x < sets; ++x) options[x] = submasks(values_inside ? x : u.all());
  std::vector<size_t> digit(sets, 0);  // 0 = absent, i+1 = options[x][i]
  while (true) {
    MuTable t(u);
    for (Mask x = 0; x < sets; ++x)
      if (digit[x]) t.set(x, options[x][digit[x] - 1]);
    if (!f(t)) return;
    Mask k = sets;
    while (k > 0 && ++digit[k - 1] == options[k - 1].size() + 1) digit[--k] = 0;
    if (k == 0) return;
  }
}

inline MuTable random_table(const Universe& u, bool values_inside, std::mt19937_64& rng) {
  MuTable t(u);
  Mask sets = Mask{1} << u.size();
  for (Mask x = 0; x < sets; ++x) {
    if (rng() & 1u) continue;
    Mask base = values_inside ? x : u.all();
    Mask v = 0;
    for_each_bit(base, [&](int i) {
      if (rng() & 1u) v |= bit(i);
    });
    t.set(x, v);
  }
  return t;
}

inline Universe standard_universe(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return Universe(names);
}

}  // namespace detail

// Known counterexamples for rows (4) and (9).
inline std::optional<MuTable> known_counterexample(const std::string& row) {
  if (row == "4") {
    Universe u({"a", "b", "c"});
    Mask ab = u.mask({"a", "b"});
    return MuTable::powerset(u, [=](Mask x) { return x == ab ? u.mask({"b"}) : x; });
  }
  if (row == "9") {
    Universe u({"a", "b", "c", "d"});
    MuTable t(u);
    t.set(u.mask({"a", "b", "c"}), u.mask({"a"}));
    t.set(u.mask({"a", "b", "d"}), u.mask({"a", "b"}));
    return t;
  }
  return std::nullopt;
}

inline ImplicationReport verify_implication(const ImplicationRow& row, int universe_size, VerifyMode mode,
                                            const VerifyOptions& opt = {}) {
  ImplicationReport rep;
  rep.row = row.id;
  rep.kind = row.kind;
  rep.universe_size = universe_size;
  rep.mode = mode;
  rep.note = row.note;
  if (universe_size < 1 || universe_size > 6) throw Error(ErrorKind::InvalidInput, "universe size must be 1..6");
  if (row.kind == RowKind::Unverifiable) {
    rep.status = "unverifiable";
    return rep;
  }
  Universe u = detail::standard_universe(universe_size);

  std::vector<PropertyId> premises = row.lhs;
  premises.insert(premises.end(), row.aux.begin(), row.aux.end());
  auto premise_ok = [&](const MuTable& t, const std::vector<PropertyId>& ps) {
    return detail::closures_hold(t, row.closures) && detail::holds_all(t, ps);
  };
  auto excluded_ok = [&](const MuTable& t) {
    for (Closure c : row.excluded)
      if (check_family_closure(t, c).holds) return false;
    return true;
  };

  // directions to check: premises => each rhs; equivalence adds rhs (+aux) => each lhs
  struct Direction {
    std::vector<PropertyId> from, to;
  };
  std::vector<Direction> dirs{{premises, row.rhs}};
  if (row.kind == RowKind::Equivalent) {
    std::vector<PropertyId> back = row.rhs;
    back.insert(back.end(), row.aux.begin(), row.aux.end());
    dirs.push_back({back, row.lhs});
  }

  auto examine = [&](const MuTable& t) -> bool {
    ++rep.tables_checked;
    if (row.kind == RowKind::NotImplies && !excluded_ok(t)) return true;
    for (const auto& d : dirs) {
      if (!premise_ok(t, d.from)) continue;
      ++rep.tables_matching;
      for (PropertyId q : d.to) {
        auto v = check_property(t, q);
        if (!v.holds) {
          rep.counterexample = t;
          rep.violated = v;
          return false;
        }
      }
    }
    return true;
  };

  if (row.kind == RowKind::NotImplies) {
    if (auto known_table = known_counterexample(row.id)) {
      // the known table is returned after confirming it refutes the row
      if (premise_ok(*known_table, premises) && excluded_ok(*known_table)) {
        for (PropertyId q : row.rhs) {
          auto v = check_property(*known_table, q);
          if (!v.holds) {
            rep.counterexample = known_table;
            rep.violated = v;
            rep.known = true;
            rep.tables_checked = 1;
            rep.tables_matching = 1;
            rep.status = "counterexample";
            return rep;
          }
        }
      }
    }
  }

  if (mode == VerifyMode::Sampled) {
    std::mt19937_64 rng(opt.seed);
    for (std::uint64_t i = 0; i < opt.samples; ++i) {
      // half the samples respect (μ⊆) so premises including it are reached
      if (!examine(detail::random_table(u, (i & 1u) == 0, rng))) break;
    }
  } else {
    std::uint64_t space = detail::table_space(universe_size, mode);
    if (space > opt.ceiling)
      throw Error(ErrorKind::SearchSpaceExceeded, std::to_string(space) + " tables exceed the ceiling of " +
                                                      std::to_string(opt.ceiling) + "; use filtered or sampled mode");
    detail::for_each_table(u, mode == VerifyMode::Filtered, examine);
  }

  if (row.kind == RowKind::NotImplies)
    rep.status = rep.counterexample ? "counterexample" : "no counterexample in scope";
  else
    rep.status = rep.counterexample ? "counterexample" : "no counterexample found";
  return rep;
}

inline ImplicationReport verify_implication(const std::string& row, int universe_size, VerifyMode mode,
                                            const VerifyOptions& opt = {}) {
  return verify_implication(implication_row(row), universe_size, mode, opt);
}

}  // namespace ibrs
