#pragma once

#include <bitset>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ibrs/mu_properties.hpp"
#include "ibrs/mu_table.hpp"
#include "ibrs/structure.hpp"
#include "ibrs/validity.hpp"

namespace ibrs {

// ---------------------------------------------------------------- formulas

struct Formula {
  enum class Kind { Atom, True, False, Not, And, Or, Imp, Iff };
  Kind kind = Kind::True;
  std::string atom;
  std::shared_ptr<const Formula> lhs, rhs;

  static Formula make_atom(std::string a) { return {Kind::Atom, std::move(a), nullptr, nullptr}; }
  static Formula top() { return {Kind::True, "", nullptr, nullptr}; }
  static Formula bottom() { return {Kind::False, "", nullptr, nullptr}; }
  static Formula unary(Kind k, Formula a) { return {k, "", std::make_shared<const Formula>(std::move(a)), nullptr}; }
  static Formula binary(Kind k, Formula a, Formula b) {
    return {k, "", std::make_shared<const Formula>(std::move(a)), std::make_shared<const Formula>(std::move(b))};
  }
};

inline std::string to_string(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Atom: return f.atom;
    case K::True: return "T";
    case K::False: return "F";
    case K::Not: return "!" + to_string(*f.lhs);
    default: break;
  }
  const char* op = f.kind == K::And ? " & " : f.kind == K::Or ? " | " : f.kind == K::Imp ? " -> " : " <-> ";
  return "(" + to_string(*f.lhs) + op + to_string(*f.rhs) + ")";
}

inline bool operator==(const Formula& a, const Formula& b) { return to_string(a) == to_string(b); }

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& s) : s_(s) {}

  Formula parse() {
    Formula f = iff();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  using K = Formula::Kind;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula iff() {
    Formula l = imp();
    while (eat("<->")) l = Formula::binary(K::Iff, l, imp());
    return l;
  }
  Formula imp() {
    Formula l = disj();
    skip();
    if (s_.compare(pos_, 3, "<->") != 0 && eat("->")) return Formula::binary(K::Imp, l, imp());
    return l;
  }
  Formula disj() {
    Formula l = conj();
    while (eat("|")) l = Formula::binary(K::Or, l, conj());
    return l;
  }
  Formula conj() {
    Formula l = neg();
    while (eat("&")) l = Formula::binary(K::And, l, neg());
    return l;
  }
  Formula neg() {
    if (eat("!")) return Formula::unary(K::Not, neg());
    return primary();
  }
  Formula primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat("(")) {
      Formula f = iff();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    char c = s_[pos_];
    if (c == 'T' || c == 'F') {
      ++pos_;
      return c == 'T' ? Formula::top() : Formula::bottom();
    }
    if (c >= 'a' && c <= 'z') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[pos_])) ||
                                  std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return Formula::make_atom(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(const std::string& text) { return detail::FormulaParser(text).parse(); }

// ---------------------------------------------------------------- language and models

constexpr int kMaxLanguageAtoms = 6;
constexpr int kMaxRuleAtoms = 3;

inline bool valid_atom_name(const std::string& a) {
  if (a.empty() || a[0] < 'a' || a[0] > 'z') return false;
  for (char c : a)
    if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

// Valuations are named by their literals in atom order, e.g. "+p-q"; model sets are
// masks over the sorted valuation names.
class Language {
 public:
  Language() = default;
  explicit Language(std::vector<std::string> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    for (const auto& a : atoms)
      if (!valid_atom_name(a)) throw Error(ErrorKind::InvalidInput, "bad atom name '" + a + "'");
    if (static_cast<int>(atoms.size()) > kMaxLanguageAtoms)
      throw Error(ErrorKind::CapacityExceeded, "at most 6 atoms");
    atoms_ = atoms;
    std::vector<std::string> names;
    for (int v = 0; v < (1 << atoms_.size()); ++v) names.push_back(valuation_name(v));
    universe_ = Universe(names);
    atom_models_.assign(atoms_.size(), 0);
    for (int i = 0; i < universe_.size(); ++i) {
      const std::string& n = universe_.name(i);
      size_t pos = 0;
      for (size_t j = 0; j < atoms_.size(); ++j) {
        if (n[pos] == '+') atom_models_[j] |= bit(i);
        pos += 1 + atoms_[j].size();
      }
    }
  }

  const std::vector<std::string>& atoms() const { return atoms_; }
  const Universe& universe() const { return universe_; }
  Mask all() const { return universe_.all(); }
  int atom_index(const std::string& a) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
    if (it == atoms_.end() || *it != a) throw Error(ErrorKind::AtomOutsideLanguage, "atom '" + a + "' is not in the language");
    return static_cast<int>(it - atoms_.begin());
  }
  Mask atom_models(const std::string& a) const { return atom_models_[atom_index(a)]; }
  bool truth(int valuation, int atom) const { return has(atom_models_[atom], valuation); }
  // number of definable model sets
  size_t model_set_count() const { return size_t{1} << universe_.size(); }

 private:
  std::string valuation_name(int v) const {
    std::string s;
    for (size_t j = 0; j < atoms_.size(); ++j) s += ((v >> j) & 1 ? "+" : "-") + atoms_[j];
    return s;
  }

  std::vector<std::string> atoms_;
  Universe universe_;
  std::vector<Mask> atom_models_;
};

inline Mask models(const Language& l, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Atom: return l.atom_models(f.atom);
    case K::True: return l.all();
    case K::False: return 0;
    case K::Not: return l.all() & ~models(l, *f.lhs);
    case K::And: return models(l, *f.lhs) & models(l, *f.rhs);
    case K::Or: return models(l, *f.lhs) | models(l, *f.rhs);
    case K::Imp: return (l.all() & ~models(l, *f.lhs)) | models(l, *f.rhs);
    case K::Iff: {
      Mask a = models(l, *f.lhs), b = models(l, *f.rhs);
      return l.all() & ~(a ^ b);
    }
  }
  return 0;
}

struct Theory {
  std::vector<Formula> axioms;
};

inline Theory parse_theory(const std::string& text) {
  Theory t;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(';', start);
    std::string part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    bool blank = true;
    for (char c : part) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) t.axioms.push_back(parse_formula(part));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return t;
}

inline std::string to_string(const Theory& t) {
  std::string s;
  for (size_t i = 0; i < t.axioms.size(); ++i) s += (i ? "; " : "") + to_string(t.axioms[i]);
  return s;
}

inline Mask models(const Language& l, const Theory& t) {
  Mask m = l.all();
  for (const auto& f : t.axioms) m &= models(l, f);
  return m;
}

// T ∨ T' := {φ ∨ φ' : φ ∈ T, φ' ∈ T'}
inline Theory theory_or(const Theory& a, const Theory& b) {
  Theory t;
  for (const auto& f : a.axioms)
    for (const auto& g : b.axioms) t.axioms.push_back(Formula::binary(Formula::Kind::Or, f, g));
  return t;
}

inline Theory theory_union(const Theory& a, const Theory& b) {
  Theory t = a;
  t.axioms.insert(t.axioms.end(), b.axioms.begin(), b.axioms.end());
  return t;
}

namespace detail {

inline Formula valuation_term(const Language& l, int v) {
  std::optional<Formula> f;
  for (size_t j = 0; j < l.atoms().size(); ++j) {
    Formula lit = Formula::make_atom(l.atoms()[j]);
    if (!l.truth(v, static_cast<int>(j))) lit = Formula::unary(Formula::Kind::Not, lit);
    f = f ? Formula::binary(Formula::Kind::And, *f, lit) : lit;
  }
  return f ? *f : Formula::top();
}

}  // namespace detail

// Canonical DNF axiom, disjuncts in valuation order.
inline Formula formula_of(const Language& l, Mask x) {
  if (x == l.all()) return Formula::top();
  if (x == 0) return Formula::bottom();
  std::optional<Formula> f;
  for_each_bit(x, [&](int v) {
    Formula term = detail::valuation_term(l, v);
    f = f ? Formula::binary(Formula::Kind::Or, *f, term) : term;
  });
  return *f;
}

inline Theory theory_of(const Language& l, Mask x) { return Theory{{formula_of(l, x)}}; }

// Another axiomatization of the same model set: one clause per excluded valuation.
inline Theory clause_theory_of(const Language& l, Mask x) {
  Theory t;
  for_each_bit(l.all() & ~x, [&](int v) { t.axioms.push_back(Formula::unary(Formula::Kind::Not, detail::valuation_term(l, v))); });
  return t;
}

// ---------------------------------------------------------------- consequence oracles

using Oracle = std::function<bool(const Theory&, const Formula&)>;

struct Logic {
  Language language;
  Oracle entails;
  std::string name;
};

inline void require_carrier(const Structure& s, const Language& l) {
  if (!(s.universe() == l.universe()))
    throw Error(ErrorKind::CarrierMismatch, "structure carrier is not the valuation set of the language");
}

inline Theory consequence(const Structure& s, const Language& l, const Theory& t) {
  require_carrier(s, l);
  return theory_of(l, mu(s, models(l, t)));
}

inline Theory consequence(const MuTable& f, const Language& l, const Theory& t) {
  if (!(f.universe() == l.universe())) throw Error(ErrorKind::CarrierMismatch, "table universe is not the valuation set");
  return theory_of(l, f(models(l, t)));
}

inline Logic classical_logic(const Language& l) {
  return {l, [l](const Theory& t, const Formula& f) { return subset(models(l, t), models(l, f)); }, "classical"};
}

inline Logic table_logic(const MuTable& f, const Language& l) {
  if (!(f.universe() == l.universe())) throw Error(ErrorKind::CarrierMismatch, "table universe is not the valuation set");
  return {l, [f, l](const Theory& t, const Formula& g) { return subset(f(models(l, t)), models(l, g)); }, "table"};
}

inline Logic structure_logic(const Structure& s, const Language& l) {
  require_carrier(s, l);
  auto cache = std::make_shared<std::map<Mask, Mask>>();
  return {l,
          [s, l, cache](const Theory& t, const Formula& g) {
            Mask x = models(l, t);
            auto it = cache->find(x);
            if (it == cache->end()) it = cache->emplace(x, mu(s, x)).first;
            return subset(it->second, models(l, g));
          },
          "structure"};
}

// ---------------------------------------------------------------- entailment tabulation

using FormulaSet = std::bitset<256>;  // indexed by model set, languages of at most 3 atoms

struct Entailment {
  Language language;
  std::vector<FormulaSet> E;      // E[X][A]: theory with models X entails a formula with models A
  std::vector<FormulaSet> E_alt;  // same with the clause axiomatization of X
  std::vector<Mask> C;            // models of the closure: intersection of the entailed sets
  std::vector<FormulaSet> up;     // up[Y] = {A : Y ⊆ A}, classical consequences
};

inline Entailment tabulate(const Logic& logic) {
  const Language& l = logic.language;
  if (static_cast<int>(l.atoms().size()) > kMaxRuleAtoms)
    throw Error(ErrorKind::CapacityExceeded, "rule checking needs a language of at most 3 atoms");
  size_t n = l.model_set_count();
  Entailment e{l, std::vector<FormulaSet>(n), std::vector<FormulaSet>(n), std::vector<Mask>(n, 0),
               std::vector<FormulaSet>(n)};
  std::vector<Formula> forms;
  for (Mask a = 0; a < n; ++a) forms.push_back(formula_of(l, a));
  for (Mask x = 0; x < n; ++x) {
    Theory t = theory_of(l, x), alt = clause_theory_of(l, x);
    Mask c = l.all();
    for (Mask a = 0; a < n; ++a) {
      if (logic.entails(t, forms[a])) {
        e.E[x].set(a);
        c &= a;
      }
      if (logic.entails(alt, forms[a])) e.E_alt[x].set(a);
      if (subset(x, a)) e.up[x].set(a);
    }
    e.C[x] = c;
  }
  return e;
}

// ---------------------------------------------------------------- rules

enum class RuleId {
  AND, OR, wOR, disjOR, LLE, RW, CCL, SC, REF, CP, PR, CUT, CM, ResM, CUM, SubsetSupset, RatM, RatMEq, LogEqPrime,
  LogPar, LogCup, LogCupPrime,
};

inline const std::vector<std::pair<RuleId, const char*>>& rule_list() {
  static const std::vector<std::pair<RuleId, const char*>> list{
      {RuleId::AND, "(AND)"},       {RuleId::OR, "(OR)"},         {RuleId::wOR, "(wOR)"},
      {RuleId::disjOR, "(disjOR)"}, {RuleId::LLE, "(LLE)"},       {RuleId::RW, "(RW)"},
      {RuleId::CCL, "(CCL)"},       {RuleId::SC, "(SC)"},         {RuleId::REF, "(REF)"},
      {RuleId::CP, "(CP)"},         {RuleId::PR, "(PR)"},         {RuleId::CUT, "(CUT)"},
      {RuleId::CM, "(CM)"},         {RuleId::ResM, "(ResM)"},     {RuleId::CUM, "(CUM)"},
      {RuleId::SubsetSupset, "(⊆⊇)"}, {RuleId::RatM, "(RatM)"},   {RuleId::RatMEq, "(RatM=)"},
      {RuleId::LogEqPrime, "(Log=′)"}, {RuleId::LogPar, "(Log∥)"}, {RuleId::LogCup, "(Log∪)"},
      {RuleId::LogCupPrime, "(Log∪′)"},
  };
  return list;
}

inline std::string to_string(RuleId r) {
  for (const auto& [id, name] : rule_list())
    if (id == r) return name;
  return "?";
}

inline RuleId parse_rule(const std::string& s) {
  auto norm = [](const std::string& t) {
    std::string out;
    for (size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '(' || t[i] == ')' || t[i] == ' ') continue;
      if (t.compare(i, 3, "′") == 0) {
        out += "'";
        i += 2;
        continue;
      }
      if (t.compare(i, 3, "⊆") == 0) {
        out += "sub";
        i += 2;
        continue;
      }
      if (t.compare(i, 3, "⊇") == 0) {
        out += "sup";
        i += 2;
        continue;
      }
      if (t.compare(i, 3, "∥") == 0) {
        out += "par";
        i += 2;
        continue;
      }
      if (t.compare(i, 3, "∪") == 0) {
        out += "cup";
        i += 2;
        continue;
      }
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(t[i])));
    }
    return out;
  };
  std::string k = norm(s);
  static const std::map<std::string, RuleId> aliases{{"subsup", RuleId::SubsetSupset},
                                                     {"subset-supset", RuleId::SubsetSupset},
                                                     {"ratm=", RuleId::RatMEq},
                                                     {"log='", RuleId::LogEqPrime},
                                                     {"logpar", RuleId::LogPar},
                                                     {"logcup", RuleId::LogCup},
                                                     {"logcup'", RuleId::LogCupPrime}};
  for (const auto& [id, name] : rule_list())
    if (norm(name) == k) return id;
  auto it = aliases.find(k);
  if (it != aliases.end()) return it->second;
  throw Error(ErrorKind::UnknownRule, "unknown rule '" + s + "'");
}

// Quantifies over theories and formulas by their model sets (complete for finite languages).
inline PropertyVerdict check_rule(const Entailment& e, RuleId rule) {
  PropertyVerdict out;
  out.property = to_string(rule);
  const size_t n = e.E.size();
  const Mask all = e.language.all();
  auto ent = [&](Mask x, Mask a) { return e.E[x].test(a); };
  auto sub = [](const FormulaSet& a, const FormulaSet& b) { return (a & ~b).none(); };
  bool stop = false;
  auto check = [&](bool ok, PropertyWitness w) {
    ++out.checked;
    if (!ok) {
      out.holds = false;
      out.witness = w;
      stop = true;
    }
  };
  auto each_x = [&](auto&& body) {
    for (Mask x = 0; x < n && !stop; ++x) body(x);
  };
  auto each_xy = [&](auto&& body) {
    for (Mask x = 0; x < n && !stop; ++x)
      for (Mask y = 0; y < n && !stop; ++y) body(x, y);
  };
  using W = PropertyWitness;

  switch (rule) {
    case RuleId::AND:
      each_x([&](Mask x) {
        for (Mask a = 0; a < n && !stop; ++a)
          for (Mask b = 0; b < n && !stop; ++b)
            if (ent(x, a) && ent(x, b)) check(ent(x, a & b), W{x, {}, a, b, {}, {}});
      });
      break;
    case RuleId::RW:
      each_x([&](Mask x) {
        for (Mask a = 0; a < n && !stop; ++a)
          for (Mask b = 0; b < n && !stop; ++b)
            if (ent(x, a) && subset(a, b)) check(ent(x, b), W{x, {}, a, b, {}, {}});
      });
      break;
    case RuleId::CCL:
      each_x([&](Mask x) { check(e.E[x] == e.up[e.C[x]], W{x, {}, {}, {}, {}, {}}); });
      break;
    case RuleId::LLE:
      each_x([&](Mask x) { check(e.E[x] == e.E_alt[x], W{x, {}, {}, {}, {}, {}}); });
      break;
    case RuleId::SC:
      each_x([&](Mask x) { check(sub(e.up[x], e.E[x]), W{x, {}, {}, {}, {}, {}}); });
      break;
    case RuleId::REF:
      each_x([&](Mask x) {
        for (Mask a = 0; a < n && !stop; ++a) check(ent(x & a, a), W{x, {}, a, {}, {}, {}});
      });
      break;
    case RuleId::CP:
      each_x([&](Mask x) {
        if (ent(x, 0)) check(x == 0, W{x, {}, {}, {}, {}, {}});
      });
      break;
    case RuleId::OR:
    case RuleId::disjOR:
      each_xy([&](Mask x, Mask y) {
        if (rule == RuleId::disjOR && (x & y) != 0) return;
        check(sub(e.E[x] & e.E[y], e.E[x | y]), W{x, y, {}, {}, {}, {}});
      });
      break;
    case RuleId::wOR:
      each_xy([&](Mask x, Mask y) { check(sub(e.E[x] & e.up[y], e.E[x | y]), W{x, y, {}, {}, {}, {}}); });
      break;
    case RuleId::PR:
      each_xy([&](Mask x, Mask y) { check(sub(e.E[x & y], e.up[e.C[x] & y]), W{x, y, {}, {}, {}, {}}); });
      break;
    case RuleId::CUT:
    case RuleId::CM:
    case RuleId::CUM:
      each_xy([&](Mask x, Mask y) {
        // T ⊆ cl(T') and cl(T') ⊆ T̄̄, with T, T' axiomatizing X, Y
        if (!(subset(y, x) && sub(e.up[y], e.E[x]))) return;
        bool ok = rule == RuleId::CUT ? sub(e.E[y], e.E[x]) : rule == RuleId::CM ? sub(e.E[x], e.E[y]) : e.E[x] == e.E[y];
        check(ok, W{x, y, {}, {}, {}, {}});
      });
      break;
    case RuleId::ResM:
      each_x([&](Mask x) {
        for (Mask a = 0; a < n && !stop; ++a)
          for (Mask b = 0; b < n && !stop; ++b)
            if (ent(x, a) && ent(x, b)) check(ent(x & a, b), W{x, {}, a, b, {}, {}});
      });
      break;
    case RuleId::SubsetSupset:
      each_xy([&](Mask x, Mask y) {
        if (ent(y, x) && ent(x, y)) check(e.E[x] == e.E[y], W{x, y, {}, {}, {}, {}});
      });
      break;
    case RuleId::RatM:
    case RuleId::RatMEq:
      each_xy([&](Mask x, Mask y) {
        if (!((x & e.C[y]) != 0 && subset(x, y))) return;
        const FormulaSet& target = e.up[e.C[y] & x];
        check(rule == RuleId::RatM ? sub(target, e.E[x]) : e.E[x] == target, W{x, y, {}, {}, {}, {}});
      });
      break;
    case RuleId::LogEqPrime:
      each_xy([&](Mask x, Mask y) {
        if ((e.C[y] & x) == 0) return;
        check(e.E[x & y] == e.up[e.C[y] & x], W{x, y, {}, {}, {}, {}});
      });
      break;
    case RuleId::LogPar:
      each_xy([&](Mask x, Mask y) {
        const auto& v = e.E[x | y];
        check(v == e.E[x] || v == e.E[y] || v == (e.E[x] & e.E[y]), W{x, y, {}, {}, {}, {}});
      });
      break;
    case RuleId::LogCup:
    case RuleId::LogCupPrime:
      each_xy([&](Mask x, Mask y) {
        if (!((e.C[y] & x) != 0 && (e.C[y] & e.C[x]) == 0)) return;
        bool ok = rule == RuleId::LogCup ? (e.C[x | y] & y) == 0 : e.E[x | y] == e.E[x];
        check(ok, W{x, y, {}, {}, {}, {}});
      });
      break;
  }
  (void)all;
  return out;
}

inline PropertyVerdict check_rule(const Logic& logic, RuleId rule) { return check_rule(tabulate(logic), rule); }

inline std::vector<PropertyVerdict> check_all_rules(const Entailment& e) {
  std::vector<PropertyVerdict> out;
  for (const auto& [id, name] : rule_list()) out.push_back(check_rule(e, id));
  return out;
}

inline MuTable mu_from_logic(const Entailment& e) {
  auto lle = check_rule(e, RuleId::LLE);
  auto ccl = check_rule(e, RuleId::CCL);
  if (!lle.holds || !ccl.holds)
    throw Error(ErrorKind::OracleInconsistent,
                std::string(lle.holds ? "(CCL)" : "(LLE)") + " fails at " + e.language.universe().show(
                                                                              *(lle.holds ? ccl : lle).witness->X));
  MuTable t(e.language.universe());
  for (Mask x = 0; x < e.C.size(); ++x) t.set(x, e.C[x]);
  return t;
}

inline MuTable mu_from_logic(const Logic& logic) { return mu_from_logic(tabulate(logic)); }

// ---------------------------------------------------------------- rule ↔ property correspondences

struct Correspondence {
  std::string row;
  RuleId rule;
  PropertyId property;
  std::vector<PropertyId> forward_aux;   // needed for rule ⇒ property
  std::vector<PropertyId> backward_aux;  // needed for property ⇒ rule, (μdp) being automatic
};

inline const std::vector<Correspondence>& alg_log_rows() {
  using R = RuleId;
  using P = PropertyId;
  static const std::vector<Correspondence> rows{
      {"1", R::OR, P::OR, {}, {}},
      {"2", R::disjOR, P::DisjOR, {}, {}},
      {"3", R::wOR, P::WOR, {}, {}},
      {"4", R::SC, P::Subset, {}, {}},
      {"5", R::CP, P::Empty, {}, {}},
      {"6", R::PR, P::PR, {}, {P::Subset}},
      {"7", R::CUT, P::CUT, {}, {}},
      {"8", R::CM, P::CM, {}, {}},
      {"9", R::ResM, P::ResM, {}, {}},
      {"10", R::SubsetSupset, P::SubsetSupset, {}, {}},
      {"11", R::CUM, P::CUM, {}, {}},
      {"12", R::RatM, P::RatM, {}, {}},
      {"13", R::RatMEq, P::Eq, {}, {}},
      {"14", R::LogEqPrime, P::EqPrime, {}, {}},
      {"15", R::LogPar, P::Par, {}, {}},
      {"16", R::LogCup, P::Cup, {P::Subset, P::Eq}, {}},
      {"17", R::LogCupPrime, P::CupPrime, {P::Subset, P::Eq}, {}},
  };
  return rows;
}

struct CorrespondenceResult {
  std::string row;
  bool rule_holds = false;
  bool property_holds = false;
  bool forward_applies = false;   // auxiliaries for ⇒ hold
  bool backward_applies = false;  // auxiliaries for ⇐ hold
  bool violated() const {
    return (forward_applies && rule_holds && !property_holds) || (backward_applies && property_holds && !rule_holds);
  }
};

inline std::vector<CorrespondenceResult> check_correspondences(const Logic& logic) {
  auto e = tabulate(logic);
  auto f = mu_from_logic(e);
  std::vector<CorrespondenceResult> out;
  for (const auto& row : alg_log_rows()) {
    CorrespondenceResult r;
    r.row = row.row;
    r.rule_holds = check_rule(e, row.rule).holds;
    r.property_holds = check_property(f, row.property).holds;
    r.forward_applies = true;
    for (PropertyId p : row.forward_aux) r.forward_applies = r.forward_applies && check_property(f, p).holds;
    r.backward_applies = true;
    for (PropertyId p : row.backward_aux) r.backward_applies = r.backward_applies && check_property(f, p).holds;
    out.push_back(r);
  }
  return out;
}

}  // namespace ibrs
