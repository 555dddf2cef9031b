#pragma once

#include "ibrs/mu_table.hpp"
#include "ibrs/structure.hpp"

namespace ibrs::fixtures {

inline ArrowSpec arrow(std::string id, std::string from, std::string to_point) {
  return {id, id, 0, Ref::point(std::move(from)), Ref::point(std::move(to_point))};
}
inline ArrowSpec attack(std::string id, std::string from, std::string to_arrow) {
  return {id, id, 0, Ref::point(std::move(from)), Ref::arrow(std::move(to_arrow))};
}

inline std::vector<CopyRef> single_copies(const std::vector<std::string>& pts) {
  std::vector<CopyRef> out;
  for (const auto& p : pts) out.push_back({p, 0});
  return out;
}

// a→b, b→c, a→c, and a attacking a→c.
inline Structure need_smooth() {
  std::vector<std::string> pts{"a", "b", "c"};
  return build_structure(pts, single_copies(pts),
                         {arrow("alpha'", "a", "b"), arrow("alpha''", "b", "c"), arrow("alpha", "a", "c"),
                          attack("beta", "a", "alpha")},
                         2);
}

// with_second_attack adds a→(b→c), which makes the structure totally smooth on {a,b,c}.
inline Structure totally_smooth(bool with_second_attack) {
  std::vector<std::string> pts{"a", "b", "c"};
  std::vector<ArrowSpec> arrows{arrow("alpha", "a", "b"), arrow("alpha'", "b", "c"), arrow("alpha''", "a", "c"),
                                attack("beta", "b", "alpha'")};
  if (with_second_attack) arrows.push_back(attack("beta'", "a", "alpha'"));
  return build_structure(pts, single_copies(pts), arrows, 2);
}

// a→b→<c,0>, plus an unattacked copy <c,1>.
inline Structure total_vs_essential() {
  return build_structure({"a", "b", "c"}, {{"a", 0}, {"b", 0}, {"c", 0}, {"c", 1}},
                         {{"alpha", "alpha", 0, Ref::point("a"), Ref::point("b")},
                          {"alpha'", "alpha'", 0, Ref::point("b"), Ref::point("c", 0)}},
                         1);
}

inline Structure level3_solution() {
  std::vector<std::string> pts{"x", "y", "y'"};
  return build_structure(pts, single_copies(pts),
                         {arrow("alpha1", "x", "y"), arrow("alpha2", "x", "y'"), arrow("alpha3", "y", "x"),
                          attack("beta1", "y", "alpha2"), attack("beta2", "y'", "alpha1"),
                          attack("beta3", "y", "alpha3"), attack("beta4", "x", "alpha3"),
                          attack("gamma1", "y'", "beta3"), attack("gamma2", "y'", "beta4")},
                         3);
}

// f(X)=X on P({a,b,c}) except f({a,b})={b}.
inline MuTable need_pr() {
  Universe u({"a", "b", "c"});
  Mask ab = u.mask({"a", "b"});
  Mask b = u.mask({"b"});
  return MuTable::powerset(u, [=](Mask x) { return x == ab ? b : x; });
}

// Family {{a,b,c},{a,b,d}} only.
inline MuTable mu_cum_cd() {
  Universe u({"a", "b", "c", "d"});
  MuTable t(u);
  t.set(u.mask({"a", "b", "c"}), u.mask({"a"}));
  t.set(u.mask({"a", "b", "d"}), u.mask({"a", "b"}));
  return t;
}

// μ({x,y,y'})={y,y'}, μ({x,y})=μ({x,y'})={x}, identity elsewhere.
inline MuTable level_bigger_2() {
  Universe u({"x", "y", "y'"});
  Mask all = u.all();
  Mask xy = u.mask({"x", "y"});
  Mask xy2 = u.mask({"x", "y'"});
  Mask x = u.mask({"x"});
  Mask yy = u.mask({"y", "y'"});
  return MuTable::powerset(u, [=](Mask s) {
    if (s == all) return yy;
    if (s == xy || s == xy2) return x;
    return s;
  });
}

}  // namespace ibrs::fixtures
