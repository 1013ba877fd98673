#include "gdyn/algebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "gdyn/error.hpp"

namespace gdyn {

Group::Group(std::vector<std::string> names, GroupElement identity,
             std::vector<std::vector<GroupElement>> mul)
    : names_(std::move(names)), identity_(identity), mul_(std::move(mul)) {
  const std::size_t n = names_.size();
  if (n == 0) throw GroupError("group: no elements");
  {
    std::unordered_set<std::string> seen;
    for (const auto& nm : names_)
      if (!seen.insert(nm).second) throw GroupError("group: duplicate element '" + nm + "'");
  }
  if (identity_ >= n) throw GroupError("group: identity is not an element");
  if (mul_.size() != n) throw GroupError("group: multiplication table has wrong row count");
  for (std::size_t a = 0; a < n; ++a) {
    if (mul_[a].size() != n) throw GroupError("group: row for " + names_[a] + " is incomplete");
    for (auto c : mul_[a])
      if (c >= n) throw GroupError("group: product leaves the group in row " + names_[a]);
  }
  for (std::size_t a = 0; a < n; ++a)
    if (mul_[identity_][a] != a || mul_[a][identity_] != a)
      throw GroupError("group: identity law fails for " + names_[a]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw GroupError("group: not associative at (" + names_[a] + "," + names_[b] + "," + names_[c] + ")");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (mul_[a][b] == identity_ && mul_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == n) throw GroupError("group: no inverse for " + names_[a]);
  }
}

std::optional<GroupElement> Group::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<GroupElement>(it - names_.begin());
}

Group Group::trivial() { return Group(); }

Group Group::cyclic(std::size_t n) {
  if (n == 0) throw GroupError("group: cyclic group of order 0");
  std::vector<std::string> names;
  std::vector<std::vector<GroupElement>> mul(n, std::vector<GroupElement>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return Group(std::move(names), 0, std::move(mul));
}

Group Group::klein() {
  // bit-pattern elements, product is xor
  std::vector<std::vector<GroupElement>> mul(4, std::vector<GroupElement>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) mul[a][b] = a ^ b;
  return Group({"e", "a", "b", "ab"}, 0, std::move(mul));
}

Group Group::symmetric3() {
  using Perm = std::array<int, 3>;
  // e, r, r^2, s, sr, sr^2 with r = (0 1 2), s = (1 2)
  const Perm r{1, 2, 0};
  const Perm s{0, 2, 1};
  auto comp = [](const Perm& p, const Perm& q) {  // p after q
    return Perm{p[q[0]], p[q[1]], p[q[2]]};
  };
  const Perm e{0, 1, 2};
  std::vector<Perm> elems{e, r, comp(r, r), s, comp(s, r), comp(s, comp(r, r))};
  std::vector<std::vector<GroupElement>> mul(6, std::vector<GroupElement>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      auto p = comp(elems[a], elems[b]);
      mul[a][b] = static_cast<GroupElement>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    }
  return Group({"e", "r", "r2", "s", "sr", "sr2"}, 0, std::move(mul));
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t m = b.order();
  const std::size_t n = a.order() * m;
  std::vector<std::string> names;
  std::vector<std::vector<GroupElement>> mul(n, std::vector<GroupElement>(n));
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < m; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      mul[x][y] = a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  return Group(std::move(names), a.identity() * m + b.identity(), std::move(mul));
}

Group direct_power(const Group& g, std::size_t n) {
  if (n == 0) throw PreconditionError("direct_power: exponent must be at least 1");
  const std::size_t base = g.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= base;
  std::vector<std::vector<std::size_t>> coords(total);
  std::vector<std::string> names;
  for (std::size_t idx = 0; idx < total; ++idx) {
    coords[idx] = power_coordinates(idx, base, n);
    std::string nm = "(";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) nm += ',';
      nm += g.name(coords[idx][i]);
    }
    names.push_back(nm + ")");
  }
  std::vector<std::vector<GroupElement>> mul(total, std::vector<GroupElement>(total));
  for (std::size_t x = 0; x < total; ++x)
    for (std::size_t y = 0; y < total; ++y) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < n; ++i) idx = idx * base + g.mul(coords[x][i], coords[y][i]);
      mul[x][y] = idx;
    }
  std::size_t id = 0;
  for (std::size_t i = 0; i < n; ++i) id = id * base + g.identity();
  return Group(std::move(names), id, std::move(mul));
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"trivial", "Z1", "Z2", "Z3", "Z4", "Z5", "Z6",
                                              "Z7",      "Z8", "Z2xZ2", "S3"};
  return names;
}

std::optional<Group> catalog_group(std::string_view name) {
  if (name == "trivial") return Group::trivial();
  if (name == "Z2xZ2") return Group::klein();
  if (name == "S3") return Group::symmetric3();
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '1' && name[1] <= '8')
    return Group::cyclic(static_cast<std::size_t>(name[1] - '0'));
  return std::nullopt;
}

Action::Action(Group group, Space space, std::vector<PointMap> table)
    : group_(std::move(group)), space_(std::move(space)), table_(std::move(table)) {
  const std::size_t n = space_.size();
  if (table_.size() != group_.order()) throw ActionError("action: table does not cover every group element");
  for (std::size_t g = 0; g < table_.size(); ++g) {
    if (table_[g].size() != n) throw ActionError("action: T_" + group_.name(g) + " is not total");
    for (auto y : table_[g])
      if (y >= n) throw ActionError("action: T_" + group_.name(g) + " leaves the carrier");
  }
  for (std::size_t x = 0; x < n; ++x)
    if (table_[group_.identity()][x] != x)
      throw ActionError("action: identity moves '" + space_.name(x) + "'");
  for (std::size_t g = 0; g < table_.size(); ++g)
    for (std::size_t h = 0; h < table_.size(); ++h)
      for (std::size_t x = 0; x < n; ++x)
        if (table_[g][table_[h][x]] != table_[group_.mul(g, h)][x])
          throw ActionError("action: compatibility fails for g=" + group_.name(g) + " h=" + group_.name(h) +
                            " at '" + space_.name(x) + "'");
  // compatibility plus identity make every T_g a bijection with inverse T_{g^-1}
  for (std::size_t g = 0; g < table_.size(); ++g)
    if (!is_continuous(space_, table_[g]))
      throw ActionError("action: T_" + group_.name(g) + " is not continuous");
}

Action Action::trivial(Group group, Space space) {
  std::vector<PointMap> table(group.order(), identity_map(space.size()));
  return Action(std::move(group), std::move(space), std::move(table));
}

bool Action::is_trivial() const {
  for (const auto& t : table_)
    for (std::size_t x = 0; x < t.size(); ++x)
      if (t[x] != x) return false;
  return true;
}

PointSet Action::orbit(std::size_t x) const {
  PointSet out(space_.size());
  for (const auto& t : table_) out.set(t[x]);
  return out;
}

PointSet Action::saturate(const PointSet& v) const {
  PointSet out(space_.size());
  for_each_member(v, [&](std::size_t x) {
    for (const auto& t : table_) out.set(t[x]);
  });
  return out;
}

std::vector<PointSet> Action::orbits() const {
  std::vector<PointSet> out;
  PointSet seen(space_.size());
  for (std::size_t x = 0; x < space_.size(); ++x) {
    if (seen.test(x)) continue;
    auto o = orbit(x);
    seen |= o;
    out.push_back(std::move(o));
  }
  return out;
}

Action product_action(const Action& a, const Action& b) {
  Group g = direct_product(a.group(), b.group());
  Space s = product(a.space(), b.space());
  const std::size_t m = b.space().size();
  const std::size_t hm = b.group().order();
  std::vector<PointMap> table(g.order(), PointMap(s.size()));
  for (std::size_t e = 0; e < g.order(); ++e)
    for (std::size_t p = 0; p < s.size(); ++p)
      table[e][p] = a.apply(e / hm, p / m) * m + b.apply(e % hm, p % m);
  return Action(std::move(g), std::move(s), std::move(table));
}

Action power_action(const Action& a, std::size_t n) {
  Group g = direct_power(a.group(), n);
  Space s = power(a.space(), n);
  const std::size_t gb = a.group().order();
  const std::size_t sb = a.space().size();
  std::vector<PointMap> table(g.order(), PointMap(s.size()));
  for (std::size_t e = 0; e < g.order(); ++e) {
    auto ge = power_coordinates(e, gb, n);
    for (std::size_t p = 0; p < s.size(); ++p) {
      auto xp = power_coordinates(p, sb, n);
      std::size_t idx = 0;
      for (std::size_t i = 0; i < n; ++i) idx = idx * sb + a.apply(ge[i], xp[i]);
      table[e][p] = idx;
    }
  }
  return Action(std::move(g), std::move(s), std::move(table));
}

std::optional<std::pair<GroupElement, std::size_t>> equivariance_failure(const Action& a, const PointMap& f) {
  for (std::size_t g = 0; g < a.group().order(); ++g)
    for (std::size_t x = 0; x < f.size(); ++x)
      if (f[a.apply(g, x)] != a.apply(g, f[x])) return std::pair{g, x};
  return std::nullopt;
}

std::optional<std::size_t> pseudoequivariance_failure(const Action& a, const PointMap& f) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (image(a.orbit(x), f) != a.orbit(f[x])) return x;
  return std::nullopt;
}

bool is_equivariant(const Action& a, const PointMap& f) { return !equivariance_failure(a, f); }
bool is_pseudoequivariant(const Action& a, const PointMap& f) { return !pseudoequivariance_failure(a, f); }

QuotientSystem quotient(const Action& a) {
  const Space& x = a.space();
  QuotientSystem q;
  q.orbits = a.orbits();
  const std::size_t m = q.orbits.size();
  q.proj.assign(x.size(), 0);
  std::vector<std::string> names;
  for (std::size_t o = 0; o < m; ++o) {
    for_each_member(q.orbits[o], [&](std::size_t p) { q.proj[p] = o; });
    names.push_back("G(" + x.name(q.orbits[o].find_first()) + ")");
  }
  // smallest open containing orbit o: grow S until its lift is open
  std::vector<PointSet> mo;
  for (std::size_t o = 0; o < m; ++o) {
    PointSet s = make_set(m, {o});
    for (;;) {
      PointSet up = lift(q, s);
      if (x.is_open(up)) break;
      for_each_member(x.open_hull(up), [&](std::size_t p) { s.set(q.proj[p]); });
    }
    mo.push_back(std::move(s));
  }
  q.space = Space(std::move(names), std::move(mo));
  return q;
}

QuotientSystem quotient(const Action& a, const PointMap& f) {
  QuotientSystem q = quotient(a);
  if (is_pseudoequivariant(a, f)) {
    PointMap bar(q.orbits.size());
    for (std::size_t o = 0; o < q.orbits.size(); ++o) bar[o] = q.proj[f[q.orbits[o].find_first()]];
    q.induced = std::move(bar);
  }
  return q;
}

PointSet lift(const QuotientSystem& q, const PointSet& s) {
  PointSet out(q.proj.size());
  for (std::size_t p = 0; p < q.proj.size(); ++p)
    if (s.test(q.proj[p])) out.set(p);
  return out;
}

std::vector<PointMap> automorphisms(const Space& s) {
  std::vector<PointMap> out;
  PointMap perm = identity_map(s.size());
  do {
    bool ok = true;
    for (std::size_t x = 0; x < s.size() && ok; ++x)
      ok = image(s.min_open(x), perm) == s.min_open(perm[x]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<GroupElement> generators(const Group& g) {
  std::vector<GroupElement> gens;
  std::vector<bool> in(g.order(), false);
  in[g.identity()] = true;
  for (GroupElement c = 0; c < g.order(); ++c) {
    if (in[c]) continue;
    gens.push_back(c);
    std::vector<GroupElement> stack;
    for (GroupElement e = 0; e < g.order(); ++e)
      if (in[e]) stack.push_back(e);
    while (!stack.empty()) {
      auto e = stack.back();
      stack.pop_back();
      for (auto s : gens) {
        auto n = g.mul(e, s);
        if (!in[n]) {
          in[n] = true;
          stack.push_back(n);
        }
      }
    }
  }
  return gens;
}

}  // namespace gdyn
