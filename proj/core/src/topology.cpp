#include "gdyn/topology.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "gdyn/error.hpp"

namespace gdyn {

Space::Space(std::vector<std::string> names, std::vector<PointSet> min_open)
    : names_(std::move(names)), min_open_(std::move(min_open)) {
  const std::size_t n = names_.size();
  if (min_open_.size() != n)
    throw TopologyError("topology: " + std::to_string(min_open_.size()) +
                        " minimal opens for " + std::to_string(n) + " points");
  {
    std::unordered_set<std::string> seen;
    for (const auto& nm : names_)
      if (!seen.insert(nm).second) throw TopologyError("topology: duplicate point '" + nm + "'");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (min_open_[x].size() != n)
      throw TopologyError("topology: minimal open of '" + names_[x] + "' has wrong carrier size");
    if (!min_open_[x].test(x))
      throw TopologyError("topology: '" + names_[x] + "' is not in its own minimal open");
  }
  for (std::size_t x = 0; x < n; ++x)
    for_each_member(min_open_[x], [&](std::size_t y) {
      if (!min_open_[y].is_subset_of(min_open_[x]))
        throw TopologyError("topology: base condition fails: '" + names_[y] + "' lies in min_open('" +
                            names_[x] + "') but min_open('" + names_[y] + "') does not");
    });
  for (std::size_t x = 0; x < n; ++x) {
    bool fresh = true;
    for (auto r : basis_points_)
      if (min_open_[r] == min_open_[x]) {
        fresh = false;
        break;
      }
    if (fresh) basis_points_.push_back(x);
  }
}

Space Space::discrete(std::vector<std::string> names) {
  const std::size_t n = names.size();
  std::vector<PointSet> mo;
  mo.reserve(n);
  for (std::size_t i = 0; i < n; ++i) mo.push_back(make_set(n, {i}));
  return Space(std::move(names), std::move(mo));
}

Space Space::point(std::string name) { return discrete({std::move(name)}); }

std::optional<std::size_t> Space::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

PointSet Space::set_of(std::initializer_list<std::string_view> names) const {
  PointSet s(size());
  for (auto nm : names) {
    auto idx = index_of(nm);
    if (!idx) throw TopologyError("topology: unknown point '" + std::string(nm) + "'");
    s.set(*idx);
  }
  return s;
}

bool Space::is_open(const PointSet& a) const {
  for (auto x = a.find_first(); x != PointSet::npos; x = a.find_next(x))
    if (!min_open_[x].is_subset_of(a)) return false;
  return true;
}

bool Space::is_closed(const PointSet& a) const { return is_open(~a); }

PointSet Space::closure(const PointSet& a) const {
  PointSet out(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (min_open_[x].intersects(a)) out.set(x);
  return out;
}

PointSet Space::interior(const PointSet& a) const {
  PointSet out(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (min_open_[x].is_subset_of(a)) out.set(x);
  return out;
}

bool Space::is_dense(const PointSet& a) const {
  for (const auto& m : min_open_)
    if (!m.intersects(a)) return false;
  return true;
}

bool Space::is_nowhere_dense(const PointSet& a) const { return interior(closure(a)).none(); }

bool Space::is_discrete() const {
  for (const auto& m : min_open_)
    if (m.count() != 1) return false;
  return true;
}

PointSet Space::open_hull(const PointSet& a) const {
  PointSet out(size());
  for_each_member(a, [&](std::size_t x) { out |= min_open_[x]; });
  return out;
}

std::string Space::format(const PointSet& a) const {
  std::string out = "{";
  bool first = true;
  for_each_member(a, [&](std::size_t x) {
    if (!first) out += ',';
    out += names_[x];
    first = false;
  });
  out += '}';
  return out;
}

Space space_from_subbasis(std::vector<std::string> names, const std::vector<PointSet>& subbasis) {
  const std::size_t n = names.size();
  for (const auto& s : subbasis)
    if (s.size() != n) throw TopologyError("topology: subbasis member has wrong carrier size");
  std::vector<PointSet> mo(n, full_set(n));
  for (const auto& s : subbasis)
    for_each_member(s, [&](std::size_t x) { mo[x] &= s; });
  return Space(std::move(names), std::move(mo));
}

Space space_from_subbasis(std::vector<std::string> names,
                          const std::vector<std::vector<std::string>>& subbasis) {
  const std::size_t n = names.size();
  std::vector<PointSet> sets;
  sets.reserve(subbasis.size());
  for (const auto& member : subbasis) {
    PointSet s(n);
    for (const auto& nm : member) {
      auto it = std::find(names.begin(), names.end(), nm);
      if (it == names.end()) throw TopologyError("topology: unknown point '" + nm + "' in subbasis");
      s.set(static_cast<std::size_t>(it - names.begin()));
    }
    sets.push_back(std::move(s));
  }
  return space_from_subbasis(std::move(names), sets);
}

Space product(const Space& left, const Space& right) {
  const std::size_t m = right.size();
  const std::size_t n = left.size() * m;
  std::vector<std::string> names;
  std::vector<PointSet> mo;
  names.reserve(n);
  mo.reserve(n);
  for (std::size_t x = 0; x < left.size(); ++x)
    for (std::size_t y = 0; y < m; ++y) {
      names.push_back("(" + left.name(x) + "," + right.name(y) + ")");
      PointSet s(n);
      for_each_member(left.min_open(x), [&](std::size_t a) {
        for_each_member(right.min_open(y), [&](std::size_t b) { s.set(a * m + b); });
      });
      mo.push_back(std::move(s));
    }
  return Space(std::move(names), std::move(mo));
}

std::vector<std::size_t> power_coordinates(std::size_t index, std::size_t base, std::size_t n) {
  std::vector<std::size_t> c(n);
  for (std::size_t i = n; i-- > 0;) {
    c[i] = index % base;
    index /= base;
  }
  return c;
}

Space power(const Space& s, std::size_t n) {
  if (n == 0) throw PreconditionError("power: exponent must be at least 1");
  const std::size_t base = s.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= base;
  std::vector<std::string> names;
  std::vector<PointSet> mo;
  names.reserve(total);
  mo.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto c = power_coordinates(idx, base, n);
    std::string nm = "(";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) nm += ',';
      nm += s.name(c[i]);
    }
    nm += ')';
    names.push_back(std::move(nm));
    // min_open of a tuple is the product of the factor minimal opens
    std::vector<std::size_t> cells{0};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> next;
      for (auto partial : cells)
        for_each_member(s.min_open(c[i]), [&](std::size_t b) { next.push_back(partial * base + b); });
      cells = std::move(next);
    }
    PointSet m(total);
    for (auto cell : cells) m.set(cell);
    mo.push_back(std::move(m));
  }
  return Space(std::move(names), std::move(mo));
}

std::optional<std::size_t> discontinuity(const Space& from, const Space& to, const PointMap& f) {
  if (f.size() != from.size()) throw TopologyError("continuity: map is not total on the carrier");
  for (auto y : f)
    if (y >= to.size()) throw TopologyError("continuity: map leaves the carrier");
  for (std::size_t x = 0; x < from.size(); ++x) {
    const auto& target = to.min_open(f[x]);
    bool ok = true;
    for_each_member(from.min_open(x), [&](std::size_t y) {
      if (!target.test(f[y])) ok = false;
    });
    if (!ok) return x;
  }
  return std::nullopt;
}

bool is_continuous(const Space& from, const Space& to, const PointMap& f) {
  return !discontinuity(from, to, f).has_value();
}

bool is_continuous(const Space& s, const PointMap& f) { return is_continuous(s, s, f); }

std::vector<PointSet> all_opens(const Space& s, std::size_t limit) {
  std::set<PointSet> found{s.empty_set()};
  std::vector<PointSet> frontier{s.empty_set()};
  while (!frontier.empty()) {
    std::vector<PointSet> next;
    for (const auto& o : frontier)
      for (auto r : s.basis_points()) {
        PointSet u = o | s.min_open(r);
        if (found.insert(u).second) {
          if (found.size() > limit) throw BoundError("all_opens: more than " + std::to_string(limit) + " opens");
          next.push_back(std::move(u));
        }
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

bool is_homeomorphism(const Space& s, const PointMap& f) {
  if (f.size() != s.size()) return false;
  PointMap inv(s.size(), s.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= s.size() || inv[f[x]] != s.size()) return false;
    inv[f[x]] = x;
  }
  return is_continuous(s, f) && is_continuous(s, inv);
}

}  // namespace gdyn
