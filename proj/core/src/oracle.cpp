#include "gdyn/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "gdyn/error.hpp"

namespace gdyn::oracle {

namespace {

constexpr std::size_t kMaxPoints = 20;

PointSet subset_from_bits(std::size_t n, std::uint64_t bits) {
  PointSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (bits >> i & 1u) s.set(i);
  return s;
}

PointSet apply_table(const PointSet& a, const PointMap& t) {
  PointSet out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.test(i)) out.set(t[i]);
  return out;
}

PointSet pull_back(const PointSet& b, const PointMap& t) {
  PointSet out(b.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    if (b.test(t[i])) out.set(i);
  return out;
}

std::vector<PointSet> nonempty(const std::vector<PointSet>& all) {
  std::vector<PointSet> out;
  for (const auto& o : all)
    if (o.any()) out.push_back(o);
  return out;
}

// bit k-1 set iff some g has g.f^k(U) meeting V, for the given tables f^1..f^H
std::uint64_t hit_mask(const GSystem& s, const std::vector<PointMap>& tables, const PointSet& u,
                       const PointSet& v) {
  if (tables.size() > 65) throw BoundError("oracle: horizon exceeds 64");
  std::uint64_t mask = 0;
  for (std::size_t k = 1; k < tables.size(); ++k) {
    const PointSet fk = apply_table(u, tables[k]);
    for (GroupElement g = 0; g < s.group().order(); ++g)
      if (apply_table(fk, s.action().map_of(g)).intersects(v)) {
        mask |= std::uint64_t{1} << (k - 1);
        break;
      }
  }
  return mask;
}

bool transitive_with(const GSystem& s, const PointMap& f, const std::vector<PointSet>& ne) {
  const auto tables = powers(f, horizon(f));
  for (const auto& u : ne)
    for (const auto& v : ne)
      if (hit_mask(s, tables, u, v) == 0) return false;
  return true;
}

PointSet gf_orbit_explicit(const GSystem& s, std::size_t x, const std::vector<PointMap>& tables) {
  PointSet orbit(s.size());
  for (const auto& t : tables)
    for (GroupElement g = 0; g < s.group().order(); ++g) orbit.set(s.action().apply(g, t[x]));
  return orbit;
}

}  // namespace

std::vector<PointSet> opens(const Space& s) {
  const std::size_t n = s.size();
  if (n > kMaxPoints) throw BoundError("oracle: carrier too large for subset enumeration");
  std::vector<PointSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    PointSet a = subset_from_bits(n, bits);
    bool open = true;
    for (std::size_t x = 0; x < n && open; ++x)
      if (a.test(x)) open = s.min_open(x).is_subset_of(a);
    if (open) out.push_back(std::move(a));
  }
  return out;
}

PointSet closure(const std::vector<PointSet>& all, const PointSet& a) {
  PointSet out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    bool inside = true;
    for (const auto& o : all)
      if (o.test(x) && !o.intersects(a)) {
        inside = false;
        break;
      }
    if (inside) out.set(x);
  }
  return out;
}

std::size_t horizon(const PointMap& f) {
  std::set<PointMap> seen;
  PointMap cur = identity_map(f.size());
  seen.insert(cur);
  for (std::size_t k = 1;; ++k) {
    PointMap next(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) next[i] = f[cur[i]];
    cur = std::move(next);
    if (!seen.insert(cur).second) return k;
  }
}

std::vector<PointMap> powers(const PointMap& f, std::size_t count) {
  std::vector<PointMap> out{identity_map(f.size())};
  for (std::size_t k = 1; k <= count; ++k) {
    PointMap next(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) next[i] = f[out.back()[i]];
    out.push_back(std::move(next));
  }
  return out;
}

bool g_transitive(const GSystem& s) { return transitive_with(s, s.map(), nonempty(opens(s.space()))); }

bool totally_g_transitive(const GSystem& s) {
  const auto ne = nonempty(opens(s.space()));
  const auto tables = powers(s.map(), horizon(s.map()));
  for (std::size_t m = 1; m < tables.size(); ++m)
    if (!transitive_with(s, tables[m], ne)) return false;
  return true;
}

bool weakly_g_mixing(const GSystem& s) {
  const auto ne = nonempty(opens(s.space()));
  const auto tables = powers(s.map(), horizon(s.map()));
  const std::size_t m = ne.size();
  std::vector<std::uint64_t> mask(m * m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t e = 0; e < m; ++e) mask[u * m + e] = hit_mask(s, tables, ne[u], ne[e]);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t e = 0; e < m; ++e) {
        const std::uint64_t ue = mask[u * m + e];
        for (std::size_t f = 0; f < m; ++f)
          if ((ue & mask[v * m + f]) == 0) return false;
      }
  return true;
}

bool strongly_g_mixing(const GSystem& s) {
  const auto ne = nonempty(opens(s.space()));
  const std::size_t h = horizon(s.map());
  const auto tables = powers(s.map(), 2 * h);
  // past the preperiod the hit pattern repeats; [h+1, 2h] is a full period of it
  for (const auto& u : ne)
    for (const auto& v : ne)
      for (std::size_t n = h + 1; n <= 2 * h; ++n) {
        const PointSet fn = apply_table(u, tables[n]);
        bool hit = false;
        for (GroupElement g = 0; g < s.group().order() && !hit; ++g)
          hit = apply_table(fn, s.action().map_of(g)).intersects(v);
        if (!hit) return false;
      }
  return true;
}

bool g_minimal(const GSystem& s) {
  const auto all = opens(s.space());
  const auto tables = powers(s.map(), horizon(s.map()));
  for (std::size_t x = 0; x < s.size(); ++x)
    if (!closure(all, gf_orbit_explicit(s, x, tables)).all()) return false;
  return true;
}

bool equivariant(const GSystem& s) {
  const auto& f = s.map();
  for (GroupElement g = 0; g < s.group().order(); ++g)
    for (std::size_t x = 0; x < s.size(); ++x)
      if (f[s.action().apply(g, x)] != s.action().apply(g, f[x])) return false;
  return true;
}

bool pseudoequivariant(const GSystem& s) {
  const auto& f = s.map();
  for (std::size_t x = 0; x < s.size(); ++x) {
    PointSet lhs(s.size()), rhs(s.size());
    for (GroupElement g = 0; g < s.group().order(); ++g) {
      lhs.set(f[s.action().apply(g, x)]);
      rhs.set(s.action().apply(g, f[x]));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<PointSet> g_minimal_sets(const GSystem& s) {
  const std::size_t n = s.size();
  if (n > 16) throw BoundError("oracle: too many points for subset enumeration of minimal sets");
  const auto all = opens(s.space());
  const std::set<PointSet> open_set(all.begin(), all.end());
  const auto tables = powers(s.map(), horizon(s.map()));
  std::vector<PointSet> orbit_closure;
  for (std::size_t x = 0; x < n; ++x) orbit_closure.push_back(closure(all, gf_orbit_explicit(s, x, tables)));
  std::vector<PointSet> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const PointSet y = subset_from_bits(n, bits);
    if (!open_set.count(~y)) continue;
    if (!apply_table(y, s.map()).is_subset_of(y)) continue;
    bool ok = true;
    for (GroupElement g = 0; g < s.group().order() && ok; ++g)
      ok = apply_table(y, s.action().map_of(g)).is_subset_of(y);
    for (std::size_t p = 0; p < n && ok; ++p)
      if (y.test(p)) ok = orbit_closure[p] == y;
    if (ok) out.push_back(y);
  }
  // distinct minimal sets are disjoint, so smallest members order them
  std::sort(out.begin(), out.end(),
            [](const PointSet& a, const PointSet& b) { return a.find_first() < b.find_first(); });
  return out;
}

bool cover_criterion(const GSystem& s) {
  const auto ne = nonempty(opens(s.space()));
  const auto tables = powers(s.map(), horizon(s.map()) + s.size());
  for (const auto& u : ne) {
    PointSet acc(s.size());
    bool covered = false;
    for (std::size_t k = 0; k < tables.size() && !covered; ++k) {
      const PointSet pre = pull_back(u, tables[k]);
      for (GroupElement g = 0; g < s.group().order(); ++g) acc |= apply_table(pre, s.action().map_of(g));
      covered = acc.all();
    }
    if (!covered) return false;
  }
  return true;
}

QuotientVerdict quotient_minimality(const GSystem& s) {
  QuotientVerdict out;
  out.gm = g_minimal(s);
  const std::size_t n = s.size();
  // orbit labels by explicit group search
  std::vector<std::size_t> label(n, n);
  std::vector<std::size_t> rep;
  for (std::size_t x = 0; x < n; ++x) {
    if (label[x] != n) continue;
    for (GroupElement g = 0; g < s.group().order(); ++g) label[s.action().apply(g, x)] = rep.size();
    rep.push_back(x);
  }
  const std::size_t m = rep.size();
  PointMap bar(m);
  for (std::size_t o = 0; o < m; ++o) bar[o] = label[s.map()[rep[o]]];
  out.induced_defined = true;
  for (std::size_t x = 0; x < n; ++x)
    if (bar[label[x]] != label[s.map()[x]]) out.induced_defined = false;
  if (!out.induced_defined) return out;

  const auto source_opens = opens(s.space());
  const std::set<PointSet> source_open_set(source_opens.begin(), source_opens.end());
  std::vector<PointSet> q_opens;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    PointSet up(n);
    for (std::size_t x = 0; x < n; ++x)
      if (bits >> label[x] & 1u) up.set(x);
    if (source_open_set.count(up)) q_opens.push_back(subset_from_bits(m, bits));
  }
  const auto tables = powers(bar, horizon(bar));
  out.induced_minimal = true;
  for (std::size_t o = 0; o < m && out.induced_minimal; ++o) {
    PointSet orbit(m);
    for (const auto& t : tables) orbit.set(t[o]);
    out.induced_minimal = closure(q_opens, orbit).all();
  }
  return out;
}

bool pair_never_hits(const GSystem& s, const PointSet& u, const PointSet& v) {
  return hit_mask(s, powers(s.map(), horizon(s.map())), u, v) == 0;
}

bool quadruple_never_hits(const GSystem& s, const PointSet& u, const PointSet& v, const PointSet& e,
                          const PointSet& f) {
  const auto tables = powers(s.map(), horizon(s.map()));
  return (hit_mask(s, tables, u, e) & hit_mask(s, tables, v, f)) == 0;
}

}  // namespace gdyn::oracle
