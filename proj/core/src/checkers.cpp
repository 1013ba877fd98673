#include "gdyn/checkers.hpp"

#include <array>
#include <stdexcept>

#include "gdyn/error.hpp"

namespace gdyn {

namespace {

constexpr std::array<std::pair<Property, std::string_view>, 10> kTags{{
    {Property::gt, "gt"},
    {Property::tgt, "tgt"},
    {Property::wgm, "wgm"},
    {Property::sgm, "sgm"},
    {Property::gm, "gm"},
    {Property::nfold, "nfold"},
    {Property::cover, "cover"},
    {Property::quotient_minimal, "quotient-minimal"},
    {Property::equivariant, "equivariant"},
    {Property::pseudoequivariant, "pseudoequivariant"},
}};

// hits[u][v] has bit k-1 set iff f^k(B_u) meets G(B_v), over the minimal basis.
struct HitTable {
  std::vector<std::size_t> basis;
  std::vector<PointSet> sat;
  std::vector<std::vector<PointSet>> images;  // [k-1][u]
  std::vector<std::vector<PointSet>> hits;
};

HitTable hit_table(const GSystem& s) {
  HitTable t;
  const Space& x = s.space();
  const auto& it = s.iterates();
  const std::size_t h = it.horizon();
  t.basis = x.basis_points();
  const std::size_t b = t.basis.size();
  for (auto r : t.basis) t.sat.push_back(s.action().saturate(x.min_open(r)));
  t.images.resize(h);
  for (std::size_t k = 1; k <= h; ++k)
    for (auto r : t.basis) t.images[k - 1].push_back(image(x.min_open(r), it.power(k)));
  t.hits.assign(b, std::vector<PointSet>(b, PointSet(h)));
  for (std::size_t u = 0; u < b; ++u)
    for (std::size_t v = 0; v < b; ++v)
      for (std::size_t k = 0; k < h; ++k)
        if (t.images[k][u].intersects(t.sat[v])) t.hits[u][v].set(k);
  return t;
}

// some g with g.y in target; y is known to lie in G(target)
GroupElement element_into(const Action& a, std::size_t y, const PointSet& target) {
  for (GroupElement g = 0; g < a.group().order(); ++g)
    if (target.test(a.apply(g, y))) return g;
  throw std::logic_error("element_into: point is not in the saturation");
}

Certificate certify(const GSystem& s, const HitTable& t, std::size_t u, std::size_t v, std::size_t k) {
  PointSet meet = t.images[k - 1][u] & t.sat[v];
  GroupElement g = element_into(s.action(), meet.find_first(), s.space().min_open(t.basis[v]));
  return {t.basis[u], t.basis[v], k, g};
}

bool cycle_covered(const PointSet& hits, std::size_t preperiod) {
  for (std::size_t k = preperiod; k < hits.size(); ++k)
    if (!hits.test(k)) return false;
  return true;
}

PropertyReport base_report(const GSystem& s, Property p) {
  PropertyReport r;
  r.property = p;
  r.preconditions = preconditions(s);
  return r;
}

void note_p1(PropertyReport& r) {
  if (!r.preconditions.pseudoequivariant)
    r.notes.push_back("map is not pseudoequivariant; results stated under P1 do not apply");
}

}  // namespace

std::string_view tag(Property p) {
  for (auto [prop, name] : kTags)
    if (prop == p) return name;
  return "unknown";
}

std::optional<Property> property_from_tag(std::string_view t) {
  for (auto [prop, name] : kTags)
    if (name == t) return prop;
  return std::nullopt;
}

Preconditions preconditions(const GSystem& s) {
  Preconditions p;
  p.pseudoequivariant = is_pseudoequivariant(s.action(), s.map());
  p.dense_gf_periodic = s.space().is_dense(gf_periodic_set(s));
  return p;
}

HitProfile n_g_hits(const GSystem& s, const PointSet& u, const PointSet& v) {
  if (u.none() || v.none()) throw PreconditionError("n_g_hits: U and V must be nonempty");
  const auto& it = s.iterates();
  const PointSet sat = s.action().saturate(v);
  HitProfile out;
  out.eventual = true;
  for (std::size_t k = 1; k <= it.horizon(); ++k) {
    bool hit = image(u, it.power(k)).intersects(sat);
    if (hit) out.hit_ks.push_back(k);
    if (!hit && k > it.preperiod()) out.eventual = false;
  }
  return out;
}

PropertyReport is_g_transitive(const GSystem& s) {
  PropertyReport r = base_report(s, Property::gt);
  const HitTable t = hit_table(s);
  const std::size_t b = t.basis.size();
  const bool certify_all = b * b <= kCertificateLimit;
  for (std::size_t u = 0; u < b; ++u)
    for (std::size_t v = 0; v < b; ++v) {
      const auto k = t.hits[u][v].find_first();
      if (k == PointSet::npos) {
        r.verdict = false;
        r.witness.sets = {s.space().min_open(t.basis[u]), s.space().min_open(t.basis[v])};
        r.witness.certificates.clear();
        return r;
      }
      if (certify_all) r.witness.certificates.push_back(certify(s, t, u, v, k + 1));
    }
  r.verdict = true;
  if (!certify_all) r.witness.summary = std::to_string(b * b) + " basis pairs hit";
  return r;
}

PropertyReport is_totally_g_transitive(const GSystem& s) {
  PropertyReport r = base_report(s, Property::tgt);
  const auto& it = s.iterates();
  for (std::size_t m = 1; m <= it.horizon(); ++m) {
    PropertyReport sub = is_g_transitive(s.with_map(it.power(m)));
    if (!sub.verdict) {
      r.verdict = false;
      r.witness.sets = std::move(sub.witness.sets);
      r.witness.iterate = m;
      return r;
    }
  }
  r.verdict = true;
  r.witness.summary = "f^m G-transitive for m = 1.." + std::to_string(it.horizon());
  return r;
}

PropertyReport weakly_g_mixing_product(const GSystem& s) {
  PropertyReport inner = is_g_transitive(power_system(s, 2));
  PropertyReport r = base_report(s, Property::wgm);
  r.verdict = inner.verdict;
  if (!inner.verdict) r.witness.sets = std::move(inner.witness.sets);
  return r;
}

PropertyReport weakly_g_mixing_direct(const GSystem& s) {
  PropertyReport r = base_report(s, Property::wgm);
  const HitTable t = hit_table(s);
  const std::size_t b = t.basis.size();
  const Space& x = s.space();
  for (std::size_t u = 0; u < b; ++u)
    for (std::size_t v = 0; v < b; ++v)
      for (std::size_t e = 0; e < b; ++e)
        for (std::size_t f = 0; f < b; ++f)
          if (!t.hits[u][e].intersects(t.hits[v][f])) {
            r.verdict = false;
            r.witness.sets = {x.min_open(t.basis[u]), x.min_open(t.basis[v]), x.min_open(t.basis[e]),
                              x.min_open(t.basis[f])};
            return r;
          }
  r.verdict = true;
  r.witness.summary = std::to_string(b * b * b * b) + " basis quadruples share a hitting k";
  return r;
}

PropertyReport is_weakly_g_mixing(const GSystem& s) {
  PropertyReport direct = weakly_g_mixing_direct(s);
  PropertyReport prod = weakly_g_mixing_product(s);
  if (direct.verdict != prod.verdict)
    throw std::logic_error("weak mixing: product and direct decisions disagree");
  return direct;
}

PropertyReport is_n_fold_transitive(const GSystem& s, std::size_t n, std::size_t bound) {
  if (n == 0) throw PreconditionError("nfold: n must be at least 1");
  std::size_t points = 1, order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    points *= s.size();
    order *= s.group().order();
    if (points > bound || order > bound)
      throw BoundError("nfold: " + std::to_string(n) + "-fold product exceeds bound " + std::to_string(bound));
  }
  PropertyReport r = n == 1 ? is_g_transitive(s) : is_g_transitive(power_system(s, n));
  r.property = Property::nfold;
  r.arity = n;
  r.preconditions = preconditions(s);
  return r;
}

PropertyReport is_strongly_g_mixing(const GSystem& s) {
  PropertyReport r = base_report(s, Property::sgm);
  const HitTable t = hit_table(s);
  const std::size_t p = s.iterates().preperiod();
  const std::size_t b = t.basis.size();
  const bool certify_all = b * b <= kCertificateLimit;
  for (std::size_t u = 0; u < b; ++u)
    for (std::size_t v = 0; v < b; ++v) {
      if (!cycle_covered(t.hits[u][v], p)) {
        r.verdict = false;
        r.witness.sets = {s.space().min_open(t.basis[u]), s.space().min_open(t.basis[v])};
        r.witness.certificates.clear();
        return r;
      }
      if (certify_all) r.witness.certificates.push_back(certify(s, t, u, v, p + 1));
    }
  r.verdict = true;
  r.witness.summary = "every basis pair hits for all k > " + std::to_string(p);
  return r;
}

std::vector<PointSet> orbit_closures(const GSystem& s) {
  std::vector<PointSet> out;
  out.reserve(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) out.push_back(s.space().closure(gf_orbit(s, x)));
  return out;
}

PointSet g_transitive_points(const GSystem& s) {
  PointSet out(s.size());
  const auto closures = orbit_closures(s);
  for (std::size_t x = 0; x < s.size(); ++x)
    if (closures[x].all()) out.set(x);
  return out;
}

PropertyReport is_g_minimal(const GSystem& s) {
  PropertyReport r = base_report(s, Property::gm);
  const auto closures = orbit_closures(s);
  for (std::size_t x = 0; x < s.size(); ++x)
    if (!closures[x].all()) {
      r.verdict = false;
      r.witness.point = x;
      r.witness.sets = {closures[x]};
      return r;
    }
  r.verdict = true;
  return r;
}

std::vector<PointSet> g_minimal_sets(const GSystem& s) {
  // Y is G-minimal iff Y = closure(G_f(y)) for all y in Y and Y is +f invariant;
  // each such Y equals the orbit closure of any of its points.
  const auto closures = orbit_closures(s);
  std::vector<PointSet> out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    const PointSet& c = closures[x];
    if (c.find_first() != x) continue;
    bool terminal = true;
    for_each_member(c, [&](std::size_t y) {
      if (closures[y] != c) terminal = false;
    });
    if (terminal && image(c, s.map()).is_subset_of(c)) out.push_back(c);
  }
  return out;
}

CoverCriterion minimality_cover_criterion(const GSystem& s) {
  CoverCriterion out;
  out.holds = true;
  const Space& x = s.space();
  const std::size_t limit = s.iterates().horizon() + s.size();
  for (auto r : x.basis_points()) {
    PointSet layer = x.min_open(r);
    PointSet acc = s.action().saturate(layer);
    std::optional<std::size_t> found;
    for (std::size_t n = 0;; ++n) {
      if (acc.all()) {
        found = n;
        break;
      }
      if (n == limit) break;
      layer = preimage(layer, s.map());
      acc |= s.action().saturate(layer);
    }
    if (!found) {
      out.holds = false;
      out.failing = r;
      return out;
    }
    out.radius.emplace_back(r, *found);
  }
  return out;
}

PropertyReport cover_report(const GSystem& s) {
  PropertyReport r = base_report(s, Property::cover);
  note_p1(r);
  auto c = minimality_cover_criterion(s);
  r.verdict = c.holds;
  if (c.failing) {
    r.witness.sets = {s.space().min_open(*c.failing)};
  } else {
    std::size_t worst = 0;
    for (auto [p, n] : c.radius) worst = std::max(worst, n);
    r.witness.summary = "every basis open covers X by n=" + std::to_string(worst);
  }
  return r;
}

QuotientMinimality quotient_minimality(const GSystem& s) {
  QuotientSystem q = quotient(s.action(), s.map());
  if (!q.induced) throw PreconditionError("quotient minimality: map is not pseudoequivariant");
  QuotientMinimality out;
  out.gm = is_g_minimal(s).verdict;
  out.induced_minimal = is_g_minimal(GSystem(Action::trivial(q.space), *q.induced)).verdict;
  return out;
}

PropertyReport quotient_minimal_report(const GSystem& s) {
  PropertyReport r = base_report(s, Property::quotient_minimal);
  auto qm = quotient_minimality(s);
  r.verdict = qm.induced_minimal;
  r.witness.summary = std::string("gm=") + (qm.gm ? "true" : "false") +
                      " induced_minimal=" + (qm.induced_minimal ? "true" : "false");
  return r;
}

SgmSufficient sgm_sufficient_condition(const GSystem& s) {
  SgmSufficient out;
  out.rationale = "nonempty finite spaces are second countable and non-meager";
  if (!is_pseudoequivariant(s.action(), s.map()) || !is_g_transitive(s).verdict) return out;
  const PointSet transitive = g_transitive_points(s);
  for_each_member(transitive, [&](std::size_t x) {
    if (out.applies) return;
    // min_open(x) is the smallest neighbourhood and the return condition is monotone
    const PointSet& w = s.space().min_open(x);
    if (n_g_hits(s, w, w).eventual) {
      out.applies = true;
      out.point = x;
    }
  });
  if (out.applies) out.conclusion_checked = is_strongly_g_mixing(s).verdict;
  return out;
}

PropertyReport equivariance_report(const GSystem& s) {
  PropertyReport r = base_report(s, Property::equivariant);
  auto bad = equivariance_failure(s.action(), s.map());
  r.verdict = !bad;
  if (bad) {
    r.witness.element = bad->first;
    r.witness.point = bad->second;
  }
  return r;
}

PropertyReport pseudoequivariance_report(const GSystem& s) {
  PropertyReport r = base_report(s, Property::pseudoequivariant);
  auto bad = pseudoequivariance_failure(s.action(), s.map());
  r.verdict = !bad;
  if (bad) {
    r.witness.point = *bad;
    r.witness.sets = {image(s.action().orbit(*bad), s.map()), s.action().orbit(s.map()[*bad])};
  }
  return r;
}

ProductCriterion product_orbit_criterion(const GSystem& a, const GSystem& b) {
  const GSystem prod = product_system(a, b);
  const auto closures = orbit_closures(prod);
  const std::size_t ny = b.size();
  ProductCriterion out;
  for (GroupElement g = 0; g < a.group().order(); ++g)
    for (GroupElement k = 0; k < b.group().order(); ++k)
      for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < ny; ++y) {
          const PointSet& c = closures[x * ny + y];
          const std::size_t left = a.action().apply(g, a.map()[x]) * ny + y;
          const std::size_t right = x * ny + b.action().apply(k, b.map()[y]);
          if (!c.test(left) || !c.test(right)) {
            out.failing = std::make_tuple(g, k, x, y);
            return out;
          }
        }
  out.holds = true;
  return out;
}

PropertyReport check(const GSystem& s, Property p, std::size_t arity) {
  switch (p) {
    case Property::gt: return is_g_transitive(s);
    case Property::tgt: return is_totally_g_transitive(s);
    case Property::wgm: return is_weakly_g_mixing(s);
    case Property::sgm: return is_strongly_g_mixing(s);
    case Property::gm: return is_g_minimal(s);
    case Property::nfold: return is_n_fold_transitive(s, arity);
    case Property::cover: return cover_report(s);
    case Property::quotient_minimal: return quotient_minimal_report(s);
    case Property::equivariant: return equivariance_report(s);
    case Property::pseudoequivariant: return pseudoequivariance_report(s);
  }
  throw std::logic_error("check: unknown property");
}

}  // namespace gdyn
