#include "gdyn/dynamics.hpp"

#include <map>

#include "gdyn/error.hpp"

namespace gdyn {

IterateCache::IterateCache(const PointMap& f) {
  std::map<PointMap, std::size_t> seen;
  PointMap current = identity_map(f.size());
  seen.emplace(current, 0);
  for (std::size_t k = 1;; ++k) {
    current = compose(f, current);
    powers_.push_back(current);
    auto [it, fresh] = seen.emplace(current, k);
    if (!fresh) {
      preperiod_ = it->second;
      period_ = k - it->second;
      return;
    }
  }
}

std::size_t IterateCache::reduce(std::size_t m) const {
  if (m == 0) throw PreconditionError("iterates: f^0 is not cached");
  const std::size_t h = horizon();
  if (m <= h) return m;
  return preperiod_ + (m - preperiod_ - 1) % period_ + 1;
}

GSystem::GSystem(Action action, PointMap f)
    : action_(std::make_shared<const Action>(std::move(action))), f_(std::move(f)) {
  const Space& x = action_->space();
  if (f_.size() != x.size()) throw ContinuityError("map: not total on the carrier", 0);
  for (std::size_t i = 0; i < f_.size(); ++i)
    if (f_[i] >= x.size()) throw ContinuityError("map: image of '" + x.name(i) + "' leaves the carrier", i);
  if (auto bad = discontinuity(x, x, f_))
    throw ContinuityError("map: not continuous at '" + x.name(*bad) + "': f(min_open(" + x.name(*bad) +
                              ")) is not contained in min_open(" + x.name(f_[*bad]) + ")",
                          *bad);
  iterates_ = std::make_shared<const IterateCache>(f_);
}

GSystem GSystem::with_map(PointMap g) const {
  GSystem out;
  out.action_ = action_;
  if (auto bad = discontinuity(space(), space(), g))
    throw ContinuityError("map: not continuous at '" + space().name(*bad) + "'", *bad);
  out.f_ = std::move(g);
  out.iterates_ = std::make_shared<const IterateCache>(out.f_);
  return out;
}

GSystem GSystem::with_trivial_group() const { return GSystem(Action::trivial(space()), f_); }

GSystem product_system(const GSystem& a, const GSystem& b) {
  const std::size_t m = b.size();
  PointMap f(a.size() * m);
  for (std::size_t p = 0; p < f.size(); ++p) f[p] = a.map()[p / m] * m + b.map()[p % m];
  return GSystem(product_action(a.action(), b.action()), std::move(f));
}

GSystem power_system(const GSystem& s, std::size_t n) {
  Action act = power_action(s.action(), n);
  const std::size_t base = s.size();
  PointMap f(act.space().size());
  for (std::size_t p = 0; p < f.size(); ++p) {
    auto c = power_coordinates(p, base, n);
    std::size_t idx = 0;
    for (auto ci : c) idx = idx * base + s.map()[ci];
    f[p] = idx;
  }
  return GSystem(std::move(act), std::move(f));
}

PointSet f_orbit(const GSystem& s, std::size_t x) {
  PointSet out(s.size());
  std::size_t y = x;
  while (!out.test(y)) {
    out.set(y);
    y = s.map()[y];
  }
  return out;
}

PointSet gf_orbit(const GSystem& s, std::size_t x) { return s.action().saturate(f_orbit(s, x)); }

PointSet periodic_points(const GSystem& s) {
  PointSet out(s.size());
  for (const auto& p : s.iterates().powers())
    for (std::size_t x = 0; x < s.size(); ++x)
      if (p[x] == x) out.set(x);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> gf_periodic_points(const GSystem& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& it = s.iterates();
  for (std::size_t x = 0; x < s.size(); ++x) {
    const PointSet orbit = s.action().orbit(x);
    // g.f^k(x) = x for some g  <=>  f^k(x) in G(x); the k-sequence repeats after p+q
    for (std::size_t k = 1; k <= it.horizon(); ++k)
      if (orbit.test(it.power(k)[x])) {
        out.emplace_back(x, k);
        break;
      }
  }
  return out;
}

PointSet gf_periodic_set(const GSystem& s) {
  PointSet out(s.size());
  for (auto [x, k] : gf_periodic_points(s)) out.set(x);
  return out;
}

PointSet saturate_forward(const GSystem& s, const PointSet& a) {
  PointSet cur = a;
  for (;;) {
    PointSet next = cur | s.action().saturate(cur) | image(cur, s.map());
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

PointSet saturate_backward(const GSystem& s, const PointSet& a) {
  PointSet cur = a;
  for (;;) {
    PointSet next = cur | s.action().saturate(cur) | preimage(cur, s.map());
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Invariance invariance(const GSystem& s, const PointSet& a) {
  Invariance inv;
  const PointSet fa = image(a, s.map());
  inv.plus_f = fa.is_subset_of(a);
  inv.minus_f = preimage(a, s.map()).is_subset_of(a);
  inv.f_invariant = fa == a;
  inv.g_invariant = s.action().saturate(a) == a;
  return inv;
}

}  // namespace gdyn
