#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "gdyn/algebra.hpp"
#include "gdyn/point_set.hpp"
#include "gdyn/topology.hpp"

namespace gdyn {

/// Iterates f^1, f^2, ..., f^(p+q) of a self-map with the least preperiod p and
/// period q such that f^(p+q) = f^p (f^0 is the identity).
class IterateCache {
 public:
  explicit IterateCache(const PointMap& f);

  std::size_t preperiod() const { return preperiod_; }
  std::size_t period() const { return period_; }
  /// p + q, the number of stored powers.
  std::size_t horizon() const { return powers_.size(); }

  /// Index in [1, p+q] whose table equals f^m, for m >= 1.
  std::size_t reduce(std::size_t m) const;
  /// Table of f^m for any m >= 1.
  const PointMap& power(std::size_t m) const { return powers_[reduce(m) - 1]; }
  const std::vector<PointMap>& powers() const { return powers_; }

 private:
  std::vector<PointMap> powers_;
  std::size_t preperiod_ = 0;
  std::size_t period_ = 1;
};

/// A G-space together with a continuous self-map.
class GSystem {
 public:
  GSystem() = default;
  /// Throws ContinuityError naming the first point where continuity fails.
  GSystem(Action action, PointMap f);

  const Action& action() const { return *action_; }
  const Space& space() const { return action_->space(); }
  const Group& group() const { return action_->group(); }
  const PointMap& map() const { return f_; }
  std::size_t size() const { return f_.size(); }
  const IterateCache& iterates() const { return *iterates_; }

  /// Same action, map replaced by `g` (which must be continuous).
  GSystem with_map(PointMap g) const;
  /// Same space and map under the trivial group.
  GSystem with_trivial_group() const;

 private:
  std::shared_ptr<const Action> action_;
  PointMap f_;
  std::shared_ptr<const IterateCache> iterates_;
};

/// f x h on the product space under G x H.
GSystem product_system(const GSystem& a, const GSystem& b);
/// n-fold product f x ... x f under G^n.
GSystem power_system(const GSystem& s, std::size_t n);

PointSet f_orbit(const GSystem& s, std::size_t x);
/// G_f(x) = G(O_f(x)).
PointSet gf_orbit(const GSystem& s, std::size_t x);

PointSet periodic_points(const GSystem& s);
/// (x, G_f-prime period) for every G_f-periodic x, in point order.
std::vector<std::pair<std::size_t, std::size_t>> gf_periodic_points(const GSystem& s);
PointSet gf_periodic_set(const GSystem& s);

/// Least fixed point of A -> A u G(A) u f(A).
PointSet saturate_forward(const GSystem& s, const PointSet& a);
/// Least fixed point of A -> A u G(A) u f^{-1}(A).
PointSet saturate_backward(const GSystem& s, const PointSet& a);

struct Invariance {
  bool plus_f = false;       // f(A) subset of A
  bool minus_f = false;      // f^{-1}(A) subset of A
  bool f_invariant = false;  // f(A) = A
  bool g_invariant = false;  // g.A subset of A for all g
};
Invariance invariance(const GSystem& s, const PointSet& a);

}  // namespace gdyn
