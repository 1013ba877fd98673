#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gdyn/point_set.hpp"

namespace gdyn {

/// Finite topological space in Alexandrov form.
///
/// Every point x carries its minimal open neighbourhood min_open(x); the open
/// sets are exactly the unions of these. The constructor enforces
///   x in min_open(x) and  y in min_open(x)  =>  min_open(y) subset of min_open(x),
/// which is what makes the unions a topology.
class Space {
 public:
  Space() = default;
  Space(std::vector<std::string> names, std::vector<PointSet> min_open);

  static Space discrete(std::vector<std::string> names);
  /// Single point named by `name`.
  static Space point(std::string name);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  const PointSet& min_open(std::size_t x) const { return min_open_[x]; }
  const std::vector<PointSet>& min_opens() const { return min_open_; }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full() const { return full_set(size()); }
  PointSet set_of(std::initializer_list<std::string_view> names) const;

  bool is_open(const PointSet& a) const;
  bool is_closed(const PointSet& a) const;
  PointSet closure(const PointSet& a) const;
  PointSet interior(const PointSet& a) const;
  bool is_dense(const PointSet& a) const;
  bool is_nowhere_dense(const PointSet& a) const;

  /// Finite Hausdorff spaces are exactly the discrete ones.
  bool is_discrete() const;

  /// One representative point per distinct minimal open, in point order.
  /// The sets min_open(r) for these r form the minimal basis.
  const std::vector<std::size_t>& basis_points() const { return basis_points_; }

  /// Smallest open set containing `a`.
  PointSet open_hull(const PointSet& a) const;

  std::string format(const PointSet& a) const;

  friend bool operator==(const Space& a, const Space& b) {
    return a.names_ == b.names_ && a.min_open_ == b.min_open_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<PointSet> min_open_;
  std::vector<std::size_t> basis_points_;
};

/// Topology generated by `subbasis` (closure under finite intersection and
/// arbitrary union).
Space space_from_subbasis(std::vector<std::string> names, const std::vector<PointSet>& subbasis);
/// Same, with subbasis members given by point names; unknown names throw TopologyError.
Space space_from_subbasis(std::vector<std::string> names,
                          const std::vector<std::vector<std::string>>& subbasis);

/// Product topology; point (x, y) sits at index x * right.size() + y and is
/// named "(x,y)".
Space product(const Space& left, const Space& right);
/// n-fold product with tuple names "(x1,...,xn)" and row-major indexing.
Space power(const Space& s, std::size_t n);
/// Mixed-radix index decomposition used by power(): last factor varies fastest.
std::vector<std::size_t> power_coordinates(std::size_t index, std::size_t base, std::size_t n);

/// First point x with f(min_open(x)) not inside min_open(f(x)), if any.
std::optional<std::size_t> discontinuity(const Space& from, const Space& to, const PointMap& f);
bool is_continuous(const Space& from, const Space& to, const PointMap& f);
bool is_continuous(const Space& s, const PointMap& f);

/// Every open set, enumerated by unions of minimal opens. Throws BoundError
/// when more than `limit` opens would be produced.
std::vector<PointSet> all_opens(const Space& s, std::size_t limit = 1u << 20);

bool is_homeomorphism(const Space& s, const PointMap& f);

}  // namespace gdyn
