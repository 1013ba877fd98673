#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdyn/point_set.hpp"
#include "gdyn/topology.hpp"

namespace gdyn {

using GroupElement = std::size_t;

/// Finite group given by its multiplication table; axioms are checked
/// exhaustively on construction.
class Group {
 public:
  Group() : Group(std::vector<std::string>{"e"}, 0, {{0}}) {}
  Group(std::vector<std::string> names, GroupElement identity,
        std::vector<std::vector<GroupElement>> mul);

  static Group trivial();
  static Group cyclic(std::size_t n);
  static Group klein();
  static Group symmetric3();

  std::size_t order() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(GroupElement g) const { return names_[g]; }
  std::optional<GroupElement> index_of(std::string_view name) const;
  GroupElement identity() const { return identity_; }
  GroupElement mul(GroupElement a, GroupElement b) const { return mul_[a][b]; }
  GroupElement inverse(GroupElement a) const { return inverse_[a]; }
  const std::vector<std::vector<GroupElement>>& table() const { return mul_; }
  bool is_trivial() const { return order() == 1; }

  friend bool operator==(const Group& a, const Group& b) {
    return a.names_ == b.names_ && a.identity_ == b.identity_ && a.mul_ == b.mul_;
  }

 private:
  std::vector<std::string> names_;
  GroupElement identity_ = 0;
  std::vector<std::vector<GroupElement>> mul_;
  std::vector<GroupElement> inverse_;
};

/// G x H with pair elements named "(g,h)" at index g * |H| + h.
Group direct_product(const Group& a, const Group& b);
/// G^n with row-major tuple indexing.
Group direct_power(const Group& g, std::size_t n);

/// Catalog: trivial, Z1..Z8, Z2xZ2, S3.
std::optional<Group> catalog_group(std::string_view name);
const std::vector<std::string>& catalog_names();

/// Continuous action of a finite group on a finite space, as a table of the
/// maps T_g = act(g, .).
class Action {
 public:
  Action() = default;
  Action(Group group, Space space, std::vector<PointMap> table);

  static Action trivial(Group group, Space space);
  static Action trivial(Space space) { return trivial(Group::trivial(), std::move(space)); }

  const Group& group() const { return group_; }
  const Space& space() const { return space_; }
  std::size_t apply(GroupElement g, std::size_t x) const { return table_[g][x]; }
  const PointMap& map_of(GroupElement g) const { return table_[g]; }
  const std::vector<PointMap>& table() const { return table_; }
  bool is_trivial() const;

  PointSet translate(GroupElement g, const PointSet& a) const { return image(a, table_[g]); }
  PointSet orbit(std::size_t x) const;
  /// G(V), the union of the orbits of the members of V.
  PointSet saturate(const PointSet& v) const;
  /// Orbit partition in order of smallest member.
  std::vector<PointSet> orbits() const;

  friend bool operator==(const Action& a, const Action& b) {
    return a.group_ == b.group_ && a.space_ == b.space_ && a.table_ == b.table_;
  }

 private:
  Group group_;
  Space space_;
  std::vector<PointMap> table_;
};

/// (g,h).(x,y) = (g.x, h.y) on the product space.
Action product_action(const Action& a, const Action& b);
/// n-fold coordinatewise action of G^n on X^n.
Action power_action(const Action& a, std::size_t n);

/// First (g, x) with f(g.x) != g.f(x).
std::optional<std::pair<GroupElement, std::size_t>> equivariance_failure(const Action& a, const PointMap& f);
/// First x with f(G(x)) != G(f(x)).
std::optional<std::size_t> pseudoequivariance_failure(const Action& a, const PointMap& f);
bool is_equivariant(const Action& a, const PointMap& f);
bool is_pseudoequivariant(const Action& a, const PointMap& f);

/// Orbit space X/G with its quotient topology.
struct QuotientSystem {
  Space space;                     ///< carrier = orbits, named "G(rep)"
  PointMap proj;                   ///< orbit map p : X -> X/G
  std::vector<PointSet> orbits;    ///< p^{-1} of each quotient point
  std::optional<PointMap> induced; ///< present iff f is pseudoequivariant
};

/// Orbit space of the action alone (no induced map).
QuotientSystem quotient(const Action& a);
/// Orbit space plus the induced map when f is pseudoequivariant.
QuotientSystem quotient(const Action& a, const PointMap& f);

/// Lift of a quotient subset to the source carrier.
PointSet lift(const QuotientSystem& q, const PointSet& s);

/// All homeomorphisms of a space (exhaustive; intended for |X| <= 8).
std::vector<PointMap> automorphisms(const Space& s);

/// Generating set found greedily (elements in index order).
std::vector<GroupElement> generators(const Group& g);

}  // namespace gdyn
