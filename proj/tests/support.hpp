#pragma once

#include <string>
#include <vector>

#include "gdyn/algebra.hpp"
#include "gdyn/dynamics.hpp"
#include "gdyn/topology.hpp"

namespace gdyn::test {

inline std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

// {a,b} with {a} open.
inline Space sierpinski() { return space_from_subbasis({"a", "b"}, std::vector<std::vector<std::string>>{{"a"}}); }

inline Space discrete(std::size_t n) { return Space::discrete(numbered(n)); }

inline GSystem trivial_system(const Space& s, PointMap f) { return GSystem(Action::trivial(s), std::move(f)); }

// Z4 rotation x -> x+1 on the discrete 4-point space.
inline GSystem rot4() { return trivial_system(discrete(4), {1, 2, 3, 0}); }

// Z2 acting by x -> x+2 on discrete Z4, f = x+1.
inline Action z2_plus2() { return Action(Group::cyclic(2), discrete(4), {{0, 1, 2, 3}, {2, 3, 0, 1}}); }
inline GSystem z4mod2() { return GSystem(z2_plus2(), {1, 2, 3, 0}); }

// Z2 swapping the points of discrete {a,b}.
inline Action z2_swap() { return Action(Group::cyclic(2), Space::discrete({"a", "b"}), {{0, 1}, {1, 0}}); }

}  // namespace gdyn::test
