#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdyn/checkers.hpp"
#include "gdyn/dynamics.hpp"

namespace gdyn {

/// Named system with the verdicts it is known to have.
///
/// Expectation keys are property tags ("gt", "tgt", "wgm", "sgm", "gm",
/// "equivariant", "pseudoequivariant", "cover", "quotient-minimal") plus
///   "gt:f2"             G-transitivity of f^2,
///   "gt:trivial-group"  G-transitivity after replacing the group by {e}.
struct Fixture {
  std::string name;
  GSystem system;
  std::map<std::string, bool> expected;
  std::string note;
};

std::vector<Fixture> fixtures();
/// Throws std::out_of_range for an unknown name.
Fixture fixture(std::string_view name);

/// Evaluate one expectation key with the checkers, or with the oracle.
bool evaluate_expectation(const GSystem& s, std::string_view key, bool use_oracle);

enum class TopologyMode { discrete, preorder, mixed };

std::optional<TopologyMode> topology_mode_from_string(std::string_view s);

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t min_points = 1;
  std::size_t max_points = 5;
  std::vector<std::string> groups{"trivial", "Z2", "Z3", "Z4", "Z2xZ2"};
  TopologyMode mode = TopologyMode::mixed;
  bool pseudoequivariant_only = false;
  /// Chance, in percent, of each ordered pair entering the random relation.
  unsigned edge_percent = 30;
  std::size_t rejection_budget = 4000;
};

/// Random system; identical configs give identical systems. Throws
/// GenerationError when the pseudoequivariance filter exhausts its budget.
GSystem generate(const GeneratorConfig& config);

/// Every topology on n labelled points (as minimal-open families), n <= 4.
std::vector<Space> all_spaces(std::size_t n);
/// Every action of `g` on `s` (homomorphisms into the homeomorphism group).
std::vector<Action> all_actions(const Group& g, const Space& s);
/// Every continuous self-map of `s`.
std::vector<PointMap> all_continuous_maps(const Space& s);

/// Visit every system with 1..max_points points over the named groups; the
/// visitor returns false to stop. Returns the number of systems visited.
std::size_t enumerate_systems(std::size_t max_points, const std::vector<std::string>& groups,
                              const std::function<bool(const GSystem&)>& visit);

}  // namespace gdyn
