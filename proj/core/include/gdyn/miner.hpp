#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdyn/corpus.hpp"

namespace gdyn {

/// Atom of a target conjunction; `name` is one of
/// gt tgt wgm sgm gm equivariant pseudoequivariant p2.
struct Literal {
  std::string name;
  bool positive = true;
};

struct MinerTarget {
  std::vector<Literal> literals;
  std::size_t budget = 0;  ///< random trials after the sweep
};

/// Parses "gt & !tgt" (also "," as separator, "~" as negation). Throws
/// ExpressionError on unknown atoms or empty expressions.
MinerTarget parse_target(std::string_view expr, std::size_t budget);
std::string format_target(const MinerTarget& t);

/// Checker evaluation of a conjunction.
bool satisfies(const GSystem& s, const MinerTarget& t);
/// Oracle evaluation of a conjunction.
bool oracle_satisfies(const GSystem& s, const MinerTarget& t);

struct MineResult {
  std::optional<GSystem> witness;
  std::string origin;  ///< "sweep:<index>" or "trial:<index>"
  std::size_t sweep_systems = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

/// Exhaustive sweep of all systems with at most `sweep_points` points, then
/// `target.budget` random trials drawn with `config`. Witnesses are
/// re-verified by the oracle before they are returned.
MineResult mine(const MinerTarget& target, const GeneratorConfig& config, std::size_t sweep_points = 3);

/// "exhausted target=... seed=... budget=... sweep_systems=... trials=..."
std::string format_exhausted(const MinerTarget& t, const MineResult& r);

}  // namespace gdyn
