#pragma once

#include <string>
#include <string_view>

#include "gdyn/dynamics.hpp"
#include "gdyn/error.hpp"

namespace gdyn {

/// Axiom violation found while loading a system file.
class ValidationError : public ParseError {
 public:
  enum class Kind { topology, group, action, continuity };
  ValidationError(std::size_t line, Kind kind, const std::string& msg) : ParseError(line, msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Line-oriented system description:
///
///   points a b c          carrier, in order
///   open a b              subbasis member (repeatable; generates the topology)
///   group e s             group elements        (optional; default trivial)
///   identity e
///   mul s s e             g h gh, one per pair
///   act s a b             g x g.x, one per pair
///   map a b               x f(x), one per point
///
/// '#' starts a comment.
GSystem parse_system(std::string_view text);
GSystem read_system_file(const std::string& path);

/// Canonical form: points as listed, distinct minimal opens as subbasis lines
/// sorted lexicographically, tables row-major.
std::string serialize_system(const GSystem& s);

}  // namespace gdyn
