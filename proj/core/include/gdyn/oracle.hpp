#pragma once

#include <cstddef>
#include <vector>

#include "gdyn/dynamics.hpp"

/// Definition-level decision procedures.
///
/// Everything here quantifies over every open set (found by scanning all
/// subsets of the carrier), searches group elements explicitly, and computes
/// its own iterate horizon by repeated composition. None of it goes through
/// the basis reduction, saturation shortcut or iterate cache used by the
/// checkers, so the two can be compared. Intended for carriers of at most a
/// dozen points (minimal sets scan all subsets).
namespace gdyn::oracle {

/// All open sets, including the empty set.
std::vector<PointSet> opens(const Space& s);

/// x is in the closure of A iff every open set containing x meets A.
PointSet closure(const std::vector<PointSet>& opens, const PointSet& a);

/// Smallest H with f^H equal to some earlier f^j, 0 <= j < H.
std::size_t horizon(const PointMap& f);

/// Tables f^0 .. f^count.
std::vector<PointMap> powers(const PointMap& f, std::size_t count);

bool g_transitive(const GSystem& s);
bool totally_g_transitive(const GSystem& s);
bool weakly_g_mixing(const GSystem& s);
bool strongly_g_mixing(const GSystem& s);
bool g_minimal(const GSystem& s);
bool equivariant(const GSystem& s);
bool pseudoequivariant(const GSystem& s);
std::vector<PointSet> g_minimal_sets(const GSystem& s);
bool cover_criterion(const GSystem& s);

struct QuotientVerdict {
  bool gm = false;
  bool induced_minimal = false;
  bool induced_defined = false;
};
QuotientVerdict quotient_minimality(const GSystem& s);

/// g.f^k(U) misses V for every g and every 1 <= k <= horizon.
bool pair_never_hits(const GSystem& s, const PointSet& u, const PointSet& v);
/// No common k with g.f^k(U) meeting E and h.f^k(V) meeting F.
bool quadruple_never_hits(const GSystem& s, const PointSet& u, const PointSet& v, const PointSet& e,
                          const PointSet& f);

}  // namespace gdyn::oracle
