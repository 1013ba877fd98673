#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "gdyn/dynamics.hpp"

namespace gdyn {

enum class Property {
  gt,    ///< G-transitive
  tgt,   ///< totally G-transitive
  wgm,   ///< weakly G-mixing
  sgm,   ///< strongly G-mixing
  gm,    ///< G-minimal
  nfold, ///< n-fold product transitive
  cover, ///< open-cover characterization of G-minimality
  quotient_minimal,
  equivariant,
  pseudoequivariant,
};

std::string_view tag(Property p);
std::optional<Property> property_from_tag(std::string_view tag);

/// k and group element witnessing g.f^k(min_open(u)) meets min_open(v).
struct Certificate {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t k = 0;
  GroupElement g = 0;
};

struct Witness {
  /// False verdicts: the failing basis opens, (U, V) or (U, V, E, F).
  std::vector<PointSet> sets;
  /// Iterate exponent m for total transitivity.
  std::optional<std::size_t> iterate;
  /// Point witness (G-minimality, equivariance failures).
  std::optional<std::size_t> point;
  std::optional<GroupElement> element;
  std::vector<Certificate> certificates;
  std::string summary;
};

struct Preconditions {
  bool pseudoequivariant = false;  ///< P1
  bool dense_gf_periodic = false;  ///< G_f-periodic points dense (P2 = P1 and this)
  bool p2() const { return pseudoequivariant && dense_gf_periodic; }
};

struct PropertyReport {
  Property property = Property::gt;
  std::size_t arity = 1;  ///< n for nfold
  bool verdict = false;
  Witness witness;
  Preconditions preconditions;
  std::vector<std::string> notes;
};

/// Certificates are attached to true verdicts only up to this many entries.
inline constexpr std::size_t kCertificateLimit = 10000;
/// Default bound on carrier size and group order for n-fold products.
inline constexpr std::size_t kProductBound = 4096;

Preconditions preconditions(const GSystem& s);

/// Set of k (reduced into [1, p+q]) with g.f^k(U) meeting V for some g.
struct HitProfile {
  std::vector<std::size_t> hit_ks;
  /// Every k of the periodic part hits, i.e. hits hold for all large k.
  bool eventual = false;
};
HitProfile n_g_hits(const GSystem& s, const PointSet& u, const PointSet& v);

PropertyReport is_g_transitive(const GSystem& s);
PropertyReport is_totally_g_transitive(const GSystem& s);
PropertyReport is_weakly_g_mixing(const GSystem& s);
/// f x f as a G x G system on X x X, decided by is_g_transitive.
PropertyReport weakly_g_mixing_product(const GSystem& s);
/// Basis quadruples (U, V, E, F) with a common k.
PropertyReport weakly_g_mixing_direct(const GSystem& s);
PropertyReport is_n_fold_transitive(const GSystem& s, std::size_t n, std::size_t bound = kProductBound);
PropertyReport is_strongly_g_mixing(const GSystem& s);
PropertyReport is_g_minimal(const GSystem& s);
PropertyReport equivariance_report(const GSystem& s);
PropertyReport pseudoequivariance_report(const GSystem& s);

/// Points whose G_f-orbit is dense.
PointSet g_transitive_points(const GSystem& s);
/// closure(G_f(x)) for every x.
std::vector<PointSet> orbit_closures(const GSystem& s);
/// All G-minimal sets, in order of smallest member.
std::vector<PointSet> g_minimal_sets(const GSystem& s);

struct CoverCriterion {
  bool holds = false;
  /// (basis point, least n) for each basis open that is covered.
  std::vector<std::pair<std::size_t, std::size_t>> radius;
  std::optional<std::size_t> failing;  ///< basis point whose open never covers X
};
/// For every basis open U, some n with the union of g.f^{-k}(U), 0 <= k <= n, equal to X.
CoverCriterion minimality_cover_criterion(const GSystem& s);
PropertyReport cover_report(const GSystem& s);

struct QuotientMinimality {
  bool gm = false;
  bool induced_minimal = false;
};
/// Throws PreconditionError unless f is pseudoequivariant.
QuotientMinimality quotient_minimality(const GSystem& s);
PropertyReport quotient_minimal_report(const GSystem& s);

struct SgmSufficient {
  bool applies = false;
  bool conclusion_checked = false;
  std::optional<std::size_t> point;
  std::string rationale;
};
/// Transitive point with eventual self-return of its neighbourhoods, under P1 and GT.
SgmSufficient sgm_sufficient_condition(const GSystem& s);

struct ProductCriterion {
  bool holds = false;
  /// (g, k, x, y) for which (g.f(x), y) or (x, k.h(y)) leaves the orbit closure of (x, y).
  std::optional<std::tuple<GroupElement, GroupElement, std::size_t, std::size_t>> failing;
};
/// Orbit-closure membership test for products of G-minimal maps, evaluated on
/// the product system of `a` and `b`.
ProductCriterion product_orbit_criterion(const GSystem& a, const GSystem& b);

/// Dispatch by property (nfold uses `arity`).
PropertyReport check(const GSystem& s, Property p, std::size_t arity = 1);

}  // namespace gdyn
