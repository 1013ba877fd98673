#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gdyn/corpus.hpp"

namespace gdyn {

/// Every verdict the implication laws talk about, computed once.
struct SystemProfile {
  bool p1 = false;
  bool p2 = false;
  bool discrete = false;
  bool gt = false;
  bool tgt = false;
  bool wgm = false;
  bool sgm = false;
  bool gm = false;
  bool equivariant = false;
  bool per_dense = false;
  bool gf_periodic_dense = false;
  std::optional<bool> threefold;        ///< evaluated when P1 and WGM hold
  SgmSufficient sgm_sufficient;
  std::vector<PointSet> minimal_sets;
  bool image_dense = false;
  bool onto = false;
  bool single_gf_orbit = false;         ///< X = G_f(x) for every x
  std::optional<bool> cover;            ///< evaluated under P1
  std::optional<QuotientMinimality> quotient;  ///< evaluated under P1
};

SystemProfile profile(const GSystem& s);

struct LawOutcome {
  std::string law;
  bool premise = false;  ///< hypotheses held, so the law was actually tested
  bool holds = true;
};

/// Every implication of the diagram and the minimality results, evaluated on `s`.
std::vector<LawOutcome> evaluate_laws(const GSystem& s);
std::vector<LawOutcome> evaluate_laws(const SystemProfile& p, const GSystem& s);
/// Names of violated laws.
std::vector<std::string> implication_violations(const GSystem& s);

struct Violation {
  std::size_t trial = 0;
  std::string law;
  std::string system;  ///< serialized system file
};

struct LawTally {
  std::size_t premise = 0;
  std::size_t violations = 0;
};

struct SuiteReport {
  std::size_t systems = 0;
  std::map<std::string, LawTally> tallies;
  std::vector<Violation> violations;
};

/// Trial i draws from configs[i % configs.size()] with seed offset i.
SuiteReport run_implication_suite(const std::vector<GeneratorConfig>& configs, std::size_t trials);
SuiteReport run_implication_suite(const std::vector<GSystem>& systems);

/// key=value lines, one per law, then one per violation.
std::string format_suite_report(const SuiteReport& r);

}  // namespace gdyn
