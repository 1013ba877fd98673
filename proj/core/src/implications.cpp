#include "gdyn/implications.hpp"

#include <sstream>

#include "gdyn/error.hpp"
#include "gdyn/system_file.hpp"

namespace gdyn {

SystemProfile profile(const GSystem& s) {
  SystemProfile p;
  const Space& x = s.space();
  p.p1 = is_pseudoequivariant(s.action(), s.map());
  p.gf_periodic_dense = x.is_dense(gf_periodic_set(s));
  p.p2 = p.p1 && p.gf_periodic_dense;
  p.discrete = x.is_discrete();
  p.gt = is_g_transitive(s).verdict;
  p.tgt = is_totally_g_transitive(s).verdict;
  p.wgm = is_weakly_g_mixing(s).verdict;
  p.sgm = is_strongly_g_mixing(s).verdict;
  p.gm = is_g_minimal(s).verdict;
  p.equivariant = is_equivariant(s.action(), s.map());
  p.per_dense = x.is_dense(periodic_points(s));
  if (p.p1 && p.wgm) p.threefold = is_n_fold_transitive(s, 3).verdict;
  p.sgm_sufficient = sgm_sufficient_condition(s);
  p.minimal_sets = g_minimal_sets(s);
  const PointSet fx = image(x.full(), s.map());
  p.image_dense = x.is_dense(fx);
  p.onto = fx.all();
  p.single_gf_orbit = true;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!gf_orbit(s, i).all()) p.single_gf_orbit = false;
  if (p.p1) {
    p.cover = minimality_cover_criterion(s).holds;
    p.quotient = quotient_minimality(s);
  }
  return p;
}

std::vector<LawOutcome> evaluate_laws(const SystemProfile& p, const GSystem& s) {
  std::vector<LawOutcome> out;
  auto law = [&](const char* name, bool premise, bool conclusion) {
    out.push_back({name, premise, !premise || conclusion});
  };
  law("SGM=>WGM", p.sgm, p.wgm);
  law("SGM=>TGT", p.sgm, p.tgt);
  law("TGT=>GT", p.tgt, p.gt);
  law("GM=>GT", p.gm, p.gt);
  law("P1&WGM=>TGT", p.p1 && p.wgm, p.tgt);
  law("P1&WGM=>3-fold", p.p1 && p.wgm, p.threefold.value_or(false));
  law("P1&P2&TGT=>WGM", p.p2 && p.tgt, p.wgm);
  law("return-condition=>SGM", p.sgm_sufficient.applies, p.sgm_sufficient.conclusion_checked);
  law("Per-dense=>GfPer-dense", p.per_dense, p.gf_periodic_dense);
  law("equivariant=>pseudoequivariant", p.equivariant, p.p1);
  law("P1&GM=>image-dense", p.p1 && p.gm, p.image_dense);
  law("P1&GM&discrete=>onto", p.p1 && p.gm && p.discrete, p.onto);
  law("P1&GM&discrete=>single-Gf-orbit", p.p1 && p.gm && p.discrete, p.single_gf_orbit);
  {
    bool ok = true;
    for (const auto& m : p.minimal_sets)
      if (!m.all() && !s.space().is_nowhere_dense(m)) ok = false;
    law("P1&GT=>minimal-sets-full-or-nowhere-dense", p.p1 && p.gt, ok);
  }
  law("P1=>(GM<=>quotient-minimal)", p.p1, p.quotient && p.quotient->gm == p.gm && p.quotient->induced_minimal == p.gm);
  law("P1=>(GM<=>cover)", p.p1, p.cover && *p.cover == p.gm);
  law("P1=>minimal-set-exists", p.p1, !p.minimal_sets.empty());
  {
    bool disjoint = true;
    for (std::size_t i = 0; i < p.minimal_sets.size(); ++i)
      for (std::size_t j = i + 1; j < p.minimal_sets.size(); ++j)
        if (p.minimal_sets[i].intersects(p.minimal_sets[j])) disjoint = false;
    law("P1=>minimal-sets-disjoint", p.p1, disjoint);
  }
  {
    bool invariant = true;
    for (const auto& m : p.minimal_sets)
      if (image(m, s.map()) != m) invariant = false;
    law("P1&discrete=>minimal-sets-f-invariant", p.p1 && p.discrete, invariant);
  }
  return out;
}

std::vector<LawOutcome> evaluate_laws(const GSystem& s) { return evaluate_laws(profile(s), s); }

std::vector<std::string> implication_violations(const GSystem& s) {
  std::vector<std::string> out;
  for (const auto& o : evaluate_laws(s))
    if (!o.holds) out.push_back(o.law);
  return out;
}

namespace {

void record(SuiteReport& r, std::size_t trial, const GSystem& s) {
  ++r.systems;
  for (const auto& o : evaluate_laws(s)) {
    auto& t = r.tallies[o.law];
    if (o.premise) ++t.premise;
    if (!o.holds) {
      ++t.violations;
      r.violations.push_back({trial, o.law, serialize_system(s)});
    }
  }
}

}  // namespace

SuiteReport run_implication_suite(const std::vector<GeneratorConfig>& configs, std::size_t trials) {
  SuiteReport r;
  if (configs.empty()) return r;
  for (std::size_t i = 0; i < trials; ++i) {
    GeneratorConfig c = configs[i % configs.size()];
    c.seed += i;
    // an exhausted rejection budget re-seeds the trial
    for (std::size_t attempt = 0;; ++attempt) {
      try {
        record(r, i, generate(c));
        break;
      } catch (const GenerationError&) {
        if (attempt == 8) throw;
        c.seed += 0x9e3779b97f4a7c15ull;
      }
    }
  }
  return r;
}

SuiteReport run_implication_suite(const std::vector<GSystem>& systems) {
  SuiteReport r;
  for (std::size_t i = 0; i < systems.size(); ++i) record(r, i, systems[i]);
  return r;
}

std::string format_suite_report(const SuiteReport& r) {
  std::ostringstream os;
  os << "systems=" << r.systems << " violations=" << r.violations.size() << '\n';
  for (const auto& [law, t] : r.tallies)
    os << "law=" << law << " tested=" << t.premise << " violations=" << t.violations << '\n';
  for (const auto& v : r.violations) {
    os << "violation trial=" << v.trial << " law=" << v.law << '\n';
    std::istringstream body(v.system);
    for (std::string line; std::getline(body, line);) os << "  " << line << '\n';
  }
  return os.str();
}

}  // namespace gdyn
