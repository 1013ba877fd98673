#include "gdyn/miner.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "gdyn/error.hpp"
#include "gdyn/oracle.hpp"

namespace gdyn {

namespace {

// canonical names in increasing evaluation cost
constexpr std::array<std::string_view, 8> kAtoms{"pseudoequivariant", "equivariant", "gm", "gt",
                                                 "sgm", "p2", "tgt", "wgm"};

std::string canonical_atom(std::string a) {
  std::transform(a.begin(), a.end(), a.begin(), [](unsigned char c) { return std::tolower(c); });
  if (a == "p1" || a == "pseq") return "pseudoequivariant";
  if (a == "eq") return "equivariant";
  for (auto atom : kAtoms)
    if (atom == a) return a;
  return {};
}

std::size_t cost_rank(const std::string& a) {
  return static_cast<std::size_t>(std::find(kAtoms.begin(), kAtoms.end(), a) - kAtoms.begin());
}

bool checker_value(const GSystem& s, const std::string& atom) {
  if (atom == "pseudoequivariant") return is_pseudoequivariant(s.action(), s.map());
  if (atom == "equivariant") return is_equivariant(s.action(), s.map());
  if (atom == "gm") return is_g_minimal(s).verdict;
  if (atom == "gt") return is_g_transitive(s).verdict;
  if (atom == "sgm") return is_strongly_g_mixing(s).verdict;
  if (atom == "p2") return preconditions(s).p2();
  if (atom == "tgt") return is_totally_g_transitive(s).verdict;
  if (atom == "wgm") return is_weakly_g_mixing(s).verdict;
  throw std::logic_error("miner: unknown atom " + atom);
}

bool oracle_value(const GSystem& s, const std::string& atom) {
  if (atom == "pseudoequivariant") return oracle::pseudoequivariant(s);
  if (atom == "equivariant") return oracle::equivariant(s);
  if (atom == "gm") return oracle::g_minimal(s);
  if (atom == "gt") return oracle::g_transitive(s);
  if (atom == "sgm") return oracle::strongly_g_mixing(s);
  if (atom == "p2") {
    if (!oracle::pseudoequivariant(s)) return false;
    // G_f-periodic: g.f^k(x) = x for some g and 1 <= k <= horizon
    const auto tables = oracle::powers(s.map(), oracle::horizon(s.map()));
    PointSet per(s.size());
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t k = 1; k < tables.size() && !per.test(x); ++k)
        for (GroupElement g = 0; g < s.group().order(); ++g)
          if (s.action().apply(g, tables[k][x]) == x) per.set(x);
    return oracle::closure(oracle::opens(s.space()), per).all();
  }
  if (atom == "tgt") return oracle::totally_g_transitive(s);
  if (atom == "wgm") return oracle::weakly_g_mixing(s);
  throw std::logic_error("miner: unknown atom " + atom);
}

std::optional<GSystem> verified(const GSystem& s, const MinerTarget& t) {
  if (!satisfies(s, t)) return std::nullopt;
  if (!oracle_satisfies(s, t)) throw std::logic_error("miner: checker witness rejected by the oracle");
  return s;
}

}  // namespace

MinerTarget parse_target(std::string_view expr, std::size_t budget) {
  MinerTarget t;
  t.budget = budget;
  std::string token;
  auto flush = [&]() {
    std::string trimmed;
    for (char c : token)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    token.clear();
    if (trimmed.empty()) throw ExpressionError("target: empty literal in '" + std::string(expr) + "'");
    bool positive = true;
    std::size_t i = 0;
    while (i < trimmed.size() && (trimmed[i] == '!' || trimmed[i] == '~')) {
      positive = !positive;
      ++i;
    }
    std::string atom = canonical_atom(trimmed.substr(i));
    if (atom.empty()) throw ExpressionError("target: unknown atom '" + trimmed.substr(i) + "'");
    t.literals.push_back({atom, positive});
  };
  for (char c : expr) {
    if (c == '&' || c == ',') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  std::stable_sort(t.literals.begin(), t.literals.end(),
                   [](const Literal& a, const Literal& b) { return cost_rank(a.name) < cost_rank(b.name); });
  return t;
}

std::string format_target(const MinerTarget& t) {
  std::string out;
  for (const auto& l : t.literals) {
    if (!out.empty()) out += '&';
    if (!l.positive) out += '!';
    out += l.name;
  }
  return out;
}

bool satisfies(const GSystem& s, const MinerTarget& t) {
  for (const auto& l : t.literals)
    if (checker_value(s, l.name) != l.positive) return false;
  return true;
}

bool oracle_satisfies(const GSystem& s, const MinerTarget& t) {
  for (const auto& l : t.literals)
    if (oracle_value(s, l.name) != l.positive) return false;
  return true;
}

MineResult mine(const MinerTarget& target, const GeneratorConfig& config, std::size_t sweep_points) {
  MineResult r;
  r.seed = config.seed;
  std::size_t index = 0;
  r.sweep_systems = enumerate_systems(sweep_points, config.groups, [&](const GSystem& s) {
    if (auto w = verified(s, target)) {
      r.witness = std::move(w);
      r.origin = "sweep:" + std::to_string(index);
      return false;
    }
    ++index;
    return true;
  });
  if (r.witness) return r;
  for (std::size_t i = 0; i < target.budget; ++i) {
    GeneratorConfig c = config;
    c.seed = config.seed + i;
    ++r.trials;
    std::optional<GSystem> s;
    try {
      s = generate(c);
    } catch (const GenerationError&) {
      continue;
    }
    if (auto w = verified(*s, target)) {
      r.witness = std::move(w);
      r.origin = "trial:" + std::to_string(i);
      return r;
    }
  }
  return r;
}

std::string format_exhausted(const MinerTarget& t, const MineResult& r) {
  std::ostringstream os;
  os << "exhausted target=" << format_target(t) << " seed=" << r.seed << " budget=" << t.budget
     << " sweep_systems=" << r.sweep_systems << " trials=" << r.trials;
  return os.str();
}

}  // namespace gdyn
