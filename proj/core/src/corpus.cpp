#include "gdyn/corpus.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "gdyn/error.hpp"
#include "gdyn/oracle.hpp"

namespace gdyn {

namespace {

// Bounded draws by rejection so sequences depend only on the mt19937_64 stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return static_cast<std::size_t>(draw % bound);
  }

  bool percent(unsigned p) { return below(100) < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::string> letter_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}

std::vector<std::string> number_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

// Minimal opens of the reflexive-transitive closure of `rel`.
std::vector<PointSet> preorder_opens(std::size_t n, std::vector<std::vector<bool>> rel) {
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;
  std::vector<PointSet> mo(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j]) mo[i].set(j);
  return mo;
}

std::size_t map_order(const PointMap& p) {
  const PointMap id = identity_map(p.size());
  PointMap cur = p;
  std::size_t k = 1;
  while (cur != id) {
    cur = compose(p, cur);
    ++k;
  }
  return k;
}

std::size_t element_order(const Group& g, GroupElement a) {
  std::size_t k = 1;
  for (GroupElement cur = a; cur != g.identity(); cur = g.mul(cur, a)) ++k;
  return k;
}

// Images of the generators extended along words; nullopt on a conflict.
std::optional<std::vector<PointMap>> extend_homomorphism(const Group& g, const std::vector<GroupElement>& gens,
                                                         const std::vector<PointMap>& images, std::size_t n) {
  std::vector<std::optional<PointMap>> phi(g.order());
  phi[g.identity()] = identity_map(n);
  std::vector<GroupElement> stack{g.identity()};
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto b = g.mul(a, gens[i]);
      PointMap val = compose(*phi[a], images[i]);
      if (!phi[b]) {
        phi[b] = std::move(val);
        stack.push_back(b);
      } else if (*phi[b] != val) {
        return std::nullopt;
      }
    }
  }
  std::vector<PointMap> table;
  for (auto& p : phi) table.push_back(std::move(*p));
  return table;
}

Action random_action(Rng& rng, const Group& g, const Space& s) {
  if (g.is_trivial()) return Action::trivial(g, s);
  const auto auts = automorphisms(s);
  const auto gens = generators(g);
  std::vector<std::vector<std::size_t>> candidates;
  for (auto gen : gens) {
    const std::size_t ord = element_order(g, gen);
    std::vector<std::size_t> fit;
    for (std::size_t i = 0; i < auts.size(); ++i)
      if (ord % map_order(auts[i]) == 0) fit.push_back(i);
    candidates.push_back(std::move(fit));
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<PointMap> images;
    for (const auto& c : candidates) images.push_back(auts[c[rng.below(c.size())]]);
    auto table = extend_homomorphism(g, gens, images, s.size());
    if (!table) continue;
    try {
      return Action(g, s, std::move(*table));
    } catch (const ActionError&) {
    }
  }
  return Action::trivial(g, s);
}

// Randomised backtracking over monotone assignments; constant maps guarantee success.
PointMap random_continuous_map(Rng& rng, const Space& s) {
  const std::size_t n = s.size();
  PointMap f(n, n);
  std::vector<std::vector<std::size_t>> order(n);
  for (auto& o : order) {
    o = identity_map(n);
    rng.shuffle(o);
  }
  std::vector<std::size_t> choice(n, 0);
  std::size_t x = 0;
  auto consistent = [&](std::size_t p, std::size_t y) {
    for (std::size_t z = 0; z < p; ++z) {
      if (s.min_open(p).test(z) && !s.min_open(y).test(f[z])) return false;
      if (s.min_open(z).test(p) && !s.min_open(f[z]).test(y)) return false;
    }
    return true;
  };
  while (x < n) {
    bool placed = false;
    while (choice[x] < n) {
      std::size_t y = order[x][choice[x]++];
      if (consistent(x, y)) {
        f[x] = y;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++x;
    } else {
      choice[x] = 0;
      if (x == 0) throw std::logic_error("random_continuous_map: no continuous map");
      --x;
    }
  }
  return f;
}

Space random_space(Rng& rng, std::size_t n, bool discrete, unsigned edge_percent) {
  if (discrete) return Space::discrete(letter_names(n));
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rng.percent(edge_percent)) rel[i][j] = true;
  return Space(letter_names(n), preorder_opens(n, std::move(rel)));
}

Fixture make_fixture(std::string name, GSystem s, std::map<std::string, bool> expected, std::string note) {
  return Fixture{std::move(name), std::move(s), std::move(expected), std::move(note)};
}

Action z2_swap_pair() {
  Space x = Space::discrete({"a", "b"});
  return Action(Group::cyclic(2), x, {{0, 1}, {1, 0}});
}

GSystem rot4(const Group& g, std::vector<PointMap> table) {
  Space x = Space::discrete(number_names(4));
  return GSystem(Action(g, x, std::move(table)), {1, 2, 3, 0});
}

// Truncation of the two-sided tail example: limit points -1, 0, 1 fixed and
// every tail point in each limit point's minimal open; the tail is shifted
// cyclically and h cycles each of the two shift-parity classes.
GSystem ex21_analog() {
  std::vector<std::string> names{"-1", "-2/3", "-1/2", "-1/3", "0", "1/3", "1/2", "2/3", "1"};
  const std::size_t n = names.size();
  const PointSet tail = make_set(n, {1, 2, 3, 5, 6, 7});
  std::vector<PointSet> mo;
  for (std::size_t i = 0; i < n; ++i) {
    PointSet m = make_set(n, {i});
    if (i == 0 || i == 4 || i == 8) m |= tail;
    mo.push_back(std::move(m));
  }
  Space x(names, mo);
  //       -1 -2/3 -1/2 -1/3  0  1/3 1/2 2/3  1
  PointMap h{0, 3, 7, 6, 4, 2, 1, 5, 8};
  PointMap f{0, 2, 3, 5, 4, 6, 7, 1, 8};
  std::vector<PointMap> table{identity_map(n), h, compose(h, h)};
  return GSystem(Action(Group::cyclic(3), x, std::move(table)), std::move(f));
}

}  // namespace

std::optional<TopologyMode> topology_mode_from_string(std::string_view s) {
  if (s == "discrete") return TopologyMode::discrete;
  if (s == "preorder") return TopologyMode::preorder;
  if (s == "mixed") return TopologyMode::mixed;
  return std::nullopt;
}

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  const Group z2 = Group::cyclic(2);

  out.push_back(make_fixture(
      "FIX-DISC2", GSystem(Action::trivial(Space::discrete({"a", "b"})), {1, 0}),
      {{"gt", true}, {"tgt", false}, {"wgm", false}, {"sgm", false}, {"gm", true}, {"gt:f2", false}},
      "swap on two isolated points: transitive, but its square is the identity"));

  out.push_back(make_fixture(
      "FIX-SIERP", GSystem(Action::trivial(space_from_subbasis({"a", "b"}, std::vector<PointSet>{make_set(2, {0})})), {0, 1}),
      {{"gt", true}, {"tgt", true}, {"wgm", true}, {"sgm", true}, {"gm", false}},
      "identity on the Sierpinski space: every open contains a, but {b} is closed and invariant"));

  out.push_back(make_fixture("FIX-Z2SWAP", GSystem(z2_swap_pair(), {0, 1}),
                             {{"gt", true},
                              {"tgt", true},
                              {"wgm", true},
                              {"sgm", true},
                              {"gm", true},
                              {"gt:trivial-group", false}},
                             "identity mixed by the swap action; without the group it is not even transitive"));

  out.push_back(make_fixture("FIX-ROT4", rot4(Group::trivial(), {identity_map(4)}),
                             {{"gt", true}, {"tgt", false}, {"wgm", false}, {"sgm", false}, {"gm", true}},
                             "rotation of Z4: minimal but not mixing"));

  {
    Space x = Space::discrete({"a", "b", "c", "d", "e", "f"});
    PointMap r{1, 2, 0, 4, 5, 3};
    Action act(Group::cyclic(3), x, {identity_map(6), r, compose(r, r)});
    out.push_back(make_fixture("FIX-PSEQ", GSystem(std::move(act), {3, 5, 4, 0, 1, 2}),
                               {{"pseudoequivariant", true}, {"equivariant", false}, {"gm", true}, {"tgt", false}},
                               "orbit-swapping map that permutes orbits but not compatibly with the action"));
  }

  out.push_back(make_fixture("FIX-EX21", ex21_analog(),
                             {{"gt", true}, {"gt:f2", false}, {"tgt", false}, {"pseudoequivariant", true}},
                             "finite two-sided tail with limit points: G-transitive, square is not"));

  out.push_back(make_fixture("FIX-Z4MOD2", rot4(z2, {identity_map(4), {2, 3, 0, 1}}),
                             {{"gt", true}, {"tgt", false}, {"gm", true}, {"equivariant", true},
                              {"quotient-minimal", true}},
                             "rotation of Z4 under translation by 2; orbit space is a swapped pair"));

  {
    Space x = Space::discrete(number_names(5));
    Action act(z2, x, {identity_map(5), {0, 4, 3, 2, 1}});
    out.push_back(make_fixture("FIX-DOUBLING5", GSystem(std::move(act), {0, 2, 4, 1, 3}),
                               {{"gm", false}, {"gt", false}, {"pseudoequivariant", true}},
                               "doubling mod 5 under negation: fixed point 0 is its own minimal set"));
  }
  return out;
}

Fixture fixture(std::string_view name) {
  for (auto& f : fixtures())
    if (f.name == name) return f;
  throw std::out_of_range("unknown fixture " + std::string(name));
}

bool evaluate_expectation(const GSystem& s, std::string_view key, bool use_oracle) {
  if (key == "gt:f2") {
    GSystem sq = s.with_map(compose(s.map(), s.map()));
    return use_oracle ? oracle::g_transitive(sq) : is_g_transitive(sq).verdict;
  }
  if (key == "gt:trivial-group") {
    GSystem t = s.with_trivial_group();
    return use_oracle ? oracle::g_transitive(t) : is_g_transitive(t).verdict;
  }
  if (use_oracle) {
    if (key == "gt") return oracle::g_transitive(s);
    if (key == "tgt") return oracle::totally_g_transitive(s);
    if (key == "wgm") return oracle::weakly_g_mixing(s);
    if (key == "sgm") return oracle::strongly_g_mixing(s);
    if (key == "gm") return oracle::g_minimal(s);
    if (key == "equivariant") return oracle::equivariant(s);
    if (key == "pseudoequivariant") return oracle::pseudoequivariant(s);
    if (key == "cover") return oracle::cover_criterion(s);
    if (key == "quotient-minimal") return oracle::quotient_minimality(s).induced_minimal;
  } else if (auto p = property_from_tag(key)) {
    return check(s, *p).verdict;
  }
  throw std::invalid_argument("unknown expectation key " + std::string(key));
}

GSystem generate(const GeneratorConfig& config) {
  if (config.max_points > 8) throw PreconditionError("generate: max_points must be at most 8");
  if (config.min_points == 0 || config.min_points > config.max_points)
    throw PreconditionError("generate: need 1 <= min_points <= max_points");
  if (config.groups.empty()) throw PreconditionError("generate: empty group selection");
  std::vector<Group> groups;
  for (const auto& name : config.groups) {
    auto g = catalog_group(name);
    if (!g) throw PreconditionError("generate: unknown group " + name);
    groups.push_back(std::move(*g));
  }
  Rng rng(config.seed);
  std::size_t rejected = 0;
  for (;;) {
    const std::size_t n = config.min_points + rng.below(config.max_points - config.min_points + 1);
    bool discrete = config.mode == TopologyMode::discrete;
    if (config.mode == TopologyMode::mixed) discrete = rng.percent(50);
    Space space = random_space(rng, n, discrete, config.edge_percent);
    const Group& g = groups[rng.below(groups.size())];
    Action act = random_action(rng, g, space);
    for (int tries = 0; tries < 16; ++tries) {
      PointMap f = random_continuous_map(rng, act.space());
      if (!config.pseudoequivariant_only || is_pseudoequivariant(act, f)) return GSystem(act, std::move(f));
      if (++rejected >= config.rejection_budget)
        throw GenerationError("generate: pseudoequivariance filter exhausted " +
                              std::to_string(config.rejection_budget) + " candidates (seed " +
                              std::to_string(config.seed) + ")");
    }
  }
}

std::vector<Space> all_spaces(std::size_t n) {
  if (n == 0 || n > 4) throw PreconditionError("all_spaces: n must be in [1, 4]");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<Space> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (bits >> b & 1u) rel[pairs[b].first][pairs[b].second] = true;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t k = 0; k < n && transitive; ++k)
        for (std::size_t j = 0; j < n && transitive; ++j)
          if (rel[i][k] && rel[k][j] && !rel[i][j]) transitive = false;
    if (transitive) out.emplace_back(letter_names(n), preorder_opens(n, rel));
  }
  return out;
}

std::vector<Action> all_actions(const Group& g, const Space& s) {
  if (g.is_trivial()) return {Action::trivial(g, s)};
  const auto auts = automorphisms(s);
  const auto gens = generators(g);
  std::set<std::vector<PointMap>> seen;
  std::vector<Action> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  for (;;) {
    std::vector<PointMap> images;
    for (auto i : pick) images.push_back(auts[i]);
    if (auto table = extend_homomorphism(g, gens, images, s.size()); table && !seen.count(*table)) {
      try {
        Action a(g, s, *table);
        seen.insert(*table);
        out.push_back(std::move(a));
      } catch (const ActionError&) {
      }
    }
    std::size_t d = 0;
    while (d < pick.size() && ++pick[d] == auts.size()) pick[d++] = 0;
    if (d == pick.size()) break;
  }
  return out;
}

std::vector<PointMap> all_continuous_maps(const Space& s) {
  const std::size_t n = s.size();
  std::vector<PointMap> out;
  PointMap f(n, 0);
  for (;;) {
    if (is_continuous(s, f)) out.push_back(f);
    std::size_t d = 0;
    while (d < n && ++f[d] == n) f[d++] = 0;
    if (d == n) break;
  }
  return out;
}

std::size_t enumerate_systems(std::size_t max_points, const std::vector<std::string>& groups,
                              const std::function<bool(const GSystem&)>& visit) {
  std::vector<Group> gs;
  for (const auto& name : groups) {
    auto g = catalog_group(name);
    if (!g) throw PreconditionError("enumerate_systems: unknown group " + name);
    gs.push_back(std::move(*g));
  }
  std::size_t count = 0;
  for (std::size_t n = 1; n <= max_points; ++n)
    for (const auto& space : all_spaces(n)) {
      const auto maps = all_continuous_maps(space);
      for (const auto& g : gs)
        for (const auto& act : all_actions(g, space))
          for (const auto& f : maps) {
            ++count;
            if (!visit(GSystem(act, f))) return count;
          }
    }
  return count;
}

}  // namespace gdyn
