#include "gdyn/system_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace gdyn {

namespace {

struct Row {
  std::size_t line;
  std::vector<std::string> tokens;
};

std::vector<std::string> split(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(std::move(t));
  return out;
}

template <class Lookup>
std::size_t resolve(const Lookup& lookup, const std::string& name, std::size_t line, const char* what) {
  auto idx = lookup(name);
  if (!idx) throw ParseError(line, std::string("unknown ") + what + " '" + name + "'");
  return *idx;
}

}  // namespace

GSystem parse_system(std::string_view text) {
  std::optional<Row> points_row, group_row, identity_row;
  std::vector<Row> opens, muls, acts, maps;
  std::size_t line_no = 0;
  {
    std::istringstream is{std::string(text)};
    for (std::string line; std::getline(is, line);) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      auto tokens = split(line);
      if (tokens.empty()) continue;
      std::string key = tokens.front();
      tokens.erase(tokens.begin());
      Row row{line_no, std::move(tokens)};
      auto single = [&](std::optional<Row>& slot) {
        if (slot) throw ParseError(row.line, "duplicate '" + key + "' line");
        slot = std::move(row);
      };
      auto arity = [&](std::size_t n) {
        if (row.tokens.size() != n)
          throw ParseError(row.line, "'" + key + "' expects " + std::to_string(n) + " fields");
      };
      if (key == "points") {
        single(points_row);
      } else if (key == "open") {
        opens.push_back(std::move(row));
      } else if (key == "group") {
        if (row.tokens.empty()) throw ParseError(row.line, "'group' needs at least one element");
        single(group_row);
      } else if (key == "identity") {
        arity(1);
        single(identity_row);
      } else if (key == "mul") {
        arity(3);
        muls.push_back(std::move(row));
      } else if (key == "act") {
        arity(3);
        acts.push_back(std::move(row));
      } else if (key == "map") {
        arity(2);
        maps.push_back(std::move(row));
      } else {
        throw ParseError(row.line, "unknown section '" + key + "'");
      }
    }
  }
  const std::size_t eof = line_no + 1;
  if (!points_row || points_row->tokens.empty()) throw ParseError(points_row ? points_row->line : eof, "missing points");
  const std::vector<std::string>& names = points_row->tokens;
  auto point_of = [&](const std::string& nm) -> std::optional<std::size_t> {
    auto it = std::find(names.begin(), names.end(), nm);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
  };
  const std::size_t n = names.size();

  Space space;
  {
    std::vector<PointSet> subbasis;
    for (const auto& r : opens) {
      PointSet s(n);
      for (const auto& t : r.tokens) s.set(resolve(point_of, t, r.line, "point"));
      subbasis.push_back(std::move(s));
    }
    try {
      space = space_from_subbasis(names, subbasis);
    } catch (const TopologyError& e) {
      throw ValidationError(points_row->line, ValidationError::Kind::topology, e.what());
    }
  }

  Group group;
  if (group_row) {
    const auto& gnames = group_row->tokens;
    auto elem_of = [&](const std::string& nm) -> std::optional<std::size_t> {
      auto it = std::find(gnames.begin(), gnames.end(), nm);
      if (it == gnames.end()) return std::nullopt;
      return static_cast<std::size_t>(it - gnames.begin());
    };
    if (!identity_row) throw ParseError(group_row->line, "group without identity");
    const std::size_t id = resolve(elem_of, identity_row->tokens[0], identity_row->line, "group element");
    const std::size_t m = gnames.size();
    std::vector<std::vector<GroupElement>> mul(m, std::vector<GroupElement>(m, m));
    for (const auto& r : muls) {
      auto a = resolve(elem_of, r.tokens[0], r.line, "group element");
      auto b = resolve(elem_of, r.tokens[1], r.line, "group element");
      auto c = resolve(elem_of, r.tokens[2], r.line, "group element");
      if (mul[a][b] != m) throw ParseError(r.line, "duplicate mul entry for (" + r.tokens[0] + "," + r.tokens[1] + ")");
      mul[a][b] = c;
    }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (mul[a][b] == m)
          throw ValidationError(group_row->line, ValidationError::Kind::group,
                                "group: mul table missing (" + gnames[a] + "," + gnames[b] + ")");
    try {
      group = Group(gnames, id, std::move(mul));
    } catch (const GroupError& e) {
      throw ValidationError(muls.empty() ? group_row->line : muls.front().line, ValidationError::Kind::group,
                            e.what());
    }
  } else if (identity_row || !muls.empty()) {
    throw ParseError(identity_row ? identity_row->line : muls.front().line, "group table without 'group' line");
  }

  Action action;
  if (acts.empty() && group.is_trivial()) {
    action = Action::trivial(group, space);
  } else {
    const std::size_t m = group.order();
    std::vector<PointMap> table(m, PointMap(n, n));
    for (const auto& r : acts) {
      auto g = resolve([&](const std::string& s) { return group.index_of(s); }, r.tokens[0], r.line, "group element");
      auto x = resolve(point_of, r.tokens[1], r.line, "point");
      auto y = resolve(point_of, r.tokens[2], r.line, "point");
      if (table[g][x] != n) throw ParseError(r.line, "duplicate act entry for (" + r.tokens[0] + "," + r.tokens[1] + ")");
      table[g][x] = y;
    }
    const std::size_t line = acts.empty() ? group_row->line : acts.front().line;
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t x = 0; x < n; ++x)
        if (table[g][x] == n)
          throw ValidationError(line, ValidationError::Kind::action,
                                "action: act table missing (" + group.name(g) + "," + names[x] + ")");
    try {
      action = Action(group, space, std::move(table));
    } catch (const ActionError& e) {
      throw ValidationError(line, ValidationError::Kind::action, e.what());
    }
  }

  PointMap f(n, n);
  std::vector<std::size_t> map_line(n, 0);
  for (const auto& r : maps) {
    auto x = resolve(point_of, r.tokens[0], r.line, "point");
    auto y = resolve(point_of, r.tokens[1], r.line, "point");
    if (f[x] != n) throw ParseError(r.line, "duplicate map entry for '" + r.tokens[0] + "'");
    f[x] = y;
    map_line[x] = r.line;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (f[x] == n) throw ParseError(eof, "map: no image for '" + names[x] + "'");
  try {
    return GSystem(std::move(action), std::move(f));
  } catch (const ContinuityError& e) {
    throw ValidationError(map_line[e.point()], ValidationError::Kind::continuity, e.what());
  }
}

GSystem read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

std::string serialize_system(const GSystem& s) {
  const Space& x = s.space();
  const Group& g = s.group();
  std::ostringstream os;
  os << "points";
  for (const auto& nm : x.names()) os << ' ' << nm;
  os << '\n';
  std::vector<std::string> open_lines;
  for (auto r : x.basis_points()) {
    std::string line = "open";
    for_each_member(x.min_open(r), [&](std::size_t p) { line += " " + x.name(p); });
    open_lines.push_back(std::move(line));
  }
  std::sort(open_lines.begin(), open_lines.end());
  for (const auto& l : open_lines) os << l << '\n';
  os << "group";
  for (const auto& nm : g.names()) os << ' ' << nm;
  os << '\n' << "identity " << g.name(g.identity()) << '\n';
  for (GroupElement a = 0; a < g.order(); ++a)
    for (GroupElement b = 0; b < g.order(); ++b)
      os << "mul " << g.name(a) << ' ' << g.name(b) << ' ' << g.name(g.mul(a, b)) << '\n';
  for (GroupElement a = 0; a < g.order(); ++a)
    for (std::size_t p = 0; p < x.size(); ++p)
      os << "act " << g.name(a) << ' ' << x.name(p) << ' ' << x.name(s.action().apply(a, p)) << '\n';
  for (std::size_t p = 0; p < x.size(); ++p) os << "map " << x.name(p) << ' ' << x.name(s.map()[p]) << '\n';
  return os.str();
}

}  // namespace gdyn
