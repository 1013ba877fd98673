#include "gdyn/report.hpp"

#include <sstream>

#include "gdyn/implications.hpp"

namespace gdyn {

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_property_report(const GSystem& s, const PropertyReport& r) {
  std::ostringstream os;
  os << "property=" << tag(r.property);
  if (r.property == Property::nfold) os << ':' << r.arity;
  os << " verdict=" << flag(r.verdict) << '\n';

  const Witness& w = r.witness;
  const Space sets_space = r.property == Property::nfold ? power(s.space(), r.arity) : s.space();
  if (r.property == Property::gm && w.point) {
    os << "witness: x=" << s.space().name(*w.point);
    if (!w.sets.empty()) os << " closure=" << s.space().format(w.sets[0]);
    os << '\n';
  } else if (r.property == Property::equivariant && w.point && w.element) {
    os << "witness: g=" << s.group().name(*w.element) << " x=" << s.space().name(*w.point) << '\n';
  } else if (r.property == Property::pseudoequivariant && w.point) {
    os << "witness: x=" << s.space().name(*w.point);
    if (w.sets.size() == 2)
      os << " f(G(x))=" << s.space().format(w.sets[0]) << " G(f(x))=" << s.space().format(w.sets[1]);
    os << '\n';
  } else if (!w.sets.empty()) {
    static const char* labels[] = {"U", "V", "E", "F"};
    os << "witness:";
    for (std::size_t i = 0; i < w.sets.size() && i < 4; ++i)
      os << ' ' << labels[i] << '=' << sets_space.format(w.sets[i]);
    if (w.iterate) os << " m=" << *w.iterate;
    os << '\n';
  }
  if (!w.summary.empty()) os << "summary: " << w.summary << '\n';
  if (!w.certificates.empty()) {
    os << "certificates: " << w.certificates.size() << '\n';
    const Space& x = sets_space;
    const Group g = r.property == Property::nfold ? direct_power(s.group(), r.arity) : s.group();
    for (const auto& c : w.certificates)
      os << "  U=" << x.format(x.min_open(c.u)) << " V=" << x.format(x.min_open(c.v)) << " k=" << c.k
         << " g=" << g.name(c.g) << '\n';
  }
  os << "P1=" << flag(r.preconditions.pseudoequivariant) << " P2=" << flag(r.preconditions.p2()) << '\n';
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  return os.str();
}

std::string format_diagram_row(const GSystem& s) {
  const SystemProfile p = profile(s);
  std::ostringstream os;
  os << "gt=" << flag(p.gt) << '\n'
     << "tgt=" << flag(p.tgt) << '\n'
     << "wgm=" << flag(p.wgm) << '\n'
     << "sgm=" << flag(p.sgm) << '\n'
     << "gm=" << flag(p.gm) << '\n'
     << "equivariant=" << flag(p.equivariant) << '\n'
     << "pseudoequivariant=" << flag(p.p1) << '\n'
     << "p2=" << flag(p.p2) << '\n';
  std::string violated;
  for (const auto& law : evaluate_laws(p, s))
    if (!law.holds) violated += (violated.empty() ? "" : ",") + law.law;
  os << "diagram=" << (violated.empty() ? "consistent" : "violated:" + violated) << '\n';
  return os.str();
}

std::string format_minimal_sets(const GSystem& s) {
  std::string out;
  for (const auto& m : g_minimal_sets(s)) out += s.space().format(m) + '\n';
  return out;
}

}  // namespace gdyn
