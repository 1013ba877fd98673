#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace gdyn {

/// Subset of a finite carrier, positional bit per point.
using PointSet = boost::dynamic_bitset<>;

/// Total self-map (or map between carriers) as an index table.
using PointMap = std::vector<std::size_t>;

inline PointSet make_set(std::size_t n, std::initializer_list<std::size_t> members) {
  PointSet s(n);
  for (auto m : members) s.set(m);
  return s;
}

inline PointSet full_set(std::size_t n) {
  PointSet s(n);
  s.set();
  return s;
}

inline std::vector<std::size_t> members(const PointSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

template <class Fn>
inline void for_each_member(const PointSet& s, Fn&& fn) {
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) fn(i);
}

/// f(A) inside a carrier of size `target_size`.
inline PointSet image(const PointSet& a, const PointMap& f, std::size_t target_size) {
  PointSet out(target_size);
  for_each_member(a, [&](std::size_t i) { out.set(f[i]); });
  return out;
}

inline PointSet image(const PointSet& a, const PointMap& f) { return image(a, f, a.size()); }

/// f^{-1}(B) inside a carrier of size f.size().
inline PointSet preimage(const PointSet& b, const PointMap& f) {
  PointSet out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (b.test(f[i])) out.set(i);
  return out;
}

inline PointMap compose(const PointMap& outer, const PointMap& inner) {
  PointMap out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

inline PointMap identity_map(std::size_t n) {
  PointMap out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace gdyn
