#pragma once

// Brute-force references used to cross-check the exact algorithms.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "mildem/papinj.hpp"
#include "mildem/upset.hpp"

namespace oracle {

using mildem::Int;

/// Horizon large enough to decide equality of two sets by scanning.
inline Int horizon(const mildem::UPSet& s, const mildem::UPSet& t) {
  return std::max(s.threshold(), t.threshold()) + 2 * std::lcm(s.period(), t.period()) + 1;
}

inline bool same_members(const mildem::UPSet& s, const mildem::UPSet& t, Int bound) {
  for (Int x = 1; x <= bound; ++x)
    if (s.contains(x) != t.contains(x)) return false;
  return true;
}

/// Raw membership straight from the fields, ignoring canonical form.
inline bool raw_member(Int n, const std::vector<Int>& exc, Int p, const std::vector<Int>& res, Int x) {
  if (x <= n) return std::find(exc.begin(), exc.end(), x) != exc.end();
  return std::find(res.begin(), res.end(), x % p) != res.end();
}

/// Members of s up to bound, by membership scan.
inline std::vector<Int> scan(const mildem::UPSet& s, Int bound) {
  std::vector<Int> out;
  for (Int x = 1; x <= bound; ++x)
    if (s.contains(x)) out.push_back(x);
  return out;
}

/// Image of {x <= bound : in(x)} under f.
inline std::set<Int> image_upto(const std::function<Int(Int)>& f, const mildem::UPSet& s, Int bound) {
  std::set<Int> out;
  for (Int x = 1; x <= bound; ++x)
    if (s.contains(x)) out.insert(f(x));
  return out;
}

inline bool pointwise_equal(const std::function<Int(Int)>& f, const std::function<Int(Int)>& g, Int bound) {
  for (Int x = 1; x <= bound; ++x)
    if (f(x) != g(x)) return false;
  return true;
}

/// First colliding pair of f among arguments <= bound.
inline bool injective_upto(const std::function<Int(Int)>& f, Int bound) {
  std::set<Int> seen;
  for (Int x = 1; x <= bound; ++x)
    if (!seen.insert(f(x)).second) return false;
  return true;
}

/// Scan horizon covering the tables and several periods of two maps.
inline Int map_horizon(const mildem::QuasiAffine& u, const mildem::QuasiAffine& v) {
  return std::max(u.threshold(), v.threshold()) + 3 * std::lcm(u.period(), v.period()) + 20;
}

}  // namespace oracle

namespace oracle {

/// Every argument beyond `bound` (>= threshold) has a value at least this large.
inline Int tail_floor(const mildem::QuasiAffine& u, Int bound) {
  Int lo = u(bound + 1);
  for (Int x = bound + 1; x <= bound + u.period(); ++x) lo = std::min(lo, u(x));
  return lo;
}

/// Checks image(u, s) against a scan of the arguments up to `bound`.
inline bool image_matches(const mildem::QuasiAffine& u, const mildem::UPSet& s, const mildem::UPSet& img, Int bound) {
  bound = std::max(bound, u.threshold());
  const std::set<Int> seen = image_upto([&](Int x) { return u(x); }, s, bound);
  const Int ymax = tail_floor(u, bound) - 1;
  for (Int y : seen)
    if (!img.contains(y)) return false;
  for (Int y = 1; y <= ymax; ++y)
    if (img.contains(y) != static_cast<bool>(seen.count(y))) return false;
  return true;
}

}  // namespace oracle
