#include "mildem/boxprod.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mildem {

namespace {

Int common_degree(const std::vector<Simplex>& xs) {
  if (xs.empty()) fail(ErrorKind::ArityMismatch, "box membership needs at least one factor");
  const Int n = xs.front().degree();
  for (const Simplex& x : xs)
    if (x.degree() != n) fail(ErrorKind::ArityMismatch, "factors have different degrees");
  return n;
}

UPSet support_or_throw(const Simplex& x, Int k) {
  auto s = k_support(x, k);
  if (!s) fail(ErrorKind::NoMinimalSupport, "coordinate " + std::to_string(k) + " of " + to_string(x) + " has no least support");
  return *s;
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::VerificationFailed, what);
}

}  // namespace

BoxResult box_membership(const std::vector<Simplex>& xs) {
  const Int n = common_degree(xs);
  BoxWitness w;
  for (Int k = 0; k <= n; ++k) {
    std::vector<UPSet> level;
    UPSet all;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      level.push_back(support_or_throw(xs[i], k));
      for (std::size_t j = 0; j < i; ++j)
        if (!disjoint(level[j], level[i])) return NotInBox{NotInBox::Reason::Disjointness, k, j, i};
      all = set_union(all, level[i]);
    }
    if (!all.is_coinfinite()) return NotInBox{NotInBox::Reason::CoInfiniteUnion, k, 0, 0};
    w.levels.push_back(std::move(level));
  }
  return w;
}

bool in_box(const std::vector<Simplex>& xs) { return std::holds_alternative<BoxWitness>(box_membership(xs)); }

bool verify_box_witness(const std::vector<Simplex>& xs, const BoxWitness& w) {
  const Int n = common_degree(xs);
  if (static_cast<Int>(w.levels.size()) != n + 1) return false;
  for (Int k = 0; k <= n; ++k) {
    const auto& level = w.levels[k];
    if (level.size() != xs.size()) return false;
    UPSet all;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!is_k_supported_on(xs[i], k, level[i])) return false;
      for (std::size_t j = 0; j < i; ++j)
        if (!disjoint(level[i], level[j])) return false;
      all = set_union(all, level[i]);
    }
    if (!all.is_coinfinite()) return false;
  }
  return true;
}

Simplex zip(const std::vector<Simplex>& xs) {
  const Int n = common_degree(xs);
  Simplex out;
  for (Int k = 0; k <= n; ++k) {
    std::vector<MElt> parts;
    for (const Simplex& x : xs) parts.push_back(x.coords[k]);
    out.coords.push_back(MElt::product(std::move(parts)));
  }
  return out;
}

std::vector<Simplex> unzip(const Simplex& s) {
  std::vector<Simplex> out;
  for (const MElt& c : s.coords) {
    if (c.kind() != MElt::Kind::Product) fail(ErrorKind::ArityMismatch, "coordinate is not a tuple");
    if (out.empty()) out.resize(c.parts().size());
    if (c.parts().size() != out.size()) fail(ErrorKind::ArityMismatch, "tuples of different lengths");
    for (std::size_t i = 0; i < out.size(); ++i) out[i].coords.push_back(c.parts()[i]);
  }
  return out;
}

RefinedSupports refine_supports(const Simplex& x, const Simplex& y, const std::vector<UPSet>& a,
                                const std::vector<UPSet>& b, const std::vector<UPSet>& d) {
  const Int n = common_degree({x, y});
  const std::size_t levels = static_cast<std::size_t>(n + 1);
  if (a.size() != levels || b.size() != levels || d.size() != levels)
    fail(ErrorKind::ArityMismatch, "need one set per level");
  const Simplex pair = zip({x, y});
  RefinedSupports out;
  for (Int k = 0; k <= n; ++k) {
    const std::string at = " at level " + std::to_string(k);
    require(a[k].is_coinfinite() && b[k].is_coinfinite() && d[k].is_coinfinite(), "supports co-infinite" + at);
    require(disjoint(a[k], b[k]), "A ∩ B = ∅" + at);
    require(is_k_supported_on(x, k, a[k]), "x supported on A" + at);
    require(is_k_supported_on(y, k, b[k]), "y supported on B" + at);
    require(is_k_supported_on(pair, k, d[k]), "(x, y) supported on D" + at);
    // supports of co-infinite sets are closed under intersection
    const UPSet a2 = set_intersection(a[k], d[k]);
    const UPSet b2 = set_intersection(b[k], d[k]);
    const UPSet d2 = set_union(a2, b2);
    require(is_k_supported_on(x, k, a2), "x supported on A ∩ D" + at);
    require(is_k_supported_on(y, k, b2), "y supported on B ∩ D" + at);
    require(is_k_supported_on(pair, k, d2), "(x, y) supported on A' ∪ B'" + at);
    require(is_subset(d2, d[k]), "A' ∪ B' ⊆ D" + at);
    out.a.push_back(a2);
    out.b.push_back(b2);
    out.d.push_back(d2);
  }
  return out;
}

namespace {

MonoidalReport report(bool ok, std::string detail) { return MonoidalReport{ok, std::move(detail)}; }

MonoidalReport assoc(const Simplex& x, const Simplex& y, const Simplex& z) {
  const bool left = in_box({x, y}) && in_box({zip({x, y}), z});
  const bool right = in_box({y, z}) && in_box({x, zip({y, z})});
  if (!left) return report(!right, right ? "right side in the box product but left side is not" : "");
  if (!right) return report(false, "left side in the box product but right side is not");

  const Int n = x.degree();
  std::vector<UPSet> as, bs, cs, ds;
  for (Int k = 0; k <= n; ++k) {
    const UPSet sx = support_or_throw(x, k), sy = support_or_throw(y, k), sz = support_or_throw(z, k);
    // Enlarge the supports into a free region so that the refinement has work to do.
    const QuasiAffine free = enumerator(complement(set_union(set_union(sx, sy), sz)));
    auto part = [&](Int j) { return image(free, UPSet::progression(j, 4)); };
    const UPSet e = set_union(part(1), part(3));
    as.push_back(set_union(sx, part(1)));
    bs.push_back(set_union(sy, part(2)));
    cs.push_back(sz);
    ds.push_back(complement(set_union(sz, e)));
  }
  const Simplex xy = zip({x, y});
  for (Int k = 0; k <= n; ++k) {
    if (!is_k_supported_on(z, k, cs[k]) || !disjoint(ds[k], cs[k]) || !set_union(ds[k], cs[k]).is_coinfinite() ||
        !is_k_supported_on(xy, k, ds[k]))
      return report(false, "outer witness for ((x, y), z) fails at level " + std::to_string(k));
  }
  const RefinedSupports r = refine_supports(x, y, as, bs, ds);
  BoxWitness inner, outer;
  for (Int k = 0; k <= n; ++k) {
    inner.levels.push_back({r.b[k], cs[k]});
    outer.levels.push_back({r.a[k], set_union(r.b[k], cs[k])});
  }
  if (!verify_box_witness({y, z}, inner)) return report(false, "transported witness for (y, z) fails");
  if (!verify_box_witness({x, zip({y, z})}, outer)) return report(false, "transported witness for (x, (y, z)) fails");
  return report(true, "");
}

MonoidalReport symm(const Simplex& x, const Simplex& y) {
  const BoxResult fwd = box_membership({x, y});
  const bool right = in_box({y, x});
  const auto* w = std::get_if<BoxWitness>(&fwd);
  if (!w) return report(!right, right ? "(y, x) in the box product but (x, y) is not" : "");
  BoxWitness swapped;
  for (const auto& level : w->levels) swapped.levels.push_back({level[1], level[0]});
  if (!verify_box_witness({y, x}, swapped)) return report(false, "swapped witness fails");
  return report(right, right ? "" : "(x, y) in the box product but (y, x) is not");
}

MonoidalReport unit(const Simplex& x) {
  Simplex star;
  for (Int k = 0; k <= x.degree(); ++k) star.coords.push_back(MElt::point());
  const bool mild = co_infinitely_supported(x);
  const BoxResult r = box_membership({x, star});
  const auto* w = std::get_if<BoxWitness>(&r);
  if (static_cast<bool>(w) != mild) return report(false, "X ⊠ * differs from X^mu × *");
  if (w) {
    for (const auto& level : w->levels)
      if (!level[1].empty()) return report(false, "* should be supported on the empty set");
    if (!verify_box_witness({x, star}, *w)) return report(false, "witness for (x, *) fails");
  }
  return report(true, "");
}

}  // namespace

MonoidalReport monoidal_witness(MonoidalKind kind, const std::vector<Simplex>& xs) {
  switch (kind) {
    case MonoidalKind::Assoc:
      if (xs.size() != 3) fail(ErrorKind::ArityMismatch, "associativity needs three simplices");
      return assoc(xs[0], xs[1], xs[2]);
    case MonoidalKind::Symm:
      if (xs.size() != 2) fail(ErrorKind::ArityMismatch, "symmetry needs two simplices");
      return symm(xs[0], xs[1]);
    case MonoidalKind::Unit:
      if (xs.size() != 1) fail(ErrorKind::ArityMismatch, "the unit law needs one simplex");
      return unit(xs[0]);
  }
  return report(false, "unknown kind");
}

std::vector<Simplex> all_simplices(const std::vector<MElt>& pool, Int degree) {
  std::vector<Simplex> out;
  if (pool.empty()) return out;
  std::vector<std::size_t> idx(degree + 1, 0);
  for (;;) {
    Simplex s;
    for (std::size_t i : idx) s.coords.push_back(pool[i]);
    out.push_back(std::move(s));
    Int pos = degree;
    while (pos >= 0 && ++idx[pos] == pool.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

CoproductIsoReport inj_coproduct_iso(const std::vector<Int>& a, const std::vector<Int>& b, Int degree, Int bound) {
  for (Int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) fail(ErrorKind::PreconditionFailed, "A and B must be disjoint");
  std::vector<Int> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  std::sort(ab.begin(), ab.end());

  using Key = std::vector<Int>;
  auto key_of = [](const Simplex& x, const Simplex& y) {
    Key key;
    for (const MElt& c : x.coords) key.insert(key.end(), c.values().begin(), c.values().end());
    key.push_back(0);
    for (const MElt& c : y.coords) key.insert(key.end(), c.values().begin(), c.values().end());
    return key;
  };
  auto restrict_to = [](const MElt& u, const std::vector<Int>& part) {
    std::vector<Int> values;
    for (Int p : part) values.push_back(u.values()[std::lower_bound(u.domain().begin(), u.domain().end(), p) - u.domain().begin()]);
    return MElt::injection(part, std::move(values));
  };

  CoproductIsoReport rep;
  std::set<Key> restricted;
  for (const Simplex& s : all_simplices(injections_upto(ab, bound), degree)) {
    ++rep.left_count;
    Simplex x, y;
    for (const MElt& u : s.coords) {
      x.coords.push_back(restrict_to(u, a));
      y.coords.push_back(restrict_to(u, b));
    }
    if (!in_box({x, y})) rep.onto_box = false;
    if (!restricted.insert(key_of(x, y)).second) rep.injective = false;
  }
  const auto xs = all_simplices(injections_upto(a, bound), degree);
  const auto ys = all_simplices(injections_upto(b, bound), degree);
  for (const Simplex& x : xs)
    for (const Simplex& y : ys) {
      if (!in_box({x, y})) continue;
      ++rep.right_count;
      if (!restricted.count(key_of(x, y))) rep.onto_box = false;
    }
  return rep;
}

std::string to_string(const BoxWitness& w) {
  std::ostringstream os;
  os << "witness[";
  for (std::size_t k = 0; k < w.levels.size(); ++k) {
    os << (k ? "; " : "") << "k=" << k << ": ";
    for (std::size_t i = 0; i < w.levels[k].size(); ++i) os << (i ? ", " : "") << w.levels[k][i];
  }
  os << ']';
  return os.str();
}

std::string to_string(const NotInBox& v) {
  std::ostringstream os;
  os << "NotInBox(" << (v.reason == NotInBox::Reason::Disjointness ? "disjointness" : "co-infinite union")
     << ", k=" << v.level << ')';
  return os.str();
}

}  // namespace mildem
