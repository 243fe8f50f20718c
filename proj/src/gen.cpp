#include "mildem/gen.hpp"

#include <algorithm>
#include <numeric>

namespace mildem {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

UPSet draw(Rng& rng, const GenBounds& b, bool force_hole, bool force_member) {
  const Int n = rng.uniform(0, b.max_threshold);
  const Int p = rng.uniform(1, b.max_period);
  std::vector<Int> exc, res;
  for (Int x = 1; x <= n; ++x)
    if (rng.coin()) exc.push_back(x);
  for (Int r = 0; r < p; ++r)
    if (rng.coin()) res.push_back(r);
  if (force_hole && static_cast<Int>(res.size()) == p) res.erase(res.begin() + rng.uniform(0, p - 1));
  if (force_member && res.empty()) res.push_back(rng.uniform(0, p - 1));
  return UPSet::make(n, std::move(exc), p, std::move(res));
}

// Keeps literal slopes in [1/p, 4] and images of moderate period.
bool small_enough(const QuasiAffine& m, const GenBounds& b) {
  if (m.period() > b.max_map_period || m.threshold() > b.max_map_period) return false;
  Int steps = 1;
  for (const Piece& pc : m.pieces()) {
    if (pc.slope > 4 * m.period()) return false;
    steps = std::lcm(steps, pc.slope);
    if (steps > b.max_map_period) return false;
  }
  return true;
}

// A permutation of ω that only moves the first few members of `s` among themselves.
QuasiAffine shuffle_within(Rng& rng, const UPSet& s) {
  const auto head = s.first(static_cast<std::size_t>(rng.uniform(0, 4)));
  if (head.size() < 2) return QuasiAffine{};
  std::vector<Int> perm(static_cast<std::size_t>(head.back()));
  std::iota(perm.begin(), perm.end(), Int{1});
  std::vector<Int> shuffled = head;
  std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
  for (std::size_t i = 0; i < head.size(); ++i) perm[head[i] - 1] = shuffled[i];
  return QuasiAffine(std::move(perm), 1, {Piece{1, 0}});
}

PAPInj elementary(Rng& rng, const GenBounds& b) {
  switch (rng.uniform(0, 5)) {
    case 0: return maps::affine(rng.uniform(1, 4), rng.uniform(0, 5));
    case 1: return trust_injective(enumerator(draw(rng, b, false, true)));
    case 2: {
      std::vector<Int> perm(static_cast<std::size_t>(rng.uniform(1, 6)));
      std::iota(perm.begin(), perm.end(), Int{1});
      std::shuffle(perm.begin(), perm.end(), rng.engine());
      return maps::finite_permutation(perm);
    }
    case 3: return agreeing_bijection(maps::affine(rng.uniform(1, 3), rng.uniform(0, 3)), draw(rng, b, true, false));
    case 4: {
      const Int n = rng.uniform(1, 3);
      return maps::interleave(n, rng.uniform(1, n));
    }
    default: return maps::identity();
  }
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return Rng(splitmix(splitmix(seed) ^ splitmix(trial + 0x51ed2701ULL)));
}

UPSet random_upset(Rng& rng, const GenBounds& b) { return draw(rng, b, false, false); }
UPSet random_coinfinite(Rng& rng, const GenBounds& b) { return draw(rng, b, true, false); }
UPSet random_biinfinite(Rng& rng, const GenBounds& b) {
  if (b.max_period < 2) fail(ErrorKind::PreconditionFailed, "bi-infinite sets need period bound >= 2");
  for (;;) {
    UPSet s = draw(rng, b, true, true);
    if (s.is_infinite() && s.is_coinfinite()) return s;
  }
}

UPSet random_infinite_subset(Rng& rng, const UPSet& s, const GenBounds& b) {
  if (s.is_finite()) fail(ErrorKind::FiniteSet, "random_infinite_subset of a finite set");
  for (int attempt = 0; attempt < 8 && !rng.coin(0.25); ++attempt) {
    UPSet t = set_intersection(s, draw(rng, b, false, true));
    if (t.is_infinite()) return t;
  }
  return s;
}

UPSet random_finite(Rng& rng, Int bound, Int max_size) {
  std::vector<Int> xs;
  const Int size = rng.uniform(0, max_size);
  while (static_cast<Int>(xs.size()) < size) {
    Int x = rng.uniform(1, bound);
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  return UPSet::finite(xs);
}

PAPInj random_injection(Rng& rng, const GenBounds& b) {
  for (;;) {
    try {
      PAPInj u = elementary(rng, b);
      if (rng.coin(0.4)) u = compose(u, elementary(rng, b));
      if (small_enough(u.map(), b)) return u;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Overflow) throw;
    }
  }
}

PAPInj random_coinfinite_injection(Rng& rng, const GenBounds& b) {
  for (;;) {
    PAPInj u = random_injection(rng, b);
    if (image(u).is_coinfinite()) return u;
    // Push the image into a co-infinite set.
    u = compose(maps::affine(rng.uniform(2, 3), rng.uniform(0, 2)), u);
    if (small_enough(u.map(), b)) return u;
  }
}

InjN random_injn(Rng& rng, std::size_t arity, const GenBounds& b) {
  const Int n = static_cast<Int>(arity);
  for (;;) {
    try {
      const PAPInj outer = rng.coin(0.3) ? PAPInj{} : random_injection(rng, b);
      std::vector<PAPInj> comps;
      for (Int j = 1; j <= n; ++j) {
        const PAPInj strand = rng.coin(0.5) ? PAPInj{} : random_injection(rng, b);
        comps.push_back(compose(outer, compose(maps::interleave(n, j), strand)));
      }
      const bool ok = std::all_of(comps.begin(), comps.end(), [&](const PAPInj& u) {
        return u.period() <= n * b.max_map_period && u.threshold() <= n * b.max_map_period;
      });
      if (ok) return InjN(std::move(comps));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Overflow) throw;
    }
  }
}

PAPInj random_fixing(Rng& rng, const UPSet& a, const GenBounds& b) {
  const UPSet rest = complement(a);
  for (;;) {
    try {
      QuasiAffine moved = shuffle_within(rng, rest);
      if (rest.is_infinite()) moved = compose(order_iso(rest, random_infinite_subset(rng, rest, b)), moved);
      const std::pair<UPSet, QuasiAffine> parts[] = {{rest, moved}};
      QuasiAffine m = piecewise(parts);
      if (small_enough(m, b)) return trust_injective(std::move(m));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Overflow) throw;
    }
  }
}

PAPInj random_agreeing(Rng& rng, const PAPInj& f, const UPSet& a, const GenBounds& b) {
  if (!a.is_coinfinite()) fail(ErrorKind::NotCoinfinite, "random_agreeing needs a co-infinite set");
  const UPSet rest = complement(a);
  const UPSet free_targets = complement(image(f, a));
  for (int attempt = 0;; ++attempt) {
    try {
      QuasiAffine moved = compose(order_iso(rest, random_infinite_subset(rng, free_targets, b)), shuffle_within(rng, rest));
      const std::pair<UPSet, QuasiAffine> parts[] = {{a, f.map()}, {rest, moved}};
      QuasiAffine m = piecewise(parts);
      if (small_enough(m, b) || attempt > 16) return trust_injective(std::move(m));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Overflow || attempt > 16) throw;
    }
  }
}

namespace {

MElt draw_element(Rng& rng, const MSetFamily& family, const GenBounds& b, bool mild) {
  switch (family.kind) {
    case MSetFamily::Kind::Injection: {
      const Int bound = std::max<Int>(b.max_entry, static_cast<Int>(family.domain.size()));
      std::vector<Int> values;
      while (values.size() < family.domain.size()) {
        const Int v = rng.uniform(1, bound);
        if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
      }
      return MElt::injection(family.domain, std::move(values));
    }
    case MSetFamily::Kind::Self:
      return MElt::self(mild ? random_coinfinite_injection(rng, b) : random_injection(rng, b));
    case MSetFamily::Kind::Warning: return MElt::warning(random_injection(rng, b));
    case MSetFamily::Kind::Point: return MElt::point();
    case MSetFamily::Kind::Product: {
      std::vector<MElt> parts;
      for (const auto& f : family.factors) parts.push_back(draw_element(rng, f, b, mild || f.filter != MSetFamily::Filter::All));
      return MElt::product(std::move(parts));
    }
  }
  return MElt::point();
}

}  // namespace

MElt random_element(Rng& rng, const MSetFamily& family, const GenBounds& b) {
  const bool mild = family.filter != MSetFamily::Filter::All;
  if (family.kind == MSetFamily::Kind::Self && family.filter == MSetFamily::Filter::Tame)
    fail(ErrorKind::UnsupportedFamily, "M^tau is empty");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    MElt x = draw_element(rng, family, b, mild);
    if (family.contains(x)) return x;
  }
  fail(ErrorKind::UnsupportedFamily, "no elements found in " + family.name());
}

}  // namespace mildem
