#include "mildem/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <set>

#include "mildem/boxprod.hpp"
#include "mildem/emss.hpp"
#include "mildem/gen.hpp"
#include "mildem/group.hpp"
#include "mildem/operadic.hpp"
#include "mildem/staralg.hpp"

namespace mildem {

namespace {

constexpr std::size_t kMaxListedFailures = 25;

struct Outcome {
  std::optional<std::string> failure;
  std::string tag;
  std::vector<std::pair<std::string, std::string>> notes;
};

Outcome pass(std::string tag = {}) { return Outcome{std::nullopt, std::move(tag), {}}; }
Outcome failed(std::string what) { return Outcome{std::move(what), {}, {}}; }

struct Plan {
  std::size_t count = 0;
  std::function<Outcome(std::size_t)> item;
};

struct CheckDef {
  const char* id;
  const char* statement;
  CheckMode mode;
  Plan (*plan)(const CheckSpec&);
};

// ---------------------------------------------------------------- helpers

GenBounds bounds_of(const CheckSpec& s) {
  GenBounds b;
  b.max_period = s.period_bound;
  b.max_entry = std::max<Int>(s.entry_bound, 4);
  return b;
}

// Maps that get composed with other generated maps stay small.
GenBounds small_of(const CheckSpec& s) { return GenBounds{4, std::min<Int>(4, s.period_bound), 12, 12}; }

Int capped(const CheckSpec& s, Int cap) { return std::min(s.degree, cap); }

std::string show(const std::vector<Simplex>& xs) {
  std::string out;
  for (const Simplex& x : xs) out += (out.empty() ? "" : "; ") + to_string(x);
  return "[" + out + "]";
}

std::string show(const std::vector<PAPInj>& us) {
  std::string out;
  for (const PAPInj& u : us) out += (out.empty() ? "" : ", ") + to_string(u);
  return "[" + out + "]";
}

std::string show(const std::vector<UPSet>& as) {
  std::string out;
  for (const UPSet& a : as) out += (out.empty() ? "" : ", ") + to_string(a);
  return "[" + out + "]";
}

// x together with a co-infinite set it is supported on.
struct Held {
  MElt x;
  UPSet a;
};

enum class HeldKind { InjPair, InjOne, SelfMild, Product, Warning };

Held random_held_of(Rng& rng, const GenBounds& b, HeldKind kind) {
  Held h;
  UPSet base;
  switch (kind) {
    case HeldKind::InjPair: h.x = random_element(rng, MSetFamily::injections({1, 2}), b); break;
    case HeldKind::InjOne: h.x = random_element(rng, MSetFamily::injections({1}), b); break;
    case HeldKind::SelfMild: h.x = random_element(rng, MSetFamily::self().mild(), b); break;
    case HeldKind::Product:
      h.x = MElt::product({random_element(rng, MSetFamily::injections({1}), b),
                           random_element(rng, MSetFamily::self().mild(), b)});
      break;
    case HeldKind::Warning:
      for (;;) {
        const PAPInj u = random_injection(rng, b);
        base = image(u, UPSet::evens());
        if (base.is_coinfinite()) {
          h.x = MElt::warning(u);
          break;
        }
      }
      break;
  }
  if (kind != HeldKind::Warning) base = *minimal_support(h.x);
  h.a = set_union(base, random_finite(rng, 3 * b.max_entry, 3));
  if (rng.coin(0.3)) {
    const UPSet wider = set_union(h.a, random_coinfinite(rng, b));
    if (wider.is_coinfinite()) h.a = wider;
  }
  return h;
}

HeldKind random_kind(Rng& rng, bool allow_warning) {
  return static_cast<HeldKind>(rng.uniform(0, allow_warning ? 4 : 3));
}

Held random_held(Rng& rng, const GenBounds& b, bool allow_warning) {
  return random_held_of(rng, b, random_kind(rng, allow_warning));
}

struct HeldSimplex {
  Simplex s;
  std::vector<UPSet> a;
};

// All coordinates from one family.
HeldSimplex random_held_simplex(Rng& rng, const GenBounds& b, Int degree) {
  HeldSimplex out;
  const HeldKind kind = random_kind(rng, true);
  for (Int k = 0; k <= degree; ++k) {
    Held h = random_held_of(rng, b, kind);
    out.s.coords.push_back(std::move(h.x));
    out.a.push_back(std::move(h.a));
  }
  return out;
}

std::vector<PAPInj> random_maps(Rng& rng, std::size_t n, const GenBounds& b) {
  std::vector<PAPInj> us;
  for (std::size_t i = 0; i < n; ++i) us.push_back(random_injection(rng, b));
  return us;
}

// Mild SelfM simplices sharing an outer map on disjoint progressions, so the
// tuple lies in the box product.
std::vector<Simplex> boxed_self(Rng& rng, std::size_t n, Int degree, const GenBounds& small) {
  std::vector<Simplex> xs(n);
  for (Int k = 0; k <= degree; ++k) {
    const PAPInj a = random_coinfinite_injection(rng, small);
    for (std::size_t j = 0; j < n; ++j)
      xs[j].coords.push_back(MElt::self(compose(a, maps::affine(2 * static_cast<Int>(n), static_cast<Int>(j)))));
  }
  return xs;
}

Simplex random_inj_simplex(Rng& rng, const std::vector<Int>& domain, Int degree, Int bound) {
  const auto pool = injections_upto(domain, bound);
  Simplex s;
  for (Int k = 0; k <= degree; ++k) s.coords.push_back(rng.pick(pool));
  return s;
}

Simplex random_mild_self(Rng& rng, Int degree, const GenBounds& b) {
  Simplex s;
  for (Int k = 0; k <= degree; ++k) s.coords.push_back(random_element(rng, MSetFamily::self().mild(), b));
  return s;
}

// A tuple of n simplices for the monoidality checks: finite injections with
// disjoint domains, boxed SelfM simplices, or unrelated mild SelfM simplices.
std::vector<Simplex> random_tuple(Rng& rng, std::size_t n, Int degree, std::size_t variant, const GenBounds& b,
                                  const GenBounds& small) {
  std::vector<Simplex> xs;
  switch (variant % 3) {
    case 0: {
      const std::vector<std::vector<Int>> domains = {{1}, {2}, {1, 2}};
      for (std::size_t j = 0; j < n; ++j) xs.push_back(random_inj_simplex(rng, domains[j], degree, 12));
      break;
    }
    case 1: xs = boxed_self(rng, n, degree, small); break;
    default:
      for (std::size_t j = 0; j < n; ++j) xs.push_back(random_mild_self(rng, degree, b));
  }
  return xs;
}

std::vector<PAPInj> self_pool() {
  using namespace maps;
  return {identity(),    succ(),        swap(1, 2),   doubling(),
          affine(2, 1),  affine(3, 2),  affine(4, 1), compose(succ(), doubling())};
}

// Simplex number i of the degree-d tuples over pool, in mixed radix.
Simplex tuple_at(const std::vector<MElt>& pool, Int degree, std::size_t i) {
  Simplex s;
  for (Int k = 0; k <= degree; ++k) {
    s.coords.push_back(pool[i % pool.size()]);
    i /= pool.size();
  }
  std::reverse(s.coords.begin(), s.coords.end());
  return s;
}

std::size_t power(std::size_t base, Int e) {
  std::size_t out = 1;
  for (Int i = 0; i < e; ++i) out *= base;
  return out;
}

UPSet warning_set(Int n) { return set_intersection(UPSet::evens(), UPSet::above(std::max<Int>(0, 2 * n - 1))); }

constexpr Int kHorizon = 240;

// ---------------------------------------------------------------- supports

Plan agree_supp_1(const CheckSpec& spec) {
  return {spec.trials, [spec](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds b = bounds_of(spec);
            const Held h = random_held(rng, b, true);
            const PAPInj f = random_injection(rng, b);
            const PAPInj g = random_agreeing(rng, f, h.a, b);
            if (!(act(f, h.x) == act(g, h.x)))
              return failed("x=" + to_string(h.x) + " A=" + to_string(h.a) + " f=" + to_string(f) + " g=" + to_string(g));
            return pass();
          }};
}

Plan agree_supp_2(const CheckSpec& spec) {
  return {spec.trials, [spec](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds b = bounds_of(spec);
            const Held h = random_held(rng, b, true);
            const PAPInj f = random_injection(rng, b);
            if (!is_supported_on(act(f, h.x), image(f, h.a)))
              return failed("x=" + to_string(h.x) + " A=" + to_string(h.a) + " f=" + to_string(f));
            return pass();
          }};
}

Plan agree_supp_3(const CheckSpec& spec) {
  return {spec.trials, [spec](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds b = bounds_of(spec);
            const Held h = random_held(rng, b, true);
            const PAPInj f = random_injection(rng, b);
            UPSet sub = set_intersection(h.a, random_upset(rng, b));
            if (i % 3 == 0)
              if (auto m = minimal_support(h.x)) sub = *m;
            const bool premise = is_supported_on(act(f, h.x), image(f, sub));
            if (premise && !is_supported_on(h.x, sub))
              return failed("x=" + to_string(h.x) + " A=" + to_string(h.a) + " A'=" + to_string(sub) +
                            " f=" + to_string(f));
            return pass(premise ? "premise holds" : "premise fails");
          }};
}

// Pointwise re-check of the maps built for closure of supports under
// intersection, independent of the symbolic verification.
std::optional<std::string> recheck_chain(const WitnessChain& c, const PAPInj& f, const UPSet& a, const UPSet& b) {
  auto in = [](const UPSet& s, Int y) { return s.contains(y); };
  for (Int y = 1; y <= kHorizon; ++y) {
    if (c.case_number == 1) {
      const PAPInj &f1 = c.maps.at(0), &f2 = c.maps.at(1);
      if (in(a, y) && f1(y) != f(y)) return "f1 differs from f on A at " + std::to_string(y);
      if (!in(a, y) && in(a, f1(y))) return "f1 sends " + std::to_string(y) + " into A";
      if (in(b, y) && f2(y) != f1(y)) return "f2 differs from f1 on B at " + std::to_string(y);
      if (in(a, y) && f2(y) != y) return "f2 moves " + std::to_string(y) + " in A";
    } else {
      const PAPInj &g1 = c.maps.at(0), &g2 = c.maps.at(1), &g3 = c.maps.at(2);
      if (in(b, y) && g1(y) != f(y)) return "g1 differs from f on B at " + std::to_string(y);
      if (!in(b, y) && in(a, g1(y))) return "g1 sends " + std::to_string(y) + " outside B into A";
      if (in(a, y) && g2(y) != g1(y)) return "g2 differs from g1 on A at " + std::to_string(y);
      if (!in(a, y) && in(a, g2(y))) return "g2 sends " + std::to_string(y) + " into A";
      if (in(a, y) && g3(y) != y) return "g3 moves " + std::to_string(y) + " in A";
      if (in(b, y) && g3(y) != g2(y)) return "g3 differs from g2 on B at " + std::to_string(y);
    }
  }
  // exact versions of the same claims
  const UPSet ac = complement(a);
  if (c.case_number == 1) {
    if (!equal_on(c.maps[0], f, a) || !is_subset(image(c.maps[0], ac), ac) || !equal_on(c.maps[1], c.maps[0], b) ||
        !fixes_pointwise(c.maps[1], a))
      return "exact chain property fails (case 1)";
  } else {
    if (!equal_on(c.maps[0], f, b) || !is_subset(image(c.maps[0], complement(b)), ac) ||
        !equal_on(c.maps[1], c.maps[0], a) || !is_subset(preimage(c.maps[1], a), a) ||
        !fixes_pointwise(c.maps[2], a) || !equal_on(c.maps[2], c.maps[1], b))
      return "exact chain property fails (case 2)";
  }
  return std::nullopt;
}

Plan cap_supp(const CheckSpec& spec) {
  return {spec.trials, [spec](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds b = bounds_of(spec);
            const Held h = random_held(rng, b, false);
            const UPSet s = *minimal_support(h.x);
            const QuasiAffine e = enumerator(complement(s));
            const UPSet p1 = random_coinfinite(rng, b), p2 = random_coinfinite(rng, b);
            const UPSet a = set_union(s, image(e, p1)), bb = set_union(s, image(e, p2));
            const UPSet ab = set_intersection(a, bb), a_only = set_difference(a, bb), ac = complement(a);
            PAPInj f;
            if (i % 2 == 1 && a_only.is_infinite()) {
              // swaps A ∖ B with A^c, so f(A) covers A^c
              const std::pair<UPSet, QuasiAffine> parts[] = {
                  {ab, maps::identity().map()}, {a_only, order_iso(a_only, ac)}, {ac, order_iso(ac, a_only)}};
              f = validate(piecewise(parts));
            } else {
              f = random_fixing(rng, ab, b);
            }
            const std::string input =
                "x=" + to_string(h.x) + " A=" + to_string(a) + " B=" + to_string(bb) + " f=" + to_string(f);
            const WitnessChain chain = intersection_support_witness(h.x, a, bb, f);
            if (!fixes_pointwise(f, ab)) return failed("f does not fix A∩B: " + input);
            if (auto bad = recheck_chain(chain, f, a, bb)) return failed(*bad + ": " + input);
            if (!(act(chain.maps.back(), h.x) == h.x)) return failed("last map moves x: " + input);
            if (!(act(f, h.x) == h.x)) return failed("f.x != x: " + input);
            return pass("chain case " + std::to_string(chain.case_number));
          }};
}

Plan inj_act(const CheckSpec& spec) {
  struct Data {
    std::vector<PAPInj> fs;
    std::vector<std::pair<std::string, std::vector<MElt>>> pools;
  };
  auto d = std::make_shared<Data>();
  d->fs = {maps::identity(), maps::succ(), maps::doubling(), maps::swap(1, 2), maps::affine(3, 2)};
  for (std::size_t t = 0; t < 20; ++t) {
    Rng rng = trial_rng(spec.seed, t);
    d->fs.push_back(random_injection(rng, bounds_of(spec)));
  }
  d->pools.emplace_back("Inj({1})", injections_upto({1}, spec.entry_bound));
  d->pools.emplace_back("Inj({1,2})", injections_upto({1, 2}, spec.entry_bound));
  std::vector<MElt> selfs, warn;
  for (const PAPInj& u : self_pool())
    if (is_mild(MElt::self(u))) selfs.push_back(MElt::self(u));
  for (Int p = 1; p <= 4; ++p)
    for (Int c = 0; c < p; ++c) {
      selfs.push_back(MElt::self(compose(maps::affine(p, c), maps::doubling())));
      warn.push_back(MElt::warning(maps::affine(p + 1, c)));
    }
  d->pools.emplace_back("SelfM^mu", selfs);
  d->pools.emplace_back("Warning^mu", warn);
  const std::size_t np = d->pools.size();
  return {d->fs.size() * np, [d, np](std::size_t i) {
            const PAPInj& f = d->fs[i / np];
            const auto& [name, pool] = d->pools[i % np];
            std::vector<MElt> moved;
            for (const MElt& x : pool) moved.push_back(act(f, x));
            for (std::size_t a = 0; a < pool.size(); ++a)
              for (std::size_t c = 0; c < a; ++c)
                if (moved[a] == moved[c] && !(pool[a] == pool[c]))
                  return failed("f=" + to_string(f) + " x=" + to_string(pool[a]) + " y=" + to_string(pool[c]));
            return pass(name);
          }};
}

// Sub-ℳ-sets Y of products of mild sets; the complement must be closed too.
Plan complement_check(const CheckSpec& spec) {
  return {spec.trials, [spec](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds b = bounds_of(spec);
            const MSetFamily one = MSetFamily::injections({1}), mild = MSetFamily::self().mild();
            const bool want_in = rng.coin();
            MElt z;
            std::function<bool(const MElt&)> in_y;
            std::string name;
            switch (i % 3) {
              case 0: {
                name = "diagonal of Inj({1})^2";
                in_y = [](const MElt& p) { return p.parts()[0] == p.parts()[1]; };
                const MElt u = random_element(rng, one, b);
                z = MElt::product({u, want_in ? u : random_element(rng, one, b)});
                break;
              }
              case 1: {
                name = "v(1) in im u";
                in_y = [](const MElt& p) { return image(p.parts()[0].map()).contains(p.parts()[1].values()[0]); };
                const MElt u = random_element(rng, mild, b);
                const Int v = want_in ? u.map()(rng.uniform(1, 10)) : rng.uniform(1, 3 * b.max_entry);
                z = MElt::product({u, MElt::injection({1}, {v})});
                break;
              }
              default: {
                name = "disjoint images";
                in_y = [](const MElt& p) { return disjoint(image(p.parts()[0].map()), image(p.parts()[1].map())); };
                if (want_in) {
                  const PAPInj w = random_injection(rng, b);
                  z = MElt::product({MElt::self(compose(w, maps::affine(2, 0))), MElt::self(compose(w, maps::affine(2, 1)))});
                } else {
                  z = MElt::product({random_element(rng, mild, b), random_element(rng, mild, b)});
                }
              }
            }
            const PAPInj f = random_injection(rng, b);
            const bool before = in_y(z), after = in_y(act(f, z));
            if (before != after)
              return failed(name + ": z=" + to_string(z) + " f=" + to_string(f) + (before ? " leaves Y" : " enters Y"));
            return pass(before ? "in Y" : "in the complement");
          }};
}

Plan ksupp(const CheckSpec& spec) {
  return {spec.trials, [spec](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds b = bounds_of(spec);
            const Int n = rng.uniform(0, spec.degree);
            const HeldSimplex h = random_held_simplex(rng, b, n);
            const auto us = random_maps(rng, static_cast<std::size_t>(n + 1), b);
            const Simplex moved = em_act(us, h.s);
            for (Int k = 0; k <= n; ++k) {
              if (!is_k_supported_on(moved, k, image(us[k])))
                return failed("k=" + std::to_string(k) + " not supported on im(u_k): x=" + to_string(h.s) + " u=" + show(us));
              if (!is_k_supported_on(moved, k, image(us[k], h.a[k])))
                return failed("k=" + std::to_string(k) + " not supported on u_k(A): x=" + to_string(h.s) +
                              " A=" + to_string(h.a[k]) + " u=" + show(us));
            }
            return pass();
          }};
}

Plan fksupp(const CheckSpec& spec) {
  return {spec.trials, [spec](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds b = bounds_of(spec);
            const Int n = rng.uniform(0, spec.degree);
            const HeldSimplex h = random_held_simplex(rng, b, n);
            for (Int m = 0; m <= spec.degree; ++m)
              for (const DeltaMap& f : monotone_maps(m, n)) {
                const Simplex pulled = pullback(h.s, f);
                for (Int k = 0; k <= m; ++k)
                  if (!is_k_supported_on(pulled, k, h.a[static_cast<std::size_t>(f[k])]))
                    return failed("x=" + to_string(h.s) + " A=" + show(h.a) + " k=" + std::to_string(k) +
                                  " f(k)=" + std::to_string(f[k]));
              }
            return pass();
          }};
}

Plan kfsupp(const CheckSpec& spec) {
  return {spec.trials, [spec](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds b = bounds_of(spec);
            const Int n = rng.uniform(0, spec.degree);
            const HeldSimplex h = random_held_simplex(rng, b, n);
            const auto us = random_maps(rng, static_cast<std::size_t>(n + 1), b);
            const Int k = rng.uniform(0, n);
            const UPSet a = i % 2 ? h.a[k] : random_coinfinite(rng, b);
            const bool premise = is_k_supported_on(em_act(us, h.s), k, image(us[k], a));
            if (premise && !is_k_supported_on(h.s, k, a))
              return failed("x=" + to_string(h.s) + " k=" + std::to_string(k) + " A=" + to_string(a) + " u=" + show(us));
            return pass(premise ? "premise holds" : "premise fails");
          }};
}

// Maps whose images of `a` jointly leave an infinite complement.
std::vector<PAPInj> maps_with_coinfinite_union(Rng& rng, const UPSet& a, std::size_t n, const GenBounds& b) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const auto us = random_maps(rng, n, b);
    UPSet u;
    for (const PAPInj& x : us) u = set_union(u, image(x, a));
    if (u.is_coinfinite()) return us;
  }
  std::vector<PAPInj> us;
  for (std::size_t k = 0; k < n; ++k)
    us.push_back(compose(random_coinfinite_injection(rng, b), maps::affine(static_cast<Int>(n) + 1, static_cast<Int>(k))));
  return us;
}

Plan infinite_compl(const CheckSpec& spec) {
  return {spec.trials, [spec](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds b = bounds_of(spec);
            const UPSet a = random_coinfinite(rng, b);
            const auto us = maps_with_coinfinite_union(rng, a, static_cast<std::size_t>(rng.uniform(1, 3)), b);
            const PAPInj chi = stabilizing_chi(a, us);
            const std::string input = "A=" + to_string(a) + " u=" + show(us) + " chi=" + to_string(chi);
            for (Int y : a.members_upto(kHorizon))
              if (chi(y) != y) return failed("chi moves " + std::to_string(y) + ": " + input);
            UPSet joint;
            for (const PAPInj& u : us) joint = set_union(joint, image(compose(u, chi)));
            if (!fixes_pointwise(chi, a) || !joint.is_coinfinite()) return failed(input);
            return pass();
          }};
}

Plan equal_mod_ma(const CheckSpec& spec) {
  return {spec.trials, [spec](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds b = bounds_of(spec);
            const UPSet a = random_coinfinite(rng, b);
            const auto us = maps_with_coinfinite_union(rng, a, static_cast<std::size_t>(rng.uniform(1, 3)), b);
            std::vector<PAPInj> vs;
            for (const PAPInj& u : us) vs.push_back(random_agreeing(rng, u, a, b));
            for (std::size_t k = 0; k < us.size(); ++k)
              for (Int y : a.members_upto(kHorizon))
                if (us[k](y) != vs[k](y)) return failed("generator broke agreement on A=" + to_string(a));
            const std::string input = "A=" + to_string(a) + " u=" + show(us) + " v=" + show(vs);
            if (equal_mod_MA(a, us, vs) != ModEquality::Equal) return failed(input);
            if (!a.empty()) {
              auto ws = vs;
              ws[0] = compose(maps::succ(), ws[0]);
              if (equal_mod_MA(a, us, ws) == ModEquality::Equal) return failed("disagreeing tuples reported equal: " + input);
            }
            return pass();
          }};
}

Plan tau_mu_functor(const CheckSpec& spec) {
  auto pool = std::make_shared<std::vector<MElt>>();
  for (const PAPInj& u : self_pool()) pool->push_back(MElt::self(u));
  const Int top = spec.degree;
  std::size_t total = 0;
  for (Int d = 0; d <= top; ++d) total += power(pool->size(), d + 1);
  return {total, [pool, top](std::size_t i) {
            Int d = 0;
            while (i >= power(pool->size(), d + 1)) i -= power(pool->size(), ++d);
            const Simplex s = tuple_at(*pool, d, i);
            const TruncEMSS all{MSetFamily::self(), MSetFamily::Filter::All, top, std::nullopt};
            const TruncEMSS mild_part{MSetFamily::self().mild(), MSetFamily::Filter::All, top, std::nullopt};
            const bool mu = filter_tau_mu(all, SimplicialFilter::Mu).contains(s);
            if (mu != mild_part.contains(s)) return failed("(E SelfM)^mu and E(SelfM^mu) differ on " + to_string(s));
            // the first three pool maps have cofinite image
            bool expect = true;
            for (const MElt& x : s.coords) expect = expect && std::find(pool->begin() + 3, pool->end(), x) != pool->end();
            if (mu != expect) return failed("mildness of " + to_string(s) + " disagrees with the image test");
            if (filter_tau_mu(all, SimplicialFilter::Tau).contains(s)) return failed("(E SelfM)^tau contains " + to_string(s));
            return pass("degree " + std::to_string(d) + (mu ? " mild" : " not mild"));
          }};
}

// ---------------------------------------------------------------- box product

Plan monoidal(const CheckSpec& spec, MonoidalKind kind, std::size_t n) {
  return {spec.trials, [spec, kind, n](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const Int degree = rng.uniform(0, capped(spec, 2));
            const auto xs = random_tuple(rng, n, degree, i, bounds_of(spec), small_of(spec));
            const MonoidalReport r = monoidal_witness(kind, xs);
            if (!r.ok) return failed(show(xs) + ": " + r.detail);
            return pass(in_box(xs) ? "in the box" : "outside the box");
          }};
}

Plan box_assoc(const CheckSpec& s) { return monoidal(s, MonoidalKind::Assoc, 3); }
Plan box_symm(const CheckSpec& s) { return monoidal(s, MonoidalKind::Symm, 2); }
Plan box_unit(const CheckSpec& s) { return monoidal(s, MonoidalKind::Unit, 1); }

Plan inj_coproduct(const CheckSpec& spec) {
  struct Case {
    std::vector<Int> a, b;
    Int degree;
  };
  auto cases = std::make_shared<std::vector<Case>>(
      std::vector<Case>{{{1}, {2}, 0}, {{1}, {2}, 1}, {{1}, {}, 0}, {{1}, {}, 1}, {{1, 2}, {3}, 0}});
  const Int bound = spec.entry_bound;
  return {cases->size(), [cases, bound](std::size_t i) {
            const Case& c = (*cases)[i];
            const CoproductIsoReport r = inj_coproduct_iso(c.a, c.b, c.degree, bound);
            auto name = [](const std::vector<Int>& v) {
              std::string s;
              for (Int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
              return "{" + s + "}";
            };
            const std::string label = "A=" + name(c.a) + " B=" + name(c.b) + " degree " + std::to_string(c.degree);
            Outcome o = r.ok() ? pass() : failed(label + ": left " + std::to_string(r.left_count) + ", right " +
                                                 std::to_string(r.right_count) + (r.injective ? "" : ", not injective") +
                                                 (r.onto_box ? "" : ", not onto"));
            o.notes.emplace_back(label, std::to_string(r.left_count) + " = " + std::to_string(r.right_count));
            return o;
          }};
}

Plan tame_strong_monoidal(const CheckSpec& spec) {
  struct Data {
    std::vector<std::pair<Simplex, Simplex>> pairs;
  };
  auto d = std::make_shared<Data>();
  const Int top = capped(spec, 1);
  const Int bound = std::min<Int>(spec.entry_bound, 5);
  const std::vector<std::vector<MElt>> left = {injections_upto({1}, bound),
                                               {MElt::self(maps::affine(4, 1)), MElt::self(maps::affine(4, 3))}};
  const std::vector<std::vector<MElt>> right = {injections_upto({2, 3}, bound - 1),
                                                {MElt::self(maps::affine(4, 0)), MElt::self(maps::affine(4, 2))}};
  for (Int deg = 0; deg <= top; ++deg)
    for (const auto& lp : left)
      for (const auto& rp : right)
        for (const Simplex& x : all_simplices(lp, deg))
          for (const Simplex& y : all_simplices(rp, deg)) d->pairs.emplace_back(x, y);
  return {d->pairs.size(), [d](std::size_t i) {
            const auto& [x, y] = d->pairs[i];
            if (!in_box({x, y})) return pass("outside the box");
            const bool tame_pair = finitely_supported(zip({x, y}));
            if (tame_pair != (finitely_supported(x) && finitely_supported(y))) return failed(show({x, y}));
            return pass(tame_pair ? "tame" : "mild, not tame");
          }};
}

// ---------------------------------------------------------------- operadic product

Plan operad_round_trip(const CheckSpec& spec) {
  struct Data {
    std::vector<std::vector<Simplex>> xs, ys;
    std::vector<std::size_t> offsets;
  };
  auto d = std::make_shared<Data>();
  const Int top = capped(spec, 2);
  std::size_t total = 0;
  for (Int deg = 0; deg <= top; ++deg) {
    d->xs.push_back(all_simplices(injections_upto({1}, spec.entry_bound), deg));
    d->ys.push_back(all_simplices(injections_upto({2}, spec.entry_bound), deg));
    d->offsets.push_back(total);
    total += d->xs.back().size() * d->ys.back().size();
  }
  return {total, [d, spec](std::size_t i) {
            std::size_t deg = d->offsets.size() - 1;
            while (i < d->offsets[deg]) --deg;
            const std::size_t local = i - d->offsets[deg];
            const auto& ys = d->ys[deg];
            const std::vector<Simplex> s = {d->xs[deg][local / ys.size()], ys[local % ys.size()]};
            if (!in_box(s)) return pass("outside the box");
            const OperadicClass c = phi_inverse(s);
            if (phi(c) != s) return failed("phi(phi_inverse(s)) != s for s=" + show(s));
            Rng rng = trial_rng(spec.seed, i);
            OperadicClass r;
            r.payload = s;
            for (std::size_t k = 0; k <= deg; ++k) r.frame.push_back(random_injn(rng, 2, small_of(spec)));
            if (!class_equal(phi_inverse(phi(r)), r)) return failed("reverse trip fails for c=" + to_string(r));
            return pass("degree " + std::to_string(deg));
          }};
}

OperadicClass random_class(Rng& rng, const std::vector<Simplex>& payload, const GenBounds& small) {
  OperadicClass c;
  c.payload = payload;
  for (Int k = 0; k <= payload[0].degree(); ++k) c.frame.push_back(random_injn(rng, payload.size(), small));
  return c;
}

Plan class_eq_relation(const CheckSpec& spec) {
  return {spec.trials, [spec](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds small = small_of(spec);
            const Int degree = rng.uniform(0, capped(spec, 2));
            const std::vector<Simplex> xs =
                i % 2 ? boxed_self(rng, 2, degree, small)
                      : std::vector<Simplex>{random_inj_simplex(rng, {1}, degree, 9), random_inj_simplex(rng, {1, 2}, degree, 9)};
            const OperadicClass c = random_class(rng, xs, small);
            std::vector<std::vector<PAPInj>> us;
            for (Int k = 0; k <= degree; ++k) us.push_back(random_maps(rng, 2, small));
            const OperadicClass lhs = precompose_frame(c, us), rhs = act_payload(c, us);
            if (!class_equal(lhs, rhs)) return failed("relation pair not identified: c=" + to_string(c));
            if (phi(lhs) != phi(rhs)) return failed("phi differs on a relation pair: c=" + to_string(c));
            const OperadicClass other = random_class(rng, xs, small);
            const bool same = class_equal(c, other);
            if (same != (phi(c) == phi(other)))
              return failed("class_equal disagrees with phi: " + to_string(c) + " vs " + to_string(other));
            // frames related by maps fixing the supports agree there
            for (Int k = 0; k <= degree; ++k) {
              std::vector<PAPInj> fixers;
              std::vector<UPSet> supports;
              for (const Simplex& x : xs) {
                supports.push_back(*k_support(x, k));
                fixers.push_back(random_fixing(rng, supports.back(), small));
              }
              const InjN moved = precompose(c.frame[k], fixers);
              for (std::size_t j = 0; j < xs.size(); ++j)
                if (!equal_on(moved.component(j), c.frame[k].component(j), supports[j]))
                  return failed("precomposing by fixers moved the frame on " + show(supports));
            }
            return pass(same ? "same class" : "different classes");
          }};
}

Plan star_mod_mild(const CheckSpec& spec) {
  auto fams = std::make_shared<std::vector<MSetFamily>>(std::vector<MSetFamily>{
      MSetFamily::self(), MSetFamily::injections({1}), MSetFamily::injections({1, 2})});
  return {fams->size(), [fams, spec](std::size_t i) {
            const TruncEMSS x{(*fams)[i], MSetFamily::Filter::Mild, spec.degree, std::nullopt};
            const StarModuleReport r = star_module_check(x, capped(spec, 2), std::max<std::size_t>(spec.trials / 5, 10), spec.seed);
            Outcome o = r.is_star_module() ? pass() : failed(r.family + " is not a *-module");
            o.notes.emplace_back(r.family, std::to_string(r.hit) + "/" + std::to_string(r.sampled) + " hit, " +
                                               std::to_string(r.relation_pairs) + " relation pairs, " +
                                               std::to_string(r.compared) + " class comparisons");
            return o;
          }};
}

Plan star_mod_non_mild(const CheckSpec& spec) {
  return {1, [spec](std::size_t) {
            const TruncEMSS x{MSetFamily::self(), MSetFamily::Filter::All, spec.degree, std::nullopt};
            const StarModuleReport r = star_module_check(x, capped(spec, 2), std::max<std::size_t>(spec.trials / 10, 5), spec.seed);
            if (r.is_star_module()) return failed("E(SelfM) passed as a *-module");
            if (!r.unhit || !r.unhit_support) return failed("no witness outside the image of phi");
            const Simplex id = Simplex::vertex(MElt::self(maps::identity()));
            Outcome o = *r.unhit == id && *r.unhit_support == UPSet::omega() && !r.unhit_support->is_coinfinite()
                            ? pass()
                            : failed("unexpected witness " + to_string(*r.unhit));
            o.notes.emplace_back("witness", to_string(*r.unhit));
            o.notes.emplace_back("witness level", std::to_string(r.unhit_level));
            o.notes.emplace_back("witness support", to_string(*r.unhit_support));
            return o;
          }};
}

Plan mu_via_operadic_check(const CheckSpec& spec) {
  return {spec.trials, [spec](std::size_t i) {
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds small = small_of(spec);
            const Int degree = i == 0 ? 0 : rng.uniform(0, capped(spec, 2));
            const MSetFamily fams[] = {MSetFamily::self(), MSetFamily::warning(), MSetFamily::injections({1}),
                                       MSetFamily::self().mild()};
            Simplex x;
            if (i == 0) x = Simplex::vertex(MElt::self(maps::identity()));
            else
              for (Int k = 0; k <= degree; ++k) x.coords.push_back(random_element(rng, fams[i % 4], small));
            std::optional<std::vector<InjN>> frame;
            if (i % 2 == 1) {
              frame.emplace();
              for (Int k = 0; k <= degree; ++k) frame->push_back(random_injn(rng, 2, small));
            }
            const MuReport r = mu_via_operadic(x, frame);
            if (!r.relation_holds) return failed("g(d ⊔ id) != f(id ⊔ d) for x=" + to_string(x));
            if (!r.phi_agrees) return failed("the rewritten class has a different image for x=" + to_string(x));
            if (!r.payload_mild) return failed("payload not mild for x=" + to_string(x));
            if (i == 0 && !(r.result.payload[0] == Simplex::vertex(MElt::self(maps::doubling()))))
              return failed("[f; id, *] does not become [g; d, *]");
            return pass();
          }};
}

// ---------------------------------------------------------------- warning quotient

Plan warning_quotient(const CheckSpec& spec) {
  // items 0..10: A_n; 11: the empty set; 12: no least support
  return {13, [spec](std::size_t i) {
            const MElt id = MElt::warning(maps::identity());
            if (i <= 10) {
              const Int n = static_cast<Int>(i);
              const UPSet a = warning_set(n);
              if (!is_supported_on(id, a)) return failed("[id] not supported on A_" + std::to_string(n));
              Rng rng = trial_rng(spec.seed, i);
              for (int t = 0; t < 20; ++t) {
                const PAPInj g = random_fixing(rng, a, bounds_of(spec));
                if (!(act(g, id) == id)) return failed("g in M_A moves [id]: g=" + to_string(g) + " A=" + to_string(a));
              }
              return pass("A_n");
            }
            if (i == 11) {
              if (is_supported_on(id, UPSet{})) return failed("[id] supported on the empty set");
              if (act(maps::succ(), id) == id) return failed("succ fixes [id]");
              return pass("empty set");
            }
            if (minimal_support(id)) return failed("[id] reported a least support");
            return pass("no least support");
          }};
}

Plan factorization_counterexample(const CheckSpec& spec) {
  return {spec.trials + 1, [spec](std::size_t i) {
            const UPSet evens = UPSet::evens(), odds = UPSet::odds();
            if (i == spec.trials) {
              if (is_subset(image(maps::succ(), evens), evens)) return failed("succ maps evens into evens");
              return pass("succ");
            }
            Rng rng = trial_rng(spec.seed, i);
            const GenBounds small = small_of(spec);
            PAPInj comp;
            std::string word;
            for (Int r = rng.uniform(1, 4); r > 0; --r) {
              const bool e = rng.coin();
              comp = compose(comp, random_fixing(rng, e ? evens : odds, small));
              word += e ? "E" : "O";
            }
            if (!is_subset(image(comp, evens), evens)) return failed("composite " + word + " = " + to_string(comp));
            for (Int y : evens.members_upto(kHorizon))
              if (comp(y) % 2 != 0) return failed("composite " + word + " sends " + std::to_string(y) + " to an odd value");
            if (comp == maps::succ()) return failed("composite equals succ");
            return pass();
          }};
}

// ---------------------------------------------------------------- equivariance

Plan free_sigma_action(const CheckSpec& spec) {
  // sampled box vertices, then exhaustive pools of Inj(A, ω)/Σ_A
  const std::size_t extra = 3;
  return {spec.trials + extra, [spec](std::size_t i) {
            if (i >= spec.trials) {
              const Int m = static_cast<Int>(i - spec.trials) + 1;
              std::vector<Int> dom;
              for (Int a = 1; a <= m; ++a) dom.push_back(a);
              const GroupTwist tw = symmetric_twist(dom.size());
              for (const MElt& u : injections_upto(dom, std::min<Int>(spec.entry_bound, 6))) {
                const UPSet s = *minimal_support(u);
                if (s.empty()) return failed("vertex supported on the empty set: " + to_string(u));
                for (int g = 0; g < tw.group.order(); ++g)
                  if (*minimal_support(twist_act(tw, g, u)) != s) return failed("support not orbit-invariant: " + to_string(u));
              }
              return pass("Inj/Sigma pool");
            }
            Rng rng = trial_rng(spec.seed, i);
            const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
            std::vector<MElt> xs;
            if (i % 2 == 0) {
              for (std::size_t j = 0; j < n; ++j) xs.push_back(random_element(rng, MSetFamily::injections({1}), bounds_of(spec)));
            } else {
              for (const Simplex& s : boxed_self(rng, n, 0, small_of(spec))) xs.push_back(s.coords[0]);
            }
            std::vector<Simplex> vs;
            for (const MElt& x : xs) vs.push_back(Simplex::vertex(x));
            if (!in_box(vs)) return pass("outside the box");
            std::vector<std::size_t> perm(n);
            for (std::size_t j = 0; j < n; ++j) perm[j] = j;
            while (std::next_permutation(perm.begin(), perm.end())) {
              bool fixed = true;
              for (std::size_t j = 0; j < n; ++j) fixed = fixed && xs[perm[j]] == xs[j];
              if (fixed) return failed("non-identity permutation fixes " + show(vs));
            }
            return pass("n=" + std::to_string(n));
          }};
}

std::string group_name(int which) {
  static const char* names[] = {"C2", "C3", "C4", "Sigma3"};
  return names[which];
}

FinGroup group_at(int which) {
  switch (which) {
    case 0: return FinGroup::cyclic(2);
    case 1: return FinGroup::cyclic(3);
    case 2: return FinGroup::cyclic(4);
    default: return FinGroup::symmetric(3);
  }
}

Plan universal_embedding_check(const CheckSpec&) {
  return {4, [](std::size_t i) {
            const FinGroup h = group_at(static_cast<int>(i));
            const UniversalEmbedding emb = universal_embedding(h);
            const std::string name = group_name(static_cast<int>(i));
            if (!is_homomorphism(h, emb)) return failed(name + ": not a homomorphism");
            const auto classes = subgroup_classes(h);
            for (Subgroup k : classes) {
              int blocks = 0;
              for (Int q = 0; q < 5; ++q) {
                bool found = false;
                for (Int x = q * emb.block_size + 1; x <= (q + 1) * emb.block_size && !found; ++x)
                  found = conjugate(h, stabilizer(h, emb, x), k);
                blocks += found;
              }
              if (blocks < 5) return failed(name + ": an orbit type appears in " + std::to_string(blocks) + " of 5 blocks");
            }
            Outcome o = pass();
            o.notes.emplace_back(name, "block size " + std::to_string(emb.block_size) + ", " +
                                           std::to_string(classes.size()) + " orbit types");
            return o;
          }};
}

// Vertices (u(1), u(2)) <= bound fixed by the graph of φ for H = C_2 acting
// on ω with blocks {3k+1, 3k+2} free and 3k+3 fixed.
std::set<std::vector<Int>> fixed_vertex_oracle(bool phi_id, Int bound) {
  std::set<std::vector<Int>> out;
  if (phi_id) {
    for (Int k = 0; 3 * k + 2 <= bound; ++k) {
      out.insert({3 * k + 1, 3 * k + 2});
      out.insert({3 * k + 2, 3 * k + 1});
    }
  } else {
    for (Int x = 3; x <= bound; x += 3)
      for (Int y = 3; y <= bound; y += 3)
        if (x != y) out.insert({x, y});
  }
  return out;
}

Plan fixed_points(const CheckSpec& spec) {
  // items: (φ = id | trivial) × degree 0, 1
  return {4, [spec](std::size_t i) {
            const bool phi_id = i % 2 == 0;
            const Int n = static_cast<Int>(i / 2);
            const Int bound = n == 0 ? 30 : 12;
            const FinGroup h = FinGroup::cyclic(2);
            const UniversalEmbedding emb = universal_embedding(h);
            const TruncEMSS x{MSetFamily::injections({1, 2}), MSetFamily::Filter::All, capped(spec, 3),
                              symmetric_twist(2)};
            const std::vector<int> phi = phi_id ? std::vector<int>{0, 1} : std::vector<int>{0, 0};
            const FixedPointReport r = graph_fixed_points(x, h, emb, phi, n, bound);
            const auto oracle = fixed_vertex_oracle(phi_id, bound);
            const std::string label = std::string(phi_id ? "phi=id" : "phi trivial") + ", degree " +
                                      std::to_string(n) + ", bound " + std::to_string(bound);
            std::set<std::vector<std::vector<Int>>> got;
            for (const Simplex& s : r.simplices) {
              std::vector<std::vector<Int>> cols;
              for (const MElt& u : s.coords) cols.push_back(u.values());
              got.insert(cols);
            }
            std::set<std::vector<std::vector<Int>>> want;
            if (n == 0)
              for (const auto& v : oracle) want.insert({v});
            else
              for (const auto& v : oracle)
                for (const auto& w : oracle) want.insert({v, w});
            Outcome o = got == want && got.size() == r.simplices.size()
                            ? pass()
                            : failed(label + ": " + std::to_string(r.simplices.size()) + " fixed simplices, expected " +
                                     std::to_string(want.size()));
            o.notes.emplace_back(label, std::to_string(r.simplices.size()) + " fixed simplices");
            return o;
          }};
}

// ---------------------------------------------------------------- *-algebra

Plan cmon_axioms(const CheckSpec& spec) {
  CmonBounds b;
  b.max_entry = spec.entry_bound;
  b.max_degree = capped(spec, 2);
  b.pairs = spec.trials;
  b.triples = spec.trials;
  b.actions = std::max<std::size_t>(spec.trials * 2 / 3, 1);
  auto rep = std::make_shared<CmonReport>(verify_cmon(b, spec.seed));
  return {rep->checks.size(), [rep](std::size_t i) {
            const CmonCheck& c = rep->checks[i];
            Outcome o = c.failures.empty() ? pass() : failed(c.name + ": " + c.failures.front());
            o.notes.emplace_back(c.name, std::to_string(c.instances) + " instances");
            return o;
          }};
}

// ---------------------------------------------------------------- registry

const std::vector<CheckDef>& registry() {
  using M = CheckMode;
  static const std::vector<CheckDef> defs = {
      {"agreeSupp1", "x supported on co-infinite A and f = g on A imply f.x = g.x", M::Randomized, agree_supp_1},
      {"agreeSupp2", "x supported on co-infinite A implies f.x supported on f(A)", M::Randomized, agree_supp_2},
      {"agreeSupp3", "for A' inside a co-infinite support of x, f.x supported on f(A') implies x supported on A'",
       M::Randomized, agree_supp_3},
      {"capSupp", "x supported on co-infinite A and B is supported on A ∩ B, via the explicit chain of maps",
       M::Randomized, cap_supp},
      {"injAct", "every f in M acts injectively on a mild M-set", M::Exhaustive, inj_act},
      {"complement", "the complement of an M-subset of a mild M-set is an M-subset", M::Randomized, complement_check},
      {"ksupp", "(u_0..u_n).x is k-supported on im(u_k), and on u_k(A) when x is k-supported on co-infinite A",
       M::Randomized, ksupp},
      {"fksupp", "x f(k)-supported on co-infinite A implies f^*x k-supported on A", M::Randomized, fksupp},
      {"kfsupp", "for co-infinitely supported x, (u).x k-supported on u_k(A) implies x k-supported on A",
       M::Randomized, kfsupp},
      {"infiniteCompl", "a χ in M_A makes the images of u_k χ jointly co-infinite", M::Randomized, infinite_compl},
      {"equalModMA", "tuples agreeing on co-infinite A with co-infinite joint image are equal in M^(1+n)/M_A",
       M::Randomized, equal_mod_ma},
      {"tauMuFunctor", "(E SelfM)^mu = E(SelfM^mu) degreewise and (E SelfM)^tau is empty", M::Exhaustive,
       tau_mu_functor},
      {"boxAssoc", "box membership transports along the associativity isomorphism", M::Randomized, box_assoc},
      {"boxSymm", "box membership transports along the symmetry isomorphism", M::Randomized, box_symm},
      {"boxUnit", "box membership transports along the unit isomorphism", M::Randomized, box_unit},
      {"injCoproduct", "E Inj(A ⊔ B, ω)^mu is isomorphic to the box product of E Inj(A, ω)^mu and E Inj(B, ω)^mu",
       M::Exhaustive, inj_coproduct},
      {"tameStrongMonoidal", "a box simplex is tame iff both factors are tame", M::Exhaustive, tame_strong_monoidal},
      {"operadRoundTrip", "phi(phi_inverse(s)) = s and phi_inverse(phi(c)) ~ c on all box simplices of "
                          "E Inj({1}, ω)^mu × E Inj({2}, ω)^mu within bounds",
       M::Exhaustive, operad_round_trip},
      {"classEqRelation", "class equality identifies the defining relation and agrees with phi", M::Randomized,
       class_eq_relation},
      {"starModMild", "phi is bijective onto X for mild X", M::Randomized, star_mod_mild},
      {"starModNonMild", "E(SelfM) is not a *-module: the vertex id has least support ω", M::Exhaustive,
       star_mod_non_mild},
      {"muViaOperadic", "[f; x, *] is rewritten with a mild payload via d(x) = 2x", M::Randomized,
       mu_via_operadic_check},
      {"warningQuotient", "[id] is supported on every A_n and not on the empty set, with no least support",
       M::Exhaustive, warning_quotient},
      {"factorizationCounterexample", "composites of maps fixing evens or odds map evens into evens, succ does not",
       M::Randomized, factorization_counterexample},
      {"freeSigmaAction", "Σ_n acts freely on n-fold box vertices and Inj(A, ω)/H has no vertex supported on ∅",
       M::Randomized, free_sigma_action},
      {"universalEmbedding", "the block embedding is a homomorphism and every orbit type recurs in each block",
       M::Exhaustive, universal_embedding_check},
      {"fixedPoints", "graph-subgroup fixed points of E Inj({1,2}, ω) match the block description", M::Exhaustive,
       fixed_points},
      {"cmonAxioms", "the free commutative *-algebra on a point satisfies the commutative monoid axioms",
       M::Randomized, cmon_axioms},
  };
  return defs;
}

const CheckDef& find(const std::string& id) {
  for (const CheckDef& d : registry())
    if (id == d.id) return d;
  fail(ErrorKind::UnknownCheck, "no check named '" + id + "'");
}

Outcome guarded(const Plan& p, std::size_t i) {
  try {
    return p.item(i);
  } catch (const std::exception& e) {
    return failed("item " + std::to_string(i) + " threw " + e.what());
  }
}

std::vector<Outcome> run_items(const Plan& p, Exec exec) {
  std::vector<Outcome> out(p.count);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < p.count; ++i) out[i] = guarded(p, i);
  } else {
    const auto n = static_cast<std::int64_t>(p.count);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) out[i] = guarded(p, static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const CheckDef& d : registry()) v.emplace_back(d.id);
    return v;
  }();
  return ids;
}

std::string check_statement(const std::string& id) { return find(id).statement; }

CheckReport run_check(const CheckSpec& spec, Exec exec, bool timing) {
  const CheckDef& def = find(spec.id);
  if (spec.trials == 0 || spec.degree < 0 || spec.entry_bound < 2 || spec.period_bound < 1)
    fail(ErrorKind::PreconditionFailed, "trials >= 1, degree >= 0, entry bound >= 2 and period bound >= 1 required");
  const auto start = std::chrono::steady_clock::now();
  const Plan plan = def.plan(spec);
  const std::vector<Outcome> outcomes = run_items(plan, exec);

  CheckReport r;
  r.id = def.id;
  r.statement = def.statement;
  r.mode = def.mode;
  r.spec = spec;
  r.instances = plan.count;
  std::map<std::string, std::size_t> cases;
  for (const Outcome& o : outcomes) {
    if (o.failure) {
      ++r.failure_count;
      if (r.failures.size() < kMaxListedFailures) r.failures.push_back(*o.failure);
    }
    if (!o.tag.empty()) ++cases[o.tag];
    for (const auto& n : o.notes) r.notes.push_back(n);
  }
  r.cases.assign(cases.begin(), cases.end());
  if (timing)
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckReport> run_all(const CheckSpec& defaults, Exec exec, bool timing) {
  std::vector<CheckReport> out;
  for (const std::string& id : check_ids()) {
    CheckSpec s = defaults;
    s.id = id;
    out.push_back(run_check(s, exec, timing));
  }
  return out;
}

std::string to_string(CheckMode m) { return m == CheckMode::Exhaustive ? "exhaustive" : "randomized"; }

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["id"] = r.id;
  j["statement"] = r.statement;
  j["mode"] = to_string(r.mode);
  j["trials"] = r.spec.trials;
  j["seed"] = r.spec.seed;
  j["bounds"] = {{"degree", r.spec.degree}, {"entry_bound", r.spec.entry_bound}, {"period_bound", r.spec.period_bound}};
  j["instances"] = r.instances;
  j["passed"] = r.passed();
  j["failure_count"] = r.failure_count;
  j["failures"] = r.failures;
  nlohmann::ordered_json cases = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.cases) cases[k] = v;
  j["cases"] = cases;
  nlohmann::ordered_json notes = nlohmann::ordered_json::array();
  for (const auto& [k, v] : r.notes) notes.push_back({{"name", k}, {"value", v}});
  j["notes"] = notes;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

std::string summary_line(const CheckReport& r) {
  std::string out = (r.passed() ? "PASS " : "FAIL ") + r.id + " [" + to_string(r.mode) + "] " +
                    std::to_string(r.instances) + " instances, " + std::to_string(r.failure_count) + " failures";
  if (r.elapsed_ms) out += ", " + std::to_string(static_cast<long long>(*r.elapsed_ms)) + " ms";
  return out;
}

}  // namespace mildem
