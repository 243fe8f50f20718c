#include <set>

#include "doctest.h"
#include "mildem/boxprod.hpp"
#include "mildem/gen.hpp"
#include "oracle.hpp"

using namespace mildem;

namespace {

Simplex random_simplex(Rng& rng, const MSetFamily& fam, Int degree) {
  Simplex s;
  for (Int k = 0; k <= degree; ++k) s.coords.push_back(random_element(rng, fam));
  return s;
}

Simplex random_inj_simplex(Rng& rng, const std::vector<Int>& domain, Int degree, Int bound) {
  const auto pool = injections_upto(domain, bound);
  Simplex s;
  for (Int k = 0; k <= degree; ++k) s.coords.push_back(rng.pick(pool));
  return s;
}

// Brute force for finite domains: images disjoint at every level.
bool raw_inj_box(const std::vector<Simplex>& xs) {
  for (Int k = 0; k <= xs[0].degree(); ++k) {
    std::set<Int> seen;
    for (const Simplex& x : xs)
      for (Int v : x.coords[k].values())
        if (!seen.insert(v).second) return false;
  }
  return true;
}

Simplex self_vertex(const PAPInj& u) { return Simplex::vertex(MElt::self(u)); }

NotInBox expect_not(const BoxResult& r) {
  REQUIRE(std::holds_alternative<NotInBox>(r));
  return std::get<NotInBox>(r);
}

}  // namespace

TEST_CASE("box membership on small examples") {
  const Simplex u = Simplex::vertex(MElt::injection({1}, {1}));
  const Simplex v = Simplex::vertex(MElt::injection({1}, {2}));
  const BoxResult uv = box_membership({u, v});
  REQUIRE(std::holds_alternative<BoxWitness>(uv));
  const auto& w = std::get<BoxWitness>(uv);
  CHECK(w.levels.size() == 1);
  CHECK(w.levels[0][0] == UPSet::finite({1}));
  CHECK(w.levels[0][1] == UPSet::finite({2}));
  CHECK(verify_box_witness({u, v}, w));

  const NotInBox uu = expect_not(box_membership({u, u}));
  CHECK(uu.reason == NotInBox::Reason::Disjointness);
  CHECK(uu.level == 0);
  CHECK(to_string(uu) == "NotInBox(disjointness, k=0)");

  const NotInBox odd = expect_not(box_membership({self_vertex(maps::doubling()), self_vertex(maps::affine(2, 1))}));
  CHECK(odd.reason == NotInBox::Reason::CoInfiniteUnion);
  CHECK(in_box({self_vertex(maps::doubling()), self_vertex(maps::affine(4, 1))}));
}

TEST_CASE("box membership reports the first failing level") {
  const MElt a = MElt::injection({1}, {1}), b = MElt::injection({1}, {2});
  const NotInBox r = expect_not(box_membership({Simplex({a, a, b}), Simplex({b, b, b})}));
  CHECK(r.reason == NotInBox::Reason::Disjointness);
  CHECK(r.level == 2);
  CHECK_THROWS_AS(box_membership({Simplex({a}), Simplex({a, b})}), Error);
  CHECK_THROWS_AS(box_membership({Simplex::vertex(MElt::warning(maps::doubling()))}), Error);
}

TEST_CASE("box membership agrees with image disjointness on E Inj") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(11, t);
    const Int degree = rng.uniform(0, 2);
    const std::size_t m = static_cast<std::size_t>(rng.uniform(2, 3));
    std::vector<Simplex> xs;
    for (std::size_t i = 0; i < m; ++i) xs.push_back(random_inj_simplex(rng, {1, 2}, degree, 7));
    const BoxResult r = box_membership(xs);
    CHECK(std::holds_alternative<BoxWitness>(r) == raw_inj_box(xs));
    if (const auto* w = std::get_if<BoxWitness>(&r)) CHECK(verify_box_witness(xs, *w));
  }
}

TEST_CASE("box witnesses over mild SelfM verify") {
  const MSetFamily fam = MSetFamily::self().mild();
  int accepted = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = trial_rng(12, t);
    const std::vector<Simplex> xs = {random_simplex(rng, fam, 1), random_simplex(rng, fam, 1)};
    const BoxResult r = box_membership(xs);
    if (const auto* w = std::get_if<BoxWitness>(&r)) {
      ++accepted;
      CHECK(verify_box_witness(xs, *w));
    } else {
      // the least supports are the obstruction, so no witness can exist at that level
      const NotInBox& bad = std::get<NotInBox>(r);
      const UPSet s = *k_support(xs[0], bad.level), u = *k_support(xs[1], bad.level);
      CHECK((!disjoint(s, u) || !set_union(s, u).is_coinfinite()));
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("zip and unzip are inverse") {
  Rng rng = trial_rng(13, 0);
  const Simplex x = random_inj_simplex(rng, {1}, 2, 6), y = random_inj_simplex(rng, {1, 3}, 2, 6);
  const auto back = unzip(zip({x, y}));
  REQUIRE(back.size() == 2);
  CHECK(back[0] == x);
  CHECK(back[1] == y);
}

TEST_CASE("refine supports") {
  const UPSet four1 = UPSet::periodic(4, {1});
  const Simplex x = self_vertex(maps::doubling()), y = self_vertex(maps::affine(4, 1));
  const RefinedSupports r =
      refine_supports(x, y, {UPSet::evens()}, {four1}, {complement(UPSet::periodic(4, {3}))});
  CHECK(r.a[0] == UPSet::evens());
  CHECK(r.b[0] == four1);
  CHECK(r.d[0] == set_union(UPSet::evens(), four1));

  const UPSet ab = set_union(UPSet::evens(), four1);
  const RefinedSupports same = refine_supports(x, y, {UPSet::evens()}, {four1}, {ab});
  CHECK(same.a[0] == UPSet::evens());
  CHECK(same.b[0] == four1);
  CHECK(same.d[0] == ab);

  const Simplex x4 = self_vertex(maps::affine(4, 0));
  const UPSet four0 = UPSet::periodic(4, {0});
  const RefinedSupports cut = refine_supports(x4, y, {UPSet::evens()}, {four1}, {set_union(four0, four1)});
  CHECK(cut.a[0] == four0);

  CHECK_THROWS_AS(refine_supports(x, y, {UPSet::evens()}, {UPSet::evens()}, {ab}), Error);
  CHECK_THROWS_AS(refine_supports(x, y, {UPSet::odds()}, {four1}, {ab}), Error);
  CHECK_THROWS_AS(refine_supports(x, y, {UPSet::evens()}, {four1}, {four1}), Error);
}

TEST_CASE("monoidal transport over E Inj") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(14, t);
    const Int degree = rng.uniform(0, 2);
    const Simplex x = random_inj_simplex(rng, {1}, degree, 12), y = random_inj_simplex(rng, {1, 2}, degree, 12),
                  z = random_inj_simplex(rng, {2}, degree, 12);
    const MonoidalReport a = monoidal_witness(MonoidalKind::Assoc, {x, y, z});
    CHECK_MESSAGE(a.ok, a.detail);
    CHECK(monoidal_witness(MonoidalKind::Symm, {x, y}).ok);
    CHECK(monoidal_witness(MonoidalKind::Unit, {x}).ok);
  }
}

TEST_CASE("monoidal transport over mild SelfM") {
  const MSetFamily fam = MSetFamily::self().mild();
  int in = 0;
  for (std::uint64_t t = 0; t < 150; ++t) {
    Rng rng = trial_rng(15, t);
    Simplex x = random_simplex(rng, fam, 1), y = random_simplex(rng, fam, 1), z = random_simplex(rng, fam, 1);
    if (t % 3 != 0) {
      // same outer map on disjoint progressions keeps the supports disjoint
      x = y = z = Simplex{};
      for (Int k = 0; k <= 1; ++k) {
        const PAPInj a = random_coinfinite_injection(rng);
        x.coords.push_back(MElt::self(compose(a, maps::affine(8, 0))));
        y.coords.push_back(MElt::self(compose(a, maps::affine(8, 1))));
        z.coords.push_back(MElt::self(compose(a, maps::affine(8, 2))));
      }
    }
    const MonoidalReport a = monoidal_witness(MonoidalKind::Assoc, {x, y, z});
    CHECK_MESSAGE(a.ok, a.detail);
    in += in_box({zip({x, y}), z});
    CHECK(monoidal_witness(MonoidalKind::Symm, {x, y}).ok);
    CHECK(monoidal_witness(MonoidalKind::Unit, {x}).ok);
  }
  CHECK(in > 0);
}

TEST_CASE("associativity on hand-picked self maps") {
  const Simplex x = self_vertex(maps::affine(8, 0)), y = self_vertex(maps::affine(8, 1)),
                z = self_vertex(maps::affine(8, 2));
  CHECK(in_box({zip({x, y}), z}));
  CHECK(monoidal_witness(MonoidalKind::Assoc, {x, y, z}).ok);
  CHECK_THROWS_AS(monoidal_witness(MonoidalKind::Assoc, {x, y}), Error);
}

TEST_CASE("unit law separates mild from non-mild simplices") {
  const Simplex id = self_vertex(maps::identity());
  Simplex star = Simplex::vertex(MElt::point());
  CHECK_FALSE(in_box({id, star}));
  CHECK(in_box({self_vertex(maps::doubling()), star}));
  CHECK(monoidal_witness(MonoidalKind::Unit, {id}).ok);
}

TEST_CASE("box membership survives faces, degeneracies and the diagonal action") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(16, t);
    const Simplex x = random_inj_simplex(rng, {1}, 2, 9), y = random_inj_simplex(rng, {2, 3}, 2, 9);
    if (!in_box({x, y})) continue;
    for (Int i = 0; i <= 2; ++i) {
      CHECK(in_box({face(x, i), face(y, i)}));
      CHECK(in_box({degeneracy(x, i, 3), degeneracy(y, i, 3)}));
    }
    std::vector<PAPInj> us;
    for (Int k = 0; k <= 2; ++k) us.push_back(random_injection(rng));
    CHECK(in_box({em_act(us, x), em_act(us, y)}));
  }
  const MSetFamily fam = MSetFamily::self().mild();
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = trial_rng(17, t);
    const Simplex x = random_simplex(rng, fam, 1), y = random_simplex(rng, fam, 1);
    if (!in_box({x, y})) continue;
    std::vector<PAPInj> us = {random_coinfinite_injection(rng), random_coinfinite_injection(rng)};
    CHECK(in_box({em_act(us, x), em_act(us, y)}));
    CHECK(in_box({degeneracy(x, 1, 3), degeneracy(y, 1, 3)}));
  }
}

TEST_CASE("tame strong monoidality on bounded pools") {
  const auto pool = all_simplices(injections_upto({1}, 4), 1);
  for (const Simplex& x : pool)
    for (const Simplex& y : pool) {
      if (!in_box({x, y})) continue;
      CHECK(finitely_supported(zip({x, y})) == (finitely_supported(x) && finitely_supported(y)));
    }
}

TEST_CASE("symmetric groups act freely on box powers") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(18, t);
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    std::vector<Simplex> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(random_inj_simplex(rng, {1}, 0, 6));
    if (!in_box(xs)) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(xs[i] == xs[j]);
  }
  const auto pool = all_simplices(injections_upto({1}, 5), 0);
  for (const Simplex& a : pool)
    for (const Simplex& b : pool)
      if (in_box({a, b})) CHECK_FALSE(a == b);
}

TEST_CASE("E Inj of a disjoint union is the box product") {
  const CoproductIsoReport v = inj_coproduct_iso({1}, {2}, 0, 10);
  CHECK(v.ok());
  CHECK(v.left_count == 90);
  const CoproductIsoReport e = inj_coproduct_iso({1}, {2}, 1, 8);
  CHECK(e.ok());
  CHECK(e.left_count == 56 * 56);
  CHECK(e.right_count == e.left_count);
  const CoproductIsoReport empty = inj_coproduct_iso({1, 3}, {}, 1, 5);
  CHECK(empty.ok());
  CHECK(empty.left_count == 20 * 20);
  CHECK_THROWS_AS(inj_coproduct_iso({1}, {1}, 0, 4), Error);
}
