#include "doctest.h"
#include "mildem/gen.hpp"
#include "mildem/mset.hpp"
#include "oracle.hpp"

using namespace mildem;

namespace {

UPSet multiples(Int m) { return UPSet::periodic(m, {0}); }

// u(6q + r) swaps residues 1 and 2 mod 6.
PAPInj swap_six() {
  std::vector<Piece> pieces;
  for (Int r = 0; r < 6; ++r) pieces.push_back(Piece{6, r == 1 ? 2 : r == 2 ? 1 : r});
  return validate(QuasiAffine({}, 6, pieces));
}

// A co-infinite set the element is supported on, chosen with some slack.
std::optional<UPSet> co_infinite_support(Rng& rng, const MElt& x) {
  UPSet s;
  if (auto m = minimal_support(x)) {
    s = *m;
  } else if (x.kind() == MElt::Kind::Warning) {
    s = set_difference(image(x.map(), UPSet::evens()), random_finite(rng, 20, 3));
  } else {
    for (const MElt& p : x.parts())
      s = set_union(s, minimal_support(p) ? *minimal_support(p) : image(p.map(), UPSet::evens()));
  }
  if (rng.coin()) s = set_union(s, random_finite(rng, 30, 3));
  if (rng.coin()) s = set_union(s, random_coinfinite(rng));
  if (!s.is_coinfinite()) return std::nullopt;
  return s;
}

const std::vector<MSetFamily>& families() {
  static const std::vector<MSetFamily> fs = {
      MSetFamily::injections({1}),
      MSetFamily::injections({1, 2, 5}),
      MSetFamily::self().mild(),
      MSetFamily::warning(),
      MSetFamily::product({MSetFamily::injections({1, 2}), MSetFamily::self().mild()}),
  };
  return fs;
}

}  // namespace

TEST_CASE("action") {
  CHECK(act(maps::doubling(), MElt::inclusion({1})) == MElt::injection({1}, {2}));
  const MElt id_class = MElt::warning(maps::identity());
  const MElt moved = act(maps::succ(), id_class);
  CHECK(moved == MElt::warning(maps::succ()));
  CHECK_FALSE(moved == id_class);
  // representatives differing on finitely many evens give the same class
  CHECK(MElt::warning(maps::swap(2, 4)) == id_class);
  CHECK_FALSE(MElt::warning(maps::swap(2, 4)) == MElt::self(maps::swap(2, 4)));

  Rng rng(1);
  for (const auto& fam : families()) {
    for (int trial = 0; trial < 60; ++trial) {
      const MElt x = random_element(rng, fam);
      const PAPInj f = random_injection(rng), g = random_injection(rng);
      CHECK(act(maps::identity(), x) == x);
      CHECK(act(f, act(g, x)) == act(compose(f, g), x));
    }
  }
}

TEST_CASE("supports: examples") {
  const MElt incl = MElt::inclusion({1, 2});
  CHECK(is_supported_on(incl, UPSet::finite({1, 2})));
  CHECK_FALSE(is_supported_on(incl, UPSet::finite({1})));
  CHECK(is_supported_on(MElt::self(maps::doubling()), UPSet::evens()));
  const MElt id_class = MElt::warning(maps::identity());
  for (Int n = 0; n <= 10; ++n)
    CHECK(is_supported_on(id_class, set_intersection(UPSet::evens(), UPSet::above(2 * n - 1))));
  CHECK_FALSE(is_supported_on(id_class, UPSet{}));

  CHECK(minimal_support(MElt::self(maps::doubling())) == UPSet::evens());
  CHECK(minimal_support(MElt::injection({1}, {3})) == UPSet::finite({3}));
  CHECK_FALSE(minimal_support(id_class).has_value());
  CHECK(minimal_support(MElt::self(maps::identity())) == UPSet::omega());

  CHECK(classify_element(MElt::injection({1, 4}, {9, 2})) == ElementClass::Tame);
  CHECK(classify_element(MElt::self(maps::doubling())) == ElementClass::MildNotTame);
  CHECK(classify_element(MElt::self(maps::swap(3, 7))) == ElementClass::NotMild);
  CHECK(classify_element(id_class) == ElementClass::MildNotTame);
  CHECK(classify_element(MElt::point()) == ElementClass::Tame);
}

TEST_CASE("supports when at most one point is free") {
  // ℳ_A is trivial, so everything is supported
  const UPSet a = complement(UPSet::finite({4}));
  CHECK(is_supported_on(MElt::self(maps::identity()), a));
  CHECK(is_supported_on(MElt::injection({1}, {4}), a));
  CHECK(is_supported_on(MElt::self(maps::succ()), UPSet::omega()));
  CHECK_FALSE(is_supported_on(MElt::injection({1}, {4}), complement(UPSet::finite({4, 5}))));
}

TEST_CASE("structural supports match sampled fixers") {
  Rng rng(2);
  int positive = 0, negative = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const MSetFamily& fam = families()[static_cast<std::size_t>(rng.uniform(0, 4))];
    const MElt x = random_element(rng, fam);
    UPSet a = random_coinfinite(rng);
    if (rng.coin()) {
      if (auto s = co_infinite_support(rng, x)) a = *s;
    }
    if (!a.is_coinfinite()) continue;
    const bool claim = is_supported_on(x, a);
    bool all_fix = true;
    for (int s = 0; s < 50; ++s)
      if (!(act(random_fixing(rng, a), x) == x)) all_fix = false;
    if (claim) {
      CHECK(all_fix);
      ++positive;
    } else {
      CHECK_FALSE(all_fix);
      ++negative;
    }
  }
  CHECK(positive > 20);
  CHECK(negative > 20);
}

TEST_CASE("agreement, action and preimage lemmas") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const MSetFamily& fam = families()[static_cast<std::size_t>(trial % 5)];
    const MElt x = random_element(rng, fam);
    const auto a = co_infinite_support(rng, x);
    if (!a) continue;
    REQUIRE(is_supported_on(x, *a));
    const PAPInj f = random_injection(rng);
    const PAPInj g = random_agreeing(rng, f, *a);
    CHECK(act(f, x) == act(g, x));
    CHECK(is_supported_on(act(f, x), image(f, *a)));
    const UPSet smaller = set_intersection(*a, random_upset(rng));
    if (is_supported_on(act(f, x), image(f, smaller))) CHECK(is_supported_on(x, smaller));
  }
}

TEST_CASE("intersection witness: examples") {
  const MElt x = MElt::self(maps::affine(6, 0));
  const WitnessChain w = intersection_support_witness(x, multiples(2), multiples(3), swap_six());
  CHECK(w.verified.back() == "f.x = x");
  CHECK(act(swap_six(), x) == x);

  const WitnessChain same = intersection_support_witness(x, UPSet::evens(), UPSet::evens(), maps::swap(1, 3));
  CHECK(same.case_number == 1);

  const PAPInj f = compose(maps::swap(1, 2), agreeing_bijection(maps::identity(), multiples(6)));
  CHECK_NOTHROW(intersection_support_witness(x, UPSet::evens(), multiples(3), f));

  try {
    intersection_support_witness(x, UPSet::odds(), multiples(3), f);
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailed);
    CHECK(std::string(e.what()).find("not supported on A") != std::string::npos);
  }
}

TEST_CASE("intersection witness: both cases occur on random data") {
  Rng rng(4);
  int cases[3] = {0, 0, 0};
  for (int trial = 0; trial < 300; ++trial) {
    const MElt x = random_element(rng, rng.coin() ? MSetFamily::self().mild() : MSetFamily::injections({1, 2}));
    const UPSet s = *minimal_support(x);
    const UPSet a = set_union(s, random_coinfinite(rng));
    const UPSet b = set_union(s, random_coinfinite(rng));
    if (!a.is_coinfinite() || !b.is_coinfinite()) continue;
    const PAPInj f = random_fixing(rng, set_intersection(a, b));
    const WitnessChain w = intersection_support_witness(x, a, b, f);
    ++cases[w.case_number];
    CHECK(act(f, x) == x);
  }
  CHECK(cases[1] > 0);
  CHECK(cases[1] + cases[2] > 200);
}

TEST_CASE("case 2 of the intersection witness") {
  // f swaps 2k - 1 and 2k, so f(A) = A^c and A^c ∖ f(A) is empty.
  const UPSet a = UPSet::evens(), b = UPSet::odds();
  const PAPInj f = validate(QuasiAffine({}, 2, {Piece{2, -1}, Piece{2, 2}}));
  CHECK(set_difference(complement(a), image(f, a)).is_finite());
  const MElt x = MElt::point();
  const WitnessChain w = intersection_support_witness(x, a, b, f);
  CHECK(w.case_number == 2);
  CHECK(w.maps.size() == 3);
}

TEST_CASE("stabilizing chi") {
  const PAPInj chi = stabilizing_chi(UPSet::evens(), {maps::identity()});
  CHECK(fixes_pointwise(chi, UPSet::evens()));
  CHECK(image(chi).is_coinfinite());
  for (Int k = 1; k <= 50; ++k) CHECK(chi(2 * k - 1) % 2 == 1);
  CHECK(stabilizing_chi(UPSet::evens(), {maps::doubling()}) == maps::identity());

  const PAPInj chi2 = stabilizing_chi(UPSet{}, {maps::doubling()});
  CHECK(image(compose(maps::doubling(), chi2)).is_coinfinite());

  const PAPInj chi3 = stabilizing_chi(UPSet::evens(), {maps::doubling()});
  CHECK(fixes_pointwise(chi3, UPSet::evens()));
  CHECK(image(compose(maps::doubling(), chi3)).is_coinfinite());

  CHECK_THROWS_AS(stabilizing_chi(UPSet::evens(), {maps::identity(), maps::succ()}),
                  Error);

  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const UPSet a = random_coinfinite(rng);
    std::vector<PAPInj> us;
    for (int k = 0; k < rng.uniform(1, 3); ++k) us.push_back(random_coinfinite_injection(rng));
    UPSet hit;
    for (const auto& u : us) hit = set_union(hit, image(u, a));
    if (!hit.is_coinfinite()) continue;
    const PAPInj c = stabilizing_chi(a, us);
    CHECK(fixes_pointwise(c, a));
    UPSet total;
    for (const auto& u : us) total = set_union(total, image(compose(u, c)));
    CHECK(total.is_coinfinite());
  }
}

TEST_CASE("equality modulo M_A") {
  CHECK(equal_mod_MA(UPSet::evens(), {maps::identity()}, {agreeing_bijection(maps::identity(), UPSet::evens())}) ==
        ModEquality::Equal);
  CHECK(equal_mod_MA(UPSet::evens(), {maps::succ()}, {maps::succ()}) == ModEquality::Equal);
  CHECK(equal_mod_MA(UPSet::evens(), {maps::identity()}, {maps::succ()}) == ModEquality::Unknown);
}

TEST_CASE("injective action on mild pools") {
  std::vector<MElt> pool;
  for (Int a = 1; a <= 6; ++a)
    for (Int b = 1; b <= 6; ++b)
      if (a != b) pool.push_back(MElt::injection({1, 2}, {a, b}));
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const PAPInj f = random_injection(rng);
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) CHECK_FALSE(act(f, pool[i]) == act(f, pool[j]));
  }
  // ℳ itself is not mild and the action is not injective on ℳ/∼ ... but it is
  // injective on ℳ by left cancellation.
  const MElt p = MElt::self(maps::identity()), q = MElt::self(maps::swap(1, 2));
  CHECK_FALSE(act(maps::doubling(), p) == act(maps::doubling(), q));
}

TEST_CASE("printing elements") {
  CHECK(to_string(MElt::injection({2, 1}, {5, 3})) == "inj{A=[1, 2], table={1:3, 2:5}}");
  CHECK(to_string(MElt::self(maps::doubling())) == "selfm{pap{p=1, pieces=[(0, 2/1, 0)]}}");
  CHECK(to_string(MElt::point()) == "*");
}
