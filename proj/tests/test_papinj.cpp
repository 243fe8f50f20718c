#include <map>

#include "doctest.h"
#include "mildem/gen.hpp"
#include "mildem/papinj.hpp"
#include "oracle.hpp"

using namespace mildem;

namespace {

auto fn(const QuasiAffine& u) {
  return [u](Int x) { return u(x); };
}
auto fn(const PAPInj& u) {
  return [u](Int x) { return u(x); };
}

}  // namespace

TEST_CASE("validate") {
  CHECK_NOTHROW(validate(QuasiAffine::affine(2, 0)));
  try {
    validate(QuasiAffine({1, 1}, 1, {Piece{1, 0}}));
    FAIL("expected NotInjective");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInjective);
    CHECK(std::string(e.what()).find("(1, 2)") != std::string::npos);
  }
  // 2x on evens, 2x - 2 on odds: 2*2 == 2*3 - 2
  const QuasiAffine clash({1}, 2, {Piece{4, 0}, Piece{4, 0}});
  const auto hit = find_collision(clash);
  REQUIRE(hit.has_value());
  CHECK(*hit == std::pair<Int, Int>{2, 3});
  CHECK_FALSE(oracle::injective_upto(fn(clash), 10));
  CHECK_THROWS_AS(QuasiAffine({0}, 1, {Piece{1, 0}}), Error);
  CHECK_THROWS_AS(QuasiAffine({}, 1, {Piece{1, -1}}), Error);
}

TEST_CASE("find_collision agrees with a scan on random gluings") {
  Rng rng(3);
  int injective = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Int p = rng.uniform(1, 4);
    std::vector<Int> table(static_cast<std::size_t>(rng.uniform(0, 5)));
    for (Int& y : table) y = rng.uniform(1, 12);
    std::vector<Piece> pieces(p);
    for (Piece& pc : pieces) pc = Piece{rng.uniform(1, 2 * p), rng.uniform(1, 6)};
    const QuasiAffine u(table, p, pieces);
    const bool scan_ok = oracle::injective_upto(fn(u), u.threshold() + 200 * u.period());
    CHECK(find_collision(u).has_value() == !scan_ok);
    if (const auto hit = find_collision(u)) CHECK(u(hit->first) == u(hit->second));
    injective += scan_ok;
  }
  CHECK(injective > 10);
}

TEST_CASE("compose") {
  CHECK(compose(maps::doubling(), maps::succ()) == maps::affine(2, 2));
  const PAPInj c = compose(maps::swap(1, 2), maps::succ());
  CHECK(c.map() == QuasiAffine({1}, 1, {Piece{1, 1}}));
  CHECK(oracle::pointwise_equal(fn(c), [](Int x) { return x == 1 ? 1 : x + 1; }, 100));
  Rng rng(9);
  const PAPInj u = random_injection(rng);
  CHECK(compose(maps::identity(), u) == u);
  CHECK(compose(u, maps::identity()) == u);
}

TEST_CASE("composition is associative and pointwise") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const PAPInj u = random_injection(rng), v = random_injection(rng), w = random_injection(rng);
    const PAPInj uv = compose(u, v);
    CHECK(compose(uv, w) == compose(u, compose(v, w)));
    CHECK(oracle::pointwise_equal(fn(uv), [&](Int x) { return u(v(x)); }, oracle::map_horizon(u.map(), v.map())));
    CHECK_FALSE(find_collision(uv.map()).has_value());
    CHECK(image(uv) == image(u, image(v)));
  }
}

TEST_CASE("images and preimages") {
  CHECK(image(maps::doubling()) == UPSet::evens());
  CHECK(image(maps::succ()) == complement(UPSet::finite({1})));
  const UPSet img = image(maps::doubling(), UPSet::odds());
  CHECK(img == UPSet::periodic(4, {2}));
  for (Int x = 1; x <= 100; ++x) CHECK(img.contains(x) == (x % 4 == 2));

  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const PAPInj u = random_injection(rng);
    const UPSet s = random_upset(rng);
    CHECK(oracle::image_matches(u.map(), s, image(u, s), 300));
    const UPSet pre = preimage(u, s);
    for (Int x = 1; x <= 200; ++x) REQUIRE(pre.contains(x) == s.contains(u(x)));
  }
}

TEST_CASE("equal_on") {
  CHECK(equal_on(maps::identity(), maps::succ(), UPSet{}));
  CHECK(equal_on(maps::doubling(), maps::doubling(), UPSet::omega()));
  // swap(1, 2) moves 2, which is even
  CHECK_FALSE(equal_on(maps::identity(), maps::swap(1, 2), UPSet::evens()));
  CHECK(equal_on(maps::identity(), maps::swap(1, 3), UPSet::evens()));
  Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const PAPInj u = random_injection(rng), v = random_injection(rng);
    const UPSet a = random_upset(rng);
    bool scan = true;
    const Int bound = oracle::map_horizon(u.map(), v.map()) + a.threshold() + 4 * a.period();
    for (Int x = 1; x <= bound; ++x)
      if (a.contains(x) && u(x) != v(x)) scan = false;
    CHECK(equal_on(u, v, a) == scan);
  }
}

TEST_CASE("disagreement is exact when pieces cross once") {
  // 3x and 2x + 5 agree only at 5
  const QuasiAffine u = QuasiAffine::affine(3, 0), v = QuasiAffine::affine(2, 5);
  CHECK(disagreement(u, v) == complement(UPSet::finite({5})));
}

TEST_CASE("agreeing_bijection") {
  CHECK(agreeing_bijection(maps::identity(), UPSet::evens()) == maps::identity());
  const PAPInj h = agreeing_bijection(maps::doubling(), UPSet::evens());
  CHECK(h(1) == 1);
  for (Int k = 1; k <= 100; ++k) CHECK(h(2 * k) == 4 * k);
  CHECK(is_bijective(h));
  std::set<Int> hit;
  for (Int x = 1; x <= 400; ++x) hit.insert(h(x));
  for (Int y = 1; y <= 200; ++y) CHECK(hit.count(y) == 1);
  CHECK(agreeing_bijection(maps::affine(3, 1), UPSet{}) == maps::identity());
  CHECK_THROWS_AS(agreeing_bijection(maps::identity(), UPSet::above(3)), Error);

  Rng rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const PAPInj f = random_injection(rng);
    const UPSet a = random_coinfinite(rng);
    const PAPInj g = agreeing_bijection(f, a);
    CHECK(image(g) == UPSet::omega());
    CHECK(equal_on(g, f, a));
    CHECK_FALSE(find_collision(g.map()).has_value());
  }
}

TEST_CASE("order isomorphisms, ranks and partial inverses") {
  Rng rng(55);
  for (int trial = 0; trial < 150; ++trial) {
    UPSet s = random_upset(rng), t = random_upset(rng);
    if (s.is_finite()) s = UPSet::odds();
    if (t.is_finite()) t = UPSet::periodic(5, {2, 3});
    const QuasiAffine iso = order_iso(s, t);
    const auto sm = oracle::scan(s, 400);
    const auto tm = t.first(sm.size());
    for (std::size_t k = 0; k < sm.size(); ++k) REQUIRE(iso(sm[k]) == tm[k]);
    for (Int x = 1; x <= 100; ++x)
      if (!s.contains(x)) REQUIRE(iso(x) == x);

    const PAPInj u = random_injection(rng);
    const QuasiAffine inv = inverse_on_image(u);
    const UPSet img = image(u);
    for (Int x = 1; x <= 150; ++x) REQUIRE(inv(u(x)) == x);
    for (Int y = 1; y <= 150; ++y)
      if (!img.contains(y)) REQUIRE(inv(y) == y);
  }
}

TEST_CASE("canonical representation: equal maps have equal fields") {
  Rng rng(66);
  for (int trial = 0; trial < 100; ++trial) {
    const PAPInj u = random_injection(rng);
    // Re-express with a doubled period and a longer table.
    const Int p = 2 * u.period();
    std::vector<Piece> pieces(p);
    for (Int s = 0; s < p; ++s) pieces[s] = u.map().refined_piece(p, s);
    std::vector<Int> table = u.map().table();
    const Int n = static_cast<Int>(table.size());
    // extend the table while keeping pieces valid above it
    for (Int x = n + 1; x <= n + 3; ++x) table.push_back(u(x));
    std::vector<Piece> shifted(p);
    for (Int s = 0; s < p; ++s) shifted[s] = pieces[s];
    const QuasiAffine re(table, p, shifted);
    CHECK(re == u.map());
  }
}

TEST_CASE("factorization counterexample") {
  Rng rng(77);
  const UPSet evens = UPSet::evens(), odds = UPSet::odds();
  for (int trial = 0; trial < 200; ++trial) {
    PAPInj w;
    const int len = static_cast<int>(rng.uniform(1, 5));
    for (int i = 0; i < len; ++i) w = compose(random_fixing(rng, rng.coin() ? evens : odds), w);
    CHECK(is_subset(image(w, evens), evens));
  }
  CHECK_FALSE(is_subset(image(maps::succ(), evens), evens));
}

TEST_CASE("operad composition of injection tuples") {
  const InjN w({maps::affine(3, 0), maps::affine(3, -1)});
  const InjN unit;
  CHECK(operad_compose(unit, std::vector<InjN>{w}) == w);
  const InjN i2 = InjN::standard(2);
  CHECK(i2.component(0) == maps::doubling());
  CHECK(i2.component(1) == maps::affine(2, -1));
  CHECK(operad_compose(i2, std::vector<InjN>{unit, unit}) == i2);
  const InjN three = operad_compose(i2, std::vector<InjN>{i2, unit});
  REQUIRE(three.arity() == 3);
  for (Int x = 1; x <= 50; ++x) {
    CHECK(three(0, x) == 4 * x);
    CHECK(three(1, x) == 4 * x - 2);
    CHECK(three(2, x) == 2 * x - 1);
  }
  CHECK_THROWS_AS(InjN({maps::doubling(), maps::affine(4, 0)}), Error);
  CHECK_THROWS_AS(operad_compose(i2, std::vector<InjN>{unit}), Error);

  // associativity: (i2 ∘ (i2, 1)) ∘ (1, i2, 1) == i2 ∘ (i2 ∘ (1, i2), 1)
  const InjN lhs = operad_compose(three, std::vector<InjN>{unit, i2, unit});
  const InjN inner = operad_compose(i2, std::vector<InjN>{unit, i2});
  const InjN rhs = operad_compose(i2, std::vector<InjN>{inner, unit});
  CHECK(lhs == rhs);
}

TEST_CASE("literal printing") {
  CHECK(to_string(compose(maps::doubling(), maps::succ())) == "pap{p=1, pieces=[(0, 2/1, 2)]}");
  CHECK(to_string(maps::swap(1, 2)) == "pap{table={1:2, 2:1}, N=2, p=1, pieces=[(0, 1/1, 0)]}");
}
