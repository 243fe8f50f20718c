#include "doctest.h"
#include "mildem/gen.hpp"
#include "mildem/operadic.hpp"
#include "oracle.hpp"

using namespace mildem;

namespace {

// Frames compose with payload maps, so periods multiply; keep the pieces small.
const GenBounds small{4, 4, 12, 12};

Simplex star(Int degree) { return Simplex(std::vector<MElt>(degree + 1, MElt::point())); }

Simplex random_inj_simplex(Rng& rng, const std::vector<Int>& domain, Int degree, Int bound) {
  const auto pool = injections_upto(domain, bound);
  Simplex s;
  for (Int k = 0; k <= degree; ++k) s.coords.push_back(rng.pick(pool));
  return s;
}

// Mild SelfM triples sharing an outer map on disjoint progressions, so they land in the box.
std::vector<Simplex> boxed_self(Rng& rng, std::size_t n, Int degree) {
  std::vector<Simplex> xs(n);
  for (Int k = 0; k <= degree; ++k) {
    const PAPInj a = random_coinfinite_injection(rng, small);
    for (std::size_t j = 0; j < n; ++j)
      xs[j].coords.push_back(MElt::self(compose(a, maps::affine(2 * static_cast<Int>(n), static_cast<Int>(j)))));
  }
  return xs;
}

OperadicClass random_class(Rng& rng, const std::vector<Simplex>& payload) {
  OperadicClass c;
  c.payload = payload;
  for (Int k = 0; k <= payload[0].degree(); ++k) c.frame.push_back(random_injn(rng, payload.size(), small));
  return c;
}

std::vector<std::vector<PAPInj>> random_maps(Rng& rng, Int degree, std::size_t n) {
  std::vector<std::vector<PAPInj>> us(degree + 1);
  for (auto& level : us)
    for (std::size_t j = 0; j < n; ++j) level.push_back(random_injection(rng, small));
  return us;
}

}  // namespace

TEST_CASE("phi on small classes") {
  const Simplex u = Simplex::vertex(MElt::injection({1}, {1}));
  const OperadicClass c{{InjN(std::vector<PAPInj>{maps::doubling()})}, {u}};
  CHECK(phi(c)[0] == Simplex::vertex(MElt::injection({1}, {2})));

  const OperadicClass with_star{{InjN::standard(2)}, {u, star(0)}};
  const auto out = phi(with_star);
  CHECK(out[1] == star(0));
  CHECK(out[0] == Simplex::vertex(MElt::injection({1}, {2})));

  CHECK_THROWS_AS(phi(OperadicClass{{InjN::standard(3)}, {u, u}}), Error);
}

TEST_CASE("phi_inverse on two vertices") {
  const Simplex u = Simplex::vertex(MElt::injection({1}, {1}));
  const Simplex v = Simplex::vertex(MElt::injection({1}, {2}));
  const OperadicClass c = phi_inverse({u, v});
  REQUIRE(c.frame.size() == 1);
  const InjN& f = c.frame[0];
  CHECK(f(0, 1) == 1);
  CHECK(f(1, 2) == 2);
  // everything else is spread over ω ∖ {1, 2}
  for (Int t = 2; t < 50; ++t) CHECK(f(0, t) > 2);
  for (Int t = 1; t < 50; ++t)
    if (t != 2) CHECK(f(1, t) > 2);
  CHECK(phi(c) == std::vector<Simplex>{u, v});
  CHECK_THROWS_AS(phi_inverse({u, u}), Error);
}

TEST_CASE("phi_inverse with a single factor fixes the support") {
  const Simplex x({MElt::self(maps::doubling()), MElt::self(maps::affine(3, 1))});
  const OperadicClass c = phi_inverse({x});
  CHECK(equal_on(c.frame[0].component(0), maps::identity(), UPSet::evens()));
  CHECK(equal_on(c.frame[1].component(0), maps::identity(), image(maps::affine(3, 1))));
  CHECK(phi(c)[0] == x);
}

TEST_CASE("phi round trips on exhaustive E Inj pools") {
  const auto xs = all_simplices(injections_upto({1}, 5), 1);
  const auto ys = all_simplices(injections_upto({2}, 5), 1);
  int boxed = 0;
  for (const Simplex& x : xs)
    for (const Simplex& y : ys) {
      if (!in_box({x, y})) continue;
      ++boxed;
      const OperadicClass c = phi_inverse({x, y});
      CHECK(phi(c) == std::vector<Simplex>{x, y});
    }
  CHECK(boxed == 400);
  for (const Simplex& x : all_simplices(injections_upto({1}, 8), 2)) CHECK(phi(phi_inverse({x}))[0] == x);
}

TEST_CASE("phi round trips on random mild instances") {
  for (std::uint64_t t = 0; t < 500; ++t) {
    Rng rng = trial_rng(21, t);
    const Int degree = rng.uniform(0, 2);
    const auto xs = boxed_self(rng, static_cast<std::size_t>(rng.uniform(1, 3)), degree);
    const OperadicClass c = phi_inverse(xs);
    CHECK(phi(c) == xs);
    CHECK(in_box(phi(c)));
  }
}

TEST_CASE("class equality") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(22, t);
    const Int degree = rng.uniform(0, 2);
    const std::vector<Simplex> xs = t % 2 ? boxed_self(rng, 2, degree)
                                          : std::vector<Simplex>{random_inj_simplex(rng, {1}, degree, 9),
                                                                 random_inj_simplex(rng, {1, 2}, degree, 9)};
    const OperadicClass c = random_class(rng, xs);
    CHECK(class_equal(c, c));
    // phi lands in the box
    CHECK(in_box(phi(c)));
    // reverse round trip
    CHECK(class_equal(phi_inverse(phi(c)), c));
    // the defining relation
    const auto us = random_maps(rng, degree, 2);
    CHECK(class_equal(precompose_frame(c, us), act_payload(c, us)));
    CHECK(phi(precompose_frame(c, us)) == phi(act_payload(c, us)));
    // a different frame usually moves the image
    const OperadicClass d = random_class(rng, xs);
    CHECK(class_equal(c, d) == (phi(c) == phi(d)));
  }
}

TEST_CASE("class equality separates different images") {
  const Simplex u = Simplex::vertex(MElt::injection({1}, {1}));
  const OperadicClass a{{InjN::standard(2)}, {u, star(0)}};
  const OperadicClass b{{InjN(std::vector<PAPInj>{maps::affine(2, 1), maps::affine(2, 0)})}, {u, star(0)}};
  CHECK_FALSE(class_equal(a, b));
  // same image through a different representative
  const OperadicClass c{{InjN::standard(2)}, {Simplex::vertex(MElt::injection({1}, {3})), star(0)}};
  const OperadicClass e{{InjN(std::vector<PAPInj>{maps::affine(2, 4), maps::interleave(2, 2)})}, {u, star(0)}};
  REQUIRE(phi(c) == phi(e));
  CHECK(class_equal(c, e));
  const OperadicClass w{{InjN::standard(1)}, {Simplex::vertex(MElt::warning(maps::doubling()))}};
  CHECK_THROWS_AS(class_equal(w, w), Error);
}

TEST_CASE("phi turns operad composition into juxtaposition") {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = trial_rng(23, t);
    const Int degree = rng.uniform(0, 1);
    const auto xs = boxed_self(rng, 3, degree);
    const OperadicClass left = random_class(rng, {xs[0], xs[1]});
    const OperadicClass right = random_class(rng, {xs[2]});
    OperadicClass joined;
    joined.payload = xs;
    std::vector<InjN> outer;
    for (Int k = 0; k <= degree; ++k) {
      outer.push_back(random_injn(rng, 2, small));
      const InjN inner[] = {left.frame[k], right.frame[k]};
      joined.frame.push_back(operad_compose(outer.back(), inner));
    }
    const auto lhs = phi(joined);
    const auto pl = phi(left), pr = phi(right);
    OperadicClass glue{outer, {zip(pl), pr[0]}};
    const auto rhs = phi(glue);
    const auto back = unzip(rhs[0]);
    CHECK(lhs[0] == back[0]);
    CHECK(lhs[1] == back[1]);
    CHECK(lhs[2] == rhs[1]);
    // unit: composing with identities changes nothing
    std::vector<InjN> ones(3, InjN::identity());
    OperadicClass same = joined;
    for (auto& f : same.frame) f = operad_compose(f, ones);
    CHECK(phi(same) == lhs);
  }
}

TEST_CASE("star module check") {
  TruncEMSS mild{MSetFamily::self(), MSetFamily::Filter::Mild, 3, std::nullopt};
  const StarModuleReport m = star_module_check(mild, 2, 60, 7);
  CHECK(m.is_star_module());
  CHECK(m.hit == m.sampled);
  CHECK(m.compared > 0);

  TruncEMSS all{MSetFamily::self(), MSetFamily::Filter::All, 3, std::nullopt};
  const StarModuleReport a = star_module_check(all, 2, 30, 7);
  CHECK_FALSE(a.is_star_module());
  REQUIRE(a.unhit);
  CHECK(*a.unhit == Simplex::vertex(MElt::self(maps::identity())));
  CHECK(a.unhit_level == 0);
  CHECK(*a.unhit_support == UPSet::omega());

  TruncEMSS inj{MSetFamily::injections({1}), MSetFamily::Filter::Mild, 3, std::nullopt};
  const StarModuleReport i = star_module_check(inj, 1, 20, 7);
  CHECK(i.is_star_module());
  CHECK(i.sampled >= 110);
}

TEST_CASE("mu via the operadic product") {
  const MuReport id = mu_via_operadic(Simplex::vertex(MElt::self(maps::identity())));
  CHECK(id.ok());
  CHECK(id.result.payload[0] == Simplex::vertex(MElt::self(maps::doubling())));
  CHECK(*k_support(id.result.payload[0], 0) == UPSet::evens());

  const MuReport v = mu_via_operadic(Simplex::vertex(MElt::injection({1}, {1})));
  CHECK(v.ok());
  CHECK(v.result.payload[0] == Simplex::vertex(MElt::injection({1}, {2})));

  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = trial_rng(24, t);
    const Int degree = rng.uniform(0, 2);
    Simplex x;
    for (Int k = 0; k <= degree; ++k) x.coords.push_back(random_element(rng, t % 2 ? MSetFamily::self() : MSetFamily::warning()));
    std::vector<InjN> frame;
    for (Int k = 0; k <= degree; ++k) frame.push_back(random_injn(rng, 2));
    const MuReport r = mu_via_operadic(x, frame);
    CHECK(r.ok());
  }
}
