#include "doctest.h"
#include "mildem/emss.hpp"
#include "mildem/gen.hpp"
#include "oracle.hpp"

using namespace mildem;

namespace {

Simplex random_simplex(Rng& rng, const MSetFamily& fam, Int degree) {
  Simplex s;
  for (Int k = 0; k <= degree; ++k) s.coords.push_back(random_element(rng, fam));
  return s;
}

std::vector<PAPInj> random_tuple(Rng& rng, Int degree) {
  std::vector<PAPInj> us;
  for (Int k = 0; k <= degree; ++k) us.push_back(random_injection(rng));
  return us;
}

// A small pool of maps: affine maps, a few permutations and enumerators.
std::vector<PAPInj> self_pool() {
  std::vector<PAPInj> pool = {maps::identity(), maps::succ(),      maps::doubling(),        maps::affine(2, -1),
                              maps::affine(3, 1), maps::swap(1, 2), maps::affine(4, 0),     maps::affine(2, 1),
                              trust_injective(enumerator(UPSet::periodic(3, {0, 1})))};
  return pool;
}

}  // namespace

TEST_CASE("faces and degeneracies") {
  const MElt a = MElt::injection({1}, {1}), b = MElt::injection({1}, {2});
  const Simplex ab({a, b});
  CHECK(face(ab, 0) == Simplex::vertex(b));
  CHECK(degeneracy(Simplex::vertex(a), 0, 3) == Simplex({a, a}));
  CHECK(face(degeneracy(ab, 0, 3), 0) == ab);
  CHECK_THROWS_AS(face(ab, 2), Error);
  CHECK_THROWS_AS(degeneracy(Simplex({a, a, a, a}), 0, 3), Error);

  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Int n = rng.uniform(1, 2);
    const Simplex s = random_simplex(rng, MSetFamily::injections({1, 2}), n);
    for (Int i = 0; n >= 2 && i <= n; ++i)
      for (Int j = i + 1; j <= n; ++j) CHECK(face(face(s, j), i) == face(face(s, i), j - 1));
    for (Int i = 0; i <= n; ++i) {
      CHECK(face(degeneracy(s, i, 3), i) == s);
      CHECK(face(degeneracy(s, i, 3), i + 1) == s);
    }
  }
}

TEST_CASE("monotone maps and pullbacks") {
  CHECK(monotone_maps(1, 2).size() == 6);
  CHECK(monotone_maps(3, 3).size() == 35);
  const MElt a = MElt::injection({1}, {1}), b = MElt::injection({1}, {2}), c = MElt::injection({1}, {3});
  CHECK(pullback(Simplex({a, b, c}), {0, 2}) == Simplex({a, c}));
  CHECK(pullback(Simplex({a, b}), {1, 1, 1}) == Simplex({b, b, b}));
}

TEST_CASE("E M action") {
  Rng rng(2);
  const Simplex s = random_simplex(rng, MSetFamily::self(), 2);
  CHECK(em_act(std::vector<PAPInj>(3), s) == s);
  CHECK(em_act({maps::doubling()}, Simplex::vertex(MElt::injection({1}, {1}))) ==
        Simplex::vertex(MElt::injection({1}, {2})));
  CHECK_THROWS_AS(em_act({maps::doubling()}, s), Error);
  for (int trial = 0; trial < 100; ++trial) {
    const Int n = rng.uniform(1, 3);
    const Simplex t = random_simplex(rng, MSetFamily::injections({1, 3}), n);
    const auto us = random_tuple(rng, n);
    for (const DeltaMap& f : monotone_maps(rng.uniform(0, 2), n)) {
      std::vector<PAPInj> restricted;
      for (Int v : f) restricted.push_back(us[v]);
      CHECK(pullback(em_act(us, t), f) == em_act(restricted, pullback(t, f)));
    }
  }
}

TEST_CASE("k-supports") {
  const Simplex s({MElt::injection({1}, {3}), MElt::injection({1}, {7})});
  CHECK(k_support(s, 0) == UPSet::finite({3}));
  CHECK(k_support(s, 1) == UPSet::finite({7}));
  CHECK(k_support(Simplex::vertex(MElt::self(maps::doubling())), 0) == UPSet::evens());
  const Simplex ident = Simplex::vertex(MElt::self(maps::identity()));
  CHECK(k_support(ident, 0) == UPSet::omega());
  CHECK_FALSE(is_k_supported_on(ident, 0, UPSet::evens()));
  // k-support through the action of i_k(u) versus coordinate supports
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Simplex t = random_simplex(rng, MSetFamily::self().mild(), 1);
    const UPSet a = set_union(*k_support(t, 1), random_coinfinite(rng));
    if (!a.is_coinfinite()) continue;
    for (int g = 0; g < 10; ++g) CHECK(em_act(slot(1, 1, random_fixing(rng, a)), t) == t);
  }
}

TEST_CASE("tau and mu filters") {
  const TruncEMSS e_self{MSetFamily::self()};
  const TruncEMSS mu = filter_tau_mu(e_self, SimplicialFilter::Mu);
  const TruncEMSS tau = filter_tau_mu(e_self, SimplicialFilter::Tau);
  CHECK(mu.contains(Simplex::vertex(MElt::self(maps::doubling()))));
  CHECK_FALSE(mu.contains(Simplex::vertex(MElt::self(maps::identity()))));
  const TruncEMSS e_of_mu{MSetFamily::self().mild()};
  const auto pool = self_pool();
  for (Int n = 0; n <= 3; ++n) {
    std::vector<std::size_t> idx(n + 1, 0);
    for (;;) {
      Simplex s;
      for (std::size_t i : idx) s.coords.push_back(MElt::self(pool[i]));
      CHECK_FALSE(tau.contains(s));
      CHECK(mu.contains(s) == e_of_mu.contains(s));
      Int pos = n;
      while (pos >= 0 && ++idx[pos] == pool.size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
}

TEST_CASE("support lemmas for simplices") {
  Rng rng(4);
  const MSetFamily fam = MSetFamily::self().mild();
  for (int trial = 0; trial < 100; ++trial) {
    const Int n = rng.uniform(0, 2);
    const Simplex s = random_simplex(rng, trial % 2 ? fam : MSetFamily::injections({2, 4}), n);
    const Int k = rng.uniform(0, n);
    const UPSet a = set_union(*k_support(s, k), random_finite(rng, 20, 2));
    const auto us = random_tuple(rng, n);
    const Simplex moved = em_act(us, s);
    CHECK(is_k_supported_on(moved, k, image(us[k])));
    CHECK(is_k_supported_on(moved, k, image(us[k], a)));
    // f^*(s) is k-supported on whatever supports coordinate f(k)
    for (const DeltaMap& f : monotone_maps(rng.uniform(0, 3), n))
      for (Int j = 0; j < static_cast<Int>(f.size()); ++j)
        CHECK(is_k_supported_on(pullback(s, f), j, set_union(*k_support(s, f[j]), a)));
  }
}

TEST_CASE("degreewise versus diagonal mildness") {
  const Simplex edge({MElt::self(maps::doubling()), MElt::self(maps::affine(2, 1))});
  CHECK(co_infinitely_supported(edge));
  const MElt diagonal = MElt::product(edge.coords);
  CHECK(minimal_support(diagonal) == complement(UPSet::finite({1})));
  CHECK(classify_element(diagonal) == ElementClass::NotMild);
}

TEST_CASE("finite groups and subgroups") {
  CHECK(subgroups(FinGroup::cyclic(4)).size() == 3);
  CHECK(subgroups(FinGroup::symmetric(3)).size() == 6);
  CHECK(subgroup_classes(FinGroup::symmetric(3)).size() == 4);
  CHECK(subgroups(FinGroup::symmetric(4)).size() == 30);
  CHECK(subgroup_classes(FinGroup::symmetric(4)).size() == 11);
  CHECK_THROWS_AS(FinGroup({{0, 1}, {0, 1}}), Error);
}

TEST_CASE("universal embedding") {
  const FinGroup triv = FinGroup::trivial();
  const auto e1 = universal_embedding(triv);
  CHECK(e1.block_size == 1);
  CHECK(e1.maps[0] == maps::identity());

  const FinGroup c2 = FinGroup::cyclic(2);
  const auto e2 = universal_embedding(c2);
  CHECK(e2.block_size == 3);
  for (Int k = 0; k < 20; ++k) {
    CHECK(e2.maps[1](3 * k + 1) == 3 * k + 2);
    CHECK(e2.maps[1](3 * k + 2) == 3 * k + 1);
    CHECK(e2.maps[1](3 * k + 3) == 3 * k + 3);
  }
  CHECK(compose(e2.maps[1], e2.maps[1]) == maps::identity());

  const FinGroup s3 = FinGroup::symmetric(3);
  const auto e3 = universal_embedding(s3);
  // one orbit per conjugacy class of subgroups: 6 + 3 + 2 + 1
  CHECK(e3.block_size == 12);
  CHECK(is_homomorphism(s3, e3));
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h)
      for (Int x = 1; x <= 60; ++x) CHECK(e3.maps[g](e3.maps[h](x)) == e3.maps[s3.mul(g, h)](x));

  for (const FinGroup& g : {FinGroup::cyclic(3), FinGroup::cyclic(4), s3}) {
    const auto emb = universal_embedding(g);
    CHECK(is_homomorphism(g, emb));
    for (Int block = 0; block < 5; ++block)
      for (std::size_t t = 0; t < emb.orbit_types.size(); ++t) {
        const Int x = block * emb.block_size + emb.orbit_offsets[t] + 1;
        CHECK(conjugate(g, stabilizer(g, emb, x), emb.orbit_types[t]));
      }
  }
  CHECK_THROWS_AS(universal_embedding(FinGroup::symmetric(4), 12), Error);
}

TEST_CASE("graph subgroup fixed points") {
  const FinGroup c2 = FinGroup::cyclic(2);
  const auto emb = universal_embedding(c2);
  const TruncEMSS x{MSetFamily::injections({1, 2}), MSetFamily::Filter::All, 3, symmetric_twist(2)};

  const auto all = graph_fixed_points(x, FinGroup::trivial(), universal_embedding(FinGroup::trivial()), {0}, 0, 6);
  CHECK(all.simplices.size() == 30);

  const auto swapped = graph_fixed_points(x, c2, emb, {0, 1}, 0, 30);
  CHECK_FALSE(swapped.bound_warning);
  std::size_t expected = 0;
  for (const MElt& u : injections_upto({1, 2}, 30)) {
    const Int a = u.values()[0], b = u.values()[1];
    const bool ok = (a % 3 == 1 && b == a + 1) || (b % 3 == 1 && a == b + 1);
    expected += ok;
  }
  CHECK(swapped.simplices.size() == expected);
  for (const Simplex& s : swapped.simplices) {
    const Int a = s[0].values()[0], b = s[0].values()[1];
    CHECK((a % 3 == 1 ? b == a + 1 : a == b + 1));
  }

  const auto trivial_phi = graph_fixed_points(x, c2, emb, {0, 0}, 1, 12);
  for (const Simplex& s : trivial_phi.simplices)
    for (const MElt& u : s.coords)
      for (Int v : u.values()) CHECK(v % 3 == 0);
  // 4 fixed points {3, 6, 9, 12}: 12 vertices, 144 edges
  CHECK(trivial_phi.simplices.size() == 144);
}
