#include "mildem/operadic.hpp"

#include "mildem/gen.hpp"

namespace mildem {

void OperadicClass::check() const {
  if (frame.empty()) fail(ErrorKind::ArityMismatch, "empty frame");
  for (const InjN& f : frame)
    if (f.arity() != payload.size()) fail(ErrorKind::ArityMismatch, "frame arity differs from the payload size");
  for (const Simplex& x : payload)
    if (x.degree() != degree()) fail(ErrorKind::ArityMismatch, "payload degree differs from the frame length");
}

namespace {

std::vector<PAPInj> strand(const OperadicClass& c, std::size_t j) {
  std::vector<PAPInj> us;
  for (const InjN& f : c.frame) us.push_back(f.component(j));
  return us;
}

Simplex star_simplex(Int degree) {
  Simplex s;
  for (Int k = 0; k <= degree; ++k) s.coords.push_back(MElt::point());
  return s;
}

UPSet least_support(const Simplex& x, Int k) {
  auto s = k_support(x, k);
  if (!s) fail(ErrorKind::NoMinimalSupport, "payload coordinate " + to_string(x.coords[k]) + " has no least support");
  return *s;
}

// Strand j of the n-fold interleaving of the enumerator of `spare`, reached
// order-preservingly from the complement of A_j.
InjN interleaved_frame(const std::vector<UPSet>& level, const UPSet& spare) {
  const Int n = static_cast<Int>(level.size());
  const QuasiAffine free = enumerator(spare);
  std::vector<PAPInj> comps;
  for (Int j = 0; j < n; ++j) {
    const UPSet rest = complement(level[j]);
    const UPSet targets = image(free, UPSet::progression(j + 1, n));
    const std::pair<UPSet, QuasiAffine> parts[] = {{rest, order_iso(rest, targets)}};
    comps.push_back(trust_injective(piecewise(parts)));
  }
  return InjN(std::move(comps));
}

// Same shape, but the strands interleave one residue class of `spare`, which
// keeps periods small when the densities are coprime.
InjN residue_frame(const std::vector<UPSet>& level, const UPSet& spare) {
  const Int n = static_cast<Int>(level.size());
  const Int p = spare.period(), c = spare.residues().front(), m = spare.threshold();
  std::vector<PAPInj> comps;
  for (Int j = 0; j < n; ++j) {
    const UPSet rest = complement(level[j]);
    const QuasiAffine into = QuasiAffine::affine(n * p, n * p * m + c + j * p);
    const std::pair<UPSet, QuasiAffine> parts[] = {{rest, compose(into, rank_map(rest))}};
    comps.push_back(trust_injective(piecewise(parts)));
  }
  return InjN(std::move(comps));
}

}  // namespace

std::vector<Simplex> phi(const OperadicClass& c) {
  c.check();
  std::vector<Simplex> out;
  for (std::size_t j = 0; j < c.arity(); ++j) out.push_back(em_act(strand(c, j), c.payload[j]));
  return out;
}

OperadicClass phi_inverse(const std::vector<Simplex>& xs) {
  const BoxResult r = box_membership(xs);
  const auto* w = std::get_if<BoxWitness>(&r);
  if (!w) fail(ErrorKind::WitnessInvalid, "not in the box product: " + to_string(std::get<NotInBox>(r)));
  const Int n = static_cast<Int>(xs.size());
  OperadicClass c;
  c.payload = xs;
  for (const auto& level : w->levels) {
    UPSet used;
    for (const UPSet& a : level) used = set_union(used, a);
    const UPSet spare = complement(used);
    try {
      c.frame.push_back(interleaved_frame(level, spare));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Overflow) throw;
      c.frame.push_back(residue_frame(level, spare));
    }
  }
  if (phi(c) != xs) fail(ErrorKind::WitnessInvalid, "Φ does not return the input");
  return c;
}

bool class_equal(const OperadicClass& c1, const OperadicClass& c2) {
  c1.check();
  c2.check();
  if (c1.arity() != c2.arity() || c1.degree() != c2.degree())
    fail(ErrorKind::ArityMismatch, "classes of different shapes");
  if (phi(c1) != phi(c2)) return false;
  for (Int k = 0; k <= c1.degree(); ++k)
    for (std::size_t j = 0; j < c1.arity(); ++j) {
      const UPSet a = least_support(c1.payload[j], k), b = least_support(c2.payload[j], k);
      const PAPInj& f = c1.frame[k].component(j);
      const PAPInj& g = c2.frame[k].component(j);
      if (!a.is_coinfinite() || !b.is_coinfinite())
        fail(ErrorKind::NotCoinfinite, "class equality needs co-infinite supports");
      if (image(f, a) != image(g, b)) return false;
      // σ = (g ι_j)⁻¹ ∘ (f ι_j) on A, extended to a bijection of ω
      const UPSet ra = complement(a);
      const std::pair<UPSet, QuasiAffine> parts[] = {{a, compose(inverse_on_image(g), f.map())},
                                                     {ra, order_iso(ra, complement(b))}};
      PAPInj s;
      try {
        s = validate(piecewise(parts));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInjective) throw;
        return false;
      }
      if (!equal_on(compose(g, s), f, a)) return false;
      if (!(act(s, c1.payload[j].coords[k]) == c2.payload[j].coords[k])) return false;
    }
  return true;
}

OperadicClass precompose_frame(const OperadicClass& c, const std::vector<std::vector<PAPInj>>& us) {
  c.check();
  if (static_cast<Int>(us.size()) != c.degree() + 1) fail(ErrorKind::ArityMismatch, "need maps for every level");
  OperadicClass out = c;
  for (std::size_t k = 0; k < us.size(); ++k) out.frame[k] = precompose(c.frame[k], us[k]);
  return out;
}

OperadicClass act_payload(const OperadicClass& c, const std::vector<std::vector<PAPInj>>& us) {
  c.check();
  if (static_cast<Int>(us.size()) != c.degree() + 1) fail(ErrorKind::ArityMismatch, "need maps for every level");
  OperadicClass out = c;
  for (std::size_t k = 0; k < us.size(); ++k) {
    if (us[k].size() != c.arity()) fail(ErrorKind::ArityMismatch, "need one map per factor");
    for (std::size_t j = 0; j < c.arity(); ++j) out.payload[j].coords[k] = act(us[k][j], c.payload[j].coords[k]);
  }
  return out;
}

StarModuleReport star_module_check(const TruncEMSS& x, Int max_degree, std::size_t samples, std::uint64_t seed) {
  StarModuleReport rep;
  rep.family = x.name();
  const Int top = std::min(max_degree, x.max_degree);
  MSetFamily fam = x.base;
  fam.filter = x.filter;

  std::vector<Simplex> pool;
  if (fam.kind == MSetFamily::Kind::Self && x.filter == MSetFamily::Filter::All)
    pool.push_back(Simplex::vertex(MElt::self(maps::identity())));
  if (fam.kind == MSetFamily::Kind::Injection)
    for (Int d = 0; d <= std::min<Int>(top, 1); ++d)
      for (Simplex& s : all_simplices(injections_upto(fam.domain, 10), d))
        if (x.contains(s)) pool.push_back(std::move(s));
  for (std::size_t t = 0; t < samples; ++t) {
    Rng rng = trial_rng(seed, t);
    const Int d = rng.uniform(0, top);
    Simplex s;
    for (Int k = 0; k <= d; ++k) s.coords.push_back(random_element(rng, fam));
    pool.push_back(std::move(s));
  }

  std::vector<OperadicClass> classes;
  for (std::size_t t = 0; t < pool.size(); ++t) {
    const Simplex& s = pool[t];
    ++rep.sampled;
    if (!co_infinitely_supported(s)) {
      rep.surjective = false;
      if (!rep.unhit)
        for (Int k = 0; k <= s.degree(); ++k) {
          const auto supp = k_support(s, k);
          if (supp && !supp->is_coinfinite()) {
            rep.unhit = s;
            rep.unhit_level = k;
            rep.unhit_support = *supp;
            break;
          }
        }
      continue;
    }
    const Simplex star = star_simplex(s.degree());
    const OperadicClass c = phi_inverse({s, star});
    if (phi(c)[0] == s) ++rep.hit;
    else rep.surjective = false;

    // a second representative of a class over s, through the defining relation
    Rng rng = trial_rng(seed ^ 0x5bd1e995u, t);
    OperadicClass r;
    std::vector<std::vector<PAPInj>> us;
    for (Int k = 0; k <= s.degree(); ++k) {
      r.frame.push_back(random_injn(rng, 2));
      us.push_back({random_injection(rng), random_injection(rng)});
    }
    r.payload = {s, star};
    ++rep.relation_pairs;
    if (!class_equal(precompose_frame(r, us), act_payload(r, us))) rep.injective = false;
    if (classes.size() < 40) {
      classes.push_back(c);
      classes.push_back(r);
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (classes[i].degree() != classes[j].degree()) continue;
      ++rep.compared;
      const bool same_image = phi(classes[i]) == phi(classes[j]);
      if (same_image != class_equal(classes[i], classes[j])) rep.injective = false;
    }
  rep.mild = !rep.unhit && rep.surjective;
  return rep;
}

MuReport mu_via_operadic(const Simplex& x, std::optional<std::vector<InjN>> frame) {
  const Int n = x.degree();
  std::vector<InjN> f = frame ? *frame : std::vector<InjN>(n + 1, InjN::standard(2));
  if (static_cast<Int>(f.size()) != n + 1) fail(ErrorKind::ArityMismatch, "need one frame map per level");
  const PAPInj d = maps::doubling();
  const QuasiAffine half({}, 2, {Piece{1, 0}, Piece{1, 1}});
  const Simplex star = star_simplex(n);

  MuReport rep;
  rep.input.payload = {x, star};
  rep.result.payload = {em_act(std::vector<PAPInj>(n + 1, d), x), star};
  rep.relation_holds = true;
  for (Int k = 0; k <= n; ++k) {
    if (f[k].arity() != 2) fail(ErrorKind::ArityMismatch, "frames have arity 2");
    // d fixes *, so this is the same class with the odd values of strand 2 vacated
    const PAPInj fixed_star[] = {PAPInj{}, d};
    const InjN fk = precompose(f[k], fixed_star);
    const UPSet odds = UPSet::odds();
    const UPSet spare = complement(set_union(image(fk.component(0)), image(fk.component(1))));
    const std::pair<UPSet, QuasiAffine> parts[] = {{UPSet::evens(), compose(fk.component(0).map(), half)},
                                                   {odds, order_iso(odds, spare)}};
    const InjN g(std::vector<PAPInj>{validate(piecewise(parts)), fk.component(1)});
    const PAPInj doubled[] = {d, PAPInj{}};
    if (!(precompose(g, doubled) == fk)) rep.relation_holds = false;
    rep.input.frame.push_back(fk);
    rep.result.frame.push_back(g);
  }
  rep.phi_agrees = phi(rep.input) == phi(rep.result);
  rep.payload_mild = co_infinitely_supported(rep.result.payload[0]);
  return rep;
}

std::string to_string(const OperadicClass& c) {
  std::string out = "[";
  for (std::size_t k = 0; k < c.frame.size(); ++k) out += (k ? ", " : "") + to_string(c.frame[k]);
  out += ";";
  for (std::size_t j = 0; j < c.payload.size(); ++j) out += (j ? ", " : " ") + to_string(c.payload[j]);
  return out + "]";
}

}  // namespace mildem
