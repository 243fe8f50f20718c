#include "mildem/mset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mildem {

MElt MElt::injection(std::vector<Int> domain, std::vector<Int> values) {
  if (domain.size() != values.size()) fail(ErrorKind::MalformedLiteral, "injection table must cover the domain");
  std::vector<std::size_t> order(domain.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return domain[i] < domain[j]; });
  MElt x;
  x.kind_ = Kind::Injection;
  for (std::size_t i : order) {
    if (domain[i] < 1 || values[i] < 1) fail(ErrorKind::MalformedLiteral, "injection entries must lie in omega");
    if (!x.domain_.empty() && x.domain_.back() == domain[i])
      fail(ErrorKind::MalformedLiteral, "repeated domain point " + std::to_string(domain[i]));
    x.domain_.push_back(domain[i]);
    x.values_.push_back(values[i]);
  }
  std::vector<Int> sorted = x.values_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::NotInjective, "injection repeats a value");
  return x;
}

MElt MElt::inclusion(std::vector<Int> domain) {
  std::vector<Int> values = domain;
  return injection(std::move(domain), std::move(values));
}

MElt MElt::self(PAPInj u) {
  MElt x;
  x.kind_ = Kind::Self;
  x.map_ = std::move(u);
  return x;
}

MElt MElt::warning(PAPInj u) {
  MElt x;
  x.kind_ = Kind::Warning;
  x.map_ = std::move(u);
  return x;
}

MElt MElt::product(std::vector<MElt> parts) {
  MElt x;
  x.kind_ = Kind::Product;
  x.parts_ = std::move(parts);
  return x;
}

bool operator==(const MElt& x, const MElt& y) {
  if (x.kind_ != y.kind_) return false;
  switch (x.kind_) {
    case MElt::Kind::Injection: return x.domain_ == y.domain_ && x.values_ == y.values_;
    case MElt::Kind::Self: return x.map_ == y.map_;
    case MElt::Kind::Warning:
      return x.map_ == y.map_ ||
             set_intersection(disagreement(x.map_.map(), y.map_.map()), UPSet::evens()).is_finite();
    case MElt::Kind::Product: return x.parts_ == y.parts_;
    case MElt::Kind::Point: return true;
  }
  return false;
}

MSetFamily MSetFamily::injections(std::vector<Int> domain) {
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  return MSetFamily{Kind::Injection, std::move(domain), {}, Filter::All};
}

MSetFamily MSetFamily::product(std::vector<MSetFamily> factors) {
  return MSetFamily{Kind::Product, {}, std::move(factors), Filter::All};
}

MSetFamily MSetFamily::mild() const {
  MSetFamily out = *this;
  if (out.filter == Filter::All) out.filter = Filter::Mild;
  return out;
}

MSetFamily MSetFamily::tame() const {
  MSetFamily out = *this;
  out.filter = Filter::Tame;
  return out;
}

bool MSetFamily::contains(const MElt& x) const {
  bool shape = false;
  switch (kind) {
    case Kind::Injection: shape = x.kind() == MElt::Kind::Injection && x.domain() == domain; break;
    case Kind::Self: shape = x.kind() == MElt::Kind::Self; break;
    case Kind::Warning: shape = x.kind() == MElt::Kind::Warning; break;
    case Kind::Point: shape = x.kind() == MElt::Kind::Point; break;
    case Kind::Product:
      shape = x.kind() == MElt::Kind::Product && x.parts().size() == factors.size();
      for (std::size_t i = 0; shape && i < factors.size(); ++i) shape = factors[i].contains(x.parts()[i]);
      break;
  }
  if (!shape) return false;
  switch (filter) {
    case Filter::All: return true;
    case Filter::Mild: return is_mild(x);
    case Filter::Tame: return is_tame(x);
  }
  return false;
}

std::string MSetFamily::name() const {
  std::string base;
  switch (kind) {
    case Kind::Injection: {
      base = "Inj({";
      for (std::size_t i = 0; i < domain.size(); ++i) base += (i ? "," : "") + std::to_string(domain[i]);
      base += "})";
      break;
    }
    case Kind::Self: base = "M"; break;
    case Kind::Warning: base = "M/~"; break;
    case Kind::Point: base = "*"; break;
    case Kind::Product:
      base = "(";
      for (std::size_t i = 0; i < factors.size(); ++i) base += (i ? " x " : "") + factors[i].name();
      base += ")";
      break;
  }
  if (filter == Filter::Mild) base += "^mu";
  if (filter == Filter::Tame) base += "^tau";
  return base;
}

MElt act(const PAPInj& f, const MElt& x) {
  switch (x.kind()) {
    case MElt::Kind::Injection: {
      std::vector<Int> values;
      for (Int v : x.values()) values.push_back(f(v));
      return MElt::injection(x.domain(), std::move(values));
    }
    case MElt::Kind::Self: return MElt::self(compose(f, x.map()));
    case MElt::Kind::Warning: return MElt::warning(compose(f, x.map()));
    case MElt::Kind::Product: {
      std::vector<MElt> parts;
      for (const MElt& p : x.parts()) parts.push_back(act(f, p));
      return MElt::product(std::move(parts));
    }
    case MElt::Kind::Point: return x;
  }
  return x;
}

namespace {

// ℳ_A is trivial when at most one point lies outside A: that point has
// nowhere else to go.
bool trivial_fixer(const UPSet& a) {
  const UPSet rest = complement(a);
  return rest.is_finite() && rest.size() <= 1;
}

bool supported_nontrivial(const MElt& x, const UPSet& a) {
  switch (x.kind()) {
    case MElt::Kind::Injection:
      return std::all_of(x.values().begin(), x.values().end(), [&](Int v) { return a.contains(v); });
    case MElt::Kind::Self: return is_subset(image(x.map()), a);
    case MElt::Kind::Warning:
      // g ∈ ℳ_A moves every point outside A when A is co-infinite, so g.[u] = [u]
      // for all such g iff u(2x) ∈ A for almost all x.
      return set_difference(image(x.map(), UPSet::evens()), a).is_finite();
    case MElt::Kind::Product:
      return std::all_of(x.parts().begin(), x.parts().end(), [&](const MElt& p) { return supported_nontrivial(p, a); });
    case MElt::Kind::Point: return true;
  }
  return false;
}

}  // namespace

bool is_supported_on(const MElt& x, const UPSet& a) { return trivial_fixer(a) || supported_nontrivial(x, a); }

std::optional<UPSet> minimal_support(const MElt& x) {
  switch (x.kind()) {
    case MElt::Kind::Injection: return UPSet::finite(x.values());
    case MElt::Kind::Self: return image(x.map());
    case MElt::Kind::Warning: return std::nullopt;
    case MElt::Kind::Product: {
      UPSet all;
      for (const MElt& p : x.parts()) {
        auto s = minimal_support(p);
        if (!s) return std::nullopt;
        all = set_union(all, *s);
      }
      return all;
    }
    case MElt::Kind::Point: return UPSet{};
  }
  return std::nullopt;
}

namespace {

// Warning classes are supported on u(evens), which is co-infinite (u(odds) is
// infinite and disjoint from it), and on no finite set.
ElementClass classify_support(const MElt& x) {
  if (x.kind() == MElt::Kind::Warning) return ElementClass::MildNotTame;
  if (x.kind() == MElt::Kind::Product) {
    ElementClass worst = ElementClass::Tame;
    UPSet all;
    for (const MElt& p : x.parts()) {
      const ElementClass c = classify_support(p);
      if (c == ElementClass::NotMild) return c;
      if (c == ElementClass::MildNotTame) worst = c;
      if (auto s = minimal_support(p)) {
        all = set_union(all, *s);
      } else {
        all = set_union(all, image(p.map(), UPSet::evens()));
      }
    }
    if (!all.is_coinfinite()) return ElementClass::NotMild;
    return all.is_finite() ? ElementClass::Tame : worst;
  }
  const UPSet s = *minimal_support(x);
  if (s.is_finite()) return ElementClass::Tame;
  return s.is_coinfinite() ? ElementClass::MildNotTame : ElementClass::NotMild;
}

}  // namespace

ElementClass classify_element(const MElt& x) { return classify_support(x); }

std::string_view to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Tame: return "Tame";
    case ElementClass::MildNotTame: return "MildNotTame";
    case ElementClass::NotMild: return "NotMild";
  }
  return "";
}

bool is_mild(const MElt& x) { return classify_element(x) != ElementClass::NotMild; }
bool is_tame(const MElt& x) { return classify_element(x) == ElementClass::Tame; }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::VerificationFailed, what);
}

QuasiAffine glue(const UPSet& s, const QuasiAffine& on_s, const UPSet& t, const QuasiAffine& on_t) {
  const std::pair<UPSet, QuasiAffine> parts[] = {{s, on_s}, {t, on_t}};
  return piecewise(parts);
}

}  // namespace

WitnessChain intersection_support_witness(const MElt& x, const UPSet& a, const UPSet& b, const PAPInj& f) {
  if (!a.is_coinfinite()) fail(ErrorKind::PreconditionFailed, "A is not co-infinite");
  if (!b.is_coinfinite()) fail(ErrorKind::PreconditionFailed, "B is not co-infinite");
  if (!is_supported_on(x, a)) fail(ErrorKind::PreconditionFailed, "x is not supported on A");
  if (!is_supported_on(x, b)) fail(ErrorKind::PreconditionFailed, "x is not supported on B");
  const UPSet ab = set_intersection(a, b);
  if (!fixes_pointwise(f, ab)) fail(ErrorKind::PreconditionFailed, "f does not fix A ∩ B pointwise");

  const UPSet ac = complement(a);
  const UPSet bc = complement(b);
  const PAPInj id;
  WitnessChain out;
  const UPSet free_a = set_difference(ac, image(f, a));
  if (free_a.is_infinite()) {
    out.case_number = 1;
    const PAPInj f1 = trust_injective(glue(a, f.map(), ac, order_iso(ac, free_a)));
    const PAPInj f2 = trust_injective(glue(a, id.map(), ac, f1.map()));
    require(equal_on(f1, f, a), "f1 agrees with f on A");
    out.verified.push_back("f1|A = f|A");
    require(is_subset(image(f1, ac), ac), "f1 maps A^c into A^c");
    out.verified.push_back("f1(A^c) ⊆ A^c");
    require(equal_on(f2, f1, b), "f2 agrees with f1 on B");
    out.verified.push_back("f2|B = f1|B");
    require(fixes_pointwise(f2, a), "f2 fixes A");
    out.verified.push_back("f2 ∈ M_A");
    out.maps = {f1, f2};
  } else {
    out.case_number = 2;
    const UPSet free_b = set_difference(ac, image(f, b));
    require(free_b.is_infinite(), "A^c ∖ f(B) is infinite");
    const UPSet off_ab = complement(ab);
    const QuasiAffine psi_hat = order_iso(off_ab, free_b);
    const PAPInj g1 = trust_injective(glue(b, f.map(), bc, psi_hat));
    const PAPInj g2 = trust_injective(glue(ab, f.map(), off_ab, psi_hat));
    const PAPInj g3 = trust_injective(glue(a, id.map(), ac, g2.map()));
    require(equal_on(g1, f, b), "g1 agrees with f on B");
    out.verified.push_back("g1|B = f|B");
    require(is_subset(image(g1, bc), ac), "g1 maps B^c into A^c");
    out.verified.push_back("g1(B^c) ⊆ A^c");
    require(equal_on(g2, g1, a), "g2 agrees with g1 on A");
    out.verified.push_back("g2|A = g1|A");
    require(is_subset(preimage(g2, a), a), "g2^-1(A) ⊆ A");
    out.verified.push_back("g2^-1(A) ⊆ A");
    require(fixes_pointwise(g3, a), "g3 fixes A");
    out.verified.push_back("g3 ∈ M_A");
    require(equal_on(g3, g2, b), "g3 agrees with g2 on B");
    out.verified.push_back("g3|B = g2|B");
    out.maps = {g1, g2, g3};
  }
  for (const PAPInj& m : out.maps) require(!find_collision(m.map()), "chain maps are injective");
  require(act(f, x) == x, "f.x = x");
  out.verified.push_back("f.x = x");
  return out;
}

PAPInj stabilizing_chi(const UPSet& a, const std::vector<PAPInj>& us, Int max_period) {
  if (!a.is_coinfinite()) fail(ErrorKind::NotCoinfinite, "A must be co-infinite");
  UPSet hit;
  for (const PAPInj& u : us) hit = set_union(hit, image(u, a));
  if (!hit.is_coinfinite()) fail(ErrorKind::PreconditionFailed, "the union of the images of A is not co-infinite");
  const UPSet ac = complement(a);
  const UPSet free_values = complement(hit);
  auto attempt = [&](const UPSet& reserved) -> std::optional<PAPInj> {
    try {
      UPSet b = ac;
      for (const PAPInj& u : us) b = set_difference(b, preimage(u, reserved));
      if (!b.is_infinite()) return std::nullopt;
      const PAPInj chi = b == ac ? maps::identity() : trust_injective(glue(a, QuasiAffine{}, ac, order_iso(ac, b)));
      UPSet total;
      for (const PAPInj& u : us) total = set_union(total, image(compose(u, chi)));
      if (fixes_pointwise(chi, a) && total.is_coinfinite()) return chi;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Overflow) throw;
    }
    return std::nullopt;
  };
  if (auto chi = attempt(UPSet{})) return *chi;
  for (Int period = 2; period <= max_period; ++period)
    for (Int c = 1; c <= period; ++c) {
      const UPSet reserved = set_intersection(free_values, UPSet::progression(c, period));
      if (!reserved.is_infinite()) continue;
      if (auto chi = attempt(reserved)) return *chi;
    }
  const QuasiAffine spare = enumerator(free_values);
  for (Int period = 2; period <= max_period; ++period)
    for (Int c = 1; c <= period; ++c)
      if (auto chi = attempt(image(spare, UPSet::progression(c, period)))) return *chi;
  fail(ErrorKind::SearchExhausted, "no progression with period <= " + std::to_string(max_period));
}

ModEquality equal_mod_MA(const UPSet& a, const std::vector<PAPInj>& us, const std::vector<PAPInj>& vs) {
  if (us.size() != vs.size()) fail(ErrorKind::ArityMismatch, "tuples differ in length");
  if (us == vs) return ModEquality::Equal;
  if (!a.is_coinfinite()) return ModEquality::Unknown;
  UPSet hit;
  for (std::size_t k = 0; k < us.size(); ++k) {
    if (!equal_on(us[k], vs[k], a)) return ModEquality::Unknown;
    hit = set_union(hit, image(us[k], a));
  }
  return hit.is_coinfinite() ? ModEquality::Equal : ModEquality::Unknown;
}

std::string to_string(const MElt& x) {
  std::ostringstream os;
  switch (x.kind()) {
    case MElt::Kind::Injection: {
      os << "inj{A=[";
      for (std::size_t i = 0; i < x.domain().size(); ++i) os << (i ? ", " : "") << x.domain()[i];
      os << "], table={";
      for (std::size_t i = 0; i < x.domain().size(); ++i) os << (i ? ", " : "") << x.domain()[i] << ':' << x.values()[i];
      os << "}}";
      break;
    }
    case MElt::Kind::Self: os << "selfm{" << to_string(x.map()) << '}'; break;
    case MElt::Kind::Warning: os << "warn{" << to_string(x.map()) << '}'; break;
    case MElt::Kind::Product:
      os << "prod(";
      for (std::size_t i = 0; i < x.parts().size(); ++i) os << (i ? ", " : "") << to_string(x.parts()[i]);
      os << ')';
      break;
    case MElt::Kind::Point: os << '*'; break;
  }
  return os.str();
}

}  // namespace mildem
