#include "mildem/papinj.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace mildem {

namespace {

// First x > threshold with x ≡ r (mod period).
Int first_above(Int threshold, Int period, Int r) {
  return threshold + 1 + floor_mod(r - (threshold + 1), period);
}

}  // namespace

QuasiAffine::QuasiAffine() = default;

QuasiAffine::QuasiAffine(std::vector<Int> table, Int period, std::vector<Piece> pieces)
    : table_(std::move(table)), period_(period), pieces_(std::move(pieces)) {
  if (period_ < 1 || period_ > kMaxPeriod) fail(ErrorKind::MalformedLiteral, "period out of range");
  if (static_cast<Int>(pieces_.size()) != period_)
    fail(ErrorKind::MalformedLiteral, "need exactly one piece per residue class");
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] < 1)
      fail(ErrorKind::MalformedLiteral, "table value at " + std::to_string(i + 1) + " is not in omega");
  const Int n = threshold();
  for (Int r = 0; r < period_; ++r) {
    const Piece& pc = pieces_[r];
    if (pc.slope < 1) fail(ErrorKind::MalformedLiteral, "piece slopes must be positive");
    const Int x0 = first_above(n, period_, r);
    const Int q0 = (x0 - r) / period_;
    if (checked_add(checked_mul(pc.slope, q0), pc.offset) < 1)
      fail(ErrorKind::MalformedLiteral, "piece for residue " + std::to_string(r) + " leaves omega at " +
                                            std::to_string(x0));
  }
  canonicalize();
}

QuasiAffine QuasiAffine::affine(Int slope, Int offset) { return QuasiAffine({}, 1, {Piece{slope, offset}}); }

void QuasiAffine::canonicalize() {
  const Int p = period_;
  for (Int d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    const Int k = p / d;
    bool ok = true;
    std::vector<Piece> coarse(d);
    for (Int s = 0; s < d && ok; ++s) {
      const Piece& base = pieces_[s];
      if (base.slope % k != 0) {
        ok = false;
        break;
      }
      const Int a = base.slope / k;
      for (Int j = 1; j < k && ok; ++j) ok = pieces_[s + d * j] == Piece{base.slope, base.offset + a * j};
      coarse[s] = Piece{a, base.offset};
    }
    if (ok) {
      period_ = d;
      pieces_ = std::move(coarse);
      break;
    }
  }
  while (!table_.empty()) {
    const Int x = threshold();
    const Int r = x % period_;
    const Piece& pc = pieces_[r];
    if (pc.slope * ((x - r) / period_) + pc.offset != table_.back()) break;
    table_.pop_back();
  }
}

Int QuasiAffine::operator()(Int x) const {
  if (x < 1) fail(ErrorKind::IndexOutOfRange, "argument outside omega");
  if (x <= threshold()) return table_[x - 1];
  const Int r = x % period_;
  const Piece& pc = pieces_[r];
  return checked_add(checked_mul(pc.slope, (x - r) / period_), pc.offset);
}

Piece QuasiAffine::refined_piece(Int period, Int s) const {
  const Int r = s % period_;
  const Int k = period / period_;
  const Piece& pc = pieces_[r];
  return Piece{checked_mul(pc.slope, k), pc.slope * ((s - r) / period_) + pc.offset};
}

Int QuasiAffine::last_at_most(Int bound) const {
  Int best = 0;
  for (Int x = 1; x <= threshold(); ++x)
    if (table_[x - 1] <= bound) best = x;
  const Int n = threshold();
  for (Int r = 0; r < period_; ++r) {
    const Piece& pc = pieces_[r];
    const Int q = floor_div(bound - pc.offset, pc.slope);
    const Int x = period_ * q + r;
    if (x > n) best = std::max(best, x);
  }
  return best;
}

QuasiAffine compose(const QuasiAffine& outer, const QuasiAffine& inner) {
  const Int n = std::max(inner.threshold(), inner.last_at_most(outer.threshold()));
  const Int pu = outer.period();
  Int m = 1;
  for (const Piece& pc : inner.pieces()) m = checked_lcm(m, pu / std::gcd(pc.slope, pu));
  const Int period = checked_mul(inner.period(), m);
  if (period > kMaxPeriod) fail(ErrorKind::Overflow, "composite period exceeds limit");

  std::vector<Int> table(n);
  for (Int x = 1; x <= n; ++x) table[x - 1] = outer(inner(x));
  std::vector<Piece> pieces(period);
  for (Int s = 0; s < period; ++s) {
    const Piece in = inner.refined_piece(period, s);
    const Int rho = floor_mod(in.offset, pu);
    const Piece& out = outer.pieces()[rho];
    pieces[s] = Piece{checked_mul(out.slope, in.slope / pu), out.slope * ((in.offset - rho) / pu) + out.offset};
  }
  return QuasiAffine(std::move(table), period, std::move(pieces));
}

UPSet image(const QuasiAffine& u, const UPSet& s) {
  const Int n = std::max(u.threshold(), s.threshold());
  const Int period = checked_lcm(u.period(), s.period());
  std::vector<Int> finite_part;
  for (Int x = 1; x <= n; ++x)
    if (s.contains(x)) finite_part.push_back(u(x));

  struct Progression {
    Int start, step;
  };
  std::vector<Progression> tails;
  Int horizon = 0;
  Int big_period = 1;
  for (Int c = 0; c < period; ++c) {
    const Int x0 = first_above(n, period, c);
    if (!s.contains(x0)) continue;
    const Piece pc = u.refined_piece(period, c);
    tails.push_back({u(x0), pc.slope});
    horizon = std::max(horizon, u(x0) - 1);
    big_period = checked_lcm(big_period, pc.slope);
  }
  for (Int y : finite_part) horizon = std::max(horizon, y);

  std::vector<char> below(horizon, 0), tail(big_period, 0);
  for (Int y : finite_part) below[y - 1] = 1;
  for (const auto& t : tails) {
    for (Int y = t.start; y <= horizon; y += t.step) below[y - 1] = 1;
    for (Int r = floor_mod(t.start, t.step); r < big_period; r += t.step) tail[r] = 1;
  }
  return UPSet::from_bits(horizon, below, big_period, tail);
}

UPSet image(const QuasiAffine& u) { return image(u, UPSet::omega()); }

UPSet preimage(const QuasiAffine& u, const UPSet& t) {
  const Int n = std::max(u.threshold(), u.last_at_most(t.threshold()));
  const Int pt = t.period();
  Int m = 1;
  for (const Piece& pc : u.pieces()) m = checked_lcm(m, pt / std::gcd(pc.slope, pt));
  const Int period = checked_mul(u.period(), m);
  if (period > kMaxPeriod) fail(ErrorKind::Overflow, "preimage period exceeds limit");
  std::vector<char> below(n), tail(period);
  for (Int x = 1; x <= n; ++x) below[x - 1] = t.contains(u(x));
  const auto& res = t.residues();
  for (Int s = 0; s < period; ++s) {
    const Piece pc = u.refined_piece(period, s);
    tail[s] = std::binary_search(res.begin(), res.end(), floor_mod(pc.offset, pt));
  }
  return UPSet::from_bits(n, below, period, tail);
}

UPSet disagreement(const QuasiAffine& u, const QuasiAffine& v) {
  Int n = std::max(u.threshold(), v.threshold());
  const Int period = checked_lcm(u.period(), v.period());
  std::vector<char> tail(period);
  for (Int s = 0; s < period; ++s) {
    const Piece a = u.refined_piece(period, s);
    const Piece b = v.refined_piece(period, s);
    if (a == b) continue;
    tail[s] = 1;
    // Distinct affine pieces agree in at most one point; push the threshold past it.
    if (a.slope != b.slope) {
      const Int num = b.offset - a.offset;
      const Int den = a.slope - b.slope;
      if (num % den == 0) n = std::max(n, period * (num / den) + s);
    }
  }
  std::vector<char> below(n);
  for (Int x = 1; x <= n; ++x) below[x - 1] = u(x) != v(x);
  return UPSet::from_bits(n, below, period, tail);
}

QuasiAffine piecewise(std::span<const std::pair<UPSet, QuasiAffine>> parts,
                      std::span<const std::pair<Int, Int>> points) {
  Int n = 0;
  Int period = 1;
  for (const auto& [set, map] : parts) {
    n = std::max({n, set.threshold(), map.threshold()});
    period = checked_lcm(period, checked_lcm(set.period(), map.period()));
  }
  for (const auto& pt : points) n = std::max(n, pt.first);

  auto value_at = [&](Int x) {
    for (const auto& [set, map] : parts)
      if (set.contains(x)) return map(x);
    return x;
  };
  std::vector<Int> table(n);
  for (Int x = 1; x <= n; ++x) table[x - 1] = value_at(x);
  for (const auto& [x, y] : points) table[x - 1] = y;

  std::vector<Piece> pieces(period);
  for (Int s = 0; s < period; ++s) {
    const Int x0 = first_above(n, period, s);
    pieces[s] = Piece{period, s};
    for (const auto& [set, map] : parts) {
      if (set.contains(x0)) {
        pieces[s] = map.refined_piece(period, s);
        break;
      }
    }
  }
  return QuasiAffine(std::move(table), period, std::move(pieces));
}

QuasiAffine enumerator(const UPSet& s) {
  if (s.is_finite()) fail(ErrorKind::FiniteSet, "no enumerator of the finite set " + to_string(s));
  const auto& exc = s.exceptional();
  const Int e = static_cast<Int>(exc.size());
  const Int r = static_cast<Int>(s.residues().size());
  const Int p = s.period();
  std::vector<Int> heads;
  for (Int x = s.threshold() + 1; static_cast<Int>(heads.size()) < r; ++x)
    if (s.contains(x)) heads.push_back(x);
  std::vector<Piece> pieces(r);
  for (Int c = 0; c < r; ++c) {
    const Int i = floor_mod(c - e - 1, r);
    pieces[c] = Piece{p, heads[i] + p * ((c - e - 1 - i) / r)};
  }
  return QuasiAffine(exc, r, std::move(pieces));
}

QuasiAffine rank_map(const UPSet& s) {
  const Int n = s.threshold();
  const Int p = s.period();
  const auto& res = s.residues();
  const Int e = static_cast<Int>(s.exceptional().size());
  std::vector<Int> table(n);
  for (Int x = 1; x <= n; ++x) table[x - 1] = s.contains(x) ? s.count_upto(x) : x;
  Int base = e;
  for (Int r : res) base -= floor_div(n - r, p);
  std::vector<Piece> pieces(p);
  for (Int c = 0; c < p; ++c) {
    if (!std::binary_search(res.begin(), res.end(), c)) {
      pieces[c] = Piece{p, c};
      continue;
    }
    Int offset = base;
    for (Int r : res)
      if (r > c) --offset;
    pieces[c] = Piece{static_cast<Int>(res.size()), offset};
  }
  return QuasiAffine(std::move(table), p, std::move(pieces));
}

QuasiAffine order_iso(const UPSet& s, const UPSet& t) {
  const std::pair<UPSet, QuasiAffine> part{s, compose(enumerator(t), rank_map(s))};
  return piecewise(std::span(&part, 1));
}

std::optional<std::pair<Int, Int>> find_collision(const QuasiAffine& u) {
  const Int n = u.threshold();
  const Int p = u.period();
  std::map<Int, Int> seen;
  for (Int x = 1; x <= n; ++x) {
    auto [it, fresh] = seen.emplace(u(x), x);
    if (!fresh) return std::pair{it->second, x};
  }
  struct Tail {
    Int x0, start, step;
  };
  std::vector<Tail> tails;
  for (Int r = 0; r < p; ++r) {
    const Int x0 = first_above(n, p, r);
    tails.push_back({x0, u(x0), u.pieces()[r].slope});
  }
  // Table values hit by a tail piece.
  for (const auto& [y, x] : seen) {
    for (const auto& t : tails) {
      if (y >= t.start && (y - t.start) % t.step == 0) {
        const Int other = t.x0 + p * ((y - t.start) / t.step);
        return std::pair{x, other};
      }
    }
  }
  // Two progressions meet iff their starts agree modulo the gcd of the steps.
  for (std::size_t i = 0; i < tails.size(); ++i) {
    for (std::size_t j = i + 1; j < tails.size(); ++j) {
      const Tail& a = tails[i];
      const Tail& b = tails[j];
      const Int g = std::gcd(a.step, b.step);
      if (floor_mod(a.start - b.start, g) != 0) continue;
      for (Int y = std::max(a.start, b.start);; ++y) {
        if (y >= a.start && (y - a.start) % a.step == 0 && (y - b.start) % b.step == 0) {
          Int xa = a.x0 + p * ((y - a.start) / a.step);
          Int xb = b.x0 + p * ((y - b.start) / b.step);
          return std::pair{std::min(xa, xb), std::max(xa, xb)};
        }
      }
    }
  }
  return std::nullopt;
}

PAPInj validate(QuasiAffine candidate) {
  if (auto hit = find_collision(candidate))
    fail(ErrorKind::NotInjective, "(" + std::to_string(hit->first) + ", " + std::to_string(hit->second) +
                                      ") both map to " + std::to_string(candidate(hit->first)));
  return PAPInj(std::move(candidate));
}

PAPInj trust_injective(QuasiAffine candidate) {
#ifdef MILDEM_PARANOID
  return validate(std::move(candidate));
#else
  return PAPInj(std::move(candidate));
#endif
}

PAPInj compose(const PAPInj& u, const PAPInj& v) { return trust_injective(compose(u.map(), v.map())); }
UPSet image(const PAPInj& u, const UPSet& s) { return image(u.map(), s); }
UPSet image(const PAPInj& u) { return image(u.map()); }
UPSet preimage(const PAPInj& u, const UPSet& t) { return preimage(u.map(), t); }

bool equal_on(const PAPInj& u, const PAPInj& v, const UPSet& a) {
  if (a.empty() || u == v) return true;
  return disjoint(disagreement(u.map(), v.map()), a);
}

bool fixes_pointwise(const PAPInj& u, const UPSet& a) { return equal_on(u, maps::identity(), a); }

bool is_bijective(const PAPInj& u) { return image(u) == UPSet::omega(); }

PAPInj agreeing_bijection(const PAPInj& f, const UPSet& a) {
  if (!a.is_coinfinite()) fail(ErrorKind::NotCoinfinite, to_string(a) + " has finite complement");
  const UPSet rest = complement(a);
  const UPSet free_targets = complement(image(f, a));
  const std::pair<UPSet, QuasiAffine> parts[] = {{a, f.map()}, {rest, order_iso(rest, free_targets)}};
  return trust_injective(piecewise(parts));
}

QuasiAffine inverse_on_image(const PAPInj& u) {
  const QuasiAffine& m = u.map();
  const Int n = m.threshold();
  const Int p = m.period();
  std::vector<std::pair<UPSet, QuasiAffine>> parts;
  for (Int r = 0; r < p; ++r) {
    const Piece pc = m.pieces()[r];
    const Int x0 = first_above(n, p, r);
    const Int start = m(x0);
    const Int sigma = floor_mod(pc.offset, pc.slope);
    // y = slope*Q + sigma  ↦  p*Q + p*(sigma - offset)/slope + r, identity on other classes
    std::vector<Piece> pieces(pc.slope);
    for (Int c = 0; c < pc.slope; ++c) pieces[c] = Piece{pc.slope, c};
    pieces[sigma] = Piece{p, p * ((sigma - pc.offset) / pc.slope) + r};
    std::vector<Int> table(start - 1);
    std::iota(table.begin(), table.end(), Int{1});
    parts.emplace_back(UPSet::progression(start, pc.slope), QuasiAffine(std::move(table), pc.slope, std::move(pieces)));
  }
  std::vector<std::pair<Int, Int>> points;
  for (Int x = 1; x <= n; ++x) points.emplace_back(m(x), x);
  return piecewise(parts, points);
}

namespace maps {

PAPInj identity() { return PAPInj{}; }
PAPInj succ() { return affine(1, 1); }
PAPInj doubling() { return affine(2, 0); }

PAPInj affine(Int slope, Int offset) {
  if (slope < 1 || slope + offset < 1) fail(ErrorKind::MalformedLiteral, "affine map leaves omega");
  return trust_injective(QuasiAffine::affine(slope, offset));
}

PAPInj swap(Int a, Int b) {
  if (a < 1 || b < 1) fail(ErrorKind::MalformedLiteral, "swap arguments must be in omega");
  std::vector<Int> perm(std::max(a, b));
  std::iota(perm.begin(), perm.end(), Int{1});
  std::swap(perm[a - 1], perm[b - 1]);
  return finite_permutation(perm);
}

PAPInj finite_permutation(const std::vector<Int>& perm) {
  std::vector<Int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<Int>(i + 1)) fail(ErrorKind::MalformedLiteral, "not a permutation of 1..n");
  return trust_injective(QuasiAffine(perm, 1, {Piece{1, 0}}));
}

PAPInj interleave(Int n, Int j) {
  if (n < 1 || j < 1 || j > n) fail(ErrorKind::MalformedLiteral, "interleave(n, j) needs 1 <= j <= n");
  return affine(n, 1 - j);
}

}  // namespace maps

InjN::InjN(std::vector<PAPInj> components) : components_(std::move(components)) {
  if (components_.empty()) fail(ErrorKind::PreconditionFailed, "InjN needs arity >= 1");
  std::vector<UPSet> images;
  for (const auto& c : components_) images.push_back(image(c));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (!disjoint(images[i], images[j]))
        fail(ErrorKind::NotInjective, "components " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                          " share " + std::to_string(set_intersection(images[i], images[j]).nth(1)));
}

InjN InjN::standard(std::size_t arity) {
  std::vector<PAPInj> cs;
  for (std::size_t j = 1; j <= arity; ++j) cs.push_back(maps::interleave(static_cast<Int>(arity), static_cast<Int>(j)));
  return InjN(std::move(cs), Unchecked{});
}

InjN operad_compose(const InjN& outer, std::span<const InjN> inner) {
  if (inner.size() != outer.arity()) fail(ErrorKind::ArityMismatch, "operad_compose needs one inner operation per input");
  std::vector<PAPInj> cs;
  for (std::size_t j = 0; j < outer.arity(); ++j)
    for (const auto& c : inner[j].components()) cs.push_back(compose(outer.component(j), c));
  return InjN(std::move(cs), InjN::Unchecked{});
}

InjN precompose(const InjN& f, std::span<const PAPInj> us) {
  if (us.size() != f.arity()) fail(ErrorKind::ArityMismatch, "precompose needs one map per input");
  std::vector<PAPInj> cs;
  for (std::size_t j = 0; j < f.arity(); ++j) cs.push_back(compose(f.component(j), us[j]));
  return InjN(std::move(cs), InjN::Unchecked{});
}

InjN postcompose(const PAPInj& g, const InjN& f) {
  std::vector<PAPInj> cs;
  for (const auto& c : f.components()) cs.push_back(compose(g, c));
  return InjN(std::move(cs), InjN::Unchecked{});
}

namespace {

std::string fraction(Int num, Int den) {
  const Int g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string offset_text(Int num, Int den) {
  if (num % den == 0) return std::to_string(num / den);
  return fraction(num, den);
}

}  // namespace

std::string to_string(const QuasiAffine& u) {
  std::ostringstream os;
  os << "pap{";
  if (u.threshold() > 0) {
    os << "table={";
    for (Int x = 1; x <= u.threshold(); ++x) os << (x > 1 ? ", " : "") << x << ':' << u.table()[x - 1];
    os << "}, N=" << u.threshold() << ", ";
  }
  const Int p = u.period();
  os << "p=" << p << ", pieces=[";
  for (Int r = 0; r < p; ++r) {
    const Piece& pc = u.pieces()[r];
    // u(x) = (slope/p) x + (offset - slope*r/p)
    os << (r ? ", " : "") << '(' << r << ", " << fraction(pc.slope, p) << ", "
       << offset_text(pc.offset * p - pc.slope * r, p) << ')';
  }
  os << "]}";
  return os.str();
}

std::string to_string(const PAPInj& u) { return to_string(u.map()); }

std::string to_string(const InjN& f) {
  std::string out = "injn(";
  for (std::size_t j = 0; j < f.arity(); ++j) out += (j ? ", " : "") + to_string(f.component(j));
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const PAPInj& u) { return os << to_string(u); }

}  // namespace mildem
