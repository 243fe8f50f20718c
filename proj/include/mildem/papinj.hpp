#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mildem/upset.hpp"

namespace mildem {

/// One affine piece on a residue class: x = period*q + r maps to slope*q + offset.
struct Piece {
  Int slope = 1;
  Int offset = 0;
  friend bool operator==(const Piece&, const Piece&) = default;
  friend auto operator<=>(const Piece&, const Piece&) = default;
};

/// A total map ω → ω given by a finite table on {1, ..., N} and, above N,
/// an increasing affine piece on every residue class mod the period.
///
/// Not necessarily injective; this is the working type for intermediate maps
/// (rank functions, partial inverses) that are later glued into injections.
/// Values are kept canonical: minimal period, then minimal threshold.
class QuasiAffine {
 public:
  /// The identity.
  QuasiAffine();
  /// Canonicalizes. Throws MalformedLiteral if a slope is < 1, a table value
  /// is < 1, or a piece takes a value < 1 above the threshold.
  QuasiAffine(std::vector<Int> table, Int period, std::vector<Piece> pieces);

  static QuasiAffine affine(Int slope, Int offset);

  Int operator()(Int x) const;

  Int threshold() const { return static_cast<Int>(table_.size()); }
  const std::vector<Int>& table() const { return table_; }
  Int period() const { return period_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// The piece for residue class s modulo `period`, which must be a multiple
  /// of period(). Valid for arguments above threshold().
  Piece refined_piece(Int period, Int s) const;

  /// Largest x with value <= bound, or 0 if there is none.
  Int last_at_most(Int bound) const;

  friend bool operator==(const QuasiAffine&, const QuasiAffine&) = default;
  friend auto operator<=>(const QuasiAffine&, const QuasiAffine&) = default;

 private:
  void canonicalize();

  std::vector<Int> table_;
  Int period_ = 1;
  std::vector<Piece> pieces_{Piece{1, 0}};
};

QuasiAffine compose(const QuasiAffine& outer, const QuasiAffine& inner);

/// The image outer(S) as an exact set.
UPSet image(const QuasiAffine& u, const UPSet& s);
UPSet image(const QuasiAffine& u);
/// {x : u(x) in t}
UPSet preimage(const QuasiAffine& u, const UPSet& t);
/// {x : u(x) != v(x)}
UPSet disagreement(const QuasiAffine& u, const QuasiAffine& v);

/// Glues maps along pairwise disjoint parts; points in no part use the
/// identity. `points` pins individual values (x, value) and takes precedence.
QuasiAffine piecewise(std::span<const std::pair<UPSet, QuasiAffine>> parts,
                      std::span<const std::pair<Int, Int>> points = {});

/// Order-preserving bijection ω → S (the k-th smallest element). Throws FiniteSet.
QuasiAffine enumerator(const UPSet& s);
/// x in S ↦ number of members of S that are <= x; identity off S.
QuasiAffine rank_map(const UPSet& s);
/// Order-preserving bijection S → T on S, identity elsewhere. Both infinite.
QuasiAffine order_iso(const UPSet& s, const UPSet& t);

/// A validated injective QuasiAffine: the computable fragment of ℳ used
/// throughout. Construction goes through validate().
class PAPInj {
 public:
  /// The identity.
  PAPInj() = default;

  Int operator()(Int x) const { return map_(x); }
  const QuasiAffine& map() const { return map_; }
  Int threshold() const { return map_.threshold(); }
  Int period() const { return map_.period(); }

  friend bool operator==(const PAPInj&, const PAPInj&) = default;
  friend auto operator<=>(const PAPInj&, const PAPInj&) = default;

 private:
  explicit PAPInj(QuasiAffine m) : map_(std::move(m)) {}
  friend PAPInj validate(QuasiAffine candidate);
  friend PAPInj trust_injective(QuasiAffine candidate);

  QuasiAffine map_;
};

/// Returns the map iff it is globally injective; throws NotInjective naming a
/// colliding pair (x, y) otherwise.
PAPInj validate(QuasiAffine candidate);

/// Like validate(), for maps that are injective by construction. Debug builds
/// still run the full check.
PAPInj trust_injective(QuasiAffine candidate);

/// A colliding pair x < y with u(x) == u(y), if any.
std::optional<std::pair<Int, Int>> find_collision(const QuasiAffine& u);

PAPInj compose(const PAPInj& u, const PAPInj& v);
UPSet image(const PAPInj& u, const UPSet& s);
UPSet image(const PAPInj& u);
UPSet preimage(const PAPInj& u, const UPSet& t);

/// u(x) == v(x) for all x in a.
bool equal_on(const PAPInj& u, const PAPInj& v, const UPSet& a);
/// u is in ℳ_A.
bool fixes_pointwise(const PAPInj& u, const UPSet& a);
bool is_bijective(const PAPInj& u);

/// Bijection h agreeing with f on the co-infinite set a: h = f on a and the
/// order-preserving bijection ω∖a → ω∖f(a) elsewhere. Throws NotCoinfinite.
PAPInj agreeing_bijection(const PAPInj& f, const UPSet& a);

/// The map that equals u⁻¹ on image(u) and the identity elsewhere.
QuasiAffine inverse_on_image(const PAPInj& u);

namespace maps {
PAPInj identity();
PAPInj succ();
PAPInj doubling();
/// x ↦ slope*x + offset
PAPInj affine(Int slope, Int offset);
/// Transposition of a and b.
PAPInj swap(Int a, Int b);
/// Finite permutation: `perm` lists the images of 1..perm.size().
PAPInj finite_permutation(const std::vector<Int>& perm);
/// j-th strand (1-based) of the standard n-fold interleaving: x ↦ n*x - (j - 1).
PAPInj interleave(Int n, Int j);
}  // namespace maps

/// An element of Inj(n×ω, ω): component j is the restriction to {j}×ω.
/// Components have pairwise disjoint images.
class InjN {
 public:
  /// Arity 1 identity (the operad unit).
  InjN() : components_{PAPInj{}} {}
  /// Throws NotInjective when two component images meet, PreconditionFailed
  /// when empty.
  explicit InjN(std::vector<PAPInj> components);

  static InjN identity() { return InjN{}; }
  /// The standard n-fold interleaving (interleave(n, 1), ..., interleave(n, n)).
  static InjN standard(std::size_t arity);

  std::size_t arity() const { return components_.size(); }
  const PAPInj& component(std::size_t j) const { return components_.at(j); }
  const std::vector<PAPInj>& components() const { return components_; }
  /// Value at (j, t), j is 0-based.
  Int operator()(std::size_t j, Int t) const { return components_.at(j)(t); }

  friend bool operator==(const InjN&, const InjN&) = default;

 private:
  struct Unchecked {};
  InjN(std::vector<PAPInj> components, Unchecked) : components_(std::move(components)) {}
  friend InjN operad_compose(const InjN&, std::span<const InjN>);
  friend InjN precompose(const InjN&, std::span<const PAPInj>);
  friend InjN postcompose(const PAPInj&, const InjN&);

  std::vector<PAPInj> components_;
};

/// Composition and juxtaposition: component (j, i) is outer_j ∘ inner_j,i.
InjN operad_compose(const InjN& outer, std::span<const InjN> inner);
/// f ∘ (u_1 ⊔ ... ⊔ u_n)
InjN precompose(const InjN& f, std::span<const PAPInj> us);
/// g ∘ f
InjN postcompose(const PAPInj& g, const InjN& f);

std::string to_string(const QuasiAffine& u);
std::string to_string(const PAPInj& u);
std::string to_string(const InjN& f);
std::ostream& operator<<(std::ostream& os, const PAPInj& u);

}  // namespace mildem
