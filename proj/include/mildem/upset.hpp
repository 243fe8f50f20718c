#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mildem/arith.hpp"

namespace mildem {

/// Ultimately periodic subset of ω = {1, 2, 3, ...}.
///
/// A set is stored as a threshold N, the exceptional members in {1, ..., N},
/// and a period p with a residue pattern: x > N is a member iff x mod p is one
/// of the residues. Values are always kept in canonical form (minimal period
/// first, then minimal threshold), so two sets are equal iff their fields are.
class UPSet {
 public:
  /// The empty set.
  UPSet();

  /// Validates field constraints and canonicalizes. Throws MalformedLiteral.
  static UPSet make(Int threshold, std::vector<Int> exceptional, Int period, std::vector<Int> residues);

  static UPSet finite(std::vector<Int> elements);
  static UPSet periodic(Int period, std::vector<Int> residues);
  static UPSet omega() { return periodic(1, {0}); }
  static UPSet evens() { return periodic(2, {0}); }
  static UPSet odds() { return periodic(2, {1}); }
  /// {start, start + step, start + 2 step, ...}
  static UPSet progression(Int start, Int step);
  /// {x : x > n}
  static UPSet above(Int n);
  /// {lo, ..., hi}
  static UPSet interval(Int lo, Int hi);

  /// Builds the canonical set from raw bitmaps: `below[i]` is membership of
  /// i + 1 for i < threshold, `tail[r]` the membership of x > threshold with
  /// x mod period == r.
  static UPSet from_bits(Int threshold, const std::vector<char>& below, Int period, const std::vector<char>& tail);

  bool contains(Int x) const;

  Int threshold() const { return threshold_; }
  const std::vector<Int>& exceptional() const { return exceptional_; }
  Int period() const { return period_; }
  const std::vector<Int>& residues() const { return residues_; }

  bool empty() const { return residues_.empty() && exceptional_.empty(); }
  bool is_finite() const { return residues_.empty(); }
  bool is_infinite() const { return !residues_.empty(); }
  bool is_coinfinite() const;
  bool is_cofinite() const;

  /// Cardinality of a finite set. Throws FiniteSet-style misuse as
  /// PreconditionFailed on infinite sets.
  std::size_t size() const;
  /// All members of a finite set in increasing order.
  std::vector<Int> elements() const;
  /// The first `count` members in increasing order (fewer if the set is finite).
  std::vector<Int> first(std::size_t count) const;
  /// The k-th smallest member, k >= 1.
  Int nth(Int k) const;
  /// Members <= bound, increasing.
  std::vector<Int> members_upto(Int bound) const;
  /// Number of members <= x.
  Int count_upto(Int x) const;

  friend bool operator==(const UPSet&, const UPSet&) = default;
  friend auto operator<=>(const UPSet&, const UPSet&) = default;

 private:
  Int threshold_ = 0;
  std::vector<Int> exceptional_;
  Int period_ = 1;
  std::vector<Int> residues_;
};

UPSet set_union(const UPSet& s, const UPSet& t);
UPSet set_intersection(const UPSet& s, const UPSet& t);
UPSet set_difference(const UPSet& s, const UPSet& t);
UPSet complement(const UPSet& s);
bool is_subset(const UPSet& s, const UPSet& t);
bool disjoint(const UPSet& s, const UPSet& t);

enum class BoolOp { Union, Intersect, Complement };
/// `t` is ignored for Complement.
UPSet boolean(BoolOp op, const UPSet& s, const UPSet& t = UPSet{});

struct SetClass {
  enum class Kind { Finite, Cofinite, BiInfinite };
  Kind kind;
  /// Cardinality of the set (Finite) or of its complement (Cofinite); 0 otherwise.
  std::size_t count = 0;
  friend bool operator==(const SetClass&, const SetClass&) = default;
};

SetClass classify(const UPSet& s);

/// Bound up to which two sets must be compared pointwise to decide equality.
Int comparison_horizon(const UPSet& s, const UPSet& t);

std::string to_string(const UPSet& s);
std::ostream& operator<<(std::ostream& os, const UPSet& s);

}  // namespace mildem
