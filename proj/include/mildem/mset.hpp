#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mildem/papinj.hpp"
#include "mildem/upset.hpp"

namespace mildem {

/// An element of one of the built-in ℳ-sets.
///
/// - Injection: an injection A → ω for a finite A ⊂ ω (the ℳ-set Inj(A, ω)).
/// - Self: an element of ℳ acting on itself by postcomposition.
/// - Warning: a class [u] of ℳ/∼, where u ∼ v iff u(2x) = v(2x) for almost all x.
/// - Product: a tuple of elements with the diagonal action.
/// - Point: the unique element of the terminal ℳ-set.
class MElt {
 public:
  enum class Kind { Injection, Self, Warning, Product, Point };

  /// The point.
  MElt() = default;

  /// `domain` lists A (any order), `values` the images in the same order.
  /// Throws MalformedLiteral on repeated domain points and NotInjective on
  /// repeated values.
  static MElt injection(std::vector<Int> domain, std::vector<Int> values);
  /// The inclusion A ↪ ω.
  static MElt inclusion(std::vector<Int> domain);
  static MElt self(PAPInj u);
  static MElt warning(PAPInj u);
  static MElt product(std::vector<MElt> parts);
  static MElt point() { return MElt{}; }

  Kind kind() const { return kind_; }
  /// Sorted domain of an injection.
  const std::vector<Int>& domain() const { return domain_; }
  /// Values of an injection, aligned with domain().
  const std::vector<Int>& values() const { return values_; }
  /// The map of a Self element, or the chosen representative of a Warning class.
  const PAPInj& map() const { return map_; }
  const std::vector<MElt>& parts() const { return parts_; }

  /// Class equality for Warning elements, field equality otherwise.
  friend bool operator==(const MElt& x, const MElt& y);

 private:
  Kind kind_ = Kind::Point;
  std::vector<Int> domain_;
  std::vector<Int> values_;
  PAPInj map_;
  std::vector<MElt> parts_;
};

/// A family of ℳ-sets, optionally cut down to its mild or tame part.
struct MSetFamily {
  enum class Kind { Injection, Self, Warning, Product, Point };
  enum class Filter { All, Mild, Tame };

  Kind kind = Kind::Point;
  /// A for Inj(A, ω).
  std::vector<Int> domain;
  std::vector<MSetFamily> factors;
  Filter filter = Filter::All;

  static MSetFamily injections(std::vector<Int> domain);
  static MSetFamily self() { return MSetFamily{Kind::Self, {}, {}, Filter::All}; }
  static MSetFamily warning() { return MSetFamily{Kind::Warning, {}, {}, Filter::All}; }
  static MSetFamily product(std::vector<MSetFamily> factors);
  static MSetFamily point() { return MSetFamily{}; }

  /// X^μ and X^τ.
  MSetFamily mild() const;
  MSetFamily tame() const;

  /// Whether x is an element of this family (shape plus filter).
  bool contains(const MElt& x) const;
  std::string name() const;

  friend bool operator==(const MSetFamily&, const MSetFamily&) = default;
};

MElt act(const PAPInj& f, const MElt& x);

/// Whether every element of ℳ_A fixes x. Exact for every family and every A.
bool is_supported_on(const MElt& x, const UPSet& a);

/// The support set S(x): for every A with at least two non-members, x is
/// supported on A iff S(x) ⊆ A. It is the image for injections and maps, ∅
/// for the point, and the union over the parts of a product. Warning classes
/// have no such set (they are supported on every set containing almost all of
/// u(evens), which has no least member), reported as nullopt.
std::optional<UPSet> minimal_support(const MElt& x);

enum class ElementClass { Tame, MildNotTame, NotMild };
ElementClass classify_element(const MElt& x);
std::string_view to_string(ElementClass c);

bool is_mild(const MElt& x);
bool is_tame(const MElt& x);

/// The maps built in the constructive proof that supports are closed under
/// intersections of co-infinite sets.
struct WitnessChain {
  /// 1 when A^c ∖ f(A) is infinite (maps f1, f2), 2 otherwise (g1, g2, g3).
  int case_number = 1;
  std::vector<PAPInj> maps;
  /// Names of the verified properties, in order.
  std::vector<std::string> verified;
};

/// Builds and verifies the chain showing f.x = x. Throws PreconditionFailed
/// naming the hypothesis that fails, VerificationFailed if a stated property
/// does not hold.
WitnessChain intersection_support_witness(const MElt& x, const UPSet& a, const UPSet& b, const PAPInj& f);

/// χ ∈ ℳ_A with ∪ image(u_k ∘ χ) co-infinite, found by searching progressions
/// of ω ∖ ∪ u_k(A) with period up to `max_period`. Throws NotCoinfinite or
/// PreconditionFailed on bad input, SearchExhausted if nothing is found.
PAPInj stabilizing_chi(const UPSet& a, const std::vector<PAPInj>& us, Int max_period = 64);

enum class ModEquality { Equal, Unknown };
/// Equal when u_k and v_k agree on A for all k and ∪ u_k(A) is co-infinite.
ModEquality equal_mod_MA(const UPSet& a, const std::vector<PAPInj>& us, const std::vector<PAPInj>& vs);

std::string to_string(const MElt& x);

}  // namespace mildem
