#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mildem/emss.hpp"

namespace mildem {

/// Supporting sets for an m-fold box simplex: levels[k][i] supports
/// coordinate k of factor i.
struct BoxWitness {
  std::vector<std::vector<UPSet>> levels;
};

struct NotInBox {
  enum class Reason { Disjointness, CoInfiniteUnion };
  Reason reason = Reason::Disjointness;
  Int level = 0;
  /// The offending factors (for Disjointness), 0-based.
  std::size_t first = 0, second = 0;
};

using BoxResult = std::variant<BoxWitness, NotInBox>;

/// Decides whether (x_1, ..., x_m) lies in the m-fold box product, using the
/// support sets of the coordinates. Throws ArityMismatch on differing degrees
/// and NoMinimalSupport when a coordinate has no support set.
BoxResult box_membership(const std::vector<Simplex>& xs);
bool in_box(const std::vector<Simplex>& xs);

/// Checks supports, pairwise disjointness and co-infinite unions.
bool verify_box_witness(const std::vector<Simplex>& xs, const BoxWitness& w);

/// Zips simplices of equal degree into one simplex of the product.
Simplex zip(const std::vector<Simplex>& xs);
/// Inverse of zip for simplices whose coordinates are products of `arity` parts.
std::vector<Simplex> unzip(const Simplex& s);

/// Per-level supports of one pair of simplices after refinement.
struct RefinedSupports {
  std::vector<UPSet> a, b, d;
};

/// Given x k-supported on A_k, y on B_k and (x, y) on D_k, returns
/// A'_k = A_k ∩ D_k, B'_k = B_k ∩ D_k, D'_k = A'_k ∪ B'_k, re-verifying every
/// support claim. Throws VerificationFailed naming the failing claim.
RefinedSupports refine_supports(const Simplex& x, const Simplex& y, const std::vector<UPSet>& a,
                                const std::vector<UPSet>& b, const std::vector<UPSet>& d);

enum class MonoidalKind { Assoc, Symm, Unit };

struct MonoidalReport {
  bool ok = true;
  std::string detail;
};

/// Transports membership across the associativity, symmetry or unit
/// isomorphism, following the support refinement argument. `xs` holds
/// (x, y, z), (x, y) or (x) respectively.
MonoidalReport monoidal_witness(MonoidalKind kind, const std::vector<Simplex>& xs);

struct CoproductIsoReport {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  bool injective = true;
  bool onto_box = true;
  bool ok() const { return injective && onto_box && left_count == right_count; }
};

/// Compares E Inj(A ⊔ B, ω)^μ with E Inj(A, ω)^μ ⊠ E Inj(B, ω)^μ on all
/// simplices of degree `degree` with entries <= bound, via restriction.
/// A and B are finite and disjoint; either may be empty.
CoproductIsoReport inj_coproduct_iso(const std::vector<Int>& a, const std::vector<Int>& b, Int degree, Int bound);

/// All (1 + degree)-tuples drawn from `pool`.
std::vector<Simplex> all_simplices(const std::vector<MElt>& pool, Int degree);

std::string to_string(const BoxWitness& w);
std::string to_string(const NotInBox& v);

}  // namespace mildem
