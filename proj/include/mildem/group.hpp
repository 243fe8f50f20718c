#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mildem/papinj.hpp"

namespace mildem {

/// A finite group given by its multiplication table; elements are 0..order-1.
class FinGroup {
 public:
  /// Validates closure, associativity, identity and inverses.
  explicit FinGroup(std::vector<std::vector<int>> table);

  static FinGroup trivial();
  static FinGroup cyclic(int n);
  /// Σ_n on {1..n}; element i is the i-th permutation in lexicographic order.
  static FinGroup symmetric(int n);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int g, int h) const { return table_[g][h]; }
  int identity() const { return identity_; }
  int inverse(int g) const { return inverse_[g]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  /// Permutations of {1..n} for symmetric groups, in element order.
  const std::vector<std::vector<Int>>& permutations() const { return perms_; }

 private:
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<std::vector<Int>> perms_;
};

/// Subgroups as bitmasks over the element indices.
using Subgroup = std::uint64_t;

inline constexpr int kMaxGroupOrder = 24;

/// All subgroups, sorted by (order, mask). Throws GroupTooLarge.
std::vector<Subgroup> subgroups(const FinGroup& g);
/// One representative per conjugacy class, sorted by (order, mask).
std::vector<Subgroup> subgroup_classes(const FinGroup& g);
int subgroup_order(Subgroup s);

/// An embedding of H into the bijections of ω making ω a complete H-set
/// universe: ω is cut into consecutive blocks of `block_size`, each block
/// holding one copy of H/K for every conjugacy class of subgroups K.
struct UniversalEmbedding {
  Int block_size = 1;
  /// The image of each group element.
  std::vector<PAPInj> maps;
  /// The subgroup class K of each orbit, in block order, with its first position (0-based).
  std::vector<Subgroup> orbit_types;
  std::vector<Int> orbit_offsets;
};

/// Throws GroupTooLarge when |H| exceeds `max_order`.
UniversalEmbedding universal_embedding(const FinGroup& h, int max_order = kMaxGroupOrder);

/// Checks emb(g) ∘ emb(h) = emb(gh) for all pairs and that each map is a bijection.
bool is_homomorphism(const FinGroup& h, const UniversalEmbedding& emb);

/// Stabilizer of x under the embedded action, as a bitmask.
Subgroup stabilizer(const FinGroup& h, const UniversalEmbedding& emb, Int x);

/// Whether two subgroups are conjugate.
bool conjugate(const FinGroup& g, Subgroup a, Subgroup b);

}  // namespace mildem
