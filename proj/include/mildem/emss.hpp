#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mildem/group.hpp"
#include "mildem/mset.hpp"

namespace mildem {

/// An n-simplex of EX: a tuple (x_0, ..., x_n) of elements of X.
struct Simplex {
  std::vector<MElt> coords;

  Simplex() = default;
  explicit Simplex(std::vector<MElt> c) : coords(std::move(c)) {}
  static Simplex vertex(MElt x) { return Simplex({std::move(x)}); }

  Int degree() const { return static_cast<Int>(coords.size()) - 1; }
  const MElt& operator[](std::size_t k) const { return coords.at(k); }

  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// d_i: deletes coordinate i. Throws IndexOutOfRange.
Simplex face(const Simplex& s, Int i);
/// s_i: duplicates coordinate i. Throws IndexOutOfRange, and
/// TruncationExceeded when the result would exceed degree `max_degree`.
Simplex degeneracy(const Simplex& s, Int i, Int max_degree);

/// A monotone map [m] → [n], listed as its values f(0), ..., f(m).
using DeltaMap = std::vector<Int>;
/// All monotone maps [m] → [n].
std::vector<DeltaMap> monotone_maps(Int m, Int n);
/// f^*(s) = (s_{f(0)}, ..., s_{f(m)}).
Simplex pullback(const Simplex& s, const DeltaMap& f);

/// (u_0, ..., u_n).s, coordinatewise. Throws ArityMismatch.
Simplex em_act(const std::vector<PAPInj>& us, const Simplex& s);
/// i_k(u): u in slot k, the identity elsewhere.
std::vector<PAPInj> slot(Int degree, Int k, const PAPInj& u);

/// The support set of coordinate k (nullopt when it has none); see minimal_support.
std::optional<UPSet> k_support(const Simplex& s, Int k);
bool is_k_supported_on(const Simplex& s, Int k, const UPSet& a);

/// Every coordinate admits a finite / co-infinite supporting set.
bool finitely_supported(const Simplex& s);
bool co_infinitely_supported(const Simplex& s);

/// A finite group acting on the domain of Inj(A, ω) by permutations.
/// `action[g][i]` is the index (into A) of g·a_i.
struct GroupTwist {
  FinGroup group = FinGroup::trivial();
  std::vector<std::vector<std::size_t>> action;
};

/// The twist of Inj(A, ω) by the full symmetric group of A, A listed in order.
GroupTwist symmetric_twist(std::size_t domain_size);

/// The degree-truncated Eℳ-simplicial set EX for a family X, optionally cut
/// down to (EX)^μ or (EX)^τ, optionally with a group acting on the domain.
struct TruncEMSS {
  MSetFamily base;
  MSetFamily::Filter filter = MSetFamily::Filter::All;
  Int max_degree = 3;
  std::optional<GroupTwist> twist;

  bool contains(const Simplex& s) const;
  std::string name() const;
};

enum class SimplicialFilter { Tau, Mu };
TruncEMSS filter_tau_mu(const TruncEMSS& x, SimplicialFilter which);

/// g.u = u ∘ g⁻¹ for u ∈ Inj(A, ω).
MElt twist_act(const GroupTwist& t, int g, const MElt& x);

struct FixedPointReport {
  std::vector<Simplex> simplices;
  Int entry_bound = 0;
  /// Set when the bound cuts a block of the embedding, so orbits near the
  /// bound are truncated.
  bool bound_warning = false;
};

/// All n-simplices of E Inj(A, ω) (entries <= bound) fixed by the graph
/// subgroup {(emb(h), φ(h))}: emb(h) ∘ x_k = x_k ∘ φ(h) on A for every k.
/// `phi[h]` is an element of the twist group. Throws UnsupportedFamily for
/// other families and TruncationExceeded above the degree bound.
FixedPointReport graph_fixed_points(const TruncEMSS& x, const FinGroup& h, const UniversalEmbedding& emb,
                                    const std::vector<int>& phi, Int n, Int entry_bound);

/// All injections A → {1..bound}, in lexicographic order of values.
std::vector<MElt> injections_upto(const std::vector<Int>& domain, Int bound);

std::string to_string(const Simplex& s);

}  // namespace mildem
