#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mildem/boxprod.hpp"

namespace mildem {

/// A representative [f_0, ..., f_m; x_1, ..., x_n] of the operadic product
/// E Inj(n×ω, ω) ×_{Eℳⁿ} (X_1 × ... × X_n).
struct OperadicClass {
  std::vector<InjN> frame;
  std::vector<Simplex> payload;

  Int degree() const { return static_cast<Int>(frame.size()) - 1; }
  std::size_t arity() const { return payload.size(); }
  /// Throws ArityMismatch when the frame and payload do not fit together.
  void check() const;
};

/// Φ: coordinate j is (f_0 ι_j, ..., f_m ι_j).x_j.
std::vector<Simplex> phi(const OperadicClass& c);

/// A representative with f_k(j, t) = t on the support of x_j at level k, the
/// remaining strands interleaved into the unused part of ω. Throws
/// WitnessInvalid when xs is not in the box product.
OperadicClass phi_inverse(const std::vector<Simplex>& xs);

/// Decides whether two representatives define the same class. Throws
/// NoMinimalSupport when a payload coordinate has no least support.
bool class_equal(const OperadicClass& c1, const OperadicClass& c2);

/// The class [f ∘ (u_1 ⊔ ... ⊔ u_n); x] for c = [f; x], which equals
/// [f; (u_j).x_j]. `us[k][j]` is u_j at level k.
OperadicClass precompose_frame(const OperadicClass& c, const std::vector<std::vector<PAPInj>>& us);
/// [f; (u_j).x_j] for c = [f; x].
OperadicClass act_payload(const OperadicClass& c, const std::vector<std::vector<PAPInj>>& us);

struct StarModuleReport {
  std::string family;
  bool mild = false;
  std::size_t sampled = 0;
  std::size_t hit = 0;
  std::size_t relation_pairs = 0;
  /// Pairs of sampled classes compared.
  std::size_t compared = 0;
  bool injective = true;
  bool surjective = true;
  /// For a non-mild family: a simplex outside the image of Φ, with a level
  /// whose least support is not co-infinite.
  std::optional<Simplex> unhit;
  Int unhit_level = -1;
  std::optional<UPSet> unhit_support;
  bool is_star_module() const { return injective && surjective && !unhit; }
};

/// Samples simplices of X and classes of E Inj(2×ω, ω) ×_{Eℳ²} (X × *)
/// and checks that Φ onto X is bijective. Deterministic in `seed`.
StarModuleReport star_module_check(const TruncEMSS& x, Int max_degree, std::size_t samples, std::uint64_t seed);

struct MuReport {
  /// [f ∘ (id ⊔ d); x, *], the same class as [f; x, *].
  OperadicClass input;
  /// [g; (d, ..., d).x, *] with g ∘ (d ⊔ id) = f ∘ (id ⊔ d) levelwise.
  OperadicClass result;
  bool relation_holds = false;
  bool phi_agrees = false;
  bool payload_mild = false;
  bool ok() const { return relation_holds && phi_agrees && payload_mild; }
};

/// Rewrites [f; x, *] so that the payload lies in X^μ, using d(x) = 2x.
/// With no frame given, f_k is the standard interleaving at every level.
MuReport mu_via_operadic(const Simplex& x, std::optional<std::vector<InjN>> frame = std::nullopt);

std::string to_string(const OperadicClass& c);

}  // namespace mildem
