#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mildem/mset.hpp"
#include "mildem/papinj.hpp"
#include "mildem/upset.hpp"

namespace mildem {

/// Deterministic random source for generators and randomized checks.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(0, static_cast<Int>(xs.size()) - 1))];
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream for trial `trial` of a run seeded with `seed`; the same
/// pair always yields the same stream regardless of execution order.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

struct GenBounds {
  Int max_threshold = 8;
  Int max_period = 12;
  /// Generated maps whose canonical period or threshold exceed this are redrawn.
  Int max_map_period = 96;
  /// Largest value drawn for finite injection tables.
  Int max_entry = 12;
};

UPSet random_upset(Rng& rng, const GenBounds& b = {});
/// A set with infinite complement (possibly finite).
UPSet random_coinfinite(Rng& rng, const GenBounds& b = {});
/// A set that is infinite with infinite complement.
UPSet random_biinfinite(Rng& rng, const GenBounds& b = {});
/// A random infinite subset of an infinite set.
UPSet random_infinite_subset(Rng& rng, const UPSet& s, const GenBounds& b = {});
/// A random finite subset of {1, ..., bound} with at most `max_size` elements.
UPSet random_finite(Rng& rng, Int bound, Int max_size);

PAPInj random_injection(Rng& rng, const GenBounds& b = {});
/// A random injection whose image is co-infinite.
PAPInj random_coinfinite_injection(Rng& rng, const GenBounds& b = {});
/// A random element of ℳ_A (fixing `a` pointwise).
PAPInj random_fixing(Rng& rng, const UPSet& a, const GenBounds& b = {});
/// A random injection agreeing with f on a (a co-infinite).
PAPInj random_agreeing(Rng& rng, const PAPInj& f, const UPSet& a, const GenBounds& b = {});

/// A random element of Inj(n×ω, ω): an outer injection after the standard
/// interleaving, each strand first moved by its own injection.
InjN random_injn(Rng& rng, std::size_t arity, const GenBounds& b = {});

/// A random element of the family, honoring its mild/tame filter. Throws
/// UnsupportedFamily for filters with no elements (ℳ^τ).
MElt random_element(Rng& rng, const MSetFamily& family, const GenBounds& b = {});

}  // namespace mildem
