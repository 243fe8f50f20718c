#pragma once

#include <string>
#include <vector>

#include "mildem/operadic.hpp"

namespace mildem {

/// An n-simplex of the free commutative *-algebra on a point: a Σ_m-orbit of
/// tuples (u_0, ..., u_n) of injections {1..m} → ω. Column i holds
/// (u_0(i), ..., u_n(i)); columns are kept sorted.
class StarSimplex {
 public:
  /// Throws MalformedLiteral when a column has the wrong length, a value is
  /// < 1, or two columns share a value at some level.
  StarSimplex(Int degree, std::vector<std::vector<Int>> columns);
  /// The weight-0 unit.
  static StarSimplex unit(Int degree) { return StarSimplex(degree, {}); }

  Int degree() const { return degree_; }
  std::size_t weight() const { return columns_.size(); }
  const std::vector<std::vector<Int>>& columns() const { return columns_; }
  /// The values at level k, which form its least support.
  UPSet support(Int k) const;
  /// As a simplex of E Inj({1..m}, ω), columns in stored order.
  Simplex as_simplex() const;

  friend bool operator==(const StarSimplex&, const StarSimplex&) = default;

 private:
  Int degree_ = 0;
  std::vector<std::vector<Int>> columns_;
};

/// Juxtaposition. Throws NotSummable naming the level and the violated
/// condition when (a, b) is not in the box product.
StarSimplex sum(const StarSimplex& a, const StarSimplex& b);
bool summable(const StarSimplex& a, const StarSimplex& b);

/// Postcomposes the columns of operand j by f_k ι_j at level k and juxtaposes.
StarSimplex i_action(const std::vector<InjN>& frame, const std::vector<StarSimplex>& operands);

StarSimplex face(const StarSimplex& a, Int i);
StarSimplex degeneracy(const StarSimplex& a, Int i);
/// (u_0, ..., u_n).a
StarSimplex act(const std::vector<PAPInj>& us, const StarSimplex& a);

/// All simplices of the given weight and degree with entries <= bound.
std::vector<StarSimplex> all_star_simplices(std::size_t weight, Int degree, Int bound);

struct CmonCheck {
  std::string name;
  std::size_t instances = 0;
  std::vector<std::string> failures;
};

struct CmonReport {
  std::vector<CmonCheck> checks;
  bool ok() const;
};

struct CmonBounds {
  std::size_t max_weight = 2;
  Int max_entry = 8;
  Int max_degree = 2;
  std::size_t pairs = 300;
  std::size_t triples = 300;
  std::size_t actions = 200;
};

/// Unit, commutativity, associativity, compatibility with the simplicial
/// structure and the Eℳ-action, and the 𝓘-action against sum. Deterministic
/// in `seed`. Unit and commutativity run over every simplex (pair) within
/// bounds, the rest over sampled summable families.
CmonReport verify_cmon(const CmonBounds& bounds, std::uint64_t seed);

std::string to_string(const StarSimplex& a);

}  // namespace mildem
