#pragma once

#include <schur/weight.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace schur {

// Element of the group ring ZX(n): a finitely supported integer-multiplicity
// function on weights. Zero multiplicities are never stored, so equality is
// structural. Immutable; all arithmetic returns fresh values.
class Character {
 public:
  explicit Character(std::size_t rank);
  // Zero multiplicities in `terms` are dropped; keys must have rank `rank`.
  Character(std::size_t rank, std::map<Weight, Int> terms);

  std::size_t rank() const { return rank_; }
  const std::map<Weight, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Sum of all multiplicities (evaluation at x_1 = ... = x_n = 1).
  Int dimension() const;
  // Multiplicity of w, 0 off support.
  Int multiplicity(const Weight& w) const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }

  friend Character operator+(const Character& a, const Character& b);
  friend Character operator-(const Character& a, const Character& b);
  friend Character operator*(const Character& a, const Character& b);
  friend Character operator*(const Int& c, const Character& a);

 private:
  std::size_t rank_;
  std::map<Weight, Int> terms_;
};

// e^a, the basis exponential.
Character exponential(const Weight& a);

// s(a) = sum of e^mu over the Weyl orbit of a.
Character orbit_sum(const Weight& a);

// Normal form of v under the dot action: sign 0 when v + delta has a
// repeated entry (wall case), otherwise the sign of the sorting permutation
// together with the dominant representative of v.
struct SignedChi {
  int sign = 0;  // -1, 0, +1
  std::optional<DominantWeight> rep;
};

SignedChi dot_normalize(const Weight& v);

// Weyl character chi(v) with the signed dot-action extension: zero on walls,
// sign * chi(rep) otherwise. For dominant polynomial weights this is the
// Schur polynomial, computed by semistandard-tableaux enumeration; dominant
// weights with negative entries are reduced by a determinant twist.
Character weyl_character(const Weight& v);

// Scales every support weight entrywise by `factor` (the character-level
// effect of iterated Frobenius twists). Requires factor >= 1.
Character frobenius_twist(const Character& x, const Int& factor);

// Terms of the expansion chi(lam) * s(nu) = sum of sign * chi(rep) over the
// Weyl orbit of nu, dot-normalized; wall terms are dropped.
std::vector<std::pair<int, DominantWeight>> brauer_expand(const DominantWeight& lam,
                                                          const Weight& nu);

// e^{lam - (p-1)delta} * chi((p-1)delta); total dimension p^(n choose 2).
Character zhat_character(const Weight& lam, const Int& p);

}  // namespace schur
