#pragma once

#include <schur/character.hpp>
#include <schur/weight.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace schur {

// Symbolic k[x_1..x_s]/(x_1^c..x_s^c); dimension c^s. s = 0 is the trivial
// algebra k regardless of cap.
struct TruncatedPolyAlgebra {
  unsigned long generators = 0;
  unsigned long cap = 2;

  Int dimension() const { return int_pow(Int(static_cast<long>(cap)), generators); }

  friend bool operator==(const TruncatedPolyAlgebra& a, const TruncatedPolyAlgebra& b) {
    return a.generators == b.generators && (a.generators == 0 || a.cap == b.cap);
  }
};

// Endomorphism algebra of a descriptor: the dimension is always known, the
// truncated-polynomial shape only in the regimes where it is established.
struct EndAlgebra {
  Int dim = 1;
  std::optional<TruncatedPolyAlgebra> truncated;
};

// Certified lower bound on the admissible index; `exact` marks the cases
// where the index is pinned rather than merely bounded from below.
struct AdmissibleIndex {
  unsigned long value = 0;
  bool exact = false;
};

// Character-level descriptor of an injective/tilting module: socle weight,
// optional full character (suppressible for huge degrees), endomorphism
// algebra and admissible index.
struct InjectiveDescriptor {
  DominantWeight socle_weight;
  std::optional<Character> character;
  EndAlgebra end_algebra;
  AdmissibleIndex index;
};

// The tilting module M((p-1)delta + lam) = I((p-1)delta + w0 lam): character
// chi((p-1)delta) * s(lam), endomorphism dimension |W lam|. Requires lam
// polynomial with breadth < p. The truncated shape is resolved for lam = 0
// (trivial) and lam = a*eps_1 (single hook, k[x]/(x^n)).
InjectiveDescriptor steinberg_tilting(std::size_t n, const Int& p, const DominantWeight& lam,
                                      bool with_character = true);

// End(I((p-1)delta + a*eps_n)) = k[x]/(x^n). Requires 1 <= a < p, n >= 2.
TruncatedPolyAlgebra hook_injective_end(std::size_t n, const Int& p, unsigned long a);

// I((p^m-1)delta + a*eps_n) for 0 <= a <= p^m-1, built as the twisted tensor
// of one hook factor per base-p digit of a (Steinberg factors for zero
// digits). Character is the product of the twisted layer characters; index
// equals the number of nonzero digits, exactly.
InjectiveDescriptor pm_hook_injective(std::size_t n, const Int& p, unsigned long m, const Int& a,
                                      bool with_character = true);

// Tensoring with the k-th power of the determinant: socle shifts by k*omega,
// the character picks up e^(k*omega), End is untouched.
InjectiveDescriptor determinant_shift(const InjectiveDescriptor& d, unsigned long k);

// Twisted tensor product over factor descriptors: factor i enters through a
// Frobenius twist by p^(m*i) and a trailing twist by p^(m*h) carries gamma,
// whose injective has trivial endomorphism algebra. Generator counts add;
// the exactness flag survives only if every factor is exact. The factor
// socle weights must lie in X_m(n).
InjectiveDescriptor tensor_factorization(const std::vector<InjectiveDescriptor>& factors,
                                         const Int& p, unsigned long m,
                                         const DominantWeight& gamma);

// Product of socle multiplicities, kept unevaluated while any input is
// symbolic.
struct SymbolicValue {
  Int coefficient = 1;
  std::vector<std::string> symbols;

  bool is_integer() const { return symbols.empty(); }
  std::string to_string() const;
};

SymbolicValue multiplicity_product(const std::vector<SymbolicValue>& factors);

}  // namespace schur
