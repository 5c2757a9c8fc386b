#pragma once

#include <schur/bigint.hpp>
#include <schur/errors.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace schur {

// Element of the weight lattice X(n) = Z^n. Entries are arbitrary-precision
// and carry no sign constraint. Values are immutable once constructed.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Int> entries);
  Weight(std::initializer_list<long> entries);

  std::size_t rank() const { return entries_.size(); }
  const Int& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Int>& entries() const { return entries_; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  // Canonical order used for map keys and serialized term order: rank first,
  // then lexicographic on entries.
  friend bool operator<(const Weight& a, const Weight& b);

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(const Int& c, const Weight& a);

 private:
  std::vector<Int> entries_;
};

// Weight with weakly decreasing entries; validates on construction.
class DominantWeight {
 public:
  explicit DominantWeight(Weight w);
  DominantWeight(std::initializer_list<long> entries);

  const Weight& weight() const { return w_; }
  operator const Weight&() const { return w_; }
  std::size_t rank() const { return w_.rank(); }
  const Int& operator[](std::size_t i) const { return w_[i]; }

  // All entries >= 0, i.e. a partition into at most rank() parts.
  bool is_polynomial() const;

  friend bool operator==(const DominantWeight& a, const DominantWeight& b) { return a.w_ == b.w_; }
  friend bool operator!=(const DominantWeight& a, const DominantWeight& b) { return !(a == b); }
  friend bool operator<(const DominantWeight& a, const DominantWeight& b) { return a.w_ < b.w_; }

 private:
  Weight w_;
};

Weight delta(std::size_t n);
Weight omega(std::size_t n);
// Standard basis vector; i is 1-based.
Weight epsilon(std::size_t n, std::size_t i);

Int degree(const Weight& a);
bool is_dominant(const Weight& a);
bool is_polynomial(const Weight& a);
// First entry of a dominant weight.
Int breadth(const DominantWeight& a);

// a <= b in the dominance order: partial sums of a never exceed those of b
// and the total degrees agree.
bool dominance_leq(const Weight& a, const Weight& b);

// Longest-element action: reverses the entries.
Weight w0_apply(const Weight& a);

// All distinct permutations of the entries, dominant representative first,
// then lexicographically decreasing.
std::vector<Weight> weyl_orbit(const Weight& a);

// Consecutive differences and the last entry are all < l. Requires l >= 2.
bool is_column_regular(const DominantWeight& a, const Int& l);

// Column p^m-regular, i.e. membership in X_m(n). Requires p >= 2, m >= 1.
bool in_Xm(const DominantWeight& a, const Int& p, unsigned long m);

struct PAdicDecomposition {
  Int base;
  std::vector<DominantWeight> digits;  // weight = sum of base^j * digits[j]

  Weight reconstruct() const;
};

// Unique expansion of a polynomial dominant weight into column p-regular
// digits. Trailing zero digits are trimmed; the zero weight gets a single
// zero digit.
PAdicDecomposition p_adic_decompose(const DominantWeight& a, const Int& p);

// Maximum breadth over the p-adic digits.
Int p_adic_breadth(const DominantWeight& a, const Int& p);

// All polynomial dominant weights of rank n and degree r, canonically sorted.
std::vector<DominantWeight> lambda_plus(std::size_t n, unsigned long r);

// All polynomial dominant weights of rank n with entries <= max_part.
std::vector<DominantWeight> box_partitions(std::size_t n, unsigned long max_part);

// Renders as "(a,b,...)".
std::string to_string(const Weight& a);

// Accepts "(a,b,...)" or "a,b,..."; whitespace around entries is ignored.
Weight parse_weight(const std::string& text);

}  // namespace schur
