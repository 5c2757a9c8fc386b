#pragma once

#include <schur/modules.hpp>
#include <schur/weight.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace schur {

enum class Regime { classical, quantum };

struct ClassicalParams {
  std::size_t n = 2;      // rank, >= 2
  Int p = 3;              // prime
  unsigned long m = 1;    // p^m must exceed n
  unsigned long h = 1;    // number of twisted layers
  Int r = 0;              // target degree
  bool with_character = true;
};

struct QuantumParams : ClassicalParams {
  Int l = 2;  // order of the root of unity, >= 2
};

struct ConstructionResult {
  Regime regime;
  std::size_t n;
  Int p;
  unsigned long m;
  Int P;  // p^m
  std::optional<Int> l;
  unsigned long h;
  Int r;
  std::optional<Int> u_minus1;                  // quantum bottom digit
  std::optional<DominantWeight> lambda_minus1;  // quantum bottom factor
  std::vector<Int> digits;                      // u_0..u_h; the last is unbounded
  std::vector<DominantWeight> lambda_factors;   // factor weights for u_0..u_{h-1}
  DominantWeight gamma;
  DominantWeight mu;
  InjectiveDescriptor descriptor;
  Int repdim_lower_bound;
};

// Smallest r admitting the h-layer construction:
// ((P-1)|delta|+1) * (1 + P + ... + P^(h-1)) with P = p^m.
Int min_r_classical(std::size_t n, const Int& p, unsigned long m, unsigned long h);

// Runs the digit construction: expands the excess r - min_r in base P,
// builds one twisted hook factor per digit (determinant-shifted when the
// digit is P-1), absorbs the overflow digit into gamma, and assembles mu.
// The reported representation-dimension lower bound is h+1.
ConstructionResult construct_classical(const ClassicalParams& params);

// Largest h >= 1 with min_r_classical(n,p,m,h) <= r; 0 when even h = 1 is
// out of reach.
unsigned long max_h_classical(std::size_t n, const Int& p, unsigned long m, const Int& r);

// Smallest r for the quantum construction at an l-th root of unity:
// ((lP-1)|delta|+1) + lP * min_r_classical.
Int min_r_quantum(std::size_t n, const Int& p, unsigned long m, const Int& l, unsigned long h);

// Quantum digit construction: peels one extra bottom layer at modulus lP,
// then runs the classical construction on the quotient. Bound h+2.
ConstructionResult construct_quantum(const QuantumParams& params);

unsigned long max_h_quantum(std::size_t n, const Int& p, unsigned long m, const Int& l,
                            const Int& r);

// Minimal m >= 1 with p^m > n.
unsigned long suggest_m(std::size_t n, const Int& p);

}  // namespace schur
