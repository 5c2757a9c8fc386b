#pragma once

#include <schur/character.hpp>
#include <schur/weight.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace schur {

// One failed instance of a checked identity, rendered for reporting.
struct OracleFailure {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct OracleReport {
  std::string identity;
  std::uint64_t checked = 0;
  std::vector<OracleFailure> failures;

  bool pass() const { return failures.empty(); }
};

// Schur polynomial value at a point with pairwise distinct nonzero entries,
// computed as the bialternant ratio det(x_i^(a_j+n-j)) / det(x_i^(n-j))
// over exact rationals. Independent of the tableaux path.
Rat alternant_eval(const DominantWeight& a, const std::vector<Rat>& point);

// Evaluates the tableaux-built chi(a) as a polynomial at `trials` random
// distinct integer points and compares against alternant_eval exactly.
OracleReport verify_chi_against_alternant(const DominantWeight& a, unsigned trials,
                                          std::uint64_t seed = 1729);

// Weyl dimension formula for GL_n: prod over i<j of (a_i-a_j+j-i)/(j-i).
Int dimension_via_product(const DominantWeight& a);

struct SuiteOptions {
  std::size_t max_n = 3;
  unsigned long max_degree = 10;
  std::vector<Int> primes = {Int(2), Int(3)};
  std::uint64_t seed = 1729;
};

// Runs every checked identity of the weight and character layers over the
// requested ranges. Deterministic for a fixed seed.
std::vector<OracleReport> run_suite(const SuiteOptions& opt);

}  // namespace schur
