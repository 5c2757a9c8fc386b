#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace schur {

// Exact arithmetic everywhere: weight entries, multiplicities and algebra
// dimensions routinely exceed 64 bits (entries grow like P^h).
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline bool is_probable_prime(const Int& p) {
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

// Converts to unsigned long, refusing values that do not fit.
inline unsigned long to_ulong(const Int& v, const char* what) {
  if (sgn(v) < 0 || !v.fits_ulong_p()) {
    throw std::overflow_error(std::string(what) + " out of machine range: " + v.get_str());
  }
  return v.get_ui();
}

}  // namespace schur
