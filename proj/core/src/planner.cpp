#include <schur/planner.hpp>

#include <schur/character.hpp>

#include <stdexcept>
#include <string>

namespace schur {

namespace {

Int delta_degree(std::size_t n) { return Int(n) * Int(n - 1) / 2; }

std::string params_str(std::size_t n, const Int& p, unsigned long m, unsigned long h) {
  return "(n=" + std::to_string(n) + ", p=" + p.get_str() + ", m=" + std::to_string(m) +
         ", h=" + std::to_string(h) + ")";
}

Int validate_base(std::size_t n, const Int& p, unsigned long m, const char* where) {
  if (n < 2) throw PreconditionError(std::string(where) + ": rank must be at least 2");
  if (!is_probable_prime(p)) {
    throw PreconditionError(std::string(where) + ": " + p.get_str() + " is not prime");
  }
  if (m < 1) throw PreconditionError(std::string(where) + ": m must be at least 1");
  const Int P = int_pow(p, m);
  if (P <= Int(n)) {
    throw PreconditionError(std::string(where) + ": P = p^m = " + P.get_str() +
                            " must exceed n = " + std::to_string(n) + "; smallest valid m is " +
                            std::to_string(suggest_m(n, p)));
  }
  return P;
}

struct ClassicalCore {
  std::vector<Int> digits;
  std::vector<DominantWeight> factors;
  DominantWeight gamma;
  InjectiveDescriptor descriptor;
};

// Digit construction at degree s: expand the excess over the threshold in
// base P, one hook factor per digit, overflow into gamma.
ClassicalCore build_core(std::size_t n, const Int& p, unsigned long m, unsigned long h,
                         const Int& s, bool with_character) {
  const Int P = int_pow(p, m);
  const Int minimum = min_r_classical(n, p, m, h);
  if (s < minimum) {
    throw PreconditionError("degree " + s.get_str() + " is below the minimum " +
                            minimum.get_str() + " for " + params_str(n, p, m, h));
  }

  Int excess = s - minimum;
  std::vector<Int> digits(h);
  for (unsigned long i = 0; i < h; ++i) {
    digits[i] = excess % P;
    excess /= P;
  }
  const Int overflow = excess;

  std::vector<DominantWeight> factors;
  std::vector<InjectiveDescriptor> descriptors;
  for (unsigned long i = 0; i < h; ++i) {
    if (digits[i] < P - 1) {
      const Int a = digits[i] + 1;
      factors.emplace_back(a * epsilon(n, 1));
      descriptors.push_back(pm_hook_injective(n, p, m, a, with_character));
    } else {
      const Int a = P - Int(n);
      factors.emplace_back(a * epsilon(n, 1) + omega(n));
      descriptors.push_back(determinant_shift(pm_hook_injective(n, p, m, a, with_character), 1));
    }
  }
  digits.push_back(overflow);

  DominantWeight gamma(overflow * epsilon(n, 1));
  InjectiveDescriptor tensor = tensor_factorization(descriptors, p, m, gamma);
  if (degree(tensor.socle_weight.weight()) != s) {
    throw std::logic_error("digit construction degree mismatch at s = " + s.get_str());
  }
  if (tensor.index.value < h) {
    throw std::logic_error("digit construction produced index below h at s = " + s.get_str());
  }
  return ClassicalCore{std::move(digits), std::move(factors), std::move(gamma),
                       std::move(tensor)};
}

// Bottom quantum factor I((lP-1)delta + a*eps_n): one hook layer at modulus
// l, then the base-p layers of a/l twisted by l, lp, lp^2, ...
InjectiveDescriptor quantum_bottom(std::size_t n, const Int& p, unsigned long m, const Int& l,
                                   const Int& a, bool with_character) {
  const Int lP = l * int_pow(p, m);
  const Int b0 = a % l;
  Int rest = a / l;
  std::vector<Int> upper(m);
  for (unsigned long j = 0; j < m; ++j) {
    upper[j] = rest % p;
    rest /= p;
  }

  unsigned long generators = b0 != 0 ? 1 : 0;
  for (const Int& d : upper) {
    if (d != 0) ++generators;
  }

  InjectiveDescriptor out{DominantWeight((lP - 1) * delta(n) + a * epsilon(n, n)), std::nullopt,
                          {}, {}};
  out.end_algebra.truncated = TruncatedPolyAlgebra{generators, n};
  out.end_algebra.dim = out.end_algebra.truncated->dimension();
  out.index = {generators, false};

  if (with_character) {
    Character ch = weyl_character((l - 1) * delta(n)) * orbit_sum(b0 * epsilon(n, 1));
    const Character st_layer = weyl_character((p - 1) * delta(n));
    Int twist = l;
    for (unsigned long j = 0; j < m; ++j) {
      ch = ch * frobenius_twist(st_layer * orbit_sum(upper[j] * epsilon(n, 1)), twist);
      twist *= p;
    }
    out.character = std::move(ch);
  }
  return out;
}

}  // namespace

Int min_r_classical(std::size_t n, const Int& p, unsigned long m, unsigned long h) {
  const Int P = validate_base(n, p, m, "classical threshold");
  if (h < 1) throw PreconditionError("classical threshold: h must be at least 1");
  Int geometric = 0;
  Int power = 1;
  for (unsigned long i = 0; i < h; ++i) {
    geometric += power;
    power *= P;
  }
  return ((P - 1) * delta_degree(n) + 1) * geometric;
}

ConstructionResult construct_classical(const ClassicalParams& params) {
  const Int P = validate_base(params.n, params.p, params.m, "classical construction");
  if (params.h < 1) throw PreconditionError("classical construction: h must be at least 1");
  ClassicalCore core =
      build_core(params.n, params.p, params.m, params.h, params.r, params.with_character);
  DominantWeight mu = core.descriptor.socle_weight;
  return ConstructionResult{Regime::classical,
                            params.n,
                            params.p,
                            params.m,
                            P,
                            std::nullopt,
                            params.h,
                            params.r,
                            std::nullopt,
                            std::nullopt,
                            std::move(core.digits),
                            std::move(core.factors),
                            std::move(core.gamma),
                            std::move(mu),
                            std::move(core.descriptor),
                            Int(params.h + 1)};
}

unsigned long max_h_classical(std::size_t n, const Int& p, unsigned long m, const Int& r) {
  validate_base(n, p, m, "classical bound");
  unsigned long best = 0;
  for (unsigned long h = 1; min_r_classical(n, p, m, h) <= r; ++h) best = h;
  return best;
}

Int min_r_quantum(std::size_t n, const Int& p, unsigned long m, const Int& l, unsigned long h) {
  const Int P = validate_base(n, p, m, "quantum threshold");
  if (l < 2) throw PreconditionError("quantum threshold: l must be at least 2");
  const Int lP = l * P;
  return (lP - 1) * delta_degree(n) + 1 + lP * min_r_classical(n, p, m, h);
}

ConstructionResult construct_quantum(const QuantumParams& params) {
  const Int P = validate_base(params.n, params.p, params.m, "quantum construction");
  if (params.l < 2) throw PreconditionError("quantum construction: l must be at least 2");
  if (params.h < 1) throw PreconditionError("quantum construction: h must be at least 1");
  const Int lP = params.l * P;
  const Int minimum = min_r_quantum(params.n, params.p, params.m, params.l, params.h);
  if (params.r < minimum) {
    throw PreconditionError("degree " + params.r.get_str() + " is below the minimum " +
                            minimum.get_str() + " for " +
                            params_str(params.n, params.p, params.m, params.h) +
                            " at l = " + params.l.get_str());
  }

  const Int t = params.r - minimum;
  const Int u_minus1 = t % lP;
  const Int s = min_r_classical(params.n, params.p, params.m, params.h) + t / lP;

  DominantWeight lambda_minus1 = [&] {
    if (u_minus1 < lP - 1) return DominantWeight((u_minus1 + 1) * epsilon(params.n, 1));
    return DominantWeight((lP - Int(params.n)) * epsilon(params.n, 1) + omega(params.n));
  }();
  InjectiveDescriptor bottom =
      u_minus1 < lP - 1
          ? quantum_bottom(params.n, params.p, params.m, params.l, u_minus1 + 1,
                           params.with_character)
          : determinant_shift(quantum_bottom(params.n, params.p, params.m, params.l,
                                             lP - Int(params.n), params.with_character),
                              1);

  ClassicalCore core = build_core(params.n, params.p, params.m, params.h, s,
                                  params.with_character);

  InjectiveDescriptor combined{
      DominantWeight(bottom.socle_weight.weight() + lP * core.descriptor.socle_weight.weight()),
      std::nullopt,
      {},
      {}};
  combined.end_algebra.dim = bottom.end_algebra.dim * core.descriptor.end_algebra.dim;
  combined.end_algebra.truncated =
      TruncatedPolyAlgebra{bottom.end_algebra.truncated->generators +
                               core.descriptor.end_algebra.truncated->generators,
                           params.n};
  combined.index = {bottom.index.value + core.descriptor.index.value, false};
  if (bottom.character && core.descriptor.character) {
    combined.character = *bottom.character * frobenius_twist(*core.descriptor.character, lP);
  }

  if (degree(combined.socle_weight.weight()) != params.r) {
    throw std::logic_error("quantum construction degree mismatch at r = " + params.r.get_str());
  }
  if (combined.index.value < params.h + 1) {
    throw std::logic_error("quantum construction produced index below h+1 at r = " +
                           params.r.get_str());
  }

  DominantWeight mu = combined.socle_weight;
  return ConstructionResult{Regime::quantum,
                            params.n,
                            params.p,
                            params.m,
                            P,
                            params.l,
                            params.h,
                            params.r,
                            u_minus1,
                            std::move(lambda_minus1),
                            std::move(core.digits),
                            std::move(core.factors),
                            std::move(core.gamma),
                            std::move(mu),
                            std::move(combined),
                            Int(params.h + 2)};
}

unsigned long max_h_quantum(std::size_t n, const Int& p, unsigned long m, const Int& l,
                            const Int& r) {
  validate_base(n, p, m, "quantum bound");
  if (l < 2) throw PreconditionError("quantum bound: l must be at least 2");
  unsigned long best = 0;
  for (unsigned long h = 1; min_r_quantum(n, p, m, l, h) <= r; ++h) best = h;
  return best;
}

unsigned long suggest_m(std::size_t n, const Int& p) {
  if (n < 1) throw PreconditionError("suggest_m: rank must be at least 1");
  if (p < 2) throw PreconditionError("suggest_m: p must be at least 2");
  unsigned long m = 1;
  Int P = p;
  while (P <= Int(n)) {
    P *= p;
    ++m;
  }
  return m;
}

}  // namespace schur
