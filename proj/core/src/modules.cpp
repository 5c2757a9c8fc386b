#include <schur/modules.hpp>

#include <algorithm>
#include <sstream>

namespace schur {

namespace {

void require_prime(const Int& p, const char* where) {
  if (!is_probable_prime(p)) {
    throw PreconditionError(std::string(where) + ": " + p.get_str() + " is not prime");
  }
}

void require_rank(std::size_t n, const DominantWeight& lam, const char* where) {
  if (n != lam.rank()) {
    throw PreconditionError(std::string(where) + ": rank " + std::to_string(n) +
                            " does not match weight " + to_string(lam.weight()));
  }
}

// lam = a * eps_1 with a >= 1?
bool is_single_hook(const DominantWeight& lam, Int& a) {
  if (lam[0] <= 0) return false;
  for (std::size_t i = 1; i < lam.rank(); ++i) {
    if (lam[i] != 0) return false;
  }
  a = lam[0];
  return true;
}

TruncatedPolyAlgebra trivial_algebra(std::size_t n) {
  return TruncatedPolyAlgebra{0, std::max<unsigned long>(n, 2)};
}

}  // namespace

InjectiveDescriptor steinberg_tilting(std::size_t n, const Int& p, const DominantWeight& lam,
                                      bool with_character) {
  require_rank(n, lam, "steinberg tilting");
  require_prime(p, "steinberg tilting");
  if (!lam.is_polynomial()) {
    throw PreconditionError("steinberg tilting: weight " + to_string(lam.weight()) +
                            " must be polynomial");
  }
  if (breadth(lam) >= p) {
    throw PreconditionError("steinberg tilting: breadth " + breadth(lam).get_str() +
                            " of " + to_string(lam.weight()) + " must be < p = " + p.get_str());
  }

  const Weight st = (p - 1) * delta(n);
  InjectiveDescriptor out{DominantWeight(st + w0_apply(lam)), std::nullopt, {}, {}};
  out.end_algebra.dim = static_cast<long>(weyl_orbit(lam).size());

  Int a;
  if (degree(lam.weight()) == 0) {
    out.end_algebra.truncated = trivial_algebra(n);
    out.index = {0, true};
  } else if (is_single_hook(lam, a) && n >= 2) {
    out.end_algebra.truncated = TruncatedPolyAlgebra{1, n};
    out.index = {1, true};
  } else {
    out.index = {0, false};
  }

  if (with_character) out.character = weyl_character(st) * orbit_sum(lam);
  return out;
}

TruncatedPolyAlgebra hook_injective_end(std::size_t n, const Int& p, unsigned long a) {
  if (n < 2) throw PreconditionError("hook injective: rank must be at least 2");
  require_prime(p, "hook injective");
  if (a < 1 || p <= Int(a)) {
    throw PreconditionError("hook injective: need 1 <= a < p, got a = " + std::to_string(a) +
                            ", p = " + p.get_str());
  }
  return TruncatedPolyAlgebra{1, n};
}

InjectiveDescriptor pm_hook_injective(std::size_t n, const Int& p, unsigned long m, const Int& a,
                                      bool with_character) {
  if (n < 2) throw PreconditionError("p^m hook injective: rank must be at least 2");
  require_prime(p, "p^m hook injective");
  if (m < 1) throw PreconditionError("p^m hook injective: m must be at least 1");
  const Int P = int_pow(p, m);
  if (a < 0 || a >= P) {
    throw PreconditionError("p^m hook injective: need 0 <= a <= " + Int(P - 1).get_str() +
                            ", got " + a.get_str());
  }

  std::vector<Int> digits(m);
  Int rest = a;
  for (unsigned long j = 0; j < m; ++j) {
    digits[j] = rest % p;
    rest /= p;
  }

  InjectiveDescriptor out{DominantWeight((P - 1) * delta(n) + a * epsilon(n, n)), std::nullopt,
                          {}, {}};
  unsigned long generators = 0;
  for (const Int& d : digits) {
    if (d != 0) ++generators;
  }
  out.end_algebra.truncated = generators == 0 ? trivial_algebra(n)
                                              : TruncatedPolyAlgebra{generators, n};
  out.end_algebra.dim = out.end_algebra.truncated->dimension();
  out.index = {generators, true};

  if (with_character) {
    const Character st_layer = weyl_character((p - 1) * delta(n));
    Character ch = exponential(Weight(std::vector<Int>(n, Int(0))));
    Int twist = 1;
    for (unsigned long j = 0; j < m; ++j) {
      ch = ch * frobenius_twist(st_layer * orbit_sum(digits[j] * epsilon(n, 1)), twist);
      twist *= p;
    }
    out.character = std::move(ch);
  }
  return out;
}

InjectiveDescriptor determinant_shift(const InjectiveDescriptor& d, unsigned long k) {
  const std::size_t n = d.socle_weight.rank();
  const Weight shift = Int(k) * omega(n);
  InjectiveDescriptor out{DominantWeight(d.socle_weight.weight() + shift), std::nullopt,
                          d.end_algebra, d.index};
  if (d.character) out.character = *d.character * exponential(shift);
  return out;
}

InjectiveDescriptor tensor_factorization(const std::vector<InjectiveDescriptor>& factors,
                                         const Int& p, unsigned long m,
                                         const DominantWeight& gamma) {
  if (factors.empty()) throw PreconditionError("tensor factorization: no factors");
  require_prime(p, "tensor factorization");
  if (m < 1) throw PreconditionError("tensor factorization: m must be at least 1");
  const std::size_t n = factors.front().socle_weight.rank();
  require_rank(n, gamma, "tensor factorization");
  if (!gamma.is_polynomial()) {
    throw PreconditionError("tensor factorization: gamma " + to_string(gamma.weight()) +
                            " must be polynomial");
  }
  for (const InjectiveDescriptor& f : factors) {
    require_rank(n, f.socle_weight, "tensor factorization");
    if (!in_Xm(f.socle_weight, p, m)) {
      throw PreconditionError("tensor factorization: factor socle " +
                              to_string(f.socle_weight.weight()) + " is not column " +
                              int_pow(p, m).get_str() + "-regular");
    }
  }

  const Int P = int_pow(p, m);
  Weight socle(std::vector<Int>(n, Int(0)));
  Int scale = 1;
  for (const InjectiveDescriptor& f : factors) {
    socle = socle + scale * f.socle_weight.weight();
    scale *= P;
  }
  socle = socle + scale * gamma.weight();

  InjectiveDescriptor out{DominantWeight(std::move(socle)), std::nullopt, {}, {}};

  out.end_algebra.dim = 1;
  bool truncated_known = true;
  unsigned long generators = 0;
  bool exact = true;
  for (const InjectiveDescriptor& f : factors) {
    out.end_algebra.dim *= f.end_algebra.dim;
    truncated_known = truncated_known && f.end_algebra.truncated.has_value();
    if (f.end_algebra.truncated) generators += f.end_algebra.truncated->generators;
    exact = exact && f.index.exact;
    out.index.value += f.index.value;
  }
  out.index.exact = exact;
  if (truncated_known) {
    out.end_algebra.truncated =
        generators == 0 ? trivial_algebra(n) : TruncatedPolyAlgebra{generators, n};
  }

  const bool with_character =
      std::all_of(factors.begin(), factors.end(),
                  [](const InjectiveDescriptor& f) { return f.character.has_value(); });
  if (with_character) {
    Character ch = exponential(Weight(std::vector<Int>(n, Int(0))));
    Int twist = 1;
    for (const InjectiveDescriptor& f : factors) {
      ch = ch * frobenius_twist(*f.character, twist);
      twist *= P;
    }
    out.character = ch * frobenius_twist(weyl_character(gamma), twist);
  }
  return out;
}

std::string SymbolicValue::to_string() const {
  if (symbols.empty()) return coefficient.get_str();
  std::ostringstream os;
  bool first = true;
  if (coefficient != 1) {
    os << coefficient.get_str();
    first = false;
  }
  for (const std::string& s : symbols) {
    if (!first) os << '*';
    os << s;
    first = false;
  }
  return os.str();
}

SymbolicValue multiplicity_product(const std::vector<SymbolicValue>& factors) {
  SymbolicValue out;
  for (const SymbolicValue& f : factors) {
    out.coefficient *= f.coefficient;
    out.symbols.insert(out.symbols.end(), f.symbols.begin(), f.symbols.end());
  }
  return out;
}

}  // namespace schur
